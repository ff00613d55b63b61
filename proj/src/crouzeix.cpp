#include "nrlab/crouzeix.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "nrlab/curve.hpp"
#include "nrlab/errors.hpp"
#include "nrlab/numerical_range.hpp"
#include "nrlab/rng.hpp"

namespace nrlab {

Matrix2 canonical_matrix(double b) {
    if (!(b > 0.0)) throw InvalidParameterError("canonical_matrix: b must be positive");
    return Matrix2(Complex(1.0), Complex(2.0 * b), Complex(0.0), Complex(-1.0));
}

PhiPsiPair phi_psi_of_canonical(double b, double eps) {
    EllipseConstants c = ellipse_constants(b, eps);
    Matrix2 a = canonical_matrix(b);
    // phi odd and A^2 = I collapse the functional calculus to phi(1) A.
    Matrix2 phi_a = Complex(c.phi_at_1) * a;
    Matrix2 psi_a = phi_a.inverse() - Complex(1.0 / c.phi_prime_at_0) * a.inverse();
    return {phi_a, psi_a};
}

bool ProofReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const NamedCheck& c) { return c.pass; });
}

ProofReport verify_cp_bound(double b, double eps) {
    EllipseConstants c = ellipse_constants(b, eps);
    PhiPsiPair m = phi_psi_of_canonical(b, eps);

    ProofReport report;
    report.b = b;
    report.rho = c.rho;
    report.phi1 = c.phi_at_1;
    report.phip0 = c.phi_prime_at_0;
    report.cp_norm = op_norm(m.phi_a + m.psi_a.adjoint());
    report.product_scalar = 1.0 - c.phi_at_1 / c.phi_prime_at_0;

    auto add = [&report](std::string name, double margin, bool strict = false) {
        report.checks.push_back({std::move(name), strict ? margin > 0.0 : margin >= 0.0, margin});
    };

    const double two_over_rho = 2.0 / c.rho;
    add("phi(1) <= phi'(0) + 1e-12", c.phi_prime_at_0 - c.phi_at_1 + 1e-12);
    add("phi(1) <= 2/rho + 1e-12", two_over_rho - c.phi_at_1 + 1e-12);
    add("2/rho < phi'(0)", c.phi_prime_at_0 - two_over_rho, /*strict=*/true);
    add("||phi(A) + psi(A)*|| <= 2 + 1e-8", 2.0 + 1e-8 - report.cp_norm);

    const double phi_a_norm = op_norm(m.phi_a);
    add("||phi(A)|| == phi(1) rho within 1e-10",
        1e-10 - std::abs(phi_a_norm - c.phi_at_1 * c.rho));
    add("||phi(A)|| <= 2 + 1e-10", 2.0 + 1e-10 - c.phi_at_1 * c.rho);

    // psi(A) phi(A) = (1 - phi(1)/phi'(0)) I, entrywise.
    Matrix2 product = m.psi_a * m.phi_a;
    Matrix2 expected = Complex(report.product_scalar) * Matrix2::identity();
    add("psi(A) phi(A) == (1 - phi(1)/phi'(0)) I within 1e-12",
        1e-12 - (product - expected).max_abs());

    // Norm chain: ||phi(A)||^2 + 2(1 - phi(1)/phi'(0)) <= 4.
    add("||phi(A)||^2 + 2(1 - phi(1)/phi'(0)) <= 4 + 1e-8",
        4.0 + 1e-8 - (phi_a_norm * phi_a_norm + 2.0 * report.product_scalar));

    return report;
}

Complex cauchy_transform_numeric(double b, Complex z, int m_nodes) {
    if (m_nodes < 64) throw InvalidParameterError("cauchy_transform_numeric: need >= 64 nodes");
    return cauchy_transform_numeric(EllipseMap(b, 1e-14), z, m_nodes);
}

Complex cauchy_transform_numeric(const EllipseMap& map, Complex z, int m_nodes) {
    if (m_nodes < 8) throw InvalidParameterError("cauchy_transform_numeric: need >= 8 nodes");
    double x = z.real() / map.a();
    double y = z.imag() / map.b();
    if (!(x * x + y * y < 1.0))
        throw OutOfDomainError("cauchy_transform_numeric: z must lie strictly inside");

    // Periodic trapezoid over zeta(t) = a cos t + i b sin t; the integrand
    // conjugates the series value of the map directly.
    Complex acc(0.0);
    for (int k = 0; k < m_nodes; ++k) {
        double t = 2.0 * kPi * k / m_nodes;
        Complex zeta(map.a() * std::cos(t), map.b() * std::sin(t));
        Complex dzeta(-map.a() * std::sin(t), map.b() * std::cos(t));
        acc += std::conj(map.eval(zeta)) / (zeta - z) * dzeta;
    }
    // (1/2 pi i) * integral, with dt = 2 pi / m absorbed.
    return acc / Complex(0.0, static_cast<double>(m_nodes));
}

Complex cauchy_transform_closed(const EllipseMap& map, Complex z) {
    if (z == Complex(0.0)) return Complex(0.0);
    return 1.0 / map.eval(z) - 1.0 / (map.constants().phi_prime_at_0 * z);
}

namespace {

CurveSamples range_boundary(const Matrix2& a, const CanonicalForm& cf, int m) {
    switch (cf.kind) {
        case RangeKind::scalar:
            throw DegenerateRangeError("crouzeix_ratio: numerical range is a single point");
        case RangeKind::disk:
            return sample_circle(cf.beta, cf.b, m);
        case RangeKind::segment:
            return sample_segment(cf.beta - cf.alpha, cf.beta + cf.alpha, m);
        case RangeKind::generic:
            return nr_boundary(a, m);
    }
    throw InvalidParameterError("crouzeix_ratio: unknown range kind");
}

}  // namespace

double crouzeix_ratio(const Matrix2& a, const Polynomial& p, int m_boundary) {
    if (p.is_zero()) throw InvalidPolynomialError("crouzeix_ratio: zero polynomial");
    CanonicalForm cf = canonicalize_2x2(a);
    CurveSamples boundary = range_boundary(a, cf, m_boundary);
    double denom = max_modulus_on_curve(p, boundary, /*refine=*/true).value;
    if (denom == 0.0) throw InvalidPolynomialError("crouzeix_ratio: p vanishes on W(A)");
    return op_norm(poly_apply(p, a)) / denom;
}

namespace {

struct SearchState {
    const Matrix2& a;
    const CurveSamples& boundary;
    long evaluations = 0;

    double ratio(const Polynomial& p) {
        ++evaluations;
        double denom = max_modulus_on_curve(p, boundary, /*refine=*/true).value;
        if (denom == 0.0) return 0.0;
        return op_norm(poly_apply(p, a)) / denom;
    }
};

Polynomial monic_from(const std::vector<double>& x, int degree) {
    std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
    for (int k = 0; k < degree; ++k)
        c[static_cast<std::size_t>(k)] =
            Complex(x[static_cast<std::size_t>(2 * k)], x[static_cast<std::size_t>(2 * k + 1)]);
    c[static_cast<std::size_t>(degree)] = Complex(1.0);
    return Polynomial(std::move(c));
}

}  // namespace

RatioReport ratio_search(const Matrix2& a, int degree, int restarts, std::uint64_t seed,
                         int m_boundary) {
    if (degree < 0) throw InvalidParameterError("ratio_search: degree must be >= 0");
    if (restarts < 1) throw InvalidParameterError("ratio_search: restarts must be >= 1");
    CanonicalForm cf = canonicalize_2x2(a);
    CurveSamples boundary = range_boundary(a, cf, m_boundary);
    SearchState state{a, boundary};

    // Degree 0 baseline: constants give exactly 1.
    double best_ratio = state.ratio(Polynomial{Complex(1.0)});
    Polynomial best_poly{Complex(1.0)};

    // The ratio over polynomials of degree <= d is searched degree by
    // degree; each leading coefficient is pinned to 1 (scale invariance)
    // and coordinate descent runs on the remaining real parameters.
    for (int d = 1; d <= degree; ++d) {
        const int dims = 2 * d;
        for (int r = 0; r < restarts; ++r) {
            CounterRng rng{seed, (static_cast<std::uint64_t>(d) << 32) |
                                     static_cast<std::uint64_t>(r)};
            std::vector<double> x(static_cast<std::size_t>(dims));
            for (double& xi : x) xi = rng.uniform(-2.0, 2.0);

            double cur = state.ratio(monic_from(x, d));
            double step = 0.5;
            for (int sweep = 0; sweep < 500 && step > 1e-12; ++sweep) {
                bool improved = false;
                for (int i = 0; i < dims; ++i) {
                    for (double dir : {+1.0, -1.0}) {
                        double saved = x[static_cast<std::size_t>(i)];
                        x[static_cast<std::size_t>(i)] = saved + dir * step;
                        double val = state.ratio(monic_from(x, d));
                        if (val > cur) {
                            cur = val;
                            improved = true;
                            break;  // keep the move
                        }
                        x[static_cast<std::size_t>(i)] = saved;
                    }
                }
                if (!improved) step *= 0.5;
            }
            if (cur > best_ratio) {
                best_ratio = cur;
                best_poly = monic_from(x, d);
            }
        }
    }
    return {a, degree, best_ratio, best_poly, state.evaluations, seed};
}

}  // namespace nrlab
