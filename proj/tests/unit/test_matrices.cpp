#include <doctest.h>

#include <cmath>
#include <vector>

#include "nrlab/errors.hpp"
#include "nrlab/matrix2.hpp"
#include "nrlab/numerical_range.hpp"
#include "nrlab/rng.hpp"
#include "nrlab/small_matrix.hpp"

using namespace nrlab;

namespace {

Matrix2 random_matrix(CounterRng& rng, double scale = 1.0) {
    auto c = [&] { return Complex(rng.uniform(-scale, scale), rng.uniform(-scale, scale)); };
    return Matrix2(c(), c(), c(), c());
}

double residual_norm(const Matrix2& m) { return m.frobenius_norm(); }

Matrix2 canonical(double b) {
    return Matrix2(Complex(1.0), Complex(2.0 * b), Complex(0.0), Complex(-1.0));
}

}  // namespace

TEST_CASE("schur_2x2: diagonal input stays put") {
    Matrix2 a = Matrix2::diagonal(Complex(3.0), Complex(1.0));
    Schur2 s = schur_2x2(a);
    CHECK(residual_norm(s.u - Matrix2::identity()) < 1e-14);
    CHECK(residual_norm(s.t - a) < 1e-14);
}

TEST_CASE("schur_2x2: lower-triangular nilpotent") {
    Matrix2 a(Complex(0.0), Complex(0.0), Complex(1.0), Complex(0.0));
    Schur2 s = schur_2x2(a);
    CHECK(residual_norm(s.u.adjoint() * s.u - Matrix2::identity()) < 1e-14);
    CHECK(residual_norm(s.u.adjoint() * a * s.u - s.t) < 1e-13);
    CHECK(std::abs(s.t(0, 0)) < 1e-14);
    CHECK(std::abs(s.t(1, 1)) < 1e-14);
    CHECK(std::abs(std::abs(s.t(0, 1)) - 1.0) < 1e-14);  // unit off-diagonal up to phase
}

TEST_CASE("schur_2x2: random matrices (unitarity, similarity, eigenvalues)") {
    CounterRng rng{101, 0};
    for (int trial = 0; trial < 1000; ++trial) {
        Matrix2 a = random_matrix(rng);
        Schur2 s = schur_2x2(a);
        CHECK(residual_norm(s.u.adjoint() * s.u - Matrix2::identity()) < 1e-12);
        CHECK(residual_norm(s.u.adjoint() * a * s.u - s.t) < 1e-11);

        // Triangular diagonal solves the characteristic polynomial.
        for (Complex l : {s.t(0, 0), s.t(1, 1)}) {
            Complex chi = l * l - a.trace() * l + a.det();
            CHECK(std::abs(chi) < 1e-12);
        }
    }
}

TEST_CASE("canonicalize_2x2: already canonical") {
    CanonicalForm cf = canonicalize_2x2(canonical(0.5));
    CHECK(cf.kind == RangeKind::generic);
    CHECK(cf.b == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(cf.alpha - Complex(1.0)) < 1e-12);
    CHECK(std::abs(cf.beta) < 1e-12);
}

TEST_CASE("canonicalize_2x2: degenerate kinds") {
    CanonicalForm seg = canonicalize_2x2(Matrix2::diagonal(Complex(3.0), Complex(1.0)));
    CHECK(seg.kind == RangeKind::segment);
    CHECK(std::abs(seg.alpha - Complex(1.0)) < 1e-12);
    CHECK(std::abs(seg.beta - Complex(2.0)) < 1e-12);

    CanonicalForm disk = canonicalize_2x2(Matrix2(Complex(0.0), Complex(2.0), Complex(0.0), Complex(0.0)));
    CHECK(disk.kind == RangeKind::disk);
    CHECK(disk.b == doctest::Approx(1.0).epsilon(1e-12));

    CanonicalForm sc = canonicalize_2x2(Complex(2.0, 1.0) * Matrix2::identity());
    CHECK(sc.kind == RangeKind::scalar);
    CHECK(std::abs(sc.beta - Complex(2.0, 1.0)) < 1e-12);
}

TEST_CASE("canonicalize_2x2: disk radius equals the support oracle") {
    // Oracle: max eigenvalue of the Hermitian part of e^{-i t} A over 360
    // angles; for the nilpotent [[0,2],[0,0]] it is 1 at every angle.
    Matrix2 a(Complex(0.0), Complex(2.0), Complex(0.0), Complex(0.0));
    for (int k = 0; k < 360; ++k) {
        double t = 2.0 * kPi * k / 360;
        Matrix2 ra = std::polar(1.0, -t) * a;
        Matrix2 h = 0.5 * (ra + ra.adjoint());
        CHECK(hermitian_top_eigenpair(h).mu_max == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("canonicalize_2x2: generic roundtrip reconstruction") {
    CounterRng rng{577, 0};
    int generic_count = 0;
    for (int trial = 0; trial < 500; ++trial) {
        Matrix2 a = random_matrix(rng);
        CanonicalForm cf = canonicalize_2x2(a);
        if (cf.kind != RangeKind::generic) continue;
        ++generic_count;
        Matrix2 c(Complex(1.0), Complex(2.0 * cf.b), Complex(0.0), Complex(-1.0));
        Matrix2 rebuilt = cf.alpha * (cf.u * c * cf.u.adjoint()) + cf.beta * Matrix2::identity();
        CHECK(residual_norm(rebuilt - a) < 1e-10);
        // And the direct form: u* ((A - beta)/alpha) u = C.
        Matrix2 reduced = Complex(1.0 / cf.alpha) *
                          (cf.u.adjoint() * (a - cf.beta * Matrix2::identity()) * cf.u);
        CHECK(residual_norm(reduced - c) < 1e-10);
    }
    CHECK(generic_count > 450);
}

TEST_CASE("nr_boundary: normal matrix gives the spectrum segment") {
    Matrix2 a = Matrix2::diagonal(Complex(1.0), Complex(-1.0));
    CurveSamples curve = nr_boundary(a, 64);
    for (const Complex& p : curve.points) {
        CHECK(std::abs(p.imag()) < 1e-12);
        CHECK(p.real() <= 1.0 + 1e-12);
        CHECK(p.real() >= -1.0 - 1e-12);
    }
}

TEST_CASE("nr_boundary: nilpotent gives a circle") {
    Matrix2 a(Complex(0.0), Complex(2.0), Complex(0.0), Complex(0.0));
    CurveSamples curve = nr_boundary(a, 360);
    for (const Complex& p : curve.points) CHECK(std::abs(std::abs(p) - 1.0) < 1e-10);
}

TEST_CASE("nr_boundary: canonical matrix traces the (sqrt 2, 1) ellipse") {
    Matrix2 a = canonical(1.0);
    CurveSamples curve = nr_boundary(a, 360);
    const double a2 = 2.0, b2 = 1.0;  // squared semi-axes
    for (std::size_t k = 0; k < curve.size(); ++k) {
        double t = curve.params[k];
        // Exact support point of the ellipse in direction t.
        double den = std::sqrt(a2 * std::cos(t) * std::cos(t) + b2 * std::sin(t) * std::sin(t));
        Complex exact(a2 * std::cos(t) / den, b2 * std::sin(t) / den);
        CHECK(std::abs(curve.points[k] - exact) < 1e-8);
    }
}

TEST_CASE("nr_boundary: samples lie inside the hull of a finer run") {
    CounterRng rng{9091, 0};
    for (int trial = 0; trial < 20; ++trial) {
        Matrix2 a = random_matrix(rng);
        CurveSamples coarse = nr_boundary(a, 32);
        CurveSamples fine = nr_boundary(a, 128);
        // Convexity: every coarse point satisfies the support inequalities
        // of the fine polygon directions.
        for (std::size_t i = 0; i < fine.size(); ++i) {
            double t = fine.params[i];
            Complex dir = std::polar(1.0, t);
            double support = (std::conj(dir) * fine.points[i]).real();
            for (const Complex& p : coarse.points)
                CHECK((std::conj(dir) * p).real() <= support + 1e-10);
        }
    }
}

TEST_CASE("ellipse_params_2x2: canonical matrix") {
    EllipseParams ep = ellipse_params_2x2(canonical(1.0));
    CHECK(std::abs(ep.center) < 1e-14);
    CHECK(std::abs(std::abs(ep.focus1) - 1.0) < 1e-12);
    CHECK(std::abs(std::abs(ep.focus2) - 1.0) < 1e-12);
    CHECK(std::abs(ep.focus1 + ep.focus2) < 1e-12);
    CHECK(ep.semi_minor == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ep.semi_major == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("ellipse_params_2x2: normal matrices have no minor axis") {
    CounterRng rng{31, 0};
    for (int trial = 0; trial < 100; ++trial) {
        Complex d1(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
        Complex d2(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
        // Unitary conjugation of a diagonal matrix stays normal.
        double t = rng.uniform(0.0, kPi);
        Matrix2 u(Complex(std::cos(t)), Complex(-std::sin(t)), Complex(std::sin(t)),
                  Complex(std::cos(t)));
        Matrix2 a = u * Matrix2::diagonal(d1, d2) * u.adjoint();
        CHECK(ellipse_params_2x2(a).semi_minor < 1e-7);
    }
}

TEST_CASE("ellipse_params_2x2: sampled boundary agrees with nr_boundary") {
    CounterRng rng{8191, 0};
    for (int trial = 0; trial < 25; ++trial) {
        // Random upper-triangular matrices (generic kind almost surely).
        Matrix2 a(Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)),
                  Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)), Complex(0.0),
                  Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)));
        EllipseParams ep = ellipse_params_2x2(a);
        if (ep.semi_minor < 1e-3) continue;  // near-degenerate: implicit check ill-scaled

        // Implicit-equation residual of every sampled numerical-range point,
        // in the frame aligned with the foci.
        Complex axis = ep.focus1 - ep.focus2;
        Complex rot = (std::abs(axis) > 0) ? axis / std::abs(axis) : Complex(1.0);
        CurveSamples curve = nr_boundary(a, 256);
        for (const Complex& p : curve.points) {
            Complex q = (p - ep.center) / rot;
            double x = q.real() / ep.semi_major;
            double y = q.imag() / ep.semi_minor;
            // Scaled residual bounds the point-to-ellipse distance by
            // ~ residual * min(semi-axis) / 2.
            double resid = std::abs(x * x + y * y - 1.0);
            CHECK(resid * ep.semi_minor * 0.5 < 1e-8);
        }
    }
}

TEST_CASE("poly_apply on 2x2: fixed cases") {
    Matrix2 a = canonical(1.0);
    CHECK(residual_norm(poly_apply(Polynomial::identity(), a) - a) < 1e-15);

    Polynomial z2{Complex(0.0), Complex(0.0), Complex(1.0)};
    CHECK(residual_norm(poly_apply(z2, a) - Matrix2::identity()) < 1e-14);
}

TEST_CASE("poly_apply: odd polynomials collapse on the canonical matrix") {
    CounterRng rng{404, 0};
    for (int trial = 0; trial < 100; ++trial) {
        double b = rng.uniform(0.1, 0.8);
        Matrix2 a = canonical(b);
        int half_terms = 1 + static_cast<int>(rng.next_u64() % 5);  // degree <= 9
        std::vector<Complex> c(static_cast<std::size_t>(2 * half_terms), Complex(0.0));
        for (int j = 0; j < half_terms; ++j)
            c[static_cast<std::size_t>(2 * j + 1)] =
                Complex(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
        Polynomial p(c);
        if (p.is_zero()) continue;
        Matrix2 lhs = poly_apply(p, a);
        Matrix2 rhs = p(Complex(1.0)) * a;
        CHECK(residual_norm(lhs - rhs) < 1e-12);
    }
}

TEST_CASE("op_norm 2x2: fixed values") {
    CHECK(op_norm(Matrix2::identity()) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(op_norm(Matrix2(Complex(0.0), Complex(2.0), Complex(0.0), Complex(0.0))) ==
          doctest::Approx(2.0).epsilon(1e-14));

    // Eigenvalues of A*A = [[1,2],[2,5]] are 3 +- 2 sqrt 2 = (sqrt2 +- 1)^2.
    double oracle = [] {
        double tr = 6.0, det = 1.0;
        return std::sqrt((tr + std::sqrt(tr * tr - 4.0 * det)) / 2.0);
    }();
    CHECK(oracle == doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-14));
    CHECK(op_norm(canonical(1.0)) == doctest::Approx(oracle).epsilon(1e-14));
}

TEST_CASE("op_norm dominates the quadratic form on unit vectors") {
    CounterRng rng{2718, 0};
    Matrix2 a = random_matrix(rng, 2.0);
    double norm = op_norm(a);
    for (int trial = 0; trial < 1000; ++trial) {
        Complex x1(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        Complex x2(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        double n = std::sqrt(std::norm(x1) + std::norm(x2));
        if (n < 1e-6) continue;
        x1 /= n;
        x2 /= n;
        Complex ax1 = a(0, 0) * x1 + a(0, 1) * x2;
        Complex ax2 = a(1, 0) * x1 + a(1, 1) * x2;
        Complex form = std::conj(x1) * ax1 + std::conj(x2) * ax2;
        CHECK(std::abs(form) <= norm + 1e-12);
    }
}

TEST_CASE("op_norm of the canonical matrix equals semi-major + semi-minor") {
    for (double b : {0.1, 0.5, 1.0, 2.0, 5.0}) {
        Matrix2 a = canonical(b);
        EllipseParams ep = ellipse_params_2x2(a);
        double rho = std::sqrt(b * b + 1.0) + b;
        CHECK(std::abs(op_norm(a) - rho) < 1e-10);
        CHECK(std::abs(ep.semi_major + ep.semi_minor - rho) < 1e-10);
    }
}

TEST_CASE("hermitian_eigensystem: residuals and orthonormality") {
    CounterRng rng{5151, 0};
    for (int n : {3, 5, 8}) {
        SquareMatrix b(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                b(i, j) = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        SquareMatrix h = Complex(0.5) * (b + b.adjoint());
        HermitianEigen eig = hermitian_eigensystem(h);

        for (int c = 0; c < n; ++c) {
            // ||H v - lambda v||
            double resid = 0.0;
            for (int i = 0; i < n; ++i) {
                Complex hv(0.0);
                for (int j = 0; j < n; ++j) hv += h(i, j) * eig.vectors(j, c);
                resid += std::norm(hv - eig.values[static_cast<std::size_t>(c)] *
                                            eig.vectors(i, c));
            }
            CHECK(std::sqrt(resid) < 1e-12);
        }
        SquareMatrix vtv = eig.vectors.adjoint() * eig.vectors;
        CHECK((vtv - SquareMatrix::identity(n)).max_abs() < 1e-12);
        for (std::size_t i = 1; i < eig.values.size(); ++i)
            CHECK(eig.values[i] >= eig.values[i - 1]);
    }
}

TEST_CASE("op_norm on small matrices: power iteration vs known values") {
    SquareMatrix d(3);
    d(0, 0) = Complex(3.0);
    d(1, 1) = Complex(-4.0);
    d(2, 2) = Complex(1.0, 1.0);
    CHECK(op_norm(d) == doctest::Approx(4.0).epsilon(1e-12));

    SquareMatrix shift(4);
    shift(0, 1) = Complex(2.0);
    shift(1, 2) = Complex(2.0);
    shift(2, 3) = Complex(2.0);
    CHECK(op_norm(shift) == doctest::Approx(2.0).epsilon(1e-12));

    // 2x2 dispatch must agree with the closed form.
    Matrix2 a = canonical(1.0);
    CHECK(op_norm(SquareMatrix::from_matrix2(a)) == doctest::Approx(op_norm(a)).epsilon(1e-13));
}

TEST_CASE("nr_boundary via SquareMatrix matches the 2x2 path and extends to 3x3") {
    Matrix2 a = canonical(1.0);
    CurveSamples c2 = nr_boundary(a, 64);
    CurveSamples cn = nr_boundary(SquareMatrix::from_matrix2(a), 64);
    for (std::size_t k = 0; k < c2.size(); ++k)
        CHECK(std::abs(c2.points[k] - cn.points[k]) < 1e-10);

    // Normal 3x3: numerical range is the convex hull of the eigenvalues.
    SquareMatrix d(3);
    d(0, 0) = Complex(1.0);
    d(1, 1) = Complex(-1.0);
    d(2, 2) = Complex(0.0, 1.0);
    CurveSamples tri = nr_boundary(d, 90);
    for (const Complex& p : tri.points) {
        // Inside the triangle with vertices 1, -1, i.
        double x = p.real(), y = p.imag();
        CHECK(y >= -1e-10);
        CHECK(x + y <= 1.0 + 1e-10);
        CHECK(-x + y <= 1.0 + 1e-10);
    }
}

TEST_CASE("SquareMatrix guards its dimension contract") {
    CHECK_THROWS_AS(SquareMatrix(9), InvalidParameterError);
    CHECK_THROWS_AS(SquareMatrix(0), InvalidParameterError);
}
