#include "nrlab/matrix2.hpp"

#include <cmath>

#include "nrlab/errors.hpp"

namespace nrlab {

Matrix2::Matrix2() : e_{Complex(0.0), Complex(0.0), Complex(0.0), Complex(0.0)} {}

Matrix2::Matrix2(Complex a11, Complex a12, Complex a21, Complex a22) : e_{a11, a12, a21, a22} {
    for (const Complex& c : e_)
        if (!is_finite(c)) throw InvalidParameterError("Matrix2: non-finite entry");
}

Matrix2 Matrix2::identity() { return Matrix2(Complex(1.0), Complex(0.0), Complex(0.0), Complex(1.0)); }

Matrix2 Matrix2::diagonal(Complex d1, Complex d2) {
    return Matrix2(d1, Complex(0.0), Complex(0.0), d2);
}

Matrix2 Matrix2::operator+(const Matrix2& o) const {
    return Matrix2(e_[0] + o.e_[0], e_[1] + o.e_[1], e_[2] + o.e_[2], e_[3] + o.e_[3]);
}

Matrix2 Matrix2::operator-(const Matrix2& o) const {
    return Matrix2(e_[0] - o.e_[0], e_[1] - o.e_[1], e_[2] - o.e_[2], e_[3] - o.e_[3]);
}

Matrix2 Matrix2::operator*(const Matrix2& o) const {
    return Matrix2(e_[0] * o.e_[0] + e_[1] * o.e_[2], e_[0] * o.e_[1] + e_[1] * o.e_[3],
                   e_[2] * o.e_[0] + e_[3] * o.e_[2], e_[2] * o.e_[1] + e_[3] * o.e_[3]);
}

Matrix2 Matrix2::adjoint() const {
    return Matrix2(std::conj(e_[0]), std::conj(e_[2]), std::conj(e_[1]), std::conj(e_[3]));
}

Matrix2 Matrix2::inverse() const {
    Complex d = det();
    if (std::abs(d) == 0.0) throw InvalidParameterError("Matrix2::inverse: singular matrix");
    return Matrix2(e_[3] / d, -e_[1] / d, -e_[2] / d, e_[0] / d);
}

double Matrix2::frobenius_norm() const {
    double s = 0.0;
    for (const Complex& c : e_) s += std::norm(c);
    return std::sqrt(s);
}

double Matrix2::max_abs() const {
    double m = 0.0;
    for (const Complex& c : e_) m = std::max(m, std::abs(c));
    return m;
}

Matrix2 operator*(Complex s, const Matrix2& m) {
    return Matrix2(s * m(0, 0), s * m(0, 1), s * m(1, 0), s * m(1, 1));
}

Eigenvalues2 eigenvalues_2x2(const Matrix2& a) {
    Complex tr = a.trace();
    Complex d = a.det();
    Complex sq = std::sqrt(tr * tr - 4.0 * d);
    // Pick the sign that avoids cancellation in tr + sq.
    if ((std::conj(tr) * sq).real() < 0.0) sq = -sq;
    Complex l1 = 0.5 * (tr + sq);
    Complex l2 = (std::abs(l1) > 0.0) ? d / l1 : 0.5 * (tr - sq);
    return {l1, l2};
}

Schur2 schur_2x2(const Matrix2& a) {
    auto [l1, l2] = eigenvalues_2x2(a);

    // Eigenvector for l1: both rows of (A - l1 I) annihilate it. Choose the
    // better-conditioned candidate; if A is (numerically) scalar, any unit
    // vector works.
    Complex v1 = a(0, 1);
    Complex v2 = l1 - a(0, 0);
    Complex w1 = l1 - a(1, 1);
    Complex w2 = a(1, 0);
    double nv = std::norm(v1) + std::norm(v2);
    double nw = std::norm(w1) + std::norm(w2);
    if (nw > nv) {
        v1 = w1;
        v2 = w2;
        nv = nw;
    }
    if (nv < 1e-300) {
        v1 = Complex(1.0);
        v2 = Complex(0.0);
        nv = 1.0;
    }
    double inv = 1.0 / std::sqrt(nv);
    v1 *= inv;
    v2 *= inv;

    // Orthonormal completion.
    Matrix2 u(v1, -std::conj(v2), v2, std::conj(v1));
    Matrix2 t = u.adjoint() * a * u;
    // The subdiagonal entry is zero up to rounding; the triangular factor
    // reports it as exactly zero.
    Matrix2 t_clean(t(0, 0), t(0, 1), Complex(0.0), t(1, 1));
    return {u, t_clean};
}

CanonicalForm canonicalize_2x2(const Matrix2& a) {
    Schur2 s = schur_2x2(a);
    Complex l1 = s.t(0, 0);
    Complex l2 = s.t(1, 1);
    Complex c = s.t(0, 1);

    const double scale = std::max(a.max_abs(), 1e-300);
    const bool equal_eigs = std::abs(l1 - l2) < 1e-10 * scale;
    const bool coupled = std::abs(c) > 1e-14 * scale;

    Complex beta = 0.5 * (l1 + l2);
    if (equal_eigs && !coupled)
        return {RangeKind::scalar, 0.0, Complex(1.0), beta, s.u};
    if (equal_eigs && coupled)
        return {RangeKind::disk, 0.5 * std::abs(c), Complex(1.0), beta, s.u};

    Complex alpha = 0.5 * (l1 - l2);
    if (!coupled) return {RangeKind::segment, 0.0, alpha, beta, s.u};

    // Generic case: (T - beta I)/alpha = [[1, c/alpha],[0, -1]]; a diagonal
    // phase rotates the off-diagonal entry onto the positive real axis.
    Complex off = c / alpha;
    Complex d2 = std::conj(off) / std::abs(off);
    Matrix2 phase = Matrix2::diagonal(Complex(1.0), d2);
    Matrix2 u = s.u * phase;
    double b = 0.5 * std::abs(off);
    return {RangeKind::generic, b, alpha, beta, u};
}

double op_norm(const Matrix2& a) {
    // Largest eigenvalue of the PSD matrix A*A, in closed form.
    Matrix2 h = a.adjoint() * a;
    double tr = h(0, 0).real() + h(1, 1).real();
    double d = std::max(h.det().real(), 0.0);
    double disc = std::max(tr * tr - 4.0 * d, 0.0);
    return std::sqrt(0.5 * (tr + std::sqrt(disc)));
}

Matrix2 poly_apply(const Polynomial& p, const Matrix2& a) {
    const auto& c = p.coefficients();
    Matrix2 acc = c.back() * Matrix2::identity();
    for (auto it = c.rbegin() + 1; it != c.rend(); ++it)
        acc = acc * a + (*it) * Matrix2::identity();
    return acc;
}

HermitianEig2 hermitian_top_eigenpair(const Matrix2& h) {
    double p = h(0, 0).real();
    double r = h(1, 1).real();
    Complex q = h(0, 1);
    double half_gap = 0.5 * (p - r);
    double root = std::sqrt(half_gap * half_gap + std::norm(q));
    double mu = 0.5 * (p + r) + root;

    // (H - mu I) x = 0: the two candidate null vectors; pick the larger.
    Complex x1 = q;
    Complex x2 = Complex(mu - p, 0.0);
    Complex y1 = Complex(mu - r, 0.0);
    Complex y2 = std::conj(q);
    if (std::norm(y1) + std::norm(y2) > std::norm(x1) + std::norm(x2)) {
        x1 = y1;
        x2 = y2;
    }
    double n = std::sqrt(std::norm(x1) + std::norm(x2));
    if (n < 1e-300) {
        x1 = Complex(1.0);
        x2 = Complex(0.0);
        n = 1.0;
    }
    return {mu, x1 / n, x2 / n};
}

}  // namespace nrlab
