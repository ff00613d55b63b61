#include "nrlab/small_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "nrlab/errors.hpp"

namespace nrlab {

SquareMatrix::SquareMatrix(int n) : n_(n) {
    if (n < 1 || n > 8) throw InvalidParameterError("SquareMatrix: dimension must be 1..8");
    a_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Complex(0.0));
}

SquareMatrix SquareMatrix::identity(int n) {
    SquareMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = Complex(1.0);
    return m;
}

SquareMatrix SquareMatrix::from_matrix2(const Matrix2& src) {
    SquareMatrix m(2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m(i, j) = src(i, j);
    return m;
}

SquareMatrix SquareMatrix::operator+(const SquareMatrix& o) const {
    if (n_ != o.n_) throw InvalidParameterError("SquareMatrix: dimension mismatch");
    SquareMatrix r(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

SquareMatrix SquareMatrix::operator-(const SquareMatrix& o) const {
    if (n_ != o.n_) throw InvalidParameterError("SquareMatrix: dimension mismatch");
    SquareMatrix r(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

SquareMatrix SquareMatrix::operator*(const SquareMatrix& o) const {
    if (n_ != o.n_) throw InvalidParameterError("SquareMatrix: dimension mismatch");
    SquareMatrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            Complex aik = (*this)(i, k);
            if (aik == Complex(0.0)) continue;
            for (int j = 0; j < n_; ++j) r(i, j) += aik * o(k, j);
        }
    return r;
}

SquareMatrix SquareMatrix::adjoint() const {
    SquareMatrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r(i, j) = std::conj((*this)(j, i));
    return r;
}

double SquareMatrix::max_abs() const {
    double m = 0.0;
    for (const Complex& c : a_) m = std::max(m, std::abs(c));
    return m;
}

SquareMatrix operator*(Complex s, const SquareMatrix& m) {
    SquareMatrix r(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) r(i, j) = s * m(i, j);
    return r;
}

HermitianEigen hermitian_eigensystem(const SquareMatrix& h) {
    const int n = h.dim();
    SquareMatrix a = h;
    SquareMatrix v = SquareMatrix::identity(n);

    auto off_norm = [&]() {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) s += std::norm(a(i, j));
        return std::sqrt(s);
    };

    const double scale = std::max(h.max_abs(), 1e-300);
    for (int sweep = 0; sweep < 60 && off_norm() > 1e-14 * scale; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                Complex apq = a(p, q);
                double mag = std::abs(apq);
                if (mag <= 1e-300) continue;
                // Complex Jacobi rotation eliminating the (p,q) entry.
                Complex phase = apq / mag;
                double app = a(p, p).real();
                double aqq = a(q, q).real();
                double tau = (aqq - app) / (2.0 * mag);
                double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;
                Complex sp = s * phase;

                for (int k = 0; k < n; ++k) {
                    Complex akp = a(k, p);
                    Complex akq = a(k, q);
                    a(k, p) = c * akp - std::conj(sp) * akq;
                    a(k, q) = sp * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    Complex apk = a(p, k);
                    Complex aqk = a(q, k);
                    a(p, k) = c * apk - sp * aqk;
                    a(q, k) = std::conj(sp) * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    Complex vkp = v(k, p);
                    Complex vkq = v(k, q);
                    v(k, p) = c * vkp - std::conj(sp) * vkq;
                    v(k, q) = sp * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return a(x, x).real() < a(y, y).real(); });

    HermitianEigen out{std::vector<double>(static_cast<std::size_t>(n)), SquareMatrix(n)};
    for (int col = 0; col < n; ++col) {
        int src = order[static_cast<std::size_t>(col)];
        out.values[static_cast<std::size_t>(col)] = a(src, src).real();
        for (int row = 0; row < n; ++row) out.vectors(row, col) = v(row, src);
    }
    return out;
}

double op_norm(const SquareMatrix& m) {
    const int n = m.dim();
    if (n == 1) return std::abs(m(0, 0));
    if (n == 2) {
        Matrix2 a(m(0, 0), m(0, 1), m(1, 0), m(1, 1));
        return op_norm(a);
    }

    // Power iteration on M*M with a deterministic start vector.
    SquareMatrix mm = m.adjoint() * m;
    std::vector<Complex> x(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        x[static_cast<std::size_t>(i)] = Complex(1.0 + 0.01 * i, 0.003 * i);
    auto normalize = [&]() {
        double s = 0.0;
        for (const Complex& c : x) s += std::norm(c);
        s = std::sqrt(s);
        if (s == 0.0) return false;
        for (Complex& c : x) c /= s;
        return true;
    };
    normalize();

    double prev = 0.0;
    for (int it = 0; it < 10000; ++it) {
        std::vector<Complex> y(static_cast<std::size_t>(n), Complex(0.0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                y[static_cast<std::size_t>(i)] += mm(i, j) * x[static_cast<std::size_t>(j)];
        // Rayleigh quotient <x, M*M x> is real and equals ||Mx||^2.
        double lambda = 0.0;
        for (int i = 0; i < n; ++i)
            lambda += (std::conj(x[static_cast<std::size_t>(i)]) * y[static_cast<std::size_t>(i)])
                          .real();
        lambda = std::max(lambda, 0.0);
        double sigma = std::sqrt(lambda);
        if (it > 0 && std::abs(sigma - prev) <= 1e-14 * std::max(sigma, 1e-300)) return sigma;
        prev = sigma;
        x = std::move(y);
        if (!normalize()) return 0.0;  // M annihilated x, so M*M x = 0
    }
    throw NoConvergenceError("op_norm: power iteration exceeded 1e4 iterations", prev);
}

SquareMatrix poly_apply(const Polynomial& p, const SquareMatrix& a) {
    const auto& c = p.coefficients();
    SquareMatrix acc = c.back() * SquareMatrix::identity(a.dim());
    for (auto it = c.rbegin() + 1; it != c.rend(); ++it)
        acc = acc * a + (*it) * SquareMatrix::identity(a.dim());
    return acc;
}

}  // namespace nrlab
