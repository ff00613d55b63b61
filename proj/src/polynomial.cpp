#include "nrlab/polynomial.hpp"

#include <utility>

#include "nrlab/errors.hpp"

namespace nrlab {

namespace {

void trim_trailing_zeros(std::vector<Complex>& c) {
    while (c.size() > 1 && c.back() == Complex(0.0, 0.0)) c.pop_back();
}

}  // namespace

Polynomial::Polynomial() : coeffs_{Complex(0.0, 0.0)} {}

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw InvalidParameterError("Polynomial: empty coefficient sequence");
    for (const Complex& c : coeffs_)
        if (!is_finite(c)) throw InvalidParameterError("Polynomial: non-finite coefficient");
    trim_trailing_zeros(coeffs_);
}

Polynomial::Polynomial(std::initializer_list<Complex> coeffs)
    : Polynomial(std::vector<Complex>(coeffs)) {}

Polynomial Polynomial::identity() { return Polynomial{Complex(0.0), Complex(1.0)}; }

bool Polynomial::is_zero() const {
    return coeffs_.size() == 1 && coeffs_[0] == Complex(0.0, 0.0);
}

Complex Polynomial::coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Complex(0.0, 0.0);
    return coeffs_[static_cast<std::size_t>(k)];
}

Complex Polynomial::operator()(Complex z) const {
    Complex acc = coeffs_.back();
    for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() == 1) return Polynomial();
    std::vector<Complex> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        d[k - 1] = static_cast<double>(k) * coeffs_[k];
    return Polynomial(std::move(d));
}

bool Polynomial::is_odd(double tol) const {
    for (std::size_t k = 0; k < coeffs_.size(); k += 2)
        if (std::abs(coeffs_[k]) > tol) return false;
    return true;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return Polynomial();
    const auto& a = p.coefficients();
    const auto& b = q.coefficients();
    std::vector<Complex> c(a.size() + b.size() - 1, Complex(0.0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    const auto& a = p.coefficients();
    const auto& b = q.coefficients();
    std::vector<Complex> c(std::max(a.size(), b.size()), Complex(0.0));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    return Polynomial(std::move(c));
}

Polynomial operator*(Complex s, const Polynomial& p) {
    std::vector<Complex> c = p.coefficients();
    for (Complex& x : c) x *= s;
    return Polynomial(std::move(c));
}

}  // namespace nrlab
