#ifndef NRLAB_POLYNOMIAL_HPP
#define NRLAB_POLYNOMIAL_HPP

#include <cstddef>
#include <vector>

#include "nrlab/complex.hpp"

namespace nrlab {

/// Complex polynomial stored as coefficients c_0..c_d of increasing degree.
/// Trailing zero coefficients are trimmed on construction; the zero
/// polynomial is represented by the single coefficient 0, so the
/// coefficient sequence is never empty.
class Polynomial {
  public:
    Polynomial();  // zero polynomial
    explicit Polynomial(std::vector<Complex> coeffs);
    Polynomial(std::initializer_list<Complex> coeffs);

    static Polynomial identity();  // p(z) = z

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const;
    const std::vector<Complex>& coefficients() const { return coeffs_; }
    Complex coefficient(int k) const;

    // Horner evaluation.
    Complex operator()(Complex z) const;

    Polynomial derivative() const;

    // All even-index coefficients below `tol` in modulus.
    bool is_odd(double tol = 1e-14) const;

  private:
    std::vector<Complex> coeffs_;
};

Polynomial operator*(const Polynomial& p, const Polynomial& q);
Polynomial operator+(const Polynomial& p, const Polynomial& q);
Polynomial operator*(Complex s, const Polynomial& p);

}  // namespace nrlab

#endif  // NRLAB_POLYNOMIAL_HPP
