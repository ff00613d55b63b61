#ifndef NRLAB_MATRIX2_HPP
#define NRLAB_MATRIX2_HPP

#include <array>

#include "nrlab/complex.hpp"
#include "nrlab/polynomial.hpp"

namespace nrlab {

/// Dense complex 2x2 matrix with value semantics. Entries must be finite.
class Matrix2 {
  public:
    Matrix2();  // zero
    Matrix2(Complex a11, Complex a12, Complex a21, Complex a22);

    static Matrix2 identity();
    static Matrix2 diagonal(Complex d1, Complex d2);

    Complex operator()(int row, int col) const { return e_[2 * row + col]; }

    Matrix2 operator+(const Matrix2& o) const;
    Matrix2 operator-(const Matrix2& o) const;
    Matrix2 operator*(const Matrix2& o) const;

    Matrix2 adjoint() const;
    Complex trace() const { return e_[0] + e_[3]; }
    Complex det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }
    Matrix2 inverse() const;  // InvalidParameterError when singular

    double frobenius_norm() const;
    double max_abs() const;

  private:
    std::array<Complex, 4> e_;  // row-major a11 a12 a21 a22
};

Matrix2 operator*(Complex s, const Matrix2& m);

struct Eigenvalues2 {
    Complex lambda1;  // root taken with the stable sign choice
    Complex lambda2;
};

// Roots of det(A - z I) via the cancellation-safe quadratic formula.
Eigenvalues2 eigenvalues_2x2(const Matrix2& a);

struct Schur2 {
    Matrix2 u;  // unitary
    Matrix2 t;  // upper triangular, u* a u = t
};

/// Unitary triangularization: U is built from a normalized eigenvector
/// completed to an orthonormal pair; diag(T) carries the eigenvalues.
Schur2 schur_2x2(const Matrix2& a);

enum class RangeKind { generic, disk, segment, scalar };

/// Reduction of A to beta I + alpha U C U* where C = [[1, 2b],[0, -1]]
/// in the generic case. `b` is always the semi-minor axis of the
/// numerical range of (A - beta I)/alpha: positive for generic, the disk
/// radius for coinciding eigenvalues with coupling, and 0 for normal or
/// scalar matrices.
struct CanonicalForm {
    RangeKind kind;
    double b;
    Complex alpha;  // (lambda1 - lambda2)/2 when eigenvalues differ, else 1
    Complex beta;   // (lambda1 + lambda2)/2
    Matrix2 u;      // unitary (Schur basis with the phase correction applied)
};

CanonicalForm canonicalize_2x2(const Matrix2& a);

// Largest singular value, in closed form from the eigenvalues of A*A.
double op_norm(const Matrix2& a);

// Horner evaluation of p(A).
Matrix2 poly_apply(const Polynomial& p, const Matrix2& a);

struct HermitianEig2 {
    double mu_max;
    Complex x1, x2;  // unit eigenvector for mu_max
};

// Top eigenpair of a Hermitian 2x2 [[p, q],[conj q, r]], closed form.
HermitianEig2 hermitian_top_eigenpair(const Matrix2& h);

}  // namespace nrlab

#endif  // NRLAB_MATRIX2_HPP
