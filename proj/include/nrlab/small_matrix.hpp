#ifndef NRLAB_SMALL_MATRIX_HPP
#define NRLAB_SMALL_MATRIX_HPP

#include <vector>

#include "nrlab/complex.hpp"
#include "nrlab/matrix2.hpp"
#include "nrlab/polynomial.hpp"

namespace nrlab {

/// Square complex matrix of dimension at most 8. Everything here targets
/// desk-scale verification, not large-scale linear algebra.
class SquareMatrix {
  public:
    explicit SquareMatrix(int n);  // zero matrix
    static SquareMatrix identity(int n);
    static SquareMatrix from_matrix2(const Matrix2& m);

    int dim() const { return n_; }

    Complex& operator()(int row, int col) { return a_[n_ * row + col]; }
    Complex operator()(int row, int col) const { return a_[n_ * row + col]; }

    SquareMatrix operator+(const SquareMatrix& o) const;
    SquareMatrix operator-(const SquareMatrix& o) const;
    SquareMatrix operator*(const SquareMatrix& o) const;
    SquareMatrix adjoint() const;

    double max_abs() const;

  private:
    int n_;
    std::vector<Complex> a_;
};

SquareMatrix operator*(Complex s, const SquareMatrix& m);

struct HermitianEigen {
    std::vector<double> values;  // ascending
    SquareMatrix vectors;        // columns, same order
};

/// Eigensystem of a Hermitian matrix by cyclic Jacobi rotations.
HermitianEigen hermitian_eigensystem(const SquareMatrix& h);

/// Largest singular value: closed form for n <= 2, power iteration on
/// M*M (relative tolerance 1e-14, 1e4 iteration cap) for larger n.
/// Throws NoConvergenceError when the cap is exceeded.
double op_norm(const SquareMatrix& m);

SquareMatrix poly_apply(const Polynomial& p, const SquareMatrix& a);

}  // namespace nrlab

#endif  // NRLAB_SMALL_MATRIX_HPP
