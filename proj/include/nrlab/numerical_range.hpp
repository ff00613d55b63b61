#ifndef NRLAB_NUMERICAL_RANGE_HPP
#define NRLAB_NUMERICAL_RANGE_HPP

#include "nrlab/complex.hpp"
#include "nrlab/curve.hpp"
#include "nrlab/matrix2.hpp"
#include "nrlab/small_matrix.hpp"

namespace nrlab {

/// Boundary of the numerical range by the support-function method: for
/// each direction theta_k = 2 pi k / m, the top eigenvector x of the
/// Hermitian part of e^{-i theta_k} A yields the boundary point <Ax, x>.
/// The returned curve carries the exact support-point evaluator and a
/// 2 pi period. m >= 8 required.
CurveSamples nr_boundary(const Matrix2& a, int m);
CurveSamples nr_boundary(const SquareMatrix& a, int m);

/// The numerical range of a 2x2 matrix is the (possibly degenerate)
/// ellipse with foci at the eigenvalues and
/// semi-minor axis = sqrt(tr(A*A) - |l1|^2 - |l2|^2) / 2.
struct EllipseParams {
    Complex center;
    Complex focus1;
    Complex focus2;
    double semi_major;
    double semi_minor;
};

EllipseParams ellipse_params_2x2(const Matrix2& a);

}  // namespace nrlab

#endif  // NRLAB_NUMERICAL_RANGE_HPP
