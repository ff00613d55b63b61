#ifndef NRLAB_CROUZEIX_HPP
#define NRLAB_CROUZEIX_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "nrlab/complex.hpp"
#include "nrlab/ellipse_map.hpp"
#include "nrlab/matrix2.hpp"
#include "nrlab/polynomial.hpp"

namespace nrlab {

// Canonical trace-zero matrix [[1, 2b],[0, -1]] whose numerical range is
// the ellipse with semi-axes (sqrt(b^2+1), b) and foci +-1.
Matrix2 canonical_matrix(double b);

struct PhiPsiPair {
    Matrix2 phi_a;  // phi(1) * A, because phi is odd and A^2 = I
    Matrix2 psi_a;  // phi(A)^{-1} - (1/phi'(0)) A^{-1}
};

PhiPsiPair phi_psi_of_canonical(double b, double eps = 1e-14);

struct NamedCheck {
    std::string name;
    bool pass;
    double margin;  // slack remaining; negative means failed
};

/// Every scalar and matrix fact needed for the norm bound on the
/// canonical matrix, with the inequalities re-verified numerically.
struct ProofReport {
    double b;
    double rho;
    double phi1;
    double phip0;
    double cp_norm;         // ||phi(A) + psi(A)*||
    double product_scalar;  // 1 - phi(1)/phi'(0)
    std::vector<NamedCheck> checks;

    bool all_pass() const;
};

ProofReport verify_cp_bound(double b, double eps = 1e-14);

/// Trapezoidal evaluation of (1/2 pi i) \oint conj(phi(zeta))/(zeta - z) dzeta
/// over the ellipse boundary zeta(t) = a cos t + i b sin t. The integrand
/// conjugates the series value directly; the closed form below exists as an
/// independent cross-check. z must lie strictly inside; m_nodes >= 64.
Complex cauchy_transform_numeric(double b, Complex z, int m_nodes);

/// Building block behind the operation above, for callers that already hold
/// a map (and for convergence studies at coarse node counts; m_nodes >= 8).
Complex cauchy_transform_numeric(const EllipseMap& map, Complex z, int m_nodes);

/// 1/phi(z) - 1/(phi'(0) z), extended by 0 at z = 0 (the map is odd, so the
/// pole cancels).
Complex cauchy_transform_closed(const EllipseMap& map, Complex z);

/// ||p(A)|| / max_{boundary of W(A)} |p|, with the boundary sampled at
/// m_boundary points (support method for the generic kind; the exact
/// segment or circle for normal / coinciding-eigenvalue kinds) and the
/// maximum refined by golden section. Throws DegenerateRangeError for
/// scalar A and InvalidPolynomialError for the zero polynomial.
double crouzeix_ratio(const Matrix2& a, const Polynomial& p, int m_boundary = 512);

struct RatioReport {
    Matrix2 matrix;
    int degree;
    double best_ratio;
    Polynomial best_poly;
    long evaluations;
    std::uint64_t seed;
};

/// Derivative-free maximization of the ratio over polynomials of degree at
/// most `degree`: for each degree k <= degree, `restarts` runs of
/// coordinate descent on the real/imaginary parts of the non-leading
/// coefficients of a monic degree-k polynomial (the ratio is
/// scale-invariant, so fixing the leading coefficient loses nothing).
/// Initial points are drawn from a counter-based generator keyed by
/// (seed, k, restart), so results are reproducible and independent of
/// evaluation order. best_ratio is a lower bound for the true supremum and
/// is monotone in `degree` for a fixed seed.
RatioReport ratio_search(const Matrix2& a, int degree, int restarts, std::uint64_t seed,
                         int m_boundary = 256);

}  // namespace nrlab

#endif  // NRLAB_CROUZEIX_HPP
