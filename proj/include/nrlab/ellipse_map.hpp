#ifndef NRLAB_ELLIPSE_MAP_HPP
#define NRLAB_ELLIPSE_MAP_HPP

#include <vector>

#include "nrlab/complex.hpp"

namespace nrlab {

struct EllipseConstants {
    double rho;            // a + b
    double phi_at_1;       // value of the map at z = 1
    double phi_prime_at_0; // derivative of the map at 0
};

/// Conformal map of the ellipse x^2/a^2 + y^2/b^2 < 1 (foci +-1, a^2 = b^2+1)
/// onto the unit disk, normalized by phi(0) = 0 and phi'(0) > 0:
///
///   phi(z) = (2z/rho) exp( sum_{n>=1} 2(-1)^n T_{2n}(z) / (n(1+rho^{4n})) )
///
/// with rho = a + b and T_m the Chebyshev polynomials. The series is
/// truncated at N terms chosen so the dropped tail stays below `eps` over
/// the whole closed ellipse, where |T_{2n}| grows like rho^{2n}; the
/// scalar tail bound 2/(N rho^{4N}) < eps holds a fortiori. N is capped at
/// 1e5 (the cap is only reachable for b below ~1e-5, where rho -> 1).
class EllipseMap {
  public:
    // b > 0 required; eps in (0, 1e-6].
    explicit EllipseMap(double b, double eps = 1e-12);

    double a() const { return a_; }
    double b() const { return b_; }
    double rho() const { return rho_; }
    double eps() const { return eps_; }
    int terms() const { return n_terms_; }

    EllipseConstants constants() const;

    // Closed-ellipse membership with a small slack; boundary points are
    // accepted (the map extends continuously there with |phi| = 1).
    bool contains(Complex z, double slack = 1e-12) const;

    // Throws OutOfDomainError outside the closed ellipse.
    Complex eval(Complex z) const;
    Complex derivative(Complex z) const;

    // Newton iteration for phi(z) = w from the initial guess w*a, with a
    // bisection fallback along the ray arg(w). Requires |w| < 1. Throws
    // NoConvergenceError (with the last residual) after 100 iterations.
    Complex inverse(Complex w, double tol = 1e-12) const;

  private:
    double b_;
    double a_;
    double rho_;
    double eps_;
    int n_terms_;
    std::vector<double> weights_;  // 2(-1)^n / (n(1+rho^{4n})), n = 1..N
    double sum_alternating_;       // sum of weights (z = 1)
    double sum_absolute_;          // sum of |weights| (z = 0 via T_{2n}(0) = (-1)^n)
};

/// Closed-form constants rho, phi(1), phi'(0) for the given semi-minor
/// axis. Checks the chain 0 < phi(1) <= 2/rho < phi'(0) on output and
/// throws InternalConsistencyError if it fails beyond 1e-12 (which would
/// signal a truncation bug, not a property of the map).
EllipseConstants ellipse_constants(double b, double eps);

}  // namespace nrlab

#endif  // NRLAB_ELLIPSE_MAP_HPP
