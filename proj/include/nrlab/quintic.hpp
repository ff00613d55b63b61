#ifndef NRLAB_QUINTIC_HPP
#define NRLAB_QUINTIC_HPP

#include <vector>

#include "nrlab/complex.hpp"
#include "nrlab/curve.hpp"
#include "nrlab/polynomial.hpp"

namespace nrlab {

/// True iff a, b > 0 satisfy 3a+5b <= 1 and ab+4b <= a, the conditions
/// under which z + a z^3 - b z^5 maps the disk conformally onto a domain
/// symmetric in both axes with |f| monotone along each quarter circle.
/// Throws InvalidParameterError for non-positive inputs.
bool quintic_admissible(double a, double b);

/// The odd quintic z + a z^3 - b z^5 with admissible coefficients.
class QuinticMap {
  public:
    QuinticMap(double a, double b);  // throws unless admissible

    double a() const { return a_; }
    double b() const { return b_; }

    Complex operator()(Complex z) const;
    Polynomial polynomial() const;

  private:
    double a_;
    double b_;
};

struct DerivativeIdentity {
    double finite_difference;  // central difference of |f(e^{i t})|^2, step 1e-5
    double closed_form;        // -4 sin(2t) (a - ab - 4b cos(2t))
};

/// Both sides of the boundary derivative identity
/// d/dt |f(e^{it})|^2 = -4 sin(2t) (a - ab - 4b cos 2t), for comparison.
DerivativeIdentity boundary_derivative_identity(const QuinticMap& f, double theta);

/// For odd f returns g with g(z^2) = f(z)^2, by self-convolution and index
/// halving. Throws NotOddError when an even-index coefficient exceeds 1e-14.
Polynomial square_transform(const Polynomial& f);

/// Radial profile of a domain symmetric in both axes: samples of a
/// positive, non-increasing radius function on an increasing grid in
/// [0, pi/2]. Violations throw InvalidProfileError.
struct ProfileDomain {
    std::vector<double> thetas;
    std::vector<double> radii;

    ProfileDomain(std::vector<double> thetas_in, std::vector<double> radii_in);

    // Linear interpolation of the quarter profile; theta in [0, pi/2].
    double radius_at(double theta) const;
};

/// Boundary of the domain whose first-quadrant trace is r = R(theta),
/// reflected across both axes. Returns m points over [0, 2pi); the three
/// mirror quadrants reuse the exact first-quadrant points so the symmetry
/// is structural. m must be a positive multiple of 4 (>= 8).
CurveSamples bicirc_from_profile(const ProfileDomain& profile, int m);

}  // namespace nrlab

#endif  // NRLAB_QUINTIC_HPP
