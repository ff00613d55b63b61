#ifndef NRLAB_CURVE_HPP
#define NRLAB_CURVE_HPP

#include <functional>
#include <optional>
#include <vector>

#include "nrlab/complex.hpp"
#include "nrlab/polynomial.hpp"

namespace nrlab {

/// Sampled plane curve: strictly increasing parameters with one point each.
/// Producers that know the exact parametrization may attach an evaluator;
/// refinement then works on the true curve instead of interpolated chords.
/// `period` marks closed curves so refinement brackets can wrap around.
struct CurveSamples {
    std::vector<double> params;
    std::vector<Complex> points;
    std::function<Complex(double)> evaluator;  // optional exact parametrization
    std::optional<double> period;              // set for closed curves

    CurveSamples(std::vector<double> params_in, std::vector<Complex> points_in);
    CurveSamples(std::vector<double> params_in, std::vector<Complex> points_in,
                 std::function<Complex(double)> eval, std::optional<double> period_in);

    std::size_t size() const { return params.size(); }

    // Point at an arbitrary parameter: exact evaluator when present,
    // otherwise linear interpolation between neighbouring samples.
    Complex at(double t) const;
};

struct CurveMax {
    double value;  // max of |p| found
    double param;  // parameter attaining it
};

/// Maximum of |p| over the sampled curve. With `refine` set, a fixed
/// 60-iteration golden-section pass runs on the interval bracketing the
/// best sample (wrapping across the seam for periodic curves).
CurveMax max_modulus_on_curve(const Polynomial& p, const CurveSamples& curve, bool refine);

// Convenience samplers used by numerical-range code and tests.
CurveSamples sample_circle(Complex center, double radius, int m);
CurveSamples sample_segment(Complex from, Complex to, int m);

}  // namespace nrlab

#endif  // NRLAB_CURVE_HPP
