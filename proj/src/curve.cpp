#include "nrlab/curve.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "nrlab/errors.hpp"

namespace nrlab {

namespace {

void validate(const std::vector<double>& params, const std::vector<Complex>& points) {
    if (params.size() != points.size())
        throw InvalidParameterError("CurveSamples: params/points length mismatch");
    if (params.size() < 3) throw InvalidParameterError("CurveSamples: need at least 3 samples");
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (!is_finite(params[i]) || !is_finite(points[i]))
            throw InvalidParameterError("CurveSamples: non-finite sample");
        if (i > 0 && !(params[i] > params[i - 1]))
            throw InvalidParameterError("CurveSamples: params not strictly increasing");
    }
}

}  // namespace

CurveSamples::CurveSamples(std::vector<double> params_in, std::vector<Complex> points_in)
    : params(std::move(params_in)), points(std::move(points_in)) {
    validate(params, points);
}

CurveSamples::CurveSamples(std::vector<double> params_in, std::vector<Complex> points_in,
                           std::function<Complex(double)> eval, std::optional<double> period_in)
    : params(std::move(params_in)),
      points(std::move(points_in)),
      evaluator(std::move(eval)),
      period(period_in) {
    validate(params, points);
}

Complex CurveSamples::at(double t) const {
    if (evaluator) return evaluator(t);
    // Chord interpolation between the neighbouring samples.
    if (t <= params.front()) return points.front();
    if (t >= params.back()) {
        if (!period) return points.back();
        // Seam segment of a closed curve: interpolate back to the first point.
        double span = params.front() + *period - params.back();
        double u = (t - params.back()) / span;
        return points.back() + u * (points.front() - points.back());
    }
    auto it = std::upper_bound(params.begin(), params.end(), t);
    std::size_t hi = static_cast<std::size_t>(it - params.begin());
    std::size_t lo = hi - 1;
    double u = (t - params[lo]) / (params[hi] - params[lo]);
    return points[lo] + u * (points[hi] - points[lo]);
}

namespace {

// Fixed-iteration golden-section maximization of g on [lo, hi].
template <typename F>
std::pair<double, double> golden_max(const F& g, double lo, double hi, int iters) {
    const double invphi = 0.6180339887498948482;
    double x1 = hi - invphi * (hi - lo);
    double x2 = lo + invphi * (hi - lo);
    double g1 = g(x1), g2 = g(x2);
    for (int i = 0; i < iters; ++i) {
        if (g1 < g2) {
            lo = x1;
            x1 = x2;
            g1 = g2;
            x2 = lo + invphi * (hi - lo);
            g2 = g(x2);
        } else {
            hi = x2;
            x2 = x1;
            g2 = g1;
            x1 = hi - invphi * (hi - lo);
            g1 = g(x1);
        }
    }
    double mid = 0.5 * (lo + hi);
    return {g(mid), mid};
}

}  // namespace

CurveMax max_modulus_on_curve(const Polynomial& p, const CurveSamples& curve, bool refine) {
    const std::size_t n = curve.size();
    double best = -1.0;
    std::size_t best_i = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double v = std::abs(p(curve.points[i]));
        if (v > best) {
            best = v;
            best_i = i;
        }
    }
    if (!refine) return {best, curve.params[best_i]};

    // Bracket one sample to each side of the best one; closed curves wrap
    // across the seam with the parameter unwrapped past the period.
    double lo, hi;
    if (best_i == 0) {
        lo = curve.period ? curve.params[n - 1] - *curve.period : curve.params[0];
        hi = curve.params[1];
    } else if (best_i == n - 1) {
        lo = curve.params[n - 2];
        hi = curve.period ? curve.params[0] + *curve.period : curve.params[n - 1];
    } else {
        lo = curve.params[best_i - 1];
        hi = curve.params[best_i + 1];
    }

    auto g = [&](double t) {
        double tw = t;
        if (curve.period) {
            while (tw < curve.params.front()) tw += *curve.period;
            while (tw >= curve.params.front() + *curve.period) tw -= *curve.period;
        } else {
            tw = std::clamp(tw, curve.params.front(), curve.params.back());
        }
        return std::abs(p(curve.at(tw)));
    };

    auto [val, arg] = golden_max(g, lo, hi, 60);
    if (val >= best) {
        double tw = arg;
        if (curve.period) {
            while (tw < curve.params.front()) tw += *curve.period;
            while (tw >= curve.params.front() + *curve.period) tw -= *curve.period;
        }
        return {val, tw};
    }
    return {best, curve.params[best_i]};
}

CurveSamples sample_circle(Complex center, double radius, int m) {
    if (m < 3) throw InvalidParameterError("sample_circle: need m >= 3");
    std::vector<double> params(static_cast<std::size_t>(m));
    std::vector<Complex> points(static_cast<std::size_t>(m));
    auto eval = [center, radius](double t) {
        return center + radius * Complex(std::cos(t), std::sin(t));
    };
    for (int k = 0; k < m; ++k) {
        params[static_cast<std::size_t>(k)] = 2.0 * kPi * k / m;
        points[static_cast<std::size_t>(k)] = eval(params[static_cast<std::size_t>(k)]);
    }
    return CurveSamples(std::move(params), std::move(points), eval, 2.0 * kPi);
}

CurveSamples sample_segment(Complex from, Complex to, int m) {
    if (m < 3) throw InvalidParameterError("sample_segment: need m >= 3");
    std::vector<double> params(static_cast<std::size_t>(m));
    std::vector<Complex> points(static_cast<std::size_t>(m));
    auto eval = [from, to](double t) { return from + t * (to - from); };
    for (int k = 0; k < m; ++k) {
        double t = static_cast<double>(k) / (m - 1);
        params[static_cast<std::size_t>(k)] = t;
        points[static_cast<std::size_t>(k)] = eval(t);
    }
    return CurveSamples(std::move(params), std::move(points), eval, std::nullopt);
}

}  // namespace nrlab
