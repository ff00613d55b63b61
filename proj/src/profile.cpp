#include "nrlab/profile.hpp"

#include <cmath>
#include <limits>

#include "nrlab/errors.hpp"

namespace nrlab {

namespace {

double uniform_step(std::span<const double> xs) {
    const double h = (xs.back() - xs.front()) / static_cast<double>(xs.size() - 1);
    for (std::size_t i = 1; i < xs.size(); ++i) {
        if (std::abs((xs[i] - xs[i - 1]) - h) > 1e-9 * std::max(h, 1.0))
            throw InvalidGridError("profile check: curvature modes need a uniform grid");
    }
    return h;
}

}  // namespace

ProfileReport profile_margins(std::span<const double> xs, std::span<const double> ys,
                              ProfileMode mode, double tol) {
    if (xs.size() != ys.size())
        throw InvalidParameterError("profile check: grid/value length mismatch");
    if (xs.size() < 2) throw InvalidParameterError("profile check: need at least 2 samples");

    double worst = std::numeric_limits<double>::infinity();
    std::size_t worst_i = 0;
    double threshold = -tol;
    bool strict = (mode == ProfileMode::positive);

    switch (mode) {
        case ProfileMode::positive:
            for (std::size_t i = 1; i < ys.size(); ++i) {
                if (ys[i] < worst) {
                    worst = ys[i];
                    worst_i = i;
                }
            }
            break;
        case ProfileMode::increasing:
            for (std::size_t i = 1; i < ys.size(); ++i) {
                double d = ys[i] - ys[i - 1];
                if (d < worst) {
                    worst = d;
                    worst_i = i;
                }
            }
            break;
        case ProfileMode::convex:
        case ProfileMode::concave: {
            if (xs.size() < 3)
                throw InvalidParameterError("profile check: curvature modes need >= 3 samples");
            const double h = uniform_step(xs);
            threshold = -tol * h * h;
            const double sign = (mode == ProfileMode::convex) ? 1.0 : -1.0;
            for (std::size_t i = 1; i + 1 < ys.size(); ++i) {
                double d2 = sign * (ys[i + 1] - 2.0 * ys[i] + ys[i - 1]);
                if (d2 < worst) {
                    worst = d2;
                    worst_i = i;
                }
            }
            break;
        }
    }

    bool pass = strict ? (worst > threshold) : (worst >= threshold);
    return ProfileReport{pass, worst, worst_i};
}

bool profile_check(std::span<const double> xs, std::span<const double> ys, ProfileMode mode,
                   double tol) {
    return profile_margins(xs, ys, mode, tol).pass;
}

}  // namespace nrlab
