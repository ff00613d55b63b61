#ifndef NRLAB_PROFILE_HPP
#define NRLAB_PROFILE_HPP

#include <cstddef>
#include <span>

namespace nrlab {

enum class ProfileMode { positive, increasing, convex, concave };

/// Outcome of a 1-D profile check. `min_margin` is the smallest observed
/// slack (value, first difference, or second difference depending on the
/// mode) so that near-equality cases can be inspected by a human; finite
/// sampling cannot certify strict versions of these properties.
struct ProfileReport {
    bool pass;
    double min_margin;
    std::size_t worst_index;
};

/// Checks a sampled profile y(x):
///   positive   — all values after the first sample exceed -tol
///   increasing — all first differences >= -tol
///   convex     — all second differences >= -tol*h^2  (uniform grid only)
///   concave    — all second differences <= +tol*h^2  (uniform grid only)
/// The h^2 scaling keeps the slack commensurate with the cancellation in
/// second differences. Non-uniform grids are rejected for the curvature
/// modes (InvalidGridError). Grid length must be >= 3 for those modes.
ProfileReport profile_margins(std::span<const double> xs, std::span<const double> ys,
                              ProfileMode mode, double tol = 1e-8);

bool profile_check(std::span<const double> xs, std::span<const double> ys,
                   ProfileMode mode, double tol = 1e-8);

}  // namespace nrlab

#endif  // NRLAB_PROFILE_HPP
