#ifndef NRLAB_EMIT_HPP
#define NRLAB_EMIT_HPP

#include <iosfwd>
#include <vector>

#include "nrlab/curve.hpp"

namespace nrlab {

/// CSV with header "theta,re,im", one row per sample, 17 significant
/// digits (enough to round-trip doubles exactly), '\n' separators, and a
/// locale-independent decimal point. Throws IoError on write failure.
void emit_csv(const CurveSamples& curve, std::ostream& out);

/// Standalone SVG 1.1 document: the joint bounding box plus a 5% margin is
/// scaled uniformly so its longer side spans 1000 user units, each curve
/// becomes one closed polyline (stroke width 2, no fill), and the y axis
/// is flipped so the upper half-plane renders upward.
void emit_svg(const std::vector<CurveSamples>& curves, std::ostream& out);

}  // namespace nrlab

#endif  // NRLAB_EMIT_HPP
