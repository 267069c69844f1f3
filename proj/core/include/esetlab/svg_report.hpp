#pragma once

#include <esetlab/curve_family.hpp>
#include <esetlab/disc_collection.hpp>
#include <esetlab/interval_union.hpp>

#include <string>

namespace esetlab {

/// Strip plot of an interval union over [lo, hi]: the exceptional c-set as
/// filled segments on a baseline strip. Output is byte-stable across runs.
std::string render_strip_plot(const IntervalUnion& set, double lo, double hi,
                              const std::string& title);

/// Curve-and-disc panels, one per geometric situation: two gauge curves of
/// the family plus a small disc collection, discs colored by whether the
/// mid curve meets them.
///   1 concave plane   2 convex plane   3 constant plane
///   4 concave unit disc   5 convex unit disc
std::string render_figure(int which);

}  // namespace esetlab
