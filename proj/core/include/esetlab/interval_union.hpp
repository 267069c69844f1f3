#pragma once

#include <limits>
#include <vector>

namespace esetlab {

/// Finite union of disjoint closed intervals in canonical form: sorted,
/// lo < hi per interval, and strictly positive gaps between intervals
/// (touching intervals merge on insert). The measure is the exact sum of
/// lengths, up to floating rounding.
class IntervalUnion {
  public:
    struct Interval {
        double lo;
        double hi;
    };

    IntervalUnion() = default;

    /// Merge [lo, hi] into the union. Throws InvalidInterval if lo >= hi or
    /// an endpoint is not finite.
    void insert(double lo, double hi);

    double measure() const;
    std::size_t size() const { return intervals_.size(); }
    bool empty() const { return intervals_.empty(); }
    const std::vector<Interval>& intervals() const { return intervals_; }

    bool contains(double x) const;
    /// Whether [lo, hi] is entirely covered by the union.
    bool covers(double lo, double hi) const;

    /// Clip to [lo, hi]; pass +infinity to clip to a ray [lo, inf).
    IntervalUnion clipped(double lo, double hi = std::numeric_limits<double>::infinity()) const;

  private:
    std::vector<Interval> intervals_;
};

}  // namespace esetlab
