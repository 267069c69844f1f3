#include <esetlab/interval_union.hpp>

#include <esetlab/errors.hpp>

#include <algorithm>
#include <cmath>

namespace esetlab {

void IntervalUnion::insert(double lo, double hi) {
    if (!(std::isfinite(lo) && std::isfinite(hi)))
        throw InvalidInterval("interval endpoints must be finite");
    if (!(lo < hi)) throw InvalidInterval("interval needs lo < hi");

    // First interval whose hi reaches lo; everything from here that starts
    // before hi merges into the insertion.
    auto first = std::lower_bound(intervals_.begin(), intervals_.end(), lo,
                                  [](const Interval& iv, double v) { return iv.hi < v; });
    auto last = first;
    while (last != intervals_.end() && last->lo <= hi) {
        lo = std::min(lo, last->lo);
        hi = std::max(hi, last->hi);
        ++last;
    }
    first = intervals_.erase(first, last);
    intervals_.insert(first, Interval{lo, hi});
}

double IntervalUnion::measure() const {
    double m = 0.0;
    for (const Interval& iv : intervals_) m += iv.hi - iv.lo;
    return m;
}

bool IntervalUnion::contains(double x) const {
    auto it = std::lower_bound(intervals_.begin(), intervals_.end(), x,
                               [](const Interval& iv, double v) { return iv.hi < v; });
    return it != intervals_.end() && it->lo <= x;
}

bool IntervalUnion::covers(double lo, double hi) const {
    if (!(lo <= hi)) return false;
    // Gaps are strictly positive, so a covering set must be one interval.
    auto it = std::lower_bound(intervals_.begin(), intervals_.end(), lo,
                               [](const Interval& iv, double v) { return iv.hi < v; });
    return it != intervals_.end() && it->lo <= lo && it->hi >= hi;
}

IntervalUnion IntervalUnion::clipped(double lo, double hi) const {
    IntervalUnion out;
    for (const Interval& iv : intervals_) {
        const double a = std::max(iv.lo, lo);
        const double b = std::min(iv.hi, hi);
        if (a < b) out.intervals_.push_back(Interval{a, b});
    }
    return out;
}

}  // namespace esetlab
