#pragma once

#include <string>
#include <tuple>

#include "ggp/core/coord.hpp"

namespace ggp {

/// A non-empty segment [lo, hi] on a cuspidal line. The twist of the label is
/// folded into the coordinates, so [a,b]_{rho nu^s} is stored as [a+s, b+s]_rho.
class Segment {
public:
    Segment(std::string label, Coord lo, Coord hi)
        : label_(std::move(label)), lo_(lo), hi_(hi) {
        const Coord len = hi_ - lo_;
        if (!is_integer(len) || len < Coord(0))
            throw Error("segment [" + to_string(lo_) + "," + to_string(hi_) +
                        "] must have non-negative integer length");
    }

    const std::string& label() const { return label_; }
    const Coord& lo() const { return lo_; }
    const Coord& hi() const { return hi_; }

    /// Number of points lo, lo+1, ..., hi.
    std::int64_t length() const { return to_integer(hi_ - lo_) + 1; }

    friend bool operator==(const Segment& a, const Segment& b) {
        return a.label_ == b.label_ && a.lo_ == b.lo_ && a.hi_ == b.hi_;
    }
    friend bool operator!=(const Segment& a, const Segment& b) { return !(a == b); }
    friend bool operator<(const Segment& a, const Segment& b) {
        if (a.label_ != b.label_) return a.label_ < b.label_;
        if (a.lo_ != b.lo_) return a.lo_ < b.lo_;
        return a.hi_ < b.hi_;
    }

private:
    std::string label_;
    Coord lo_;
    Coord hi_;
};

/// d1 precedes d2: same line and lo1 <= lo2 - 1 <= hi1 < hi2.
inline bool precedes(const Segment& d1, const Segment& d2) {
    if (d1.label() != d2.label()) return false;
    if (!is_integer(d2.lo() - d1.lo())) return false;
    const Coord shifted = d2.lo() - 1;
    return d1.lo() <= shifted && shifted <= d1.hi() && d1.hi() < d2.hi();
}

/// The segment moved one step right, [lo+1, hi+1].
inline Segment step_right(const Segment& d) {
    return Segment(d.label(), d.lo() + 1, d.hi() + 1);
}

/// True when d1 and d2 sit on the same line and the same integer coset.
inline bool same_line(const Segment& d1, const Segment& d2) {
    return d1.label() == d2.label() && is_integer(d1.lo() - d2.lo());
}

}  // namespace ggp
