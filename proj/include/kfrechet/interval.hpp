#ifndef KFRECHET_INTERVAL_HPP
#define KFRECHET_INTERVAL_HPP

#include <optional>
#include <span>
#include <vector>

namespace kfrechet {

// Global absolute tolerance for endpoint comparisons and coverage gaps.
inline constexpr double kDefaultTolerance = 1e-9;

// Reads KFRECHET_TOL from the environment; falls back to kDefaultTolerance.
// Throws std::invalid_argument for a malformed or negative value.
double tolerance_from_env();

/// Closed interval [lo, hi] on a parameter axis, or the distinguished empty set.
class Interval {
public:
    Interval() = default;  // empty
    Interval(double lo, double hi);

    static Interval empty() { return {}; }
    static Interval point(double x) { return Interval(x, x); }

    bool is_empty() const { return empty_; }
    double lo() const;
    double hi() const;
    double length() const { return empty_ ? 0.0 : hi_ - lo_; }

    bool contains(double x, double tol = 0.0) const;
    // true iff other lies inside this interval, endpoints compared with tol
    bool contains(const Interval& other, double tol = 0.0) const;

    Interval intersect(const Interval& other) const;
    // smallest interval containing both
    Interval hull(const Interval& other) const;
    Interval shifted(double offset) const;

    friend bool operator==(const Interval& a, const Interval& b);

private:
    double lo_ = 0.0;
    double hi_ = 0.0;
    bool empty_ = true;
};

/// True iff the union of `intervals` covers `target` with no uncovered gap
/// wider than gap_tol. An empty target is trivially covered.
bool interval_union_covers(std::span<const Interval> intervals, const Interval& target,
                           double gap_tol);

}  // namespace kfrechet

#endif
