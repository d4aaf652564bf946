#include "kfrechet/interval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace kfrechet {

double tolerance_from_env()
{
    const char* raw = std::getenv("KFRECHET_TOL");
    if (raw == nullptr || *raw == '\0') return kDefaultTolerance;
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(raw, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("KFRECHET_TOL is not a number: ") + raw);
    }
    if (raw[used] != '\0' || !std::isfinite(value) || value < 0.0)
        throw std::invalid_argument(std::string("KFRECHET_TOL must be a finite value >= 0: ") + raw);
    return value;
}

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi), empty_(false)
{
    if (!std::isfinite(lo) || !std::isfinite(hi))
        throw std::invalid_argument("interval endpoints must be finite");
    if (lo > hi) throw std::invalid_argument("interval with lo > hi");
}

double Interval::lo() const
{
    if (empty_) throw std::logic_error("lo() of empty interval");
    return lo_;
}

double Interval::hi() const
{
    if (empty_) throw std::logic_error("hi() of empty interval");
    return hi_;
}

bool Interval::contains(double x, double tol) const
{
    return !empty_ && lo_ - tol <= x && x <= hi_ + tol;
}

bool Interval::contains(const Interval& other, double tol) const
{
    if (other.empty_) return true;
    return !empty_ && lo_ - tol <= other.lo_ && other.hi_ <= hi_ + tol;
}

Interval Interval::intersect(const Interval& other) const
{
    if (empty_ || other.empty_) return {};
    const double lo = std::max(lo_, other.lo_);
    const double hi = std::min(hi_, other.hi_);
    if (lo > hi) return {};
    return {lo, hi};
}

Interval Interval::hull(const Interval& other) const
{
    if (empty_) return other;
    if (other.empty_) return *this;
    return {std::min(lo_, other.lo_), std::max(hi_, other.hi_)};
}

Interval Interval::shifted(double offset) const
{
    if (empty_) return {};
    return {lo_ + offset, hi_ + offset};
}

bool operator==(const Interval& a, const Interval& b)
{
    if (a.empty_ || b.empty_) return a.empty_ == b.empty_;
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
}

bool interval_union_covers(std::span<const Interval> intervals, const Interval& target,
                           double gap_tol)
{
    if (target.is_empty()) return true;

    std::vector<Interval> sorted;
    sorted.reserve(intervals.size());
    for (const auto& iv : intervals)
        if (!iv.is_empty()) sorted.push_back(iv);
    std::sort(sorted.begin(), sorted.end(),
              [](const Interval& a, const Interval& b) { return a.lo() < b.lo(); });

    // Sweep left to right; frontier is the right end of the covered prefix.
    double frontier = target.lo();
    bool started = false;
    for (const auto& iv : sorted) {
        if (iv.hi() < target.lo() - gap_tol) continue;
        if (iv.lo() > (started ? frontier : target.lo()) + gap_tol) break;
        started = true;
        frontier = std::max(frontier, iv.hi());
        if (frontier >= target.hi() - gap_tol) return true;
    }
    return false;
}

}  // namespace kfrechet
