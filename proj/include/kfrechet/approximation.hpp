#ifndef KFRECHET_APPROXIMATION_HPP
#define KFRECHET_APPROXIMATION_HPP

#include "kfrechet/freespace.hpp"
#include "kfrechet/selection.hpp"

#include <optional>
#include <span>
#include <vector>

namespace kfrechet {

struct ProjectedInterval {
    std::size_t component_id = 0;
    Axis axis = Axis::p;
    Interval interval;
};

// The components' projections onto one axis, in id order.
std::vector<ProjectedInterval> project_components(const FreeSpaceDiagram& d, Axis axis);

/// Minimum-cardinality cover of `target` by a left-to-right greedy sweep:
/// from the current frontier pick, among intervals starting at or before it
/// (up to tol), the one reaching furthest right; ties go to the smaller id.
std::optional<Selection> greedy_axis_cover(std::span<const ProjectedInterval> intervals,
                                           const Interval& target,
                                           double tol = kDefaultTolerance);

struct Approximation {
    Selection selection;  // union of the two axis covers
    Selection cover_p;
    Selection cover_q;
};

// At most twice the minimum covering selection size. nullopt iff one axis
// cannot be covered at all (the Hausdorff test fails).
std::optional<Approximation> approximate_k(const FreeSpaceDiagram& d);

}  // namespace kfrechet

#endif
