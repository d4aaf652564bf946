#include "kfrechet/approximation.hpp"

namespace kfrechet {

std::vector<ProjectedInterval> project_components(const FreeSpaceDiagram& d, Axis axis)
{
    std::vector<ProjectedInterval> out;
    out.reserve(d.component_count());
    for (const auto& c : d.components()) out.push_back({c.id, axis, c.projection(axis)});
    return out;
}

std::optional<Selection> greedy_axis_cover(std::span<const ProjectedInterval> intervals,
                                           const Interval& target, double tol)
{
    if (target.is_empty()) return Selection();

    std::vector<std::size_t> chosen;
    double frontier = target.lo();
    while (true) {
        const ProjectedInterval* best = nullptr;
        for (const auto& pi : intervals) {
            const Interval& iv = pi.interval;
            if (iv.is_empty() || iv.lo() > frontier + tol) continue;
            if (iv.hi() < frontier - tol) continue;
            if (best == nullptr || iv.hi() > best->interval.hi() ||
                (iv.hi() == best->interval.hi() && pi.component_id < best->component_id))
                best = &pi;
        }
        if (best == nullptr) return std::nullopt;
        if (!chosen.empty() && best->interval.hi() <= frontier) return std::nullopt;
        chosen.push_back(best->component_id);
        frontier = std::max(frontier, best->interval.hi());
        if (frontier >= target.hi() - tol) return Selection(std::move(chosen));
    }
}

std::optional<Approximation> approximate_k(const FreeSpaceDiagram& d)
{
    const auto list_p = project_components(d, Axis::p);
    const auto list_q = project_components(d, Axis::q);
    auto cover_p = greedy_axis_cover(list_p, Interval(0.0, d.extent(Axis::p)), d.tolerance());
    if (!cover_p) return std::nullopt;
    auto cover_q = greedy_axis_cover(list_q, Interval(0.0, d.extent(Axis::q)), d.tolerance());
    if (!cover_q) return std::nullopt;

    Approximation out;
    out.selection = cover_p->united(*cover_q);
    out.cover_p = std::move(*cover_p);
    out.cover_q = std::move(*cover_q);
    return out;
}

}  // namespace kfrechet
