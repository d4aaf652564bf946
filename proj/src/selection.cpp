#include "kfrechet/selection.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace kfrechet {

Selection::Selection(std::vector<std::size_t> ids) : ids_(std::move(ids))
{
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool Selection::contains(std::size_t id) const
{
    return std::binary_search(ids_.begin(), ids_.end(), id);
}

Selection Selection::united(const Selection& other) const
{
    std::vector<std::size_t> out;
    out.reserve(ids_.size() + other.ids_.size());
    std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                   std::back_inserter(out));
    Selection s;
    s.ids_ = std::move(out);
    return s;
}

bool covers_axis(const FreeSpaceDiagram& d, const Selection& s, Axis axis)
{
    std::vector<Interval> parts;
    parts.reserve(s.size());
    for (std::size_t id : s.ids()) parts.push_back(d.component(id).projection(axis));
    return interval_union_covers(parts, Interval(0.0, d.extent(axis)), d.tolerance());
}

bool covers_both(const FreeSpaceDiagram& d, const Selection& s)
{
    for (std::size_t id : s.ids()) (void)d.component(id);
    return covers_axis(d, s, Axis::p) && covers_axis(d, s, Axis::q);
}

namespace {

void mark_sole_coverers(const FreeSpaceDiagram& d, Axis axis, std::vector<bool>& necessary)
{
    const double extent = d.extent(axis);
    std::vector<double> cuts{0.0, extent};
    for (const auto& c : d.components()) {
        const Interval& iv = c.projection(axis);
        cuts.push_back(std::clamp(iv.lo(), 0.0, extent));
        cuts.push_back(std::clamp(iv.hi(), 0.0, extent));
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        if (cuts[k + 1] - cuts[k] <= d.tolerance()) continue;
        const double mid = 0.5 * (cuts[k] + cuts[k + 1]);
        std::size_t count = 0;
        std::size_t last = 0;
        for (const auto& c : d.components()) {
            if (c.projection(axis).contains(mid)) {
                ++count;
                last = c.id;
            }
        }
        if (count == 1) necessary[last] = true;
    }
}

bool box_inside(const Component& inner, const Component& outer)
{
    return outer.proj_p.contains(inner.proj_p) && outer.proj_q.contains(inner.proj_q);
}

}  // namespace

Preprocessing preprocess(const FreeSpaceDiagram& d)
{
    const std::size_t count = d.component_count();
    std::vector<bool> necessary(count, false);
    mark_sole_coverers(d, Axis::p, necessary);
    mark_sole_coverers(d, Axis::q, necessary);

    Preprocessing out;
    std::vector<std::size_t> necessary_ids;
    for (std::size_t id = 0; id < count; ++id)
        if (necessary[id]) necessary_ids.push_back(id);
    out.necessary = Selection(std::move(necessary_ids));

    const auto comps = d.components();
    for (std::size_t b = 0; b < count; ++b) {
        bool redundant = false;
        if (!necessary[b]) {
            for (std::size_t a = 0; a < count && !redundant; ++a) {
                if (a == b || !box_inside(comps[b], comps[a])) continue;
                // identical boxes: the smallest id survives
                redundant = !box_inside(comps[a], comps[b]) || a < b;
            }
        }
        (redundant ? out.redundant : out.kept).push_back(b);
    }
    return out;
}

std::optional<Selection> decide_bruteforce(const FreeSpaceDiagram& d, int k,
                                           BruteForceOptions options)
{
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    const auto budget = static_cast<std::size_t>(k);

    Selection seed;
    std::vector<std::size_t> pool;
    if (options.use_preprocessing) {
        const Preprocessing pre = preprocess(d);
        seed = pre.necessary;
        for (std::size_t id : pre.kept)
            if (!seed.contains(id)) pool.push_back(id);
    } else {
        for (const auto& c : d.components()) pool.push_back(c.id);
    }
    if (seed.size() > budget) return std::nullopt;

    const std::size_t free_slots = std::min(budget - seed.size(), pool.size());
    std::vector<std::size_t> pick;
    for (std::size_t r = 0; r <= free_slots; ++r) {
        // lexicographic r-combinations of pool
        pick.resize(r);
        for (std::size_t x = 0; x < r; ++x) pick[x] = x;
        while (true) {
            std::vector<std::size_t> ids(seed.ids().begin(), seed.ids().end());
            for (std::size_t x : pick) ids.push_back(pool[x]);
            Selection candidate(std::move(ids));
            if (covers_both(d, candidate)) return candidate;

            std::size_t x = r;
            while (x > 0 && pick[x - 1] == pool.size() - r + (x - 1)) --x;
            if (x == 0) break;
            ++pick[x - 1];
            for (std::size_t y = x; y < r; ++y) pick[y] = pick[y - 1] + 1;
        }
    }
    return std::nullopt;
}

std::vector<Selection> feasible_axis_selections(const FreeSpaceDiagram& d, Axis axis, int k,
                                                std::size_t* nodes_visited)
{
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    const double tol = d.tolerance();
    const double extent = d.extent(axis);
    const auto comps = d.components();
    const auto depth_limit = static_cast<std::size_t>(k);

    std::set<Selection> found;
    std::vector<std::size_t> path;
    std::size_t nodes = 0;

    // Depth-first walk of the search tree; the node for component `id` sits
    // at depth path.size() and its frontier is the component's upper end.
    std::function<void(std::size_t)> visit = [&](std::size_t id) {
        ++nodes;
        path.push_back(id);
        const double frontier = comps[id].projection(axis).hi();
        if (frontier >= extent - tol) {
            found.insert(Selection(path));
        } else if (path.size() < depth_limit) {
            // components active when this one ends and extending the frontier
            for (const auto& next : comps) {
                const Interval& iv = next.projection(axis);
                if (iv.lo() <= frontier + tol && iv.hi() > frontier) visit(next.id);
            }
        }
        path.pop_back();
    };

    if (depth_limit > 0) {
        for (const auto& c : comps)
            if (c.projection(axis).lo() <= tol) visit(c.id);
    }
    if (nodes_visited != nullptr) *nodes_visited = nodes;
    return {found.begin(), found.end()};
}

std::optional<Selection> decide_fpt(const FreeSpaceDiagram& d, int k, FptStats* stats)
{
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    FptStats local;
    const auto list_p = feasible_axis_selections(d, Axis::p, k, &local.nodes_p);
    const auto list_q = feasible_axis_selections(d, Axis::q, k, &local.nodes_q);
    local.feasible_p = list_p.size();
    local.feasible_q = list_q.size();

    std::optional<Selection> best;
    const auto budget = static_cast<std::size_t>(k);
    for (const auto& sp : list_p) {
        for (const auto& sq : list_q) {
            ++local.pairs_checked;
            Selection joined = sp.united(sq);
            if (joined.size() <= budget && (!best || joined < *best)) best = std::move(joined);
        }
    }
    if (stats != nullptr) *stats = local;
    return best;
}

std::optional<std::size_t> weak_frechet_witness(const FreeSpaceDiagram& d)
{
    for (const auto& c : d.components())
        if (c.touches.all()) return c.id;
    return std::nullopt;
}

bool decide_weak_frechet(const FreeSpaceDiagram& d) { return weak_frechet_witness(d).has_value(); }

bool decide_hausdorff(const FreeSpaceDiagram& d)
{
    std::vector<std::size_t> all;
    for (const auto& c : d.components()) all.push_back(c.id);
    return covers_both(d, Selection(std::move(all)));
}

namespace {

// Free points of `free_edge` that are at or above `from` (monotone entry).
Interval at_or_above(const Interval& free_edge, double from, double tol)
{
    if (free_edge.is_empty() || from > free_edge.hi() + tol) return {};
    return Interval(std::min(std::max(free_edge.lo(), from), free_edge.hi()), free_edge.hi());
}

}  // namespace

bool decide_strong_frechet(const FreeSpaceDiagram& d)
{
    const std::size_t n = d.n();
    const std::size_t m = d.m();
    const double tol = d.tolerance();
    if (!d.has_cells()) throw std::logic_error("strong Frechet decision needs cell data");

    // reach_left[i][j]: reachable part of the left edge of cell (i, j), i <= n
    // reach_bottom[i][j]: reachable part of the bottom edge of cell (i, j), j <= m
    std::vector<Interval> reach_left((n + 1) * m);
    std::vector<Interval> reach_bottom(n * (m + 1));
    auto left_at = [&](std::size_t i, std::size_t j) -> Interval& { return reach_left[i * m + j]; };
    auto bottom_at = [&](std::size_t i, std::size_t j) -> Interval& {
        return reach_bottom[i * (m + 1) + j];
    };

    bool open = true;
    for (std::size_t j = 0; j < m; ++j) {
        const Interval& e = d.cell(0, j).left;
        if (open && !e.is_empty() && e.lo() <= tol) {
            left_at(0, j) = e;
            open = e.hi() >= 1.0 - tol;
        } else {
            open = false;
        }
    }
    open = true;
    for (std::size_t i = 0; i < n; ++i) {
        const Interval& e = d.cell(i, 0).bottom;
        if (open && !e.is_empty() && e.lo() <= tol) {
            bottom_at(i, 0) = e;
            open = e.hi() >= 1.0 - tol;
        } else {
            open = false;
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const CellFreeSpace& c = d.cell(i, j);
            const Interval& from_left = left_at(i, j);
            const Interval& from_bottom = bottom_at(i, j);
            Interval right;
            Interval top;
            if (!from_bottom.is_empty()) right = c.right;
            else if (!from_left.is_empty()) right = at_or_above(c.right, from_left.lo(), tol);
            if (!from_left.is_empty()) top = c.top;
            else if (!from_bottom.is_empty()) top = at_or_above(c.top, from_bottom.lo(), tol);
            left_at(i + 1, j) = right;
            bottom_at(i, j + 1) = top;
        }
    }

    const Interval& end_right = left_at(n, m - 1);
    const Interval& end_top = bottom_at(n - 1, m);
    return (!end_right.is_empty() && end_right.hi() >= 1.0 - tol) ||
           (!end_top.is_empty() && end_top.hi() >= 1.0 - tol);
}

}  // namespace kfrechet
