#include "kfrechet/freespace.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace kfrechet {

namespace {

// {u : lo <= c0 + c1*u <= hi} intersected with [0, 1]
Interval linear_range(double c0, double c1, double lo, double hi)
{
    if (c1 == 0.0) return (lo <= c0 && c0 <= hi) ? Interval(0.0, 1.0) : Interval();
    double a = (lo - c0) / c1;
    double b = (hi - c0) / c1;
    if (a > b) std::swap(a, b);
    return Interval(a, b).intersect(Interval(0.0, 1.0));
}

class DisjointSets {
public:
    explicit DisjointSets(std::size_t count) : parent_(count) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

Interval hull_of_edge_points(const Interval& projection, const Interval& e_lo_side,
                             const Interval& e_hi_side, const Interval& along_a,
                             const Interval& along_b)
{
    // e_lo_side / e_hi_side: edges at local coordinate 0 / 1 of this axis;
    // along_a / along_b: edges running parallel to this axis.
    Interval out = projection.hull(along_a).hull(along_b);
    if (!e_lo_side.is_empty()) out = out.hull(Interval::point(0.0));
    if (!e_hi_side.is_empty()) out = out.hull(Interval::point(1.0));
    return out;
}

}  // namespace

const Interval& CellFreeSpace::edge(Edge e) const
{
    switch (e) {
    case Edge::left: return left;
    case Edge::right: return right;
    case Edge::bottom: return bottom;
    case Edge::top: return top;
    }
    throw std::logic_error("bad edge");
}

Interval free_interval_on_segment(Point2 c, const Segment& seg, double eps, double tol)
{
    const Point2 d = seg.direction();
    const Point2 w = seg.a - c;
    const double a = dot(d, d);
    const double b = dot(d, w);
    const double cc = dot(w, w) - eps * eps;
    // a*u^2 + 2*b*u + cc <= 0
    double disc = b * b - a * cc;
    if (disc < 0.0) {
        if (disc / (a * a) < -tol) return {};
        disc = 0.0;
    }
    const double root = std::sqrt(disc);
    double u1 = 0.0;
    double u2 = 0.0;
    const double q = -(b + std::copysign(root, b));
    if (q == 0.0) {
        u1 = u2 = 0.0;
    } else {
        u1 = q / a;
        u2 = cc / q;
    }
    if (u1 > u2) std::swap(u1, u2);
    return Interval(u1, u2).intersect(Interval(0.0, 1.0));
}

Interval cell_edge_interval(const Segment& seg_p, const Segment& seg_q, double eps, Edge edge,
                            double tol)
{
    switch (edge) {
    case Edge::left: return free_interval_on_segment(seg_p.a, seg_q, eps, tol);
    case Edge::right: return free_interval_on_segment(seg_p.b, seg_q, eps, tol);
    case Edge::bottom: return free_interval_on_segment(seg_q.a, seg_p, eps, tol);
    case Edge::top: return free_interval_on_segment(seg_q.b, seg_p, eps, tol);
    }
    throw std::logic_error("bad edge");
}

Interval cell_axis_projection(const Segment& seg_p, const Segment& seg_q, double eps, Axis axis,
                              double tol)
{
    const Segment& moving = axis == Axis::p ? seg_p : seg_q;
    const Segment& target = axis == Axis::p ? seg_q : seg_p;

    // closest point of target is an endpoint ...
    Interval out = free_interval_on_segment(target.a, moving, eps, tol)
                       .hull(free_interval_on_segment(target.b, moving, eps, tol));

    // ... or the perpendicular foot, inside the target's normal strip
    const Point2 dt = target.direction();
    const double len = norm(dt);
    const Point2 w = moving.a - target.a;
    const Point2 dm = moving.direction();
    const double len2 = len * len;
    const Interval in_strip = linear_range(dot(w, dt) / len2, dot(dm, dt) / len2, 0.0, 1.0);
    const Interval near_line =
        linear_range(cross(dt, w) / len, cross(dt, dm) / len, -eps - tol, eps + tol);
    return out.hull(in_strip.intersect(near_line));
}

FreeSpaceDiagram build_diagram(const PolyCurve& p, const PolyCurve& q, double eps, double tol)
{
    if (!(eps >= 0.0) || !std::isfinite(eps)) throw std::invalid_argument("epsilon must be >= 0");

    FreeSpaceDiagram d;
    d.epsilon_ = eps;
    d.tol_ = tol;
    d.n_ = p.segment_count();
    d.m_ = q.segment_count();
    const std::size_t n = d.n_;
    const std::size_t m = d.m_;
    const auto pv = p.vertices();
    const auto qv = q.vertices();

    // Shared edges are computed once so neighbouring cells agree exactly.
    std::vector<Interval> vertical((n + 1) * m);    // [i][j]: P vertex i vs Q segment j
    std::vector<Interval> horizontal(n * (m + 1));  // [i][j]: Q vertex j vs P segment i
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            vertical[i * m + j] = free_interval_on_segment(pv[i], q.segment(j), eps, tol);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= m; ++j)
            horizontal[i * (m + 1) + j] = free_interval_on_segment(qv[j], p.segment(i), eps, tol);

    d.cells_.resize(n * m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            CellFreeSpace& c = d.cells_[i * m + j];
            const Segment sp = p.segment(i);
            const Segment sq = q.segment(j);
            c.index = {i, j};
            c.left = vertical[i * m + j];
            c.right = vertical[(i + 1) * m + j];
            c.bottom = horizontal[i * (m + 1) + j];
            c.top = horizontal[i * (m + 1) + j + 1];
            c.s_projection = hull_of_edge_points(cell_axis_projection(sp, sq, eps, Axis::p, tol),
                                                 c.left, c.right, c.bottom, c.top);
            c.t_projection = hull_of_edge_points(cell_axis_projection(sp, sq, eps, Axis::q, tol),
                                                 c.bottom, c.top, c.left, c.right);
            // A tangency seen on one axis only is below tolerance; drop it.
            if (c.s_projection.is_empty() != c.t_projection.is_empty())
                c.s_projection = c.t_projection = Interval::empty();
            c.interior_nonempty = !c.s_projection.is_empty();
        }
    }

    DisjointSets sets(n * m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const CellFreeSpace& c = d.cells_[i * m + j];
            if (!c.interior_nonempty) continue;
            if (i + 1 < n && !c.right.is_empty() && d.cells_[(i + 1) * m + j].interior_nonempty)
                sets.unite(i * m + j, (i + 1) * m + j);
            if (j + 1 < m && !c.top.is_empty() && d.cells_[i * m + j + 1].interior_nonempty)
                sets.unite(i * m + j, i * m + j + 1);
        }
    }

    std::map<std::size_t, std::size_t> root_to_id;
    d.owner_.assign(n * m, std::nullopt);
    for (std::size_t flat = 0; flat < n * m; ++flat) {
        const CellFreeSpace& c = d.cells_[flat];
        if (!c.interior_nonempty) continue;
        const std::size_t root = sets.find(flat);
        auto [it, inserted] = root_to_id.try_emplace(root, d.components_.size());
        if (inserted) {
            Component comp;
            comp.id = it->second;
            d.components_.push_back(std::move(comp));
        }
        Component& comp = d.components_[it->second];
        comp.cells.push_back(c.index);
        const auto si = static_cast<double>(c.index.i);
        const auto tj = static_cast<double>(c.index.j);
        comp.proj_p = comp.proj_p.hull(c.s_projection.shifted(si));
        comp.proj_q = comp.proj_q.hull(c.t_projection.shifted(tj));
        d.owner_[flat] = comp.id;
    }
    d.finish_components();
    return d;
}

FreeSpaceDiagram FreeSpaceDiagram::from_components(std::size_t n, std::size_t m,
                                                   std::vector<Component> components, double tol)
{
    if (n == 0 || m == 0) throw std::invalid_argument("parameter spaces must be nonempty");
    FreeSpaceDiagram d;
    d.n_ = n;
    d.m_ = m;
    d.tol_ = tol;
    for (std::size_t k = 0; k < components.size(); ++k) {
        if (components[k].proj_p.is_empty() || components[k].proj_q.is_empty())
            throw std::invalid_argument("component projections must be nonempty");
        components[k].id = k;
    }
    d.components_ = std::move(components);
    d.finish_components();
    return d;
}

void FreeSpaceDiagram::finish_components()
{
    const double np = static_cast<double>(n_);
    const double mq = static_cast<double>(m_);
    for (auto& comp : components_) {
        comp.touches.left = comp.proj_p.lo() <= tol_;
        comp.touches.right = comp.proj_p.hi() >= np - tol_;
        comp.touches.bottom = comp.proj_q.lo() <= tol_;
        comp.touches.top = comp.proj_q.hi() >= mq - tol_;
    }
    z_ = compute_z(*this);
}

const CellFreeSpace& FreeSpaceDiagram::cell(std::size_t i, std::size_t j) const
{
    if (!has_cells()) throw std::logic_error("diagram carries no cell data");
    if (i >= n_ || j >= m_) throw std::out_of_range("cell index out of range");
    return cells_[i * m_ + j];
}

const Component& FreeSpaceDiagram::component(std::size_t id) const
{
    if (id >= components_.size()) throw std::out_of_range("unknown component id");
    return components_[id];
}

std::optional<std::size_t> FreeSpaceDiagram::component_of(std::size_t i, std::size_t j) const
{
    if (!has_cells()) throw std::logic_error("diagram carries no cell data");
    if (i >= n_ || j >= m_) throw std::out_of_range("cell index out of range");
    return owner_[i * m_ + j];
}

int stabbing_number(std::span<const Interval> intervals, double tol)
{
    std::vector<double> probes;
    for (const auto& iv : intervals) {
        if (iv.is_empty()) continue;
        for (double e : {iv.lo(), iv.hi()}) {
            probes.push_back(e - tol);
            probes.push_back(e);
            probes.push_back(e + tol);
        }
    }
    int best = 0;
    for (double x : probes) {
        int count = 0;
        for (const auto& iv : intervals) count += iv.contains(x) ? 1 : 0;
        best = std::max(best, count);
    }
    return best;
}

int compute_z(const FreeSpaceDiagram& d)
{
    std::vector<Interval> ps;
    std::vector<Interval> qs;
    for (const auto& c : d.components()) {
        ps.push_back(c.proj_p);
        qs.push_back(c.proj_q);
    }
    return std::max(stabbing_number(ps, d.tolerance()), stabbing_number(qs, d.tolerance()));
}

}  // namespace kfrechet
