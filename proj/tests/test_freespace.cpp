#include "kfrechet/freespace.hpp"
#include "kfrechet/oracles.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace kfrechet;
using testing::bottom_segment;
using testing::top_segment;

namespace {

const Segment kBottom{{0, 0}, {1, 0}};
const Segment kTop{{0, 1}, {1, 1}};

void check_interval(const Interval& got, double lo, double hi, double tol = 1e-9)
{
    REQUIRE_FALSE(got.is_empty());
    CHECK(std::abs(got.lo() - lo) <= tol);
    CHECK(std::abs(got.hi() - hi) <= tol);
}

// Dense-sampling oracle for {s in [0,1] : dist(seg_p(s), seg_q) <= eps}.
Interval sampled_projection(const Segment& sp, const Segment& sq, double eps, int samples)
{
    Interval out;
    for (int i = 0; i <= samples; ++i) {
        const double s = static_cast<double>(i) / samples;
        if (point_segment_distance(sp.at(s), sq) <= eps) out = out.hull(Interval::point(s));
    }
    return out;
}

}  // namespace

TEST_CASE("cell_edge_interval on parallel unit segments")
{
    // eps = 1: only the tangent point s = 0 on the bottom edge
    check_interval(cell_edge_interval(kBottom, kTop, 1.0, Edge::bottom), 0.0, 0.0);
    check_interval(cell_edge_interval(kBottom, kTop, 1.0, Edge::top), 1.0, 1.0);
    check_interval(cell_edge_interval(kBottom, kTop, 1.0, Edge::left), 0.0, 0.0);
    check_interval(cell_edge_interval(kBottom, kTop, 1.0, Edge::right), 1.0, 1.0);

    for (Edge e : {Edge::left, Edge::right, Edge::bottom, Edge::top}) {
        check_interval(cell_edge_interval(kBottom, kTop, std::sqrt(2.0), e), 0.0, 1.0);
        CHECK(cell_edge_interval(kBottom, kTop, 0.5, e).is_empty());
    }
}

TEST_CASE("cell_edge_interval solves the circle-line quadratic")
{
    // point (0.5, 0.3) against the bottom segment: |u - 0.5|^2 + 0.09 <= 0.25
    const Interval iv = free_interval_on_segment({0.5, 0.3}, kBottom, 0.5);
    check_interval(iv, 0.1, 0.9, 1e-12);
    // clipped at the segment ends
    check_interval(free_interval_on_segment({0.0, 0.0}, kBottom, 0.5), 0.0, 0.5, 1e-12);
    // eps = 0 degenerates to the foot point if the point lies on the segment
    check_interval(free_interval_on_segment({0.25, 0.0}, kBottom, 0.0), 0.25, 0.25, 1e-12);
}

TEST_CASE("cell_axis_projection")
{
    check_interval(cell_axis_projection(kBottom, kTop, 1.0, Axis::p), 0.0, 1.0);
    check_interval(cell_axis_projection(kBottom, kTop, 1.0, Axis::q), 0.0, 1.0);
    CHECK(cell_axis_projection(kBottom, kTop, 0.9, Axis::p).is_empty());

    // P (0,0)-(2,0) against a short Q segment (1,0.8)-(1.01,0.8), eps = 1:
    // sampled oracle with 10^4 points, frozen analytic value [0.2, 0.805].
    const Segment sp{{0, 0}, {2, 0}};
    const Segment sq{{1, 0.8}, {1.01, 0.8}};
    const Interval oracle = sampled_projection(sp, sq, 1.0, 10000);
    REQUIRE_FALSE(oracle.is_empty());
    CHECK(std::abs(oracle.lo() - 0.2) <= 1e-4);
    CHECK(std::abs(oracle.hi() - 0.805) <= 1e-4);
    const Interval got = cell_axis_projection(sp, sq, 1.0, Axis::p);
    check_interval(got, 0.2, 0.805, 1e-12);
}

TEST_CASE("cell_axis_projection agrees with dense sampling on random segments")
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> coord(0.0, 3.0);
    std::uniform_real_distribution<double> radius(0.1, 2.0);
    for (int trial = 0; trial < 300; ++trial) {
        const Segment sp{{coord(rng), coord(rng)}, {coord(rng), coord(rng)}};
        const Segment sq{{coord(rng), coord(rng)}, {coord(rng), coord(rng)}};
        const double eps = radius(rng);
        for (Axis axis : {Axis::p, Axis::q}) {
            const Segment& a = axis == Axis::p ? sp : sq;
            const Segment& b = axis == Axis::p ? sq : sp;
            const Interval oracle = sampled_projection(a, b, eps, 4000);
            const Interval got = cell_axis_projection(sp, sq, eps, axis);
            if (oracle.is_empty()) {
                // may only be a sliver thinner than the sampling step
                CHECK((got.is_empty() || got.length() < 1e-3));
                continue;
            }
            REQUIRE_FALSE(got.is_empty());
            CHECK(got.lo() <= oracle.lo() + 1e-12);
            CHECK(got.hi() >= oracle.hi() - 1e-12);
            CHECK(oracle.lo() - got.lo() <= 1.0 / 4000 + 1e-12);
            CHECK(got.hi() - oracle.hi() <= 1.0 / 4000 + 1e-12);
        }
    }
}

TEST_CASE("build_diagram on parallel unit segments")
{
    const FreeSpaceDiagram d = build_diagram(bottom_segment(), top_segment(), 1.0);
    REQUIRE(d.component_count() == 1);
    const Component& c = d.components()[0];
    check_interval(c.proj_p, 0.0, 1.0);
    check_interval(c.proj_q, 0.0, 1.0);
    CHECK(c.touches.all());
    CHECK(d.z() == 1);
    CHECK(compute_z(d) == 1);

    const FreeSpaceDiagram none = build_diagram(bottom_segment(), top_segment(), 0.5);
    CHECK(none.component_count() == 0);
    CHECK(none.z() == 0);
    CHECK_FALSE(none.component_of(0, 0).has_value());
    CHECK_THROWS_AS(build_diagram(bottom_segment(), top_segment(), -1.0), std::invalid_argument);
}

TEST_CASE("build_diagram detects interior-only free space")
{
    // crossing segments, eps small: the free ellipse touches no cell edge
    const PolyCurve p = testing::curve({{0, 0}, {2, 2}});
    const PolyCurve q = testing::curve({{0, 2}, {2, 0}});
    const FreeSpaceDiagram d = build_diagram(p, q, 0.1);
    const CellFreeSpace& cell = d.cell(0, 0);
    CHECK(cell.left.is_empty());
    CHECK(cell.right.is_empty());
    CHECK(cell.bottom.is_empty());
    CHECK(cell.top.is_empty());
    CHECK(cell.interior_nonempty);
    REQUIRE(d.component_count() == 1);
    CHECK(d.components()[0].proj_p.contains(0.5));
    CHECK_FALSE(d.components()[0].touches.left);
}

TEST_CASE("tangent cells are joined")
{
    // P hits Q's vertex region only at a single boundary point
    const PolyCurve p = testing::curve({{0, 1}, {1, 1}, {2, 1}});
    const PolyCurve q = testing::curve({{1, 0}, {1, -1}});
    // the vertical edge at s = 1 has only t = 0 free at eps = 1
    const FreeSpaceDiagram d = build_diagram(p, q, 1.0);
    CHECK(d.cell(0, 0).right == d.cell(1, 0).left);
    REQUIRE_FALSE(d.cell(0, 0).right.is_empty());
    CHECK(d.component_count() == 1);
}

TEST_CASE("zigzag against its reversal matches the pixel oracle")
{
    const PolyCurve p = testing::curve({{0, 0}, {1, 1}, {2, 0}, {3, 1}});
    const PolyCurve q = testing::curve({{3, 1}, {2, 0}, {1, 1}, {0, 0}});
    // the curves coincide as point sets; eps = 0.3 lies away from events
    for (double eps : {0.3, 0.6}) {
        const FreeSpaceDiagram d = build_diagram(p, q, eps);
        const auto px = oracle::pixel_freespace(p, q, eps, 512);
        CHECK(d.component_count() == px.components.size());
        // projections agree up to one pixel plus the error bound slack
        std::vector<std::pair<double, double>> ours;
        std::vector<std::pair<double, double>> theirs;
        for (const auto& c : d.components()) ours.emplace_back(c.proj_p.lo(), c.proj_q.lo());
        for (const auto& c : px.components)
            theirs.emplace_back(px.proj_p(c).lo(), px.proj_q(c).lo());
        std::sort(ours.begin(), ours.end());
        std::sort(theirs.begin(), theirs.end());
        REQUIRE(ours.size() == theirs.size());
        for (std::size_t i = 0; i < ours.size(); ++i) {
            CHECK(std::abs(ours[i].first - theirs[i].first) <= 3.0 / 512 * 3 + 0.02);
            CHECK(std::abs(ours[i].second - theirs[i].second) <= 3.0 / 512 * 3 + 0.02);
        }
    }
}

TEST_CASE("compute_z on explicit components")
{
    std::vector<Component> comps(2);
    comps[0].proj_p = Interval(0.0, 0.5);
    comps[0].proj_q = Interval(0.0, 0.3);
    comps[1].proj_p = Interval(0.4, 1.0);
    comps[1].proj_q = Interval(0.6, 1.0);
    const auto d = FreeSpaceDiagram::from_components(1, 1, comps);
    CHECK(compute_z(d) == 2);

    const std::vector<Interval> touching{{0.0, 0.5}, {0.5, 1.0}};
    CHECK(stabbing_number(touching, 1e-9) == 2);
    const std::vector<Interval> apart{{0.0, 0.4}, {0.6, 1.0}};
    CHECK(stabbing_number(apart, 1e-9) == 1);
}

TEST_CASE("compute_z brackets a dense stabbing oracle on random pairs")
{
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> radius(0.3, 1.5);
    for (int trial = 0; trial < 100; ++trial) {
        const PolyCurve p = testing::random_curve(rng, 5);
        const PolyCurve q = testing::random_curve(rng, 5);
        const FreeSpaceDiagram d = build_diagram(p, q, radius(rng));
        if (d.component_count() == 0) continue;
        int sampled = 0;
        int inflated = 0;
        for (Axis axis : {Axis::p, Axis::q}) {
            const double extent = d.extent(axis);
            const double step = extent / 1000.0;
            for (int k = 0; k <= 1000; ++k) {
                const double x = extent * k / 1000.0;
                int plain = 0;
                int wide = 0;
                for (const auto& c : d.components()) {
                    const Interval& iv = c.projection(axis);
                    plain += iv.contains(x) ? 1 : 0;
                    wide += iv.contains(x, step) ? 1 : 0;
                }
                sampled = std::max(sampled, plain);
                inflated = std::max(inflated, wide);
            }
        }
        CHECK(d.z() >= 1);
        CHECK(sampled <= d.z());
        CHECK(d.z() <= inflated);
    }
}

TEST_CASE("diagram invariants on random pairs")
{
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> radius(0.2, 1.5);
    for (int trial = 0; trial < 150; ++trial) {
        const PolyCurve p = testing::random_curve(rng, 1 + trial % 5);
        const PolyCurve q = testing::random_curve(rng, 1 + (trial / 5) % 5);
        const double eps = radius(rng);
        const FreeSpaceDiagram d = build_diagram(p, q, eps);
        const double tol = d.tolerance();

        // components partition the free cells
        std::size_t free_cells = 0;
        for (std::size_t i = 0; i < d.n(); ++i)
            for (std::size_t j = 0; j < d.m(); ++j)
                if (d.cell(i, j).interior_nonempty) {
                    ++free_cells;
                    REQUIRE(d.component_of(i, j).has_value());
                }
        std::size_t member_cells = 0;
        for (const auto& c : d.components()) {
            member_cells += c.cells.size();
            // projection endpoints are attained by member cells
            double lo = 1e300;
            double hi = -1e300;
            for (const auto& ci : c.cells) {
                const auto& cell = d.cell(ci.i, ci.j);
                CHECK(d.component_of(ci.i, ci.j) == c.id);
                lo = std::min(lo, cell.s_projection.lo() + ci.i);
                hi = std::max(hi, cell.s_projection.hi() + ci.i);
                // projections contain the extents of all free edges
                if (!cell.bottom.is_empty()) CHECK(cell.s_projection.contains(cell.bottom));
                if (!cell.top.is_empty()) CHECK(cell.s_projection.contains(cell.top));
                if (!cell.left.is_empty()) CHECK(cell.t_projection.contains(cell.left));
                if (!cell.right.is_empty()) CHECK(cell.t_projection.contains(cell.right));
            }
            CHECK(c.proj_p.lo() == lo);
            CHECK(c.proj_p.hi() == hi);
            CHECK(c.touches.left == (c.proj_p.lo() <= tol));
            CHECK(c.touches.right == (c.proj_p.hi() >= static_cast<double>(d.n()) - tol));
        }
        CHECK(member_cells == free_cells);
        if (d.component_count() > 0) CHECK(d.z() >= 1);

        // union of P projections = {s : dist(P(s), Q) <= eps}, up to sampling
        const double n = static_cast<double>(d.n());
        const double slack = 10 * tol + n / 2000.0;
        for (int k = 0; k <= 2000; ++k) {
            const double s = n * k / 2000.0;
            const double dist = oracle::distance_to_curve(p.point_at(s), q);
            bool covered = false;
            for (const auto& c : d.components()) covered = covered || c.proj_p.contains(s, 10 * tol);
            if (dist <= eps - 1e-9) CHECK(covered);
            if (covered) {
                // the nearest point of any covering projection is within eps
                bool near = false;
                for (double ds : {-slack, 0.0, slack}) {
                    const double s2 = std::clamp(s + ds, 0.0, n);
                    near = near || oracle::distance_to_curve(p.point_at(s2), q) <=
                                       eps + p.max_segment_length() * slack + 1e-9;
                }
                CHECK(near);
            }
        }
    }
}

TEST_CASE("free space grows monotonically with eps")
{
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> radius(0.2, 1.2);
    for (int trial = 0; trial < 100; ++trial) {
        const PolyCurve p = testing::random_curve(rng, 4);
        const PolyCurve q = testing::random_curve(rng, 4);
        const double eps = radius(rng);
        const FreeSpaceDiagram small = build_diagram(p, q, eps);
        const FreeSpaceDiagram large = build_diagram(p, q, eps * 1.3);
        for (const auto& c : small.components()) {
            const auto owner = large.component_of(c.cells.front().i, c.cells.front().j);
            REQUIRE(owner.has_value());
            for (const auto& ci : c.cells) CHECK(large.component_of(ci.i, ci.j) == owner);
            const Component& big = large.component(*owner);
            CHECK(big.proj_p.contains(c.proj_p, 1e-12));
            CHECK(big.proj_q.contains(c.proj_q, 1e-12));
        }
    }
}

TEST_CASE("swapping the curves transposes the diagram")
{
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> radius(0.2, 1.5);
    for (int trial = 0; trial < 100; ++trial) {
        const PolyCurve p = testing::random_curve(rng, 1 + trial % 5);
        const PolyCurve q = testing::random_curve(rng, 1 + trial % 4);
        const double eps = radius(rng);
        const FreeSpaceDiagram pq = build_diagram(p, q, eps);
        const FreeSpaceDiagram qp = build_diagram(q, p, eps);
        REQUIRE(pq.component_count() == qp.component_count());
        std::vector<std::array<double, 4>> a;
        std::vector<std::array<double, 4>> b;
        for (const auto& c : pq.components())
            a.push_back({c.proj_p.lo(), c.proj_p.hi(), c.proj_q.lo(), c.proj_q.hi()});
        for (const auto& c : qp.components())
            b.push_back({c.proj_q.lo(), c.proj_q.hi(), c.proj_p.lo(), c.proj_p.hi()});
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        for (std::size_t i = 0; i < a.size(); ++i)
            for (int k = 0; k < 4; ++k) CHECK(std::abs(a[i][k] - b[i][k]) <= 1e-9);
        CHECK(pq.z() == qp.z());
    }
}
