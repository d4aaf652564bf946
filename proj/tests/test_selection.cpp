#include "kfrechet/approximation.hpp"
#include "kfrechet/oracles.hpp"
#include "kfrechet/selection.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace kfrechet;
using testing::bottom_segment;
using testing::top_segment;

namespace {

Component box(double p_lo, double p_hi, double q_lo, double q_hi)
{
    Component c;
    c.proj_p = Interval(p_lo, p_hi);
    c.proj_q = Interval(q_lo, q_hi);
    return c;
}

// Closed zigzag through the vertices of a {7/3} star, drawn once from vertex
// 0 (P) and once from vertex 3 (Q).
std::pair<PolyCurve, PolyCurve> star_pair()
{
    const std::vector<Point2> star{{1.0, 0.0},   {-0.9, 0.43},  {0.62, -0.78}, {-0.22, 0.97},
                                   {-0.22, -0.97}, {0.62, 0.78}, {-0.9, -0.43}};
    std::vector<Point2> p;
    std::vector<Point2> q;
    for (std::size_t i = 0; i <= star.size(); ++i) {
        p.push_back(star[i % star.size()]);
        q.push_back(star[(i + 3) % star.size()]);
    }
    return {PolyCurve(p), PolyCurve(q)};
}

std::size_t min_selection_size(const FreeSpaceDiagram& d)
{
    const auto best = oracle::exhaustive_min_selection(d);
    REQUIRE(best.has_value());
    return best->size();
}

}  // namespace

TEST_CASE("Selection keeps ids sorted and unique")
{
    const Selection s({3, 1, 3, 2});
    CHECK(std::vector<std::size_t>(s.ids().begin(), s.ids().end()) == std::vector<std::size_t>{1, 2, 3});
    CHECK(s.contains(2));
    CHECK_FALSE(s.contains(0));
    CHECK(s.united(Selection({0, 3})).size() == 4);
    CHECK(Selection({0, 5}) < Selection({1}));
}

TEST_CASE("covers_both")
{
    const FreeSpaceDiagram d = build_diagram(bottom_segment(), top_segment(), 1.0);
    CHECK(covers_both(d, Selection({0})));
    CHECK_FALSE(covers_both(d, Selection()));
    CHECK_THROWS_AS(covers_both(d, Selection({1})), std::out_of_range);

    // A covers P fully and the lower half of Q; B the reverse
    const auto two = FreeSpaceDiagram::from_components(
        1, 1, {box(0.0, 1.0, 0.0, 0.5), box(0.0, 0.5, 0.5, 1.0)});
    CHECK_FALSE(covers_both(two, Selection({0})));
    CHECK_FALSE(covers_both(two, Selection({1})));
    CHECK(covers_both(two, Selection({0, 1})));
    CHECK(covers_axis(two, Selection({0}), Axis::p));
    CHECK_FALSE(covers_axis(two, Selection({0}), Axis::q));
}

TEST_CASE("preprocess finds necessary and redundant components")
{
    const FreeSpaceDiagram single = build_diagram(bottom_segment(), top_segment(), 1.0);
    const Preprocessing pre = preprocess(single);
    CHECK(pre.necessary == Selection({0}));
    CHECK(pre.redundant.empty());

    const auto nested =
        FreeSpaceDiagram::from_components(1, 1, {box(0.0, 1.0, 0.0, 1.0), box(0.2, 0.5, 0.3, 0.4)});
    const Preprocessing pn = preprocess(nested);
    CHECK(pn.redundant == std::vector<std::size_t>{1});
    CHECK(pn.kept == std::vector<std::size_t>{0});
    CHECK(pn.necessary == Selection({0}));

    // identical boxes: exactly one survives, and neither is necessary
    const auto twins =
        FreeSpaceDiagram::from_components(1, 1, {box(0.0, 1.0, 0.0, 1.0), box(0.0, 1.0, 0.0, 1.0)});
    const Preprocessing pt = preprocess(twins);
    CHECK(pt.kept == std::vector<std::size_t>{0});
    CHECK(pt.redundant == std::vector<std::size_t>{1});
    CHECK(pt.necessary.empty());
}

TEST_CASE("decide_bruteforce")
{
    const FreeSpaceDiagram d = build_diagram(bottom_segment(), top_segment(), 1.0);
    CHECK(decide_bruteforce(d, 1) == Selection({0}));
    CHECK_FALSE(decide_bruteforce(d, 0).has_value());

    // Hausdorff fails: no budget helps
    const auto gap = FreeSpaceDiagram::from_components(
        2, 2, {box(0.0, 0.8, 0.0, 2.0), box(1.2, 2.0, 0.0, 2.0)});
    CHECK_FALSE(decide_hausdorff(gap));
    for (int k = 0; k <= 3; ++k) {
        CHECK_FALSE(decide_bruteforce(gap, k).has_value());
        CHECK_FALSE(decide_bruteforce(gap, k, {false}).has_value());
    }
}

TEST_CASE("star zigzag pair needs two components")
{
    const auto [p, q] = star_pair();
    const FreeSpaceDiagram d = build_diagram(p, q, 0.74);
    REQUIRE(d.component_count() == 6);
    CHECK(min_selection_size(d) == 2);
    CHECK_FALSE(decide_bruteforce(d, 1).has_value());
    const auto two = decide_bruteforce(d, 2);
    REQUIRE(two.has_value());
    CHECK(two->size() == 2);
    CHECK(covers_both(d, *two));
    CHECK_FALSE(decide_fpt(d, 1).has_value());
    const auto fpt = decide_fpt(d, 2);
    REQUIRE(fpt.has_value());
    CHECK(covers_both(d, *fpt));
    CHECK_FALSE(decide_weak_frechet(d));
    CHECK(decide_hausdorff(d));
}

TEST_CASE("decide_fpt basics")
{
    const FreeSpaceDiagram d = build_diagram(bottom_segment(), top_segment(), 1.0);
    CHECK(decide_fpt(d, 1) == Selection({0}));
    CHECK_FALSE(decide_fpt(d, 0).has_value());
    CHECK_THROWS_AS(decide_fpt(d, -1), std::invalid_argument);

    FptStats stats;
    (void)decide_fpt(d, 1, &stats);
    CHECK(stats.feasible_p == 1);
    CHECK(stats.feasible_q == 1);
    CHECK(stats.pairs_checked == 1);

    // two components, each covering one axis and half the other
    const auto two = FreeSpaceDiagram::from_components(
        1, 1, {box(0.0, 1.0, 0.0, 0.5), box(0.0, 0.5, 0.5, 1.0)});
    CHECK_FALSE(decide_fpt(two, 1).has_value());
    CHECK(decide_fpt(two, 2) == Selection({0, 1}));
}

TEST_CASE("feasible selections skip components inside the covered prefix")
{
    // component 1 lies inside component 0's P-range and never extends it
    const auto d = FreeSpaceDiagram::from_components(
        2, 1, {box(0.0, 1.2, 0.0, 1.0), box(0.3, 0.9, 0.0, 1.0), box(1.0, 2.0, 0.0, 1.0)});
    const auto list = feasible_axis_selections(d, Axis::p, 3);
    REQUIRE(list.size() == 1);
    CHECK(list[0] == Selection({0, 2}));
    CHECK(feasible_axis_selections(d, Axis::p, 1).empty());
}

TEST_CASE("brute force and FPT agree on random small instances")
{
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> radius(0.3, 1.6);
    int nontrivial = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const PolyCurve p = testing::random_curve(rng, 1 + trial % 6);
        const PolyCurve q = testing::random_curve(rng, 1 + (trial / 6) % 6);
        const FreeSpaceDiagram d = build_diagram(p, q, radius(rng));
        if (d.component_count() > 12) continue;
        const auto opt = oracle::exhaustive_min_selection(d);
        for (int k = 0; k <= 3; ++k) {
            const auto brute = decide_bruteforce(d, k);
            const auto plain = decide_bruteforce(d, k, {false});
            const auto fpt = decide_fpt(d, k);
            CHECK(brute.has_value() == fpt.has_value());
            CHECK(brute.has_value() == plain.has_value());
            CHECK(brute.has_value() == (opt && static_cast<int>(opt->size()) <= k));
            if (brute) {
                CHECK(covers_both(d, *brute));
                CHECK(static_cast<int>(brute->size()) <= k);
            }
            if (fpt) {
                CHECK(covers_both(d, *fpt));
                CHECK(static_cast<int>(fpt->size()) <= k);
            }
        }
        if (opt && opt->size() >= 2) ++nontrivial;
    }
    CHECK(nontrivial > 0);
}

TEST_CASE("decision invariants on random instances")
{
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> radius(0.2, 1.8);
    for (int trial = 0; trial < 200; ++trial) {
        const PolyCurve p = testing::random_curve(rng, 1 + trial % 5);
        const PolyCurve q = testing::random_curve(rng, 1 + (trial / 5) % 5);
        const double eps = radius(rng);
        const FreeSpaceDiagram d = build_diagram(p, q, eps);
        const FreeSpaceDiagram wider = build_diagram(p, q, eps * 1.25);

        const bool strong = decide_strong_frechet(d);
        const bool weak = decide_weak_frechet(d);
        const bool haus = decide_hausdorff(d);
        if (strong) CHECK(weak);
        if (weak) CHECK(haus);
        CHECK(decide_fpt(d, 1).has_value() == weak);
        const int all = static_cast<int>(d.component_count());
        if (all <= 10) CHECK(decide_fpt(d, all).has_value() == haus);

        bool previous = false;
        for (int k = 1; k <= 3; ++k) {
            const bool now = decide_fpt(d, k).has_value();
            if (now) CHECK(haus);
            if (weak) CHECK(now);
            CHECK((!previous || now));
            previous = now;
            if (now) CHECK(decide_fpt(wider, k).has_value());
        }
        if (strong) CHECK(decide_strong_frechet(wider));
        if (weak) CHECK(decide_weak_frechet(wider));
        if (haus) CHECK(decide_hausdorff(wider));
    }
}

TEST_CASE("weak Frechet decision")
{
    CHECK(decide_weak_frechet(build_diagram(bottom_segment(), top_segment(), 1.0)));
    CHECK_FALSE(decide_weak_frechet(build_diagram(bottom_segment(), top_segment(), 0.9)));

    // segment against its reversal offset by 0.1: anti-diagonal band
    const PolyCurve p = testing::curve({{0, 0}, {1, 0}});
    const PolyCurve q = testing::curve({{1, 0.1}, {0, 0.1}});
    const FreeSpaceDiagram d = build_diagram(p, q, 0.2);
    CHECK(decide_weak_frechet(d));
    CHECK(weak_frechet_witness(d) == std::optional<std::size_t>(0));
    CHECK(oracle::pixel_freespace(p, q, 0.2, 256).weak_frechet());
    CHECK_FALSE(decide_strong_frechet(d));
}

TEST_CASE("Hausdorff decision")
{
    CHECK(decide_hausdorff(build_diagram(bottom_segment(), top_segment(), 1.0)));
    CHECK_FALSE(decide_hausdorff(build_diagram(bottom_segment(), top_segment(), 0.5)));

    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 40; ++trial) {
        const PolyCurve p = testing::random_curve(rng, 1 + trial % 4);
        const PolyCurve q = testing::random_curve(rng, 1 + trial % 3);
        const auto h = oracle::sampled_hausdorff(p, q, 10000);
        const double band = h.error_bound + 10 * kDefaultTolerance;
        CHECK(decide_hausdorff(build_diagram(p, q, h.value + band + 1e-6)));
        if (h.value - band - 1e-6 > 0) CHECK_FALSE(decide_hausdorff(build_diagram(p, q, h.value - band - 1e-6)));
    }
}

TEST_CASE("strong Frechet decision")
{
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 30; ++trial) {
        const PolyCurve c = testing::random_curve(rng, 1 + trial % 6);
        CHECK(decide_strong_frechet(build_diagram(c, c, 0.0)));
        CHECK(decide_strong_frechet(build_diagram(c, c, 0.3)));
    }
    CHECK(decide_strong_frechet(build_diagram(bottom_segment(), top_segment(), 1.0)));
    CHECK_FALSE(decide_strong_frechet(build_diagram(bottom_segment(), top_segment(), 0.99)));

    // free corners, but the monotone path is blocked: P doubles back
    const PolyCurve p = testing::curve({{0, 0}, {2, 0}, {1, 0}, {3, 0}});
    const PolyCurve q = testing::curve({{0, 0}, {3, 0}});
    CHECK(decide_weak_frechet(build_diagram(p, q, 0.1)));
    CHECK_FALSE(decide_strong_frechet(build_diagram(p, q, 0.1)));
    CHECK(decide_strong_frechet(build_diagram(p, q, 0.6)));

    const auto synthetic = FreeSpaceDiagram::from_components(1, 1, {box(0, 1, 0, 1)});
    CHECK_THROWS_AS(decide_strong_frechet(synthetic), std::logic_error);
}
