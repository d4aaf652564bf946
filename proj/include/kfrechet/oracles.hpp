#ifndef KFRECHET_ORACLES_HPP
#define KFRECHET_ORACLES_HPP

// Brute-force and sampling oracles. These share no code path with the
// diagram construction or the selection algorithms beyond the curve type.

#include "kfrechet/curve.hpp"
#include "kfrechet/freespace.hpp"
#include "kfrechet/interval.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace kfrechet::oracle {

struct PixelComponent {
    int col_lo = 0;
    int col_hi = 0;
    int row_lo = 0;
    int row_hi = 0;
    std::size_t pixels = 0;
};

/// Free-space predicate sampled at pixel centres of a res x res grid over
/// [0, n] x [0, m], grouped into 8-connected pixel components (a free set
/// thinner than a pixel, such as a tangent diagonal, stays in one piece).
struct PixelFreeSpace {
    int res = 0;
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<std::uint8_t> free;  // row-major, row = t, column = s
    std::vector<PixelComponent> components;

    double pixel_width() const { return static_cast<double>(n) / res; }
    double pixel_height() const { return static_cast<double>(m) / res; }
    bool is_free(int col, int row) const { return free[static_cast<std::size_t>(row) * res + col] != 0; }
    // approximate projections of a pixel component, pixel-edge aligned
    Interval proj_p(const PixelComponent& c) const;
    Interval proj_q(const PixelComponent& c) const;

    // some pixel component spans every column and every row
    bool weak_frechet() const;
    // every column and every row holds a free pixel
    bool hausdorff() const;
};

PixelFreeSpace pixel_freespace(const PolyCurve& p, const PolyCurve& q, double eps, int res);

// Bound on |dist(P(s), Q(t)) - dist at the nearest pixel centre|.
double pixel_error_bound(const PolyCurve& p, const PolyCurve& q, int res);

// Minimum number of intervals whose union covers target (per-gap tolerance
// tol), by enumerating all subsets. At most 20 intervals.
std::optional<int> exhaustive_min_cover(std::span<const Interval> intervals,
                                        const Interval& target, double tol = kDefaultTolerance);

// Smallest component subset (as a bitmask-ordered id list) covering both
// axes of the diagram, by enumerating all subsets. At most 20 components.
std::optional<std::vector<std::size_t>> exhaustive_min_selection(const FreeSpaceDiagram& d);

struct SampledDistance {
    double value = 0.0;
    double error_bound = 0.0;
};

// Symmetric max-min over `samples` uniform parameter samples per curve, exact
// point-to-segment distance inside the min.
SampledDistance sampled_hausdorff(const PolyCurve& p, const PolyCurve& q, int samples);

// Exact distance from x to the nearest point of c.
double distance_to_curve(Point2 x, const PolyCurve& c);

}  // namespace kfrechet::oracle

#endif
