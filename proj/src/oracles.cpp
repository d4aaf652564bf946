#include "kfrechet/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

namespace kfrechet::oracle {

Interval PixelFreeSpace::proj_p(const PixelComponent& c) const
{
    return {c.col_lo * pixel_width(), (c.col_hi + 1) * pixel_width()};
}

Interval PixelFreeSpace::proj_q(const PixelComponent& c) const
{
    return {c.row_lo * pixel_height(), (c.row_hi + 1) * pixel_height()};
}

bool PixelFreeSpace::weak_frechet() const
{
    for (const auto& c : components)
        if (c.col_lo == 0 && c.col_hi == res - 1 && c.row_lo == 0 && c.row_hi == res - 1)
            return true;
    return false;
}

bool PixelFreeSpace::hausdorff() const
{
    std::vector<bool> col(res, false);
    std::vector<bool> row(res, false);
    for (int r = 0; r < res; ++r)
        for (int c = 0; c < res; ++c)
            if (is_free(c, r)) col[c] = row[r] = true;
    return std::all_of(col.begin(), col.end(), [](bool b) { return b; }) &&
           std::all_of(row.begin(), row.end(), [](bool b) { return b; });
}

PixelFreeSpace pixel_freespace(const PolyCurve& p, const PolyCurve& q, double eps, int res)
{
    if (res < 16) throw std::invalid_argument("pixel resolution must be >= 16");
    PixelFreeSpace out;
    out.res = res;
    out.n = p.segment_count();
    out.m = q.segment_count();
    const auto cells = static_cast<std::size_t>(res) * res;
    out.free.assign(cells, 0);

    std::vector<Point2> ps(res);
    std::vector<Point2> qs(res);
    for (int c = 0; c < res; ++c) ps[c] = p.point_at((c + 0.5) * out.pixel_width());
    for (int r = 0; r < res; ++r) qs[r] = q.point_at((r + 0.5) * out.pixel_height());
    const double eps2 = eps * eps;
    for (int r = 0; r < res; ++r) {
        for (int c = 0; c < res; ++c) {
            const Point2 d = ps[c] - qs[r];
            out.free[static_cast<std::size_t>(r) * res + c] = dot(d, d) <= eps2 ? 1 : 0;
        }
    }

    std::vector<int> label(cells, -1);
    std::deque<std::pair<int, int>> queue;
    for (int r = 0; r < res; ++r) {
        for (int c = 0; c < res; ++c) {
            const std::size_t idx = static_cast<std::size_t>(r) * res + c;
            if (!out.free[idx] || label[idx] >= 0) continue;
            PixelComponent comp{c, c, r, r, 0};
            const int id = static_cast<int>(out.components.size());
            label[idx] = id;
            queue.emplace_back(c, r);
            while (!queue.empty()) {
                const auto [cc, rr] = queue.front();
                queue.pop_front();
                ++comp.pixels;
                comp.col_lo = std::min(comp.col_lo, cc);
                comp.col_hi = std::max(comp.col_hi, cc);
                comp.row_lo = std::min(comp.row_lo, rr);
                comp.row_hi = std::max(comp.row_hi, rr);
                for (int k = 0; k < 9; ++k) {
                    const int nc = cc + k % 3 - 1;
                    const int nr = rr + k / 3 - 1;
                    if (nc < 0 || nr < 0 || nc >= res || nr >= res) continue;
                    const std::size_t nidx = static_cast<std::size_t>(nr) * res + nc;
                    if (!out.free[nidx] || label[nidx] >= 0) continue;
                    label[nidx] = id;
                    queue.emplace_back(nc, nr);
                }
            }
            out.components.push_back(comp);
        }
    }
    return out;
}

double pixel_error_bound(const PolyCurve& p, const PolyCurve& q, int res)
{
    const double hs = static_cast<double>(p.segment_count()) / res;
    const double ht = static_cast<double>(q.segment_count()) / res;
    return 0.5 * (p.max_segment_length() * hs + q.max_segment_length() * ht);
}

namespace {

bool union_covers(std::vector<Interval> parts, const Interval& target, double tol)
{
    std::sort(parts.begin(), parts.end(),
              [](const Interval& a, const Interval& b) { return a.lo() < b.lo(); });
    double reach = target.lo();
    bool any = false;
    for (const auto& iv : parts) {
        if (iv.hi() < target.lo() - tol) continue;
        if (iv.lo() > reach + tol) return false;
        any = true;
        reach = std::max(reach, iv.hi());
        if (reach >= target.hi() - tol) return true;
    }
    return any && reach >= target.hi() - tol;
}

}  // namespace

std::optional<int> exhaustive_min_cover(std::span<const Interval> intervals,
                                        const Interval& target, double tol)
{
    if (intervals.size() > 20) throw std::invalid_argument("exhaustive_min_cover: too many intervals");
    const auto count = static_cast<unsigned>(intervals.size());
    std::optional<int> best;
    for (std::uint32_t mask = 1; mask < (1U << count); ++mask) {
        const int size = std::popcount(mask);
        if (best && size >= *best) continue;
        std::vector<Interval> parts;
        for (unsigned i = 0; i < count; ++i)
            if ((mask >> i) & 1U && !intervals[i].is_empty()) parts.push_back(intervals[i]);
        if (union_covers(parts, target, tol)) best = size;
    }
    return best;
}

std::optional<std::vector<std::size_t>> exhaustive_min_selection(const FreeSpaceDiagram& d)
{
    const auto comps = d.components();
    if (comps.size() > 20) throw std::invalid_argument("exhaustive_min_selection: too many components");
    const auto count = static_cast<unsigned>(comps.size());
    const Interval full_p(0.0, static_cast<double>(d.n()));
    const Interval full_q(0.0, static_cast<double>(d.m()));
    std::optional<std::uint32_t> best;
    for (std::uint32_t mask = 1; mask < (1U << count); ++mask) {
        if (best && std::popcount(mask) >= std::popcount(*best)) continue;
        std::vector<Interval> ps;
        std::vector<Interval> qs;
        for (unsigned i = 0; i < count; ++i) {
            if (!((mask >> i) & 1U)) continue;
            ps.push_back(comps[i].proj_p);
            qs.push_back(comps[i].proj_q);
        }
        if (union_covers(ps, full_p, d.tolerance()) && union_covers(qs, full_q, d.tolerance()))
            best = mask;
    }
    if (!best) return std::nullopt;
    std::vector<std::size_t> ids;
    for (unsigned i = 0; i < count; ++i)
        if ((*best >> i) & 1U) ids.push_back(comps[i].id);
    return ids;
}

double distance_to_curve(Point2 x, const PolyCurve& c)
{
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < c.segment_count(); ++j)
        best = std::min(best, point_segment_distance(x, c.segment(j)));
    return best;
}

SampledDistance sampled_hausdorff(const PolyCurve& p, const PolyCurve& q, int samples)
{
    if (samples < 100) throw std::invalid_argument("sampled_hausdorff needs >= 100 samples");
    auto directed = [samples](const PolyCurve& from, const PolyCurve& to) {
        const double extent = static_cast<double>(from.segment_count());
        double worst = 0.0;
        for (int i = 0; i < samples; ++i) {
            const double s = std::min(extent, extent * i / (samples - 1));
            worst = std::max(worst, distance_to_curve(from.point_at(s), to));
        }
        return worst;
    };
    SampledDistance out;
    out.value = std::max(directed(p, q), directed(q, p));
    const double gap_p = static_cast<double>(p.segment_count()) / (samples - 1);
    const double gap_q = static_cast<double>(q.segment_count()) / (samples - 1);
    out.error_bound = 0.5 * std::max(p.max_segment_length() * gap_p, q.max_segment_length() * gap_q);
    return out;
}

}  // namespace kfrechet::oracle
