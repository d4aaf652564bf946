#ifndef KFRECHET_FREESPACE_HPP
#define KFRECHET_FREESPACE_HPP

#include "kfrechet/curve.hpp"
#include "kfrechet/interval.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace kfrechet {

// Cell edges in the (s, t) parameter plane; s runs along P (horizontal),
// t along Q (vertical).
enum class Edge { left, right, bottom, top };
enum class Axis { p, q };

struct CellIndex {
    std::size_t i = 0;  // segment of P
    std::size_t j = 0;  // segment of Q

    friend auto operator<=>(const CellIndex&, const CellIndex&) = default;
};

/// Free space of one cell. All intervals are in local [0, 1] coordinates of
/// the respective edge or axis.
struct CellFreeSpace {
    CellIndex index;
    Interval left;    // t-range at s = 0
    Interval right;   // t-range at s = 1
    Interval bottom;  // s-range at t = 0
    Interval top;     // s-range at t = 1
    bool interior_nonempty = false;
    Interval s_projection;
    Interval t_projection;

    const Interval& edge(Edge e) const;
};

struct BoundaryContact {
    bool left = false;
    bool right = false;
    bool bottom = false;
    bool top = false;

    bool all() const { return left && right && bottom && top; }
};

/// A connected region of free space, described by its cells and its
/// projections onto [0, n] (P) and [0, m] (Q).
struct Component {
    std::size_t id = 0;
    std::vector<CellIndex> cells;  // sorted
    Interval proj_p;
    Interval proj_q;
    BoundaryContact touches;

    const Interval& projection(Axis axis) const { return axis == Axis::p ? proj_p : proj_q; }
};

class FreeSpaceDiagram {
public:
    // Diagram without cell data, built from explicit component projections.
    // Used to pose covering problems directly (tests, box-style instances);
    // cell() and decide_strong_frechet are unavailable on such diagrams.
    static FreeSpaceDiagram from_components(std::size_t n, std::size_t m,
                                            std::vector<Component> components,
                                            double tol = kDefaultTolerance);

    double epsilon() const { return epsilon_; }
    double tolerance() const { return tol_; }
    std::size_t n() const { return n_; }
    std::size_t m() const { return m_; }
    bool has_cells() const { return !cells_.empty(); }

    const CellFreeSpace& cell(std::size_t i, std::size_t j) const;
    std::span<const Component> components() const { return components_; }
    const Component& component(std::size_t id) const;
    std::size_t component_count() const { return components_.size(); }
    // Id of the component containing cell (i, j), if the cell has free space.
    std::optional<std::size_t> component_of(std::size_t i, std::size_t j) const;
    int z() const { return z_; }

    // extent of the parameter space of an axis: n for P, m for Q
    double extent(Axis axis) const { return static_cast<double>(axis == Axis::p ? n_ : m_); }

private:
    friend FreeSpaceDiagram build_diagram(const PolyCurve&, const PolyCurve&, double, double);

    FreeSpaceDiagram() = default;
    void finish_components();

    double epsilon_ = 0.0;
    double tol_ = kDefaultTolerance;
    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::vector<CellFreeSpace> cells_;  // i-major
    std::vector<Component> components_;
    std::vector<std::optional<std::size_t>> owner_;
    int z_ = 0;
};

// {u in [0,1] : |seg.at(u) - c| <= eps}
Interval free_interval_on_segment(Point2 c, const Segment& seg, double eps,
                                  double tol = kDefaultTolerance);

// Free interval on one edge of the cell spanned by seg_p x seg_q. Left/right
// edges fix the start/end of seg_p and return a t-range; bottom/top fix the
// start/end of seg_q and return an s-range.
Interval cell_edge_interval(const Segment& seg_p, const Segment& seg_q, double eps, Edge edge,
                            double tol = kDefaultTolerance);

// Projection of the cell's free space onto one axis, e.g. for Axis::p
// {s in [0,1] : dist(seg_p.at(s), seg_q) <= eps}.
Interval cell_axis_projection(const Segment& seg_p, const Segment& seg_q, double eps, Axis axis,
                              double tol = kDefaultTolerance);

FreeSpaceDiagram build_diagram(const PolyCurve& p, const PolyCurve& q, double eps,
                               double tol = kDefaultTolerance);

// Maximum number of intervals sharing a common point, probed at every
// endpoint and endpoint +- tol.
int stabbing_number(std::span<const Interval> intervals, double tol);

// Neighborhood complexity of the diagram: the larger of the two per-axis
// stabbing numbers of the component projections.
int compute_z(const FreeSpaceDiagram& d);

}  // namespace kfrechet

#endif
