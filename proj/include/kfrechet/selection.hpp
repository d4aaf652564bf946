#ifndef KFRECHET_SELECTION_HPP
#define KFRECHET_SELECTION_HPP

#include "kfrechet/freespace.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace kfrechet {

/// Sorted, duplicate-free set of component ids. Ordered lexicographically.
class Selection {
public:
    Selection() = default;
    explicit Selection(std::vector<std::size_t> ids);

    std::span<const std::size_t> ids() const { return ids_; }
    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }
    bool contains(std::size_t id) const;
    Selection united(const Selection& other) const;

    friend auto operator<=>(const Selection&, const Selection&) = default;
    friend bool operator==(const Selection&, const Selection&) = default;

private:
    std::vector<std::size_t> ids_;
};

// Union of the selected projections covers [0, n] and [0, m] up to the
// diagram tolerance. Throws std::out_of_range on an unknown id.
bool covers_both(const FreeSpaceDiagram& d, const Selection& s);

// Same check restricted to one axis.
bool covers_axis(const FreeSpaceDiagram& d, const Selection& s, Axis axis);

struct Preprocessing {
    // sole coverers of some sub-interval (wider than the tolerance) of an axis
    Selection necessary;
    // components whose bounding box lies in another single component's box
    std::vector<std::size_t> redundant;
    // every component that is not redundant, ascending
    std::vector<std::size_t> kept;
};

Preprocessing preprocess(const FreeSpaceDiagram& d);

struct BruteForceOptions {
    bool use_preprocessing = true;
};

// Exhaustive search over selections of at most k components, by increasing
// size and lexicographic order within a size. The result is thus a minimum
// covering selection when one of size <= k exists.
std::optional<Selection> decide_bruteforce(const FreeSpaceDiagram& d, int k,
                                           BruteForceOptions options = {});

struct FptStats {
    std::size_t nodes_p = 0;     // search-tree nodes visited sweeping P
    std::size_t nodes_q = 0;
    std::size_t feasible_p = 0;  // distinct feasible selections in L_P
    std::size_t feasible_q = 0;
    std::size_t pairs_checked = 0;

    std::size_t paths() const { return nodes_p + nodes_q; }
};

// Feasible selections of the bounded search tree for one axis: chains of at
// most k components, starting at the lower boundary, each strictly extending
// the covered prefix, ending at a component touching the upper boundary.
// Returned sorted lexicographically without duplicates.
std::vector<Selection> feasible_axis_selections(const FreeSpaceDiagram& d, Axis axis, int k,
                                                std::size_t* nodes_visited = nullptr);

// Bounded-search-tree decision for the k-Frechet distance. Combines the
// feasible lists of both axes; returns the lexicographically smallest union
// of size <= k, or nullopt.
std::optional<Selection> decide_fpt(const FreeSpaceDiagram& d, int k, FptStats* stats = nullptr);

// Id of the first component covering both parameter spaces, if any.
std::optional<std::size_t> weak_frechet_witness(const FreeSpaceDiagram& d);
bool decide_weak_frechet(const FreeSpaceDiagram& d);

bool decide_hausdorff(const FreeSpaceDiagram& d);

// Monotone reachability from the bottom-left to the top-right corner.
// Requires a diagram with cell data.
bool decide_strong_frechet(const FreeSpaceDiagram& d);

}  // namespace kfrechet

#endif
