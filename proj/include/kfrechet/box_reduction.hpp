#ifndef KFRECHET_BOX_REDUCTION_HPP
#define KFRECHET_BOX_REDUCTION_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kfrechet::box {

// Variable v (1-based) as +v, its negation as -v.
using Literal = int;
using Clause = std::vector<Literal>;

struct CnfFormula {
    int variable_count = 0;
    std::vector<Clause> clauses;
};

// Boxes have unit height; (x, y) is the bottom-left corner.
struct LabeledBox {
    double x = 0.0;
    double y = 0.0;
    double w = 1.0;
    Literal label = 0;

    double height() const { return 1.0; }
};

/// Covering instance: the rectangle B from (1, 1) to (x_max, y_max), the
/// candidate boxes, and the selection budget k.
struct BoxInstance {
    double x_max = 1.0;
    double y_max = 1.0;
    std::vector<LabeledBox> boxes;
    int k = 0;
};

// Drops duplicate literals in each clause and appends (-v, v) for every
// variable that does not occur in both polarities. Throws
// std::invalid_argument on empty or over-long clauses and out-of-range literals.
CnfFormula normalize_formula(const CnfFormula& f);

// Places variable, split and clause gadget boxes for a normalized formula.
// A variable's occurrences are ordered by clause index.
BoxInstance build_box_instance(const CnfFormula& normalized);

// Selected box indices (ascending) whose x-extents cover [1, x_max] and
// y-extents cover [1, y_max], using at most k boxes; nullopt if none exists.
// Depth-first search branching on the uncovered boundary piece with the
// fewest candidate boxes, pruned by per-axis lower bounds. When the budget
// is tight on one axis, boxes adding nothing to that axis are discarded.
std::optional<std::vector<std::size_t>> solve_box_bruteforce(const BoxInstance& b);

bool box_selection_covers(const BoxInstance& b, std::span<const std::size_t> selection);

// Boxes whose label is true under the assignment (assignment[v-1] is v).
std::vector<std::size_t> selection_for_assignment(const BoxInstance& b,
                                                  const std::vector<bool>& assignment);

bool evaluate(const CnfFormula& f, const std::vector<bool>& assignment);

// First satisfying assignment in binary counting order; throws
// std::invalid_argument for more than 20 variables.
std::optional<std::vector<bool>> sat_bruteforce(const CnfFormula& f);

// DIMACS CNF ("p cnf <vars> <clauses>", zero-terminated clauses, 'c' comments).
CnfFormula parse_dimacs(std::string_view text);
std::string write_dimacs(const CnfFormula& f);

// {"bound": [x_max, y_max], "k": k, "boxes": [{"x", "y", "w", "label"}, ...]}
std::string box_instance_to_json(const BoxInstance& b);
BoxInstance box_instance_from_json(std::string_view text);

}  // namespace kfrechet::box

#endif
