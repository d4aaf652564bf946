#ifndef KFRECHET_EPSILON_SEARCH_HPP
#define KFRECHET_EPSILON_SEARCH_HPP

#include "kfrechet/curve.hpp"
#include "kfrechet/freespace.hpp"
#include "kfrechet/selection.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace kfrechet {

enum class KMethod { exact, approx };

struct KOptimum {
    int k = 0;
    Selection selection;
};

// Smallest number of components covering both parameter spaces at the
// diagram's epsilon. `exact` scans k upward from max(|S_P|, |S_Q|) of the
// greedy covers with decide_fpt; `approx` returns the greedy union.
std::optional<KOptimum> minimize_k(const FreeSpaceDiagram& d, KMethod method);

enum class EpsilonMethod {
    bisection,   // binary search to the requested tolerance
    candidates,  // search over vertex/segment distances; heuristic, see below
};

struct EpsilonOptions {
    EpsilonMethod method = EpsilonMethod::bisection;
    double tolerance = kDefaultTolerance;  // diagram tolerance at each probe
};

struct EpsilonOptimum {
    double epsilon = 0.0;
    Selection selection;  // covering selection found at `epsilon`
    int probes = 0;
};

// Smallest epsilon (within tol) admitting a covering selection of at most k
// components. The predicate is monotone in epsilon, so bisection over
// [0, max_vertex_distance(p, q)] converges to it.
//
// The candidate mode only inspects vertex-vertex, vertex-segment and
// segment-segment distances. Coverage can also change at values outside
// that set, so its answer is an upper bound, not guaranteed optimal.
EpsilonOptimum minimize_epsilon(const PolyCurve& p, const PolyCurve& q, int k, double tol,
                                EpsilonOptions options = {});

// Bisection for the threshold of a monotone predicate on [lo, hi]. Returns
// the smallest probed value where the predicate held (hi if never probed
// true below it); the threshold lies within tol below the result.
double bisect_threshold(double lo, double hi, double tol,
                        const std::function<bool(double)>& holds, int* probes = nullptr);

// Sorted, deduplicated candidate values used by EpsilonMethod::candidates.
std::vector<double> candidate_epsilons(const PolyCurve& p, const PolyCurve& q);

}  // namespace kfrechet

#endif
