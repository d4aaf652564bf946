#include "kfrechet/epsilon_search.hpp"

#include "kfrechet/approximation.hpp"

#include <algorithm>
#include <stdexcept>

namespace kfrechet {

std::optional<KOptimum> minimize_k(const FreeSpaceDiagram& d, KMethod method)
{
    const auto approx = approximate_k(d);
    if (!approx) return std::nullopt;
    const int upper = static_cast<int>(approx->selection.size());
    if (method == KMethod::approx) return KOptimum{upper, approx->selection};

    const int lower = static_cast<int>(std::max(approx->cover_p.size(), approx->cover_q.size()));
    for (int k = lower; k < upper; ++k)
        if (auto s = decide_fpt(d, k)) return KOptimum{k, std::move(*s)};
    // the greedy union itself is a witness of size `upper`
    auto s = decide_fpt(d, upper);
    return KOptimum{upper, s ? std::move(*s) : approx->selection};
}

double bisect_threshold(double lo, double hi, double tol, const std::function<bool(double)>& holds,
                        int* probes)
{
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be > 0");
    int count = 0;
    if (holds(lo)) {
        if (probes) *probes = 1;
        return lo;
    }
    ++count;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        ++count;
        if (holds(mid)) hi = mid;
        else lo = mid;
    }
    if (probes) *probes = count;
    return hi;
}

std::vector<double> candidate_epsilons(const PolyCurve& p, const PolyCurve& q)
{
    std::vector<double> out{0.0};
    for (const auto& a : p.vertices())
        for (const auto& b : q.vertices()) out.push_back(distance(a, b));
    for (const auto& a : p.vertices())
        for (std::size_t j = 0; j < q.segment_count(); ++j)
            out.push_back(point_segment_distance(a, q.segment(j)));
    for (const auto& b : q.vertices())
        for (std::size_t i = 0; i < p.segment_count(); ++i)
            out.push_back(point_segment_distance(b, p.segment(i)));
    for (std::size_t i = 0; i < p.segment_count(); ++i)
        for (std::size_t j = 0; j < q.segment_count(); ++j)
            out.push_back(segment_segment_distance(p.segment(i), q.segment(j)));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

EpsilonOptimum minimize_epsilon(const PolyCurve& p, const PolyCurve& q, int k, double tol,
                                EpsilonOptions options)
{
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be > 0");

    auto feasible = [&](double eps) {
        return decide_fpt(build_diagram(p, q, eps, options.tolerance), k).has_value();
    };

    EpsilonOptimum out;
    const double upper = max_vertex_distance(p, q);
    if (options.method == EpsilonMethod::bisection) {
        out.epsilon = bisect_threshold(0.0, upper, tol, feasible, &out.probes);
    } else {
        const auto values = candidate_epsilons(p, q);
        // values.back() == upper, where the whole diagram is one component
        std::size_t lo = 0;
        std::size_t hi = values.size() - 1;
        while (lo < hi) {
            const std::size_t mid = lo + (hi - lo) / 2;
            ++out.probes;
            if (feasible(values[mid])) hi = mid;
            else lo = mid + 1;
        }
        out.epsilon = values[lo];
    }
    if (auto s = decide_fpt(build_diagram(p, q, out.epsilon, options.tolerance), k))
        out.selection = std::move(*s);
    return out;
}

}  // namespace kfrechet
