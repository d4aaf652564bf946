#include "kfrechet/box_reduction.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace kfrechet::box {

namespace {

constexpr double kCoordTol = 1e-9;

void check_literal(Literal lit, int variable_count)
{
    if (lit == 0 || std::abs(lit) > variable_count)
        throw std::invalid_argument("literal " + std::to_string(lit) + " out of range");
}

}  // namespace

CnfFormula normalize_formula(const CnfFormula& f)
{
    if (f.variable_count < 0) throw std::invalid_argument("negative variable count");
    CnfFormula out;
    out.variable_count = f.variable_count;
    std::vector<bool> positive(f.variable_count + 1, false);
    std::vector<bool> negative(f.variable_count + 1, false);

    for (const auto& clause : f.clauses) {
        Clause dedup;
        for (Literal lit : clause) {
            check_literal(lit, f.variable_count);
            if (std::find(dedup.begin(), dedup.end(), lit) == dedup.end()) dedup.push_back(lit);
        }
        if (dedup.empty()) throw std::invalid_argument("empty clause");
        if (dedup.size() > 3) throw std::invalid_argument("clause with more than 3 literals");
        for (Literal lit : dedup) (lit > 0 ? positive : negative)[std::abs(lit)] = true;
        out.clauses.push_back(std::move(dedup));
    }
    for (int v = 1; v <= f.variable_count; ++v)
        if (!positive[v] || !negative[v]) out.clauses.push_back({-v, v});
    return out;
}

BoxInstance build_box_instance(const CnfFormula& f)
{
    const int n = f.variable_count;
    const int m = static_cast<int>(f.clauses.size());

    // occurrences[v] lists the 1-based indices of clauses containing v
    std::vector<std::vector<int>> pos(n + 1);
    std::vector<std::vector<int>> neg(n + 1);
    int by_size[4] = {0, 0, 0, 0};
    for (int h = 1; h <= m; ++h) {
        const Clause& clause = f.clauses[h - 1];
        if (clause.empty() || clause.size() > 3)
            throw std::invalid_argument("formula is not normalized: bad clause size");
        ++by_size[clause.size()];
        for (Literal lit : clause) {
            check_literal(lit, n);
            auto& list = (lit > 0 ? pos : neg)[std::abs(lit)];
            if (!list.empty() && list.back() == h)
                throw std::invalid_argument("formula is not normalized: duplicate literal");
            list.push_back(h);
        }
    }

    std::vector<int> s_pos(n + 1, 0);  // s^+_i, prefix sums of positive counts
    std::vector<int> s_neg(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        if (pos[i].empty() || neg[i].empty())
            throw std::invalid_argument("formula is not normalized: variable " + std::to_string(i) +
                                        " lacks a polarity");
        s_pos[i] = s_pos[i - 1] + static_cast<int>(pos[i].size());
        s_neg[i] = s_neg[i - 1] + static_cast<int>(neg[i].size());
    }
    const int sp = s_pos[n];
    const int sn = s_neg[n];

    BoxInstance b;
    auto place = [&b](int x, int y, int w, Literal label) {
        b.boxes.push_back({static_cast<double>(x), static_cast<double>(y), static_cast<double>(w),
                           label});
    };

    // variable gadgets
    for (int i = 1; i <= n; ++i) {
        place(i, i, 1, -i);
        place(i, i + n + sp, 1, i);
    }
    // split gadgets, positive occurrences
    for (int i = 1; i <= n; ++i) {
        const int a = static_cast<int>(pos[i].size());
        place(1 + n + s_pos[i - 1], i, a, i);
        for (int j = 1; j <= a; ++j) place(n + s_pos[i - 1] + j, n + s_pos[i - 1] + j, 1, -i);
    }
    // split gadgets, negated occurrences
    for (int i = 1; i <= n; ++i) {
        const int a = static_cast<int>(neg[i].size());
        place(1 + n + sp + s_neg[i - 1], n + sp + i, a, -i);
        for (int j = 1; j <= a; ++j)
            place(n + sp + s_neg[i - 1] + j, 2 * n + sp + s_neg[i - 1] + j, 1, i);
    }
    // clause gadgets: column I(c_h) = n + s^+_n + s^-_n + h
    const int clause_base = n + sp + sn;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= static_cast<int>(pos[i].size()); ++j)
            place(clause_base + pos[i][j - 1], n + s_pos[i - 1] + j, 1, i);
        for (int j = 1; j <= static_cast<int>(neg[i].size()); ++j)
            place(clause_base + neg[i][j - 1], 2 * n + sp + s_neg[i - 1] + j, 1, -i);
    }

    b.x_max = 1.0 + clause_base + m;
    b.y_max = 1.0 + 2 * n + sp + sn;
    b.k = 2 * n + by_size[1] + 2 * by_size[2] + 3 * by_size[3];
    return b;
}

namespace {

struct Piece {
    double lo = 0.0;
    double hi = 0.0;
    bool vertical = false;  // piece of the left boundary (a row) vs the bottom
};

double box_lo(const LabeledBox& box, bool vertical) { return vertical ? box.y : box.x; }
double box_hi(const LabeledBox& box, bool vertical)
{
    return vertical ? box.y + box.height() : box.x + box.w;
}

bool covers(const LabeledBox& box, const Piece& piece)
{
    return box_lo(box, piece.vertical) <= piece.lo + kCoordTol &&
           box_hi(box, piece.vertical) >= piece.hi - kCoordTol;
}

// Splits [1, upper] at every box endpoint.
std::vector<Piece> boundary_pieces(const BoxInstance& b, bool vertical)
{
    const double upper = vertical ? b.y_max : b.x_max;
    std::vector<double> cuts{1.0, upper};
    for (const auto& box : b.boxes) {
        cuts.push_back(std::clamp(box_lo(box, vertical), 1.0, upper));
        cuts.push_back(std::clamp(box_hi(box, vertical), 1.0, upper));
    }
    std::sort(cuts.begin(), cuts.end());
    std::vector<Piece> out;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        if (cuts[i + 1] - cuts[i] > kCoordTol) out.push_back({cuts[i], cuts[i + 1], vertical});
    return out;
}

class BoxSearch {
public:
    explicit BoxSearch(const BoxInstance& b) : b_(b)
    {
        pieces_ = boundary_pieces(b, true);
        const auto bottom = boundary_pieces(b, false);
        pieces_.insert(pieces_.end(), bottom.begin(), bottom.end());
        coverers_.resize(pieces_.size());
        covered_by_.resize(b.boxes.size());
        reach_.assign(pieces_.size(), -1e300);
        for (std::size_t p = 0; p < pieces_.size(); ++p) {
            for (std::size_t i = 0; i < b.boxes.size(); ++i) {
                if (!covers(b.boxes[i], pieces_[p])) continue;
                coverers_[p].push_back(i);
                covered_by_[i].push_back(p);
                reach_[p] = std::max(reach_[p], box_hi(b.boxes[i], pieces_[p].vertical));
            }
        }
        cover_count_.assign(pieces_.size(), 0);
        chosen_flag_.assign(b.boxes.size(), false);
    }

    std::optional<std::vector<std::size_t>> run()
    {
        if (b_.k < 0) return std::nullopt;
        for (const auto& list : coverers_)
            if (list.empty()) return std::nullopt;
        if (!search()) return std::nullopt;
        std::vector<std::size_t> out = chosen_;
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    // Minimum number of further boxes to cover the uncovered pieces of one
    // axis: greedy interval point cover, optimal on a line. Pieces are
    // sorted per axis, so one pass suffices. `reach` gives the farthest end
    // among a piece's usable coverers.
    std::size_t axis_lower_bound(bool vertical, const std::vector<double>& reach) const
    {
        std::size_t needed = 0;
        double frontier = -1e300;
        for (std::size_t p = 0; p < pieces_.size(); ++p) {
            const Piece& piece = pieces_[p];
            if (piece.vertical != vertical || cover_count_[p] > 0) continue;
            if (piece.hi <= frontier + kCoordTol) continue;
            frontier = reach[p];
            ++needed;
        }
        return needed;
    }

    // A box is dead when the budget is tight on an axis and the box covers no
    // uncovered piece of that axis: taking it cannot lower that axis' bound.
    void mark_live(bool tight_vertical, bool tight_bottom)
    {
        live_.assign(b_.boxes.size(), false);
        for (std::size_t i = 0; i < b_.boxes.size(); ++i) {
            if (chosen_flag_[i]) continue;
            bool new_vertical = false;
            bool new_bottom = false;
            for (std::size_t p : covered_by_[i]) {
                if (cover_count_[p] > 0) continue;
                (pieces_[p].vertical ? new_vertical : new_bottom) = true;
            }
            live_[i] = (!tight_vertical || new_vertical) && (!tight_bottom || new_bottom);
        }
        live_reach_.assign(pieces_.size(), -1e300);
        live_options_.assign(pieces_.size(), 0);
        for (std::size_t p = 0; p < pieces_.size(); ++p) {
            if (cover_count_[p] > 0) continue;
            for (std::size_t i : coverers_[p]) {
                if (!live_[i]) continue;
                ++live_options_[p];
                live_reach_[p] = std::max(live_reach_[p], box_hi(b_.boxes[i], pieces_[p].vertical));
            }
        }
    }

    void toggle(std::size_t box, int delta)
    {
        chosen_flag_[box] = delta > 0;
        for (std::size_t p : covered_by_[box]) cover_count_[p] += delta;
    }

    bool search()
    {
        bool done = true;
        for (std::size_t p = 0; p < pieces_.size() && done; ++p) done = cover_count_[p] > 0;
        if (done) return true;

        const auto budget = static_cast<std::size_t>(b_.k);
        const std::size_t lb_vertical = axis_lower_bound(true, reach_);
        const std::size_t lb_bottom = axis_lower_bound(false, reach_);
        if (chosen_.size() + std::max(lb_vertical, lb_bottom) > budget) return false;

        mark_live(chosen_.size() + lb_vertical == budget, chosen_.size() + lb_bottom == budget);
        const std::size_t live_bound =
            std::max(axis_lower_bound(true, live_reach_), axis_lower_bound(false, live_reach_));
        if (chosen_.size() + live_bound > budget) return false;

        // most constrained uncovered piece
        std::optional<std::size_t> target;
        for (std::size_t p = 0; p < pieces_.size(); ++p) {
            if (cover_count_[p] > 0) continue;
            if (!target || live_options_[p] < live_options_[*target]) target = p;
        }
        if (live_options_[*target] == 0) return false;

        std::vector<std::size_t> candidates;
        for (std::size_t i : coverers_[*target])
            if (live_[i]) candidates.push_back(i);
        for (std::size_t i : candidates) {
            chosen_.push_back(i);
            toggle(i, +1);
            if (search()) return true;
            toggle(i, -1);
            chosen_.pop_back();
        }
        return false;
    }

    const BoxInstance& b_;
    std::vector<Piece> pieces_;
    std::vector<std::vector<std::size_t>> coverers_;
    std::vector<std::vector<std::size_t>> covered_by_;
    std::vector<double> reach_;  // farthest box end among a piece's coverers
    std::vector<int> cover_count_;
    std::vector<bool> live_;
    std::vector<double> live_reach_;
    std::vector<std::size_t> live_options_;
    std::vector<bool> chosen_flag_;
    std::vector<std::size_t> chosen_;
};

}  // namespace

std::optional<std::vector<std::size_t>> solve_box_bruteforce(const BoxInstance& b)
{
    return BoxSearch(b).run();
}

bool box_selection_covers(const BoxInstance& b, std::span<const std::size_t> selection)
{
    for (bool vertical : {true, false}) {
        for (const Piece& piece : boundary_pieces(b, vertical)) {
            bool hit = false;
            for (std::size_t i : selection) {
                if (i >= b.boxes.size()) throw std::out_of_range("box index out of range");
                hit = hit || covers(b.boxes[i], piece);
            }
            if (!hit) return false;
        }
    }
    return true;
}

std::vector<std::size_t> selection_for_assignment(const BoxInstance& b,
                                                  const std::vector<bool>& assignment)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < b.boxes.size(); ++i) {
        const Literal lit = b.boxes[i].label;
        const auto v = static_cast<std::size_t>(std::abs(lit));
        if (v == 0 || v > assignment.size())
            throw std::invalid_argument("assignment does not cover box label");
        if (assignment[v - 1] == (lit > 0)) out.push_back(i);
    }
    return out;
}

bool evaluate(const CnfFormula& f, const std::vector<bool>& assignment)
{
    for (const auto& clause : f.clauses) {
        bool sat = false;
        for (Literal lit : clause) {
            const auto v = static_cast<std::size_t>(std::abs(lit));
            if (v == 0 || v > assignment.size())
                throw std::invalid_argument("assignment does not cover literal");
            sat = sat || assignment[v - 1] == (lit > 0);
        }
        if (!sat) return false;
    }
    return true;
}

std::optional<std::vector<bool>> sat_bruteforce(const CnfFormula& f)
{
    if (f.variable_count > 20) throw std::invalid_argument("sat_bruteforce supports <= 20 variables");
    const auto n = static_cast<std::size_t>(f.variable_count);
    std::vector<bool> assignment(n);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        for (std::size_t v = 0; v < n; ++v) assignment[v] = (bits >> v) & 1U;
        if (evaluate(f, assignment)) return assignment;
    }
    return std::nullopt;
}

CnfFormula parse_dimacs(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    CnfFormula f;
    long expected_clauses = -1;
    Clause current;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "c") continue;
        if (first == "%") break;
        if (first == "p") {
            std::string format;
            long vars = 0;
            if (!(ls >> format >> vars >> expected_clauses) || format != "cnf" || vars < 0 ||
                expected_clauses < 0)
                throw std::invalid_argument("malformed DIMACS header: " + line);
            f.variable_count = static_cast<int>(vars);
            continue;
        }
        if (expected_clauses < 0) throw std::invalid_argument("DIMACS clause before header");
        std::istringstream tokens(line);
        std::string token;
        while (tokens >> token) {
            char* end = nullptr;
            const long lit = std::strtol(token.c_str(), &end, 10);
            if (*end != '\0') throw std::invalid_argument("malformed DIMACS literal: " + token);
            if (lit == 0) {
                f.clauses.push_back(std::move(current));
                current.clear();
            } else {
                check_literal(static_cast<Literal>(lit), f.variable_count);
                current.push_back(static_cast<Literal>(lit));
            }
        }
    }
    if (expected_clauses < 0) throw std::invalid_argument("missing DIMACS header");
    if (!current.empty()) f.clauses.push_back(std::move(current));
    if (static_cast<long>(f.clauses.size()) != expected_clauses)
        throw std::invalid_argument("DIMACS header announces " + std::to_string(expected_clauses) +
                                    " clauses, found " + std::to_string(f.clauses.size()));
    return f;
}

std::string write_dimacs(const CnfFormula& f)
{
    std::ostringstream out;
    out << "p cnf " << f.variable_count << ' ' << f.clauses.size() << '\n';
    for (const auto& clause : f.clauses) {
        for (Literal lit : clause) out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

std::string box_instance_to_json(const BoxInstance& b)
{
    nlohmann::json doc;
    doc["bound"] = {b.x_max, b.y_max};
    doc["k"] = b.k;
    doc["boxes"] = nlohmann::json::array();
    for (const auto& box : b.boxes)
        doc["boxes"].push_back({{"x", box.x}, {"y", box.y}, {"w", box.w}, {"label", box.label}});
    return doc.dump(2);
}

BoxInstance box_instance_from_json(std::string_view text)
{
    BoxInstance b;
    try {
        const auto doc = nlohmann::json::parse(text);
        const auto& bound = doc.at("bound");
        if (!bound.is_array() || bound.size() != 2)
            throw std::invalid_argument("\"bound\" must be [x_max, y_max]");
        b.x_max = bound[0].get<double>();
        b.y_max = bound[1].get<double>();
        b.k = doc.at("k").get<int>();
        for (const auto& box : doc.at("boxes")) {
            LabeledBox lb{box.at("x").get<double>(), box.at("y").get<double>(),
                          box.at("w").get<double>(), box.at("label").get<Literal>()};
            if (lb.w < 1.0 || lb.x <= 0.0 || lb.y <= 0.0 || lb.label == 0)
                throw std::invalid_argument("box needs w >= 1, positive corner and nonzero label");
            b.boxes.push_back(lb);
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed box instance JSON: ") + e.what());
    }
    if (b.x_max < 1.0 || b.y_max < 1.0) throw std::invalid_argument("bound must be >= (1, 1)");
    return b;
}

}  // namespace kfrechet::box
