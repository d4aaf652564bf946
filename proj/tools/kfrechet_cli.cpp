// kfrechet: command-line front end. JSON results go to stdout, diagnostics
// to stderr. Exit status: 0 = answer yes, 1 = answer no, 2 = usage/input error.

#include "kfrechet/approximation.hpp"
#include "kfrechet/box_reduction.hpp"
#include "kfrechet/curve.hpp"
#include "kfrechet/epsilon_search.hpp"
#include "kfrechet/freespace.hpp"
#include "kfrechet/selection.hpp"
#include "kfrechet/svg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

using namespace kfrechet;
using nlohmann::json;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

json ids_json(const Selection& s) { return json(std::vector<std::size_t>(s.ids().begin(), s.ids().end())); }

json ids_json(const std::optional<Selection>& s) { return s ? ids_json(*s) : json(nullptr); }

int emit(const json& report)
{
    std::cout << report.dump() << '\n';
    return report.at("answer").get<bool>() ? kExitYes : kExitNo;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

Selection parse_ids(const std::string& csv)
{
    std::vector<std::size_t> ids;
    std::stringstream in(csv);
    std::string token;
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        std::size_t used = 0;
        const unsigned long v = std::stoul(token, &used);
        if (used != token.size()) throw std::invalid_argument("bad component id: " + token);
        ids.push_back(v);
    }
    return Selection(std::move(ids));
}

struct CurveArgs {
    std::string p_path;
    std::string q_path;
};

void add_curve_flags(CLI::App* cmd, CurveArgs& args)
{
    cmd->add_option("--p", args.p_path, "curve P file")->required();
    cmd->add_option("--q", args.q_path, "curve Q file")->required();
}

int run_decide(const CurveArgs& curves, double eps, int k, const std::string& algo, double tol)
{
    const PolyCurve p = load_curve(curves.p_path);
    const PolyCurve q = load_curve(curves.q_path);
    const FreeSpaceDiagram d = build_diagram(p, q, eps, tol);

    std::optional<Selection> selection;
    bool answer = false;
    if (algo == "brute") {
        selection = decide_bruteforce(d, k);
        answer = selection.has_value();
    } else if (algo == "fpt") {
        selection = decide_fpt(d, k);
        answer = selection.has_value();
    } else if (algo == "approx") {
        if (auto a = approximate_k(d); a && static_cast<int>(a->selection.size()) <= k) {
            selection = a->selection;
            answer = true;
        }
    } else if (algo == "weak") {
        if (auto id = weak_frechet_witness(d)) {
            selection = Selection({*id});
            answer = true;
        }
    } else if (algo == "hausdorff") {
        answer = decide_hausdorff(d);
        if (answer) {
            std::vector<std::size_t> all;
            for (const auto& c : d.components()) all.push_back(c.id);
            selection = Selection(std::move(all));
        }
    } else {  // frechet
        answer = decide_strong_frechet(d);
    }

    json report;
    report["answer"] = answer;
    report["selection"] = ids_json(selection);
    report["components"] = d.component_count();
    report["z"] = d.z();
    return emit(report);
}

int run_minimize_k(const CurveArgs& curves, double eps, const std::string& method, double tol)
{
    const FreeSpaceDiagram d = build_diagram(load_curve(curves.p_path), load_curve(curves.q_path), eps, tol);
    const auto result = minimize_k(d, method == "approx" ? KMethod::approx : KMethod::exact);
    json report;
    report["answer"] = result.has_value();
    report["k"] = result ? json(result->k) : json(nullptr);
    report["selection"] = result ? ids_json(result->selection) : json(nullptr);
    report["components"] = d.component_count();
    report["z"] = d.z();
    return emit(report);
}

int run_minimize_eps(const CurveArgs& curves, int k, double search_tol, const std::string& method,
                     double tol)
{
    const PolyCurve p = load_curve(curves.p_path);
    const PolyCurve q = load_curve(curves.q_path);
    EpsilonOptions options;
    options.tolerance = tol;
    options.method = method == "candidates" ? EpsilonMethod::candidates : EpsilonMethod::bisection;
    const EpsilonOptimum best = minimize_epsilon(p, q, k, search_tol, options);
    json report;
    report["answer"] = true;
    report["epsilon"] = best.epsilon;
    report["k"] = k;
    report["probes"] = best.probes;
    report["selection"] = ids_json(best.selection);
    return emit(report);
}

int run_svg(const CurveArgs& curves, double eps, const std::string& out_path,
            const std::string& select, double tol)
{
    const PolyCurve p = load_curve(curves.p_path);
    const PolyCurve q = load_curve(curves.q_path);
    const FreeSpaceDiagram d = build_diagram(p, q, eps, tol);
    std::optional<Selection> selected;
    if (!select.empty()) {
        selected = parse_ids(select);
        for (std::size_t id : selected->ids()) (void)d.component(id);
    }
    write_file(out_path, render_diagram_svg(p, q, d, selected ? &*selected : nullptr));
    json report;
    report["answer"] = true;
    report["components"] = d.component_count();
    report["out"] = out_path;
    return emit(report);
}

int run_boxgen(const std::string& cnf_path, const std::string& out_path)
{
    const auto formula = box::normalize_formula(box::parse_dimacs(read_file(cnf_path)));
    const auto instance = box::build_box_instance(formula);
    write_file(out_path, box::box_instance_to_json(instance) + "\n");
    json report;
    report["answer"] = true;
    report["boxes"] = instance.boxes.size();
    report["k"] = instance.k;
    report["out"] = out_path;
    return emit(report);
}

int run_boxsolve(const std::string& in_path)
{
    const auto instance = box::box_instance_from_json(read_file(in_path));
    const auto selection = box::solve_box_bruteforce(instance);
    json report;
    report["answer"] = selection.has_value();
    report["selection"] = selection ? json(*selection) : json(nullptr);
    report["boxes"] = instance.boxes.size();
    report["k"] = instance.k;
    return emit(report);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"k-Frechet distance toolkit: free space diagrams, covering selections, box reduction"};
    app.require_subcommand(1);

    CurveArgs curves;
    double eps = 0.0;
    int k = 1;
    std::string algo = "fpt";
    std::string method;
    double search_tol = 1e-6;
    std::string out_path;
    std::string in_path;
    std::string cnf_path;
    std::string select;

    auto* decide = app.add_subcommand("decide", "decide k-Frechet (and related) distance <= eps");
    add_curve_flags(decide, curves);
    decide->add_option("--eps", eps, "free space radius")->required()->check(CLI::NonNegativeNumber);
    decide->add_option("--k", k, "selection budget")->check(CLI::NonNegativeNumber);
    decide->add_option("--algo", algo, "decision procedure")
        ->check(CLI::IsMember({"brute", "fpt", "approx", "weak", "hausdorff", "frechet"}));

    auto* min_k = app.add_subcommand("minimize-k", "smallest covering selection at fixed eps");
    add_curve_flags(min_k, curves);
    min_k->add_option("--eps", eps, "free space radius")->required()->check(CLI::NonNegativeNumber);
    min_k->add_option("--method", method, "exact (default) or approx")
        ->check(CLI::IsMember({"exact", "approx"}));

    auto* min_eps = app.add_subcommand("minimize-eps", "smallest eps for a fixed budget k");
    add_curve_flags(min_eps, curves);
    min_eps->add_option("--k", k, "selection budget")->required()->check(CLI::PositiveNumber);
    min_eps->add_option("--tol", search_tol, "search tolerance")->check(CLI::PositiveNumber);
    min_eps->add_option("--method", method, "bisection (default) or candidates")
        ->check(CLI::IsMember({"bisection", "candidates"}));

    auto* svg = app.add_subcommand("freespace-svg", "render the free space diagram as SVG");
    add_curve_flags(svg, curves);
    svg->add_option("--eps", eps, "free space radius")->required()->check(CLI::NonNegativeNumber);
    svg->add_option("--out", out_path, "output SVG path")->required();
    svg->add_option("--select", select, "comma-separated component ids to outline");

    auto* boxgen = app.add_subcommand("boxgen", "build the box instance of a DIMACS CNF formula");
    boxgen->add_option("--cnf", cnf_path, "DIMACS input")->required();
    boxgen->add_option("--out", out_path, "box instance JSON output")->required();

    auto* boxsolve = app.add_subcommand("boxsolve", "solve a box instance by exhaustive search");
    boxsolve->add_option("--in", in_path, "box instance JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        const double tol = tolerance_from_env();
        if (*decide) return run_decide(curves, eps, k, algo, tol);
        if (*min_k) return run_minimize_k(curves, eps, method, tol);
        if (*min_eps) return run_minimize_eps(curves, k, search_tol, method, tol);
        if (*svg) return run_svg(curves, eps, out_path, select, tol);
        if (*boxgen) return run_boxgen(cnf_path, out_path);
        if (*boxsolve) return run_boxsolve(in_path);
    } catch (const std::exception& e) {
        std::cerr << "kfrechet: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
