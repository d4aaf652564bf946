#include "kfrechet/svg.hpp"

#include <json.hpp>

#include <array>
#include <cstdio>
#include <sstream>
#include <vector>

namespace kfrechet {

namespace {

constexpr double kSize = 1000.0;
constexpr double kMargin = 60.0;
constexpr double kPlot = kSize - 2.0 * kMargin;
constexpr int kBoundarySamples = 48;

constexpr std::array<const char*, 10> kPalette = {
    "#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2",
    "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac",
};

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

// Boundary of the convex free region of one cell in local coordinates,
// traced by slicing along s.
std::vector<std::pair<double, double>> cell_outline(const Segment& sp, const Segment& sq,
                                                    const CellFreeSpace& cell, double eps,
                                                    double tol)
{
    std::vector<std::pair<double, double>> lower;
    std::vector<std::pair<double, double>> upper;
    const double a = cell.s_projection.lo();
    const double b = cell.s_projection.hi();
    for (int k = 0; k <= kBoundarySamples; ++k) {
        const double s = a + (b - a) * k / kBoundarySamples;
        const Interval t = free_interval_on_segment(sp.at(s), sq, eps, tol);
        if (t.is_empty()) continue;
        lower.emplace_back(s, t.lo());
        upper.emplace_back(s, t.hi());
    }
    if (lower.empty()) {
        const double s = 0.5 * (a + b);
        const double t = 0.5 * (cell.t_projection.lo() + cell.t_projection.hi());
        return {{s, t}};
    }
    for (auto it = upper.rbegin(); it != upper.rend(); ++it) lower.push_back(*it);
    return lower;
}

}  // namespace

std::string render_diagram_svg(const PolyCurve& p, const PolyCurve& q, const FreeSpaceDiagram& d,
                               const Selection* selected)
{
    const std::size_t n = d.n();
    const std::size_t m = d.m();
    const double cw = kPlot / static_cast<double>(n);
    const double ch = kPlot / static_cast<double>(m);
    auto px = [&](double s) { return kMargin + s * cw; };
    auto py = [&](double t) { return kSize - kMargin - t * ch; };

    nlohmann::json meta;
    meta["components"] = d.component_count();
    meta["epsilon"] = d.epsilon();
    meta["n"] = n;
    meta["m"] = m;
    meta["z"] = d.z();
    if (selected != nullptr) meta["selection"] = std::vector<std::size_t>(selected->ids().begin(), selected->ids().end());

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\" width=\"1000\" "
           "height=\"1000\" data-components=\""
        << d.component_count() << "\">\n";
    out << "<metadata>" << meta.dump() << "</metadata>\n";
    out << "<rect x=\"0\" y=\"0\" width=\"1000\" height=\"1000\" fill=\"white\"/>\n";

    out << "<g class=\"regions\">\n";
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const auto owner = d.component_of(i, j);
            if (!owner) continue;
            const CellFreeSpace& cell = d.cell(i, j);
            const auto outline =
                cell_outline(p.segment(i), q.segment(j), cell, d.epsilon(), d.tolerance());
            const char* color = kPalette[*owner % kPalette.size()];
            const bool chosen = selected != nullptr && selected->contains(*owner);
            out << "<polygon class=\"free\" data-component=\"" << *owner << "\" fill=\"" << color
                << "\" fill-opacity=\"0.75\" stroke=\"" << (chosen ? "black" : color)
                << "\" stroke-width=\"" << (chosen ? 3 : 1) << "\" points=\"";
            for (std::size_t k = 0; k < outline.size(); ++k) {
                if (k > 0) out << ' ';
                out << fmt(px(static_cast<double>(i) + outline[k].first)) << ','
                    << fmt(py(static_cast<double>(j) + outline[k].second));
            }
            out << "\"/>\n";
        }
    }
    out << "</g>\n";

    out << "<g class=\"grid\" stroke=\"#444\" stroke-width=\"1\">\n";
    for (std::size_t i = 0; i <= n; ++i)
        out << "<line x1=\"" << fmt(px(i)) << "\" y1=\"" << fmt(py(0)) << "\" x2=\"" << fmt(px(i))
            << "\" y2=\"" << fmt(py(m)) << "\"/>\n";
    for (std::size_t j = 0; j <= m; ++j)
        out << "<line x1=\"" << fmt(px(0)) << "\" y1=\"" << fmt(py(j)) << "\" x2=\"" << fmt(px(n))
            << "\" y2=\"" << fmt(py(j)) << "\"/>\n";
    out << "</g>\n";

    out << "<g class=\"axes\" font-family=\"sans-serif\" font-size=\"16\" fill=\"black\">\n";
    for (std::size_t i = 0; i <= n; ++i)
        out << "<text x=\"" << fmt(px(i)) << "\" y=\"" << fmt(py(0) + 22)
            << "\" text-anchor=\"middle\">" << i << "</text>\n";
    for (std::size_t j = 0; j <= m; ++j)
        out << "<text x=\"" << fmt(px(0) - 10) << "\" y=\"" << fmt(py(j) + 5)
            << "\" text-anchor=\"end\">" << j << "</text>\n";
    out << "<text x=\"" << fmt(kSize / 2) << "\" y=\"" << fmt(kSize - 12)
        << "\" text-anchor=\"middle\">P</text>\n";
    out << "<text x=\"18\" y=\"" << fmt(kSize / 2) << "\" text-anchor=\"middle\">Q</text>\n";
    out << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace kfrechet
