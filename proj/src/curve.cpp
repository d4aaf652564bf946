#include "kfrechet/curve.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace kfrechet {

double norm(Point2 a) { return std::hypot(a.x, a.y); }
double distance(Point2 a, Point2 b) { return norm(a - b); }

double point_segment_distance(Point2 p, const Segment& s)
{
    const Point2 d = s.direction();
    const double len2 = dot(d, d);
    double u = len2 > 0.0 ? dot(p - s.a, d) / len2 : 0.0;
    u = std::clamp(u, 0.0, 1.0);
    return distance(p, s.at(u));
}

namespace {

int orientation(Point2 a, Point2 b, Point2 c)
{
    const double v = cross(b - a, c - a);
    return (v > 0.0) - (v < 0.0);
}

bool on_box(Point2 a, Point2 b, Point2 p)
{
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_intersect(const Segment& s, const Segment& t)
{
    const int o1 = orientation(s.a, s.b, t.a);
    const int o2 = orientation(s.a, s.b, t.b);
    const int o3 = orientation(t.a, t.b, s.a);
    const int o4 = orientation(t.a, t.b, s.b);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_box(s.a, s.b, t.a)) return true;
    if (o2 == 0 && on_box(s.a, s.b, t.b)) return true;
    if (o3 == 0 && on_box(t.a, t.b, s.a)) return true;
    if (o4 == 0 && on_box(t.a, t.b, s.b)) return true;
    return false;
}

double parse_number(std::string_view token, std::size_t line_no)
{
    double value = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (!token.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || !std::isfinite(value))
        throw std::invalid_argument("line " + std::to_string(line_no) + ": malformed number '" +
                                    std::string(token) + "'");
    return value;
}

PolyCurve parse_text_curve(std::string_view text)
{
    std::vector<Point2> vertices;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        std::vector<std::string_view> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            if (j > i) tokens.push_back(line.substr(i, j - i));
            i = j;
        }
        if (tokens.empty() || tokens.front().front() == '#') continue;
        if (tokens.size() != 2)
            throw std::invalid_argument("line " + std::to_string(line_no) +
                                        ": expected two coordinates");
        vertices.push_back({parse_number(tokens[0], line_no), parse_number(tokens[1], line_no)});
    }
    return PolyCurve(std::move(vertices));
}

PolyCurve parse_json_curve(std::string_view text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed curve JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
        throw std::invalid_argument("curve JSON needs a \"vertices\" array");
    std::vector<Point2> vertices;
    for (const auto& v : doc["vertices"]) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
            throw std::invalid_argument("curve JSON vertices must be [x, y] number pairs");
        vertices.push_back({v[0].get<double>(), v[1].get<double>()});
    }
    return PolyCurve(std::move(vertices));
}

}  // namespace

double segment_segment_distance(const Segment& s, const Segment& t)
{
    if (segments_intersect(s, t)) return 0.0;
    return std::min({point_segment_distance(s.a, t), point_segment_distance(s.b, t),
                     point_segment_distance(t.a, s), point_segment_distance(t.b, s)});
}

PolyCurve::PolyCurve(std::vector<Point2> vertices) : vertices_(std::move(vertices))
{
    if (vertices_.size() < 2)
        throw std::invalid_argument("a curve needs at least 2 vertices");
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (!std::isfinite(vertices_[i].x) || !std::isfinite(vertices_[i].y))
            throw std::invalid_argument("vertex " + std::to_string(i) + " is not finite");
        if (i > 0 && vertices_[i] == vertices_[i - 1])
            throw std::invalid_argument("zero-length segment at vertex " + std::to_string(i));
    }
}

Segment PolyCurve::segment(std::size_t i) const
{
    if (i >= segment_count()) throw std::out_of_range("segment index out of range");
    return {vertices_[i], vertices_[i + 1]};
}

Point2 PolyCurve::point_at(double s) const
{
    const auto n = static_cast<double>(segment_count());
    if (!(s >= 0.0 && s <= n)) throw std::out_of_range("curve parameter out of [0, n]");
    if (s == n) return vertices_.back();
    const auto i = static_cast<std::size_t>(std::floor(s));
    return segment(i).at(s - static_cast<double>(i));
}

double PolyCurve::max_segment_length() const
{
    double best = 0.0;
    for (std::size_t i = 0; i < segment_count(); ++i) best = std::max(best, segment(i).length());
    return best;
}

PolyCurve parse_curve(std::string_view text)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') return parse_json_curve(text);
    return parse_text_curve(text);
}

PolyCurve load_curve(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open curve file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_curve(buffer.str());
}

std::string serialize_curve(const PolyCurve& c)
{
    std::string out;
    char buf[64];
    for (const auto& v : c.vertices()) {
        auto r = std::to_chars(buf, buf + sizeof buf, v.x);
        *r.ptr++ = ' ';
        r = std::to_chars(r.ptr, buf + sizeof buf, v.y);
        *r.ptr++ = '\n';
        out.append(buf, r.ptr);
    }
    return out;
}

double max_vertex_distance(const PolyCurve& p, const PolyCurve& q)
{
    double best = 0.0;
    for (const auto& a : p.vertices())
        for (const auto& b : q.vertices()) best = std::max(best, distance(a, b));
    return best;
}

}  // namespace kfrechet
