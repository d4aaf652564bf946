#ifndef KFRECHET_CURVE_HPP
#define KFRECHET_CURVE_HPP

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kfrechet {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
double norm(Point2 a);
double distance(Point2 a, Point2 b);

struct Segment {
    Point2 a;
    Point2 b;

    Point2 direction() const { return b - a; }
    Point2 at(double u) const { return a + u * (b - a); }
    double length() const { return distance(a, b); }
};

// Euclidean distance from p to the closest point of segment s.
double point_segment_distance(Point2 p, const Segment& s);
double segment_segment_distance(const Segment& s, const Segment& t);

/// Polygonal curve with n = vertices-1 segments, parameterized over [0, n]
/// with one unit of parameter per segment.
class PolyCurve {
public:
    // Throws std::invalid_argument on fewer than two vertices, non-finite
    // coordinates, or repeated consecutive vertices.
    explicit PolyCurve(std::vector<Point2> vertices);

    std::span<const Point2> vertices() const { return vertices_; }
    std::size_t segment_count() const { return vertices_.size() - 1; }
    Segment segment(std::size_t i) const;

    // Throws std::out_of_range unless 0 <= s <= segment_count().
    Point2 point_at(double s) const;

    // Largest segment length; a Lipschitz constant of point_at.
    double max_segment_length() const;

private:
    std::vector<Point2> vertices_;
};

// Parses the plain-text ("x y" per line, '#' comments) or the JSON
// ({"vertices": [[x, y], ...]}) curve format. JSON is detected by a leading '{'.
PolyCurve parse_curve(std::string_view text);
PolyCurve load_curve(const std::string& path);

// Plain-text serialization with round-trip precision.
std::string serialize_curve(const PolyCurve& c);

// max over vertex pairs (p in P, q in Q) of |p - q|. Every point pair of the
// two curves is within this distance.
double max_vertex_distance(const PolyCurve& p, const PolyCurve& q);

}  // namespace kfrechet

#endif
