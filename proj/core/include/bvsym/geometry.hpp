#ifndef BVSYM_GEOMETRY_HPP
#define BVSYM_GEOMETRY_HPP

#include <array>
#include <vector>

namespace bvsym {

/// Lebesgue measure of the unit ball in dimension n.
double unit_ball_measure(int n);

/// A centered ball, the volume-matched comparison domain.
struct BallSpec {
    int n = 2;
    double radius = 1.0;
    double volume = 0.0;
    double perimeter = 0.0;
};

/// Centered ball with the prescribed volume.
BallSpec schwarz_ball(double volume, int n);

/// Simple closed polygon, counter-clockwise vertices.
struct Polygon {
    std::vector<std::array<double, 2>> vertices;
};

struct PolygonMetrics {
    double area = 0.0;
    double perimeter = 0.0;
};

/// Throws std::invalid_argument if the polygon is not simple, not CCW,
/// or degenerate.
void validate_polygon(const Polygon& p);

PolygonMetrics polygon_metrics(const Polygon& p);

/// n^{-n/(n-1)} w_n^{-1/(n-1)} Per^{n/(n-1)} - measure.  Non-negative
/// for admissible sets.  For n = 1 the inequality degenerates to
/// Per >= 2 for nonempty bounded sets.
double isoperimetric_deficit(double measure, double perimeter, int n);

}  // namespace bvsym

#endif
