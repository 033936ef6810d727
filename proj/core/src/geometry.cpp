#include "bvsym/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bvsym {

double unit_ball_measure(int n) {
    if (n < 1) throw std::invalid_argument("unit_ball_measure: n must be >= 1");
    return std::pow(std::numbers::pi, n / 2.0) / std::tgamma(n / 2.0 + 1.0);
}

BallSpec schwarz_ball(double volume, int n) {
    if (!(volume > 0.0)) throw std::invalid_argument("schwarz_ball: volume must be positive");
    const double om = unit_ball_measure(n);
    BallSpec b;
    b.n = n;
    b.radius = std::pow(volume / om, 1.0 / n);
    b.volume = volume;
    b.perimeter = n * om * std::pow(b.radius, n - 1);
    return b;
}

namespace {

double cross(const std::array<double, 2>& o, const std::array<double, 2>& a,
             const std::array<double, 2>& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

bool on_segment(const std::array<double, 2>& p, const std::array<double, 2>& q,
                const std::array<double, 2>& r) {
    return std::min(p[0], r[0]) <= q[0] && q[0] <= std::max(p[0], r[0]) &&
           std::min(p[1], r[1]) <= q[1] && q[1] <= std::max(p[1], r[1]);
}

bool segments_intersect(const std::array<double, 2>& p1, const std::array<double, 2>& p2,
                        const std::array<double, 2>& q1, const std::array<double, 2>& q2) {
    const double d1 = cross(q1, q2, p1);
    const double d2 = cross(q1, q2, p2);
    const double d3 = cross(p1, p2, q1);
    const double d4 = cross(p1, p2, q2);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return true;
    if (d1 == 0 && on_segment(q1, p1, q2)) return true;
    if (d2 == 0 && on_segment(q1, p2, q2)) return true;
    if (d3 == 0 && on_segment(p1, q1, p2)) return true;
    if (d4 == 0 && on_segment(p1, q2, p2)) return true;
    return false;
}

double signed_area(const Polygon& p) {
    double a = 0.0;
    const std::size_t n = p.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& u = p.vertices[i];
        const auto& v = p.vertices[(i + 1) % n];
        a += u[0] * v[1] - v[0] * u[1];
    }
    return 0.5 * a;
}

}  // namespace

void validate_polygon(const Polygon& p) {
    const std::size_t n = p.vertices.size();
    if (n < 3) throw std::invalid_argument("polygon: fewer than 3 vertices");
    if (!(signed_area(p) > 0.0))
        throw std::invalid_argument("polygon: signed area must be positive (CCW orientation)");
    // Non-adjacent edge pairs must not intersect.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (j == i + 1 || (i == 0 && j == n - 1)) continue;
            if (segments_intersect(p.vertices[i], p.vertices[(i + 1) % n],
                                   p.vertices[j], p.vertices[(j + 1) % n]))
                throw std::invalid_argument("polygon: self-intersecting");
        }
    }
}

PolygonMetrics polygon_metrics(const Polygon& p) {
    validate_polygon(p);
    PolygonMetrics m;
    m.area = signed_area(p);
    const std::size_t n = p.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& u = p.vertices[i];
        const auto& v = p.vertices[(i + 1) % n];
        m.perimeter += std::hypot(v[0] - u[0], v[1] - u[1]);
    }
    return m;
}

double isoperimetric_deficit(double measure, double perimeter, int n) {
    if (n == 1) return perimeter - (measure > 0.0 ? 2.0 : 0.0);
    const double om = unit_ball_measure(n);
    const double e = static_cast<double>(n) / (n - 1.0);
    const double bound = std::pow(n, -e) * std::pow(om, -1.0 / (n - 1.0)) *
                         std::pow(perimeter, e);
    return bound - measure;
}

}  // namespace bvsym
