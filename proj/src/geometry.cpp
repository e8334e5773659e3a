#include "swheg/geometry.hpp"

#include <algorithm>
#include <limits>

namespace swheg {

std::optional<CircleIntersection> circle_circle(double r0, const Vec2& center, double r1) {
    const double d = center.norm();
    if (d <= 0.0) return std::nullopt;
    // Chord foot along the center ray.
    const double a = (r0 * r0 - r1 * r1 + d * d) / (2.0 * d);
    const double h2 = r0 * r0 - a * a;
    // Small negative h2 from rounding still counts as tangency.
    const double tol = 1e-9 * std::max(1.0, r0 * r0);
    if (h2 < -tol) return std::nullopt;
    const double h = h2 > 0.0 ? std::sqrt(h2) : 0.0;
    const Vec2 u = center / d;
    const Vec2 n{-u.y(), u.x()};
    CircleIntersection out;
    out.plus = a * u + h * n;
    out.minus = a * u - h * n;
    out.tangent = h2 <= tol;
    return out;
}

double point_segment_param(const Vec2& p, const Vec2& a, const Vec2& b) {
    const Vec2 ab = b - a;
    const double len2 = ab.squaredNorm();
    if (len2 <= 0.0) return 0.0;
    return std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
}

double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
    const double u = point_segment_param(p, a, b);
    return (p - (a + u * (b - a))).norm();
}

double point_polyline_distance(const Vec2& p, const Polyline& poly) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < poly.size(); ++i)
        best = std::min(best, point_segment_distance(p, poly[i], poly[i + 1]));
    return best;
}

Polyline rotated(const Polyline& poly, double angle_rad) {
    const Eigen::Rotation2Dd rot(angle_rad);
    Polyline out;
    out.reserve(poly.size());
    for (const Vec2& p : poly) out.push_back(rot * p);
    return out;
}

double max_radius(const Polyline& poly) {
    double r = 0.0;
    for (const Vec2& p : poly) r = std::max(r, p.norm());
    return r;
}

double mean_radius(const Polyline& poly) {
    if (poly.empty()) return 0.0;
    double sum = 0.0;
    for (const Vec2& p : poly) sum += p.norm();
    return sum / static_cast<double>(poly.size());
}

}  // namespace swheg
