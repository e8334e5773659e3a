#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

namespace swheg {

using Vec2 = Eigen::Vector2d;

/// Closed or open chain of 2-D points, millimetres.
/// Wheel outlines are stored without a repeated end point and treated as
/// implicitly closed; terrain profiles are open.
using Polyline = std::vector<Vec2>;

[[nodiscard]] constexpr double deg2rad(double d) noexcept { return d * std::numbers::pi / 180.0; }
[[nodiscard]] constexpr double rad2deg(double r) noexcept { return r * 180.0 / std::numbers::pi; }

/// Intersection of circle (origin, r0) with circle (center, r1).
/// Returns the two points (coincident at tangency), or nullopt when the
/// circles do not meet. `lower` selects the branch on the clockwise side of
/// the center ray, which for an anchor below the x-axis is the point with
/// the smaller y.
struct CircleIntersection {
    Vec2 plus;
    Vec2 minus;
    bool tangent;
};

[[nodiscard]] std::optional<CircleIntersection>
circle_circle(double r0, const Vec2& center, double r1);

/// Squared / plain distance from point to segment [a, b].
[[nodiscard]] double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b);

/// Closest parameter u in [0,1] of the projection of p onto segment [a, b].
[[nodiscard]] double point_segment_param(const Vec2& p, const Vec2& a, const Vec2& b);

/// Minimum distance from p to an open polyline.
[[nodiscard]] double point_polyline_distance(const Vec2& p, const Polyline& poly);

/// Rotate a polyline about the origin.
[[nodiscard]] Polyline rotated(const Polyline& poly, double angle_rad);

/// Largest vertex radius of a wheel outline.
[[nodiscard]] double max_radius(const Polyline& poly);

/// Mean vertex radius of a wheel outline.
[[nodiscard]] double mean_radius(const Polyline& poly);

}  // namespace swheg
