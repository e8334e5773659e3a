#include "swheg/pro_module.hpp"

#include "swheg/errors.hpp"

#include <cmath>
#include <fmt/format.h>

namespace swheg {

namespace {

// Hinge point without stroke enforcement; used for calibration too.
Vec2 hinge_unchecked(const ProModuleSpec& spec, double rod_len_mm) {
    const auto hit = circle_circle(spec.hinge_radius_mm, spec.rod_anchor_mm, rod_len_mm);
    if (!hit) {
        throw NoSolution(fmt::format(
            "no hinge solution: rod {:.3f} mm cannot reach the hinge circle "
            "(feasible [{:.3f}, {:.3f}] mm)",
            rod_len_mm, spec.rod_anchor_mm.norm() - spec.hinge_radius_mm,
            spec.rod_anchor_mm.norm() + spec.hinge_radius_mm));
    }
    // The anchor sits below the x-axis, so the clockwise (minus) branch is the
    // one that stays in y < 0 across the stroke.
    const Vec2 a = hit->minus;
    if (a.y() >= 0.0) {
        throw NoSolution(fmt::format(
            "no hinge solution with y < 0 for rod {:.3f} mm (got y = {:.6f})", rod_len_mm,
            a.y()));
    }
    return a;
}

}  // namespace

ProModuleSpec ProModuleSpec::standard() {
    const ProModuleSpec s;
    return calibrated(s.hinge_radius_mm, s.rod_anchor_mm, s.rim_radius_mm);
}

ProModuleSpec ProModuleSpec::calibrated(double hinge_radius_mm, Vec2 rod_anchor_mm,
                                        double rim_radius_mm) {
    ProModuleSpec s;
    s.hinge_radius_mm = hinge_radius_mm;
    s.rod_anchor_mm = rod_anchor_mm;
    s.rim_radius_mm = rim_radius_mm;
    const double d = s.rod_anchor_mm.norm();
    // Keep clear of the inner tangency where the intersection is ill
    // conditioned; the upper end is set where the rim has opened 90 deg.
    s.rod_min_mm = d - s.hinge_radius_mm + 2.0;
    const Vec2 closed = hinge_unchecked(s, s.rod_min_mm);
    const double phi0 = opening_angle_of_hinge(closed, 0.0);
    s.theta_fix_deg = phi0;
    double lo = s.rod_min_mm;
    double hi = d + s.hinge_radius_mm - 1.0;
    // y_A crosses zero before the outer tangency; stay on the y < 0 side.
    while (hinge_unchecked(s, hi).y() >= -1e-9) hi = s.rod_min_mm + 0.95 * (hi - s.rod_min_mm);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double phi = opening_angle_of_hinge(hinge_unchecked(s, mid), 0.0);
        (phi < phi0 + 90.0 ? lo : hi) = mid;
    }
    s.rod_max_mm = lo;
    return s;
}

Vec2 solve_pro_hinge(const ProModuleSpec& spec, double rod_len_mm) {
    const Vec2 a = hinge_unchecked(spec, rod_len_mm);
    if (rod_len_mm < spec.rod_min_mm || rod_len_mm > spec.rod_max_mm) {
        throw OutOfStroke(fmt::format("rod {:.3f} mm outside stroke [{:.3f}, {:.3f}] mm",
                                      rod_len_mm, spec.rod_min_mm, spec.rod_max_mm));
    }
    return a;
}

double opening_angle_of_hinge(const Vec2& hinge, double theta_fix_deg) {
    // Polar angle of the hinge measured below the x-axis. Equals
    // atan|y/x| for x >= 0 and 90 + atan|x/y| for x < 0; both clauses meet
    // at 90 when x crosses zero, keeping the mapping continuous.
    return rad2deg(std::atan2(-hinge.y(), hinge.x())) - theta_fix_deg;
}

double pro_opening_angle(const ProModuleSpec& spec, double rod_len_mm) {
    return opening_angle_of_hinge(solve_pro_hinge(spec, rod_len_mm), spec.theta_fix_deg);
}

double pro_rod_for_angle(const ProModuleSpec& spec, double theta_deg) {
    const double lo_angle = pro_opening_angle(spec, spec.rod_min_mm);
    const double hi_angle = pro_opening_angle(spec, spec.rod_max_mm);
    const double eps = 1e-9;
    if (theta_deg < lo_angle - eps || theta_deg > hi_angle + eps) {
        throw OutOfRange(fmt::format(
            "opening angle {:.4f} deg unreachable; stroke covers [{:.4f}, {:.4f}] deg",
            theta_deg, lo_angle, hi_angle));
    }
    double lo = spec.rod_min_mm;
    double hi = spec.rod_max_mm;
    for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
        const double mid = 0.5 * (lo + hi);
        (pro_opening_angle(spec, mid) < theta_deg ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

Polyline pro_leg_profile(const ProModuleSpec& spec, int samples_per_arc) {
    if (samples_per_arc < 8) throw BadParams("pro_leg_profile: need >= 8 samples per arc");
    const double r = spec.rim_radius_mm;
    const double tip = std::numbers::sqrt2 * r;
    Polyline half;
    half.emplace_back(tip, 0.0);  // tip
    for (int i = 0; i <= samples_per_arc; ++i) {
        // Rim arc spans the quarter turn between the two tip pivots.
        const double ang = deg2rad(45.0 + 90.0 * i / samples_per_arc);
        half.emplace_back(r * std::cos(ang), r * std::sin(ang));
    }
    Polyline out = half;
    const Eigen::Rotation2Dd flip(std::numbers::pi);
    for (const Vec2& p : half) out.push_back(flip * p);
    return out;
}

Polyline pro_wheel_profile(const ProModuleSpec& spec, int samples) {
    if (samples < 16) throw BadParams("pro_wheel_profile: need >= 16 samples");
    Polyline out;
    out.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        const double ang = 2.0 * std::numbers::pi * i / samples;
        out.emplace_back(spec.rim_radius_mm * std::cos(ang), spec.rim_radius_mm * std::sin(ang));
    }
    return out;
}

}  // namespace swheg
