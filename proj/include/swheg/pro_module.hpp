#pragma once

#include "swheg/geometry.hpp"

namespace swheg {

/// Geometry of the SWhegPro two-spoke transformation mechanism. The push rod
/// spans from a fixed anchor on the wheel base to a hinge point that rides on
/// a circle around the wheel axis; the rim opening angle follows the hinge.
///
/// Units: millimetres and degrees throughout.
struct ProModuleSpec {
    double hinge_radius_mm = 55.0;       ///< radius of the hinge-point circle
    Vec2 rod_anchor_mm{98.4, -21.5};     ///< fixed rod anchor in module frame
    double theta_fix_deg = 0.0;          ///< calibration offset; opening angle zero reference
    double rod_min_mm = 0.0;             ///< stroke envelope, shortest rod length
    double rod_max_mm = 0.0;             ///< stroke envelope, longest rod length
    double rim_radius_mm = 100.0;        ///< closed-wheel rim radius

    /// Stock module: anchor and hinge radius as built, stroke bounded by the
    /// geometry itself (2 mm above the inner tangency, up to a 90 deg
    /// opening), and theta_fix calibrated so the fully closed configuration
    /// reads an opening angle of exactly 0.
    [[nodiscard]] static ProModuleSpec standard();

    /// Same derivation for altered geometry.
    [[nodiscard]] static ProModuleSpec calibrated(double hinge_radius_mm, Vec2 rod_anchor_mm,
                                                  double rim_radius_mm);
};

/// Hinge point (x_A, y_A) for a given push-rod length: the intersection of
/// the hinge circle with the rod circle on the y < 0 side.
///
/// Throws NoSolution when the circles do not meet there, OutOfStroke when
/// rod_len is outside the envelope.
[[nodiscard]] Vec2 solve_pro_hinge(const ProModuleSpec& spec, double rod_len_mm);

/// Rim opening angle for a hinge point, before stroke/solvability checks.
/// This is the polar angle of the hinge below the x-axis minus theta_fix;
/// for x_A >= 0 it equals atan|y_A/x_A| - theta_fix and it continues
/// continuously past x_A = 0 (both sides give 90 - theta_fix in the limit).
[[nodiscard]] double opening_angle_of_hinge(const Vec2& hinge, double theta_fix_deg);

/// Rim opening angle (deg) for a push-rod length.
[[nodiscard]] double pro_opening_angle(const ProModuleSpec& spec, double rod_len_mm);

/// Inverse mapping: rod length that produces the requested opening angle, by
/// bisection on the monotone forward map. Throws OutOfRange when the angle
/// is outside the image of the stroke.
[[nodiscard]] double pro_rod_for_angle(const ProModuleSpec& spec, double theta_deg);

/// Rolling envelope of the module in leg mode: two rim arcs of radius
/// rim_radius centred on the hip plus two diametrically opposed tips at
/// sqrt(2) * rim_radius. Rolled on flat ground this envelope keeps the hip
/// between rim_radius and sqrt(2) * rim_radius, the module-centre band the
/// opened module exhibits. `samples_per_arc` >= 8 vertices per rim arc.
[[nodiscard]] Polyline pro_leg_profile(const ProModuleSpec& spec, int samples_per_arc = 96);

/// Closed (wheel-mode) outline: a circle of rim_radius as an n-gon.
[[nodiscard]] Polyline pro_wheel_profile(const ProModuleSpec& spec, int samples = 256);

}  // namespace swheg
