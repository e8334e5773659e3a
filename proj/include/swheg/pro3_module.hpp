#pragma once

#include "swheg/geometry.hpp"
#include "swheg/stairs.hpp"

namespace swheg {

/// Geometric constants of the SWhegPro3 three-impeller transformation
/// linkage. Angles in degrees, lengths in millimetres. The push-rod
/// displacement x extends the driving chord, rod_base + x.
struct Pro3ModuleSpec {
    double theta0_deg = 50.0;
    double theta1_deg = 92.72;
    double theta2_deg = 9.86;
    double theta3_deg = 21.53;
    double theta4_deg = 34.05;
    double r1_mm = 114.0;
    double r2_mm = 124.0;
    double l_mm = 20.0;
    double L1_mm = 116.67;
    double L2_mm = 66.76;
    double L3_mm = 114.0;
    double L_arc_mm = 240.0;
    double rod_base_mm = 105.0;   ///< chord length at zero extension
    double rod_min_mm = 0.0;      ///< stroke envelope (extension)
    double rod_max_mm = 0.0;
    double rim_radius_mm = 120.0; ///< closed wheel radius
    double max_radius_mm = 220.0; ///< fully opened spoke-tip radius

    /// Stock module: listed constants, stroke bounded by the linkage itself
    /// (largest extension keeping every arccos argument inside [-1, 1],
    /// minus a 1e-6 mm margin).
    [[nodiscard]] static Pro3ModuleSpec standard();

    /// Recompute the stroke upper bound for (possibly altered) constants.
    [[nodiscard]] static Pro3ModuleSpec with_derived_stroke(Pro3ModuleSpec raw);
};

/// Every intermediate of the spoke-chain evaluation, stored in dependency
/// order. alpha* in degrees, lengths in millimetres; T is the spoke-tip span.
struct ChainState {
    double alpha1_deg = 0.0;
    double alpha2_deg = 0.0;
    double alpha3_deg = 0.0;
    double alpha4_deg = 0.0;
    double alpha5_deg = 0.0;
    double alpha6_deg = 0.0;
    double L4_mm = 0.0;
    double L5_mm = 0.0;
    double L0_mm = 0.0;
    double T_mm = 0.0;
};

/// Forward evaluation of the transformation linkage at extension x.
/// Evaluation order: alpha1, L4, alpha2, L5, alpha3, alpha4, L0, alpha5,
/// alpha6 = 180 - alpha5 - alpha4, T. Throws DomainError naming the first
/// arccos whose argument leaves [-1, 1]; OutOfStroke outside the envelope.
[[nodiscard]] ChainState pro3_chain(const Pro3ModuleSpec& spec, double x_mm);

/// Spoke-tip span T(x); shorthand for pro3_chain(spec, x).T_mm.
[[nodiscard]] double pro3_span(const Pro3ModuleSpec& spec, double x_mm);

/// Span the stair geometry asks for: sqrt(H^2 + (L - L_arc)^2).
[[nodiscard]] double required_span(const Stair& stair, const Pro3ModuleSpec& spec);

/// Achievable span interval over the stroke (dense scan + refinement).
[[nodiscard]] std::pair<double, double> span_range(const Pro3ModuleSpec& spec);

/// Smallest extension x with T(x) equal to the stair's required span,
/// |T(x) - T_aim| < 1e-6 mm. Throws Unreachable (with the achievable range)
/// when the target lies outside [min T, max T] over the stroke.
[[nodiscard]] double solve_pushrod(const Pro3ModuleSpec& spec, const Stair& stair);

/// Discretised wheel outline at extension x: three identical curved spokes
/// at 120 deg spacing. Each spoke ramps from the closed rim radius out to a
/// tip pad whose radius interpolates rim_radius -> max_radius with x over
/// the stroke; the trailing face drops radially back to the next spoke root
/// (the stair-nose hook). At x = rod_min the outline is the closed wheel.
/// `samples_per_spoke` >= 16.
[[nodiscard]] Polyline wheel_profile(const Pro3ModuleSpec& spec, double x_mm,
                                     int samples_per_spoke = 64);

}  // namespace swheg
