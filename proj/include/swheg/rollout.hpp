#pragma once

#include "swheg/gait.hpp"
#include "swheg/geometry.hpp"
#include "swheg/stairs.hpp"

#include <span>
#include <utility>
#include <vector>

namespace swheg {

/// Discretisation of a rollout. Progress s is the driven-wheel rotation
/// times the effective radius, so for a round wheel on flat ground it equals
/// the distance travelled.
struct RolloutConfig {
    double step_ds_mm = 1.0;          ///< sample spacing along progress
    double contact_tol_mm = 0.05;     ///< clearance/penetration tolerance
    double max_progress_mm = 5000.0;  ///< stop after this much progress
    double effective_radius_mm = 0.0; ///< 0 = mean vertex radius of the profile
    double start_x_mm = -1.0;         ///< axle drop position; < 0 = mid lead-in
};

/// One sample of the rolled wheel: axle position and cumulative joint angle.
struct PoseSample {
    double s_mm = 0.0;
    Vec2 wheel_center_mm{0.0, 0.0};
    double joint_angle_deg = 0.0;
};

/// One sample of the body pose derived from the wheel-centre path.
struct BodySample {
    double s_mm = 0.0;
    Vec2 body_center_mm{0.0, 0.0};
    double pitch_deg = 0.0;
    double front_angle_deg = 0.0;
    double rear_angle_deg = 0.0;
};

/// Roll a closed wheel outline over the staircase without slip. The wheel is
/// dropped onto the lead-in and advanced by forward rotation only; motion is
/// a sequence of pivots about the current contact point (wheel vertex on a
/// tread or riser, or a step nose on a wheel face), switching pivot at each
/// new touching event. Throws Stuck when no contact-preserving advance
/// exists within one full revolution.
[[nodiscard]] std::vector<PoseSample> roll_wheel(const Polyline& profile, const Staircase& sc,
                                                 const RolloutConfig& cfg);

/// Body poses for a chassis whose front and rear wheels follow the same
/// wheel-centre path (the no-slip single-track assumption): the rear centre
/// is the path point exactly `wheelbase` behind the front centre along the
/// body axis; the body centre is their midpoint.
[[nodiscard]] std::vector<BodySample> body_rollout(const ChassisSpec& chassis,
                                                   const Polyline& profile, const Staircase& sc,
                                                   const RolloutConfig& cfg);

/// Same, from an already rolled wheel-centre path. wheelbase in millimetres.
[[nodiscard]] std::vector<BodySample> body_from_path(std::span<const PoseSample> path,
                                                     double wheelbase_mm);

/// RMS perpendicular deviation of the body centre from the best-fit climb
/// line (fixed slope atan(H/L), free intercept) over the steady window: the
/// first and last full step period are trimmed. Throws TooShort when fewer
/// than three step periods remain.
[[nodiscard]] double trajectory_rmse(std::span<const BodySample> body, const Staircase& sc);

struct SweepRow {
    double wheelbase_mm = 0.0;
    double rmse_mm = 0.0;
    bool ok = false;
};

struct WheelbaseResult {
    double wheelbase_mm = 0.0;
    double rmse_mm = 0.0;
    std::vector<SweepRow> sweep;  ///< exactly `grid` rows, grid order
};

/// Grid sweep of trajectory_rmse over the wheelbase range (>= 10 points),
/// then golden-section refinement of the bracketing interval down to 1 mm.
/// The wheel path is rolled once and shared by all candidates; candidates
/// are evaluated concurrently and merged in grid order.
[[nodiscard]] WheelbaseResult optimize_wheelbase(const ChassisSpec& chassis_template,
                                                 const Polyline& profile, const Staircase& sc,
                                                 std::pair<double, double> range_mm, int grid,
                                                 const RolloutConfig& cfg);

}  // namespace swheg
