#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace swheg {

/// Chassis-level robot parameters; SI units (metres, kg, newtons).
struct ChassisSpec {
    double width_m = 0.33;        ///< leg-to-leg track width d
    double wheel_radius_m = 0.10; ///< rolling radius in wheel mode
    double reduction = 1.0;       ///< joint-side speed reduction ratio N_t
    int wheel_count = 6;          ///< 4 or 6 wheel-leg modules
    double mass_kg = 10.08;       ///< total robot weight
    double actuator_force_n = 60.0; ///< max force of one push rod
    double wheelbase_m = 0.51;    ///< front-to-rear hip distance

    [[nodiscard]] bool valid() const noexcept {
        return width_m > 0.0 && wheel_radius_m > 0.0 && reduction > 0.0 && mass_kg > 0.0 &&
               actuator_force_n > 0.0 && wheelbase_m > 0.0 &&
               (wheel_count == 4 || wheel_count == 6);
    }
};

enum class GaitMode { RHex, SWheg, Wheeled };

/// Clock-driven trajectory parameters. The slow band [theta_s, theta_f] is
/// the (approximate) stance arc, traversed in t_s; one revolution takes T_c.
struct GaitParams {
    double theta_s_deg = 0.0;
    double theta_f_deg = 180.0;
    double t_s_s = 0.5;
    double T_c_s = 1.0;
    GaitMode mode = GaitMode::RHex;

    void validate() const;  // throws BadParams
};

enum class Leg : int { RF = 0, RM, RR, LF, LM, LR };

inline constexpr std::array<const char*, 6> kLegNames = {"RF", "RM", "RR", "LF", "LM", "LR"};

/// Per-leg phase offsets in units of T_c, ordered RF, RM, RR, LF, LM, LR.
struct GaitTable {
    std::string name;
    std::array<double, 6> offsets_frac{};  ///< each in [0, 1)

    [[nodiscard]] double offset_s(Leg leg, double T_c_s) const {
        return offsets_frac[static_cast<int>(leg)] * T_c_s;
    }
};

/// Turning radius v / w in metres; nullopt signals a straight line (w = 0).
[[nodiscard]] std::optional<double> turning_radius(double v_mps, double w_radps);

/// Differential-drive joint velocities {left, right} in rad/s:
/// w_side = (v -+ w d / 2) / (R_wheel N_t).
[[nodiscard]] std::pair<double, double> side_velocities(double v_mps, double w_radps,
                                                        const ChassisSpec& chassis);

/// RHex-mode clock trajectory, degrees, unwrapped (adds 360 per period).
/// theta(0) = theta_s; the slow band is traversed in exactly t_s and the
/// remaining 360 - (theta_f - theta_s) in T_c - t_s.
[[nodiscard]] double rhex_trajectory(const GaitParams& g, double t_s);

/// SWheg-mode clock trajectory: the S-leg is 180 deg symmetric, so
/// theta(t + T_c/2) = theta(t) + 180; each half period has a slow band of
/// width theta_f - theta_s traversed in t_s. Requires
/// theta_f - theta_s < 180 and t_s < T_c / 2.
[[nodiscard]] double swheg_trajectory(const GaitParams& g, double t_s);

/// Phase table for a named gait ("tripod" or "ripple"); throws UnknownGait.
[[nodiscard]] GaitTable gait_phases(std::string_view name);

/// Number of legs whose phase angle lies in the stance band [theta_s,
/// theta_f] at time t, evaluating rhex_trajectory(t + offset) mod 360.
[[nodiscard]] int stance_count(const GaitParams& g, const GaitTable& table, double t_s);

}  // namespace swheg
