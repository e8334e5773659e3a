#include "swheg/gait.hpp"

#include "swheg/errors.hpp"

#include <cmath>
#include <fmt/format.h>

namespace swheg {

void GaitParams::validate() const {
    if (!(theta_s_deg >= 0.0 && theta_s_deg < theta_f_deg && theta_f_deg < 360.0)) {
        throw BadParams(fmt::format("need 0 <= theta_s < theta_f < 360 (got {}, {})",
                                    theta_s_deg, theta_f_deg));
    }
    if (!(t_s_s > 0.0 && t_s_s < T_c_s)) {
        throw BadParams(fmt::format("need 0 < t_s < T_c (got {}, {})", t_s_s, T_c_s));
    }
}

std::optional<double> turning_radius(double v_mps, double w_radps) {
    if (w_radps == 0.0) return std::nullopt;
    return v_mps / w_radps;
}

std::pair<double, double> side_velocities(double v_mps, double w_radps,
                                          const ChassisSpec& chassis) {
    if (!chassis.valid()) throw BadParams("invalid chassis spec");
    const double denom = chassis.wheel_radius_m * chassis.reduction;
    const double half = w_radps * chassis.width_m / 2.0;
    return {(v_mps - half) / denom, (v_mps + half) / denom};
}

double rhex_trajectory(const GaitParams& g, double t) {
    g.validate();
    const double k = std::floor(t / g.T_c_s);
    const double tau = t - k * g.T_c_s;
    const double slow_band = g.theta_f_deg - g.theta_s_deg;
    double theta;
    if (tau <= g.t_s_s) {
        theta = g.theta_s_deg + slow_band * tau / g.t_s_s;
    } else {
        theta = g.theta_f_deg + (360.0 - slow_band) * (tau - g.t_s_s) / (g.T_c_s - g.t_s_s);
    }
    return theta + 360.0 * k;
}

double swheg_trajectory(const GaitParams& g, double t) {
    g.validate();
    const double slow_band = g.theta_f_deg - g.theta_s_deg;
    if (slow_band >= 180.0) {
        throw BadParams(fmt::format("SWheg mode needs theta_f - theta_s < 180 (got {})",
                                    slow_band));
    }
    const double half = g.T_c_s / 2.0;
    if (g.t_s_s >= half) {
        throw BadParams(fmt::format("SWheg mode needs t_s < T_c/2 (got t_s={}, T_c={})",
                                    g.t_s_s, g.T_c_s));
    }
    const double k = std::floor(t / half);
    const double tau = t - k * half;
    double theta;
    if (tau <= g.t_s_s) {
        theta = g.theta_s_deg + slow_band * tau / g.t_s_s;
    } else {
        theta = g.theta_f_deg + (180.0 - slow_band) * (tau - g.t_s_s) / (half - g.t_s_s);
    }
    return theta + 180.0 * k;
}

GaitTable gait_phases(std::string_view name) {
    if (name == "tripod") {
        return GaitTable{"tripod", {0.0, 0.5, 0.0, 0.5, 0.0, 0.5}};
    }
    if (name == "ripple") {
        return GaitTable{"ripple",
                         {0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0 / 6.0, 0.5, 5.0 / 6.0}};
    }
    throw UnknownGait(fmt::format("unknown gait '{}' (expected tripod or ripple)", name));
}

int stance_count(const GaitParams& g, const GaitTable& table, double t) {
    int count = 0;
    for (int leg = 0; leg < 6; ++leg) {
        const double phase = rhex_trajectory(g, t + table.offsets_frac[leg] * g.T_c_s);
        double wrapped = std::fmod(phase, 360.0);
        if (wrapped < 0.0) wrapped += 360.0;
        if (wrapped >= g.theta_s_deg && wrapped <= g.theta_f_deg) ++count;
    }
    return count;
}

}  // namespace swheg
