#include "swheg/config.hpp"

#include "swheg/errors.hpp"

#include <json.hpp>

#include <fmt/format.h>
#include <fstream>

namespace swheg {

namespace {

using nlohmann::json;

void get(const json& j, const char* key, double& out) {
    if (auto it = j.find(key); it != j.end()) out = it->get<double>();
}

void get(const json& j, const char* key, int& out) {
    if (auto it = j.find(key); it != j.end()) out = it->get<int>();
}

}  // namespace

RobotConfig RobotConfig::defaults() {
    return RobotConfig{ProModuleSpec::standard(), Pro3ModuleSpec::standard(), ChassisSpec{}};
}

RobotConfig load_robot_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(fmt::format("cannot open robot config '{}'", path.string()));
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError(fmt::format("robot config '{}': {}", path.string(), e.what()));
    }

    RobotConfig cfg = RobotConfig::defaults();
    if (auto it = j.find("pro"); it != j.end()) {
        const json& p = *it;
        double hinge = cfg.pro.hinge_radius_mm;
        Vec2 anchor = cfg.pro.rod_anchor_mm;
        double rim = cfg.pro.rim_radius_mm;
        get(p, "hinge_radius_mm", hinge);
        if (auto a = p.find("rod_anchor_mm"); a != p.end()) {
            if (!a->is_array() || a->size() != 2)
                throw ConfigError("pro.rod_anchor_mm must be [x, y]");
            anchor = Vec2{(*a)[0].get<double>(), (*a)[1].get<double>()};
        }
        get(p, "rim_radius_mm", rim);
        cfg.pro = ProModuleSpec::calibrated(hinge, anchor, rim);
        get(p, "theta_fix_deg", cfg.pro.theta_fix_deg);
        get(p, "rod_min_mm", cfg.pro.rod_min_mm);
        get(p, "rod_max_mm", cfg.pro.rod_max_mm);
    }
    if (auto it = j.find("pro3"); it != j.end()) {
        const json& p = *it;
        Pro3ModuleSpec s = cfg.pro3;
        get(p, "theta0_deg", s.theta0_deg);
        get(p, "theta1_deg", s.theta1_deg);
        get(p, "theta2_deg", s.theta2_deg);
        get(p, "theta3_deg", s.theta3_deg);
        get(p, "theta4_deg", s.theta4_deg);
        get(p, "r1_mm", s.r1_mm);
        get(p, "r2_mm", s.r2_mm);
        get(p, "l_mm", s.l_mm);
        get(p, "L1_mm", s.L1_mm);
        get(p, "L2_mm", s.L2_mm);
        get(p, "L3_mm", s.L3_mm);
        get(p, "L_arc_mm", s.L_arc_mm);
        get(p, "rod_base_mm", s.rod_base_mm);
        get(p, "rim_radius_mm", s.rim_radius_mm);
        get(p, "max_radius_mm", s.max_radius_mm);
        s = Pro3ModuleSpec::with_derived_stroke(s);
        get(p, "rod_min_mm", s.rod_min_mm);
        get(p, "rod_max_mm", s.rod_max_mm);
        cfg.pro3 = s;
    }
    if (auto it = j.find("chassis"); it != j.end()) {
        const json& c = *it;
        get(c, "width_m", cfg.chassis.width_m);
        get(c, "wheel_radius_m", cfg.chassis.wheel_radius_m);
        get(c, "reduction", cfg.chassis.reduction);
        get(c, "wheel_count", cfg.chassis.wheel_count);
        get(c, "mass_kg", cfg.chassis.mass_kg);
        get(c, "actuator_force_n", cfg.chassis.actuator_force_n);
        get(c, "wheelbase_m", cfg.chassis.wheelbase_m);
        if (!cfg.chassis.valid()) throw ConfigError("invalid chassis block");
    }
    return cfg;
}

}  // namespace swheg
