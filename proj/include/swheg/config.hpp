#pragma once

#include "swheg/gait.hpp"
#include "swheg/pro3_module.hpp"
#include "swheg/pro_module.hpp"

#include <filesystem>

namespace swheg {

/// Bundle of the three robot parameter blocks. Defaults are the stock
/// modules; a JSON config file may override any subset of fields.
struct RobotConfig {
    ProModuleSpec pro;
    Pro3ModuleSpec pro3;
    ChassisSpec chassis;

    [[nodiscard]] static RobotConfig defaults();
};

/// Load a robot config JSON file. Recognised blocks: "pro", "pro3",
/// "chassis"; every key optional (see README for the key list; lengths in mm
/// for the module blocks, SI units for the chassis). Derived stroke bounds
/// and theta_fix are recomputed unless explicitly given.
[[nodiscard]] RobotConfig load_robot_config(const std::filesystem::path& path);

}  // namespace swheg
