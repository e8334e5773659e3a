#include "swheg/config.hpp"

#include "swheg/errors.hpp"
#include "swheg/pro_module.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace swheg;
namespace fs = std::filesystem;

namespace {

struct TempFile {
    fs::path path;
    explicit TempFile(const std::string& contents) {
        path = fs::temp_directory_path() /
               ("swheg_cfg_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter++) + ".json");
        std::ofstream(path) << contents;
    }
    ~TempFile() { std::error_code ec; fs::remove(path, ec); }
    static inline int counter = 0;
};

}  // namespace

TEST_CASE("defaults carry the stock modules") {
    const RobotConfig cfg = RobotConfig::defaults();
    CHECK(cfg.pro.hinge_radius_mm == 55.0);
    CHECK(cfg.pro.rod_anchor_mm == Vec2{98.4, -21.5});
    CHECK(std::abs(pro_opening_angle(cfg.pro, cfg.pro.rod_min_mm)) < 1e-9);
    CHECK(cfg.pro3.rod_max_mm > 78.0);
    CHECK(cfg.pro3.rod_max_mm < 79.0);
    CHECK(cfg.chassis.mass_kg == 10.08);
    CHECK(cfg.chassis.wheel_count == 6);
}

TEST_CASE("partial overrides keep the remaining defaults") {
    TempFile f(R"({
      "chassis": {"mass_kg": 17.65, "wheel_count": 4, "wheelbase_m": 0.51},
      "pro3": {"L_arc_mm": 250.0}
    })");
    const RobotConfig cfg = load_robot_config(f.path);
    CHECK(cfg.chassis.mass_kg == 17.65);
    CHECK(cfg.chassis.wheel_count == 4);
    CHECK(cfg.chassis.width_m == 0.33);
    CHECK(cfg.pro3.L_arc_mm == 250.0);
    CHECK(cfg.pro3.r1_mm == 114.0);
    CHECK(cfg.pro3.rod_max_mm > 78.0);  // stroke re-derived
}

TEST_CASE("explicit stroke overrides are honoured") {
    TempFile f(R"({"pro": {"rod_min_mm": 50.0, "rod_max_mm": 110.0, "theta_fix_deg": 20.0}})");
    const RobotConfig cfg = load_robot_config(f.path);
    CHECK(cfg.pro.rod_min_mm == 50.0);
    CHECK(cfg.pro.rod_max_mm == 110.0);
    CHECK(cfg.pro.theta_fix_deg == 20.0);
}

TEST_CASE("bad configs are rejected") {
    CHECK_THROWS_AS((void)load_robot_config("/nonexistent/robot.json"), ConfigError);
    TempFile broken("{not json");
    CHECK_THROWS_AS((void)load_robot_config(broken.path), ConfigError);
    TempFile bad_chassis(R"({"chassis": {"wheel_count": 5}})");
    CHECK_THROWS_AS((void)load_robot_config(bad_chassis.path), ConfigError);
    TempFile bad_anchor(R"({"pro": {"rod_anchor_mm": [1.0]}})");
    CHECK_THROWS_AS((void)load_robot_config(bad_anchor.path), ConfigError);
}
