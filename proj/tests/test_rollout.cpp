#include "swheg/rollout.hpp"

#include "oracles.hpp"
#include "swheg/errors.hpp"
#include "swheg/pro3_module.hpp"
#include "swheg/pro_module.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace swheg;

namespace {

Polyline open_tri_wheel(double opening, int samples = 64) {
    const auto spec = Pro3ModuleSpec::standard();
    const double x = spec.rod_min_mm + opening * (spec.rod_max_mm - spec.rod_min_mm);
    return wheel_profile(spec, x, samples);
}

// Linear interpolation of the wheel-centre path at progress s.
Vec2 center_at(const std::vector<PoseSample>& path, double s) {
    for (std::size_t i = 1; i < path.size(); ++i) {
        if (path[i].s_mm >= s) {
            const double width = path[i].s_mm - path[i - 1].s_mm;
            const double u = width > 0.0 ? (s - path[i - 1].s_mm) / width : 0.0;
            return path[i - 1].wheel_center_mm +
                   u * (path[i].wheel_center_mm - path[i - 1].wheel_center_mm);
        }
    }
    return path.back().wheel_center_mm;
}

}  // namespace

TEST_CASE("a round wheel keeps its centre height on flat ground") {
    const auto pro = ProModuleSpec::standard();
    const Polyline circle = pro_wheel_profile(pro, 512);
    const Staircase sc{Stair{300.0, 160.0}, 1, 4000.0, 200.0};
    RolloutConfig cfg;
    cfg.max_progress_mm = 2500.0;
    cfg.start_x_mm = 400.0;
    cfg.effective_radius_mm = pro.rim_radius_mm;
    const auto path = roll_wheel(circle, sc, cfg);
    REQUIRE(path.size() > 100);
    for (const auto& p : path) {
        CHECK(std::abs(p.wheel_center_mm.y() - pro.rim_radius_mm) <= cfg.contact_tol_mm);
    }
}

TEST_CASE("no slip: round-wheel centre travel equals radius times rotation") {
    const auto pro = ProModuleSpec::standard();
    const Polyline circle = pro_wheel_profile(pro, 512);
    // flat run plus a low staircase, so nose pivots are exercised too
    const Staircase sc{Stair{300.0, 80.0}, 4, 1500.0, 800.0};
    RolloutConfig cfg;
    cfg.max_progress_mm = 3500.0;
    cfg.start_x_mm = 400.0;
    cfg.effective_radius_mm = pro.rim_radius_mm;
    const auto path = roll_wheel(circle, sc, cfg);
    double travelled = 0.0;
    for (std::size_t i = 1; i < path.size(); ++i)
        travelled += (path[i].wheel_center_mm - path[i - 1].wheel_center_mm).norm();
    const double rolled = deg2rad(path.back().joint_angle_deg - path.front().joint_angle_deg) *
                          pro.rim_radius_mm;
    CHECK(std::abs(travelled / rolled - 1.0) < 0.01);
}

TEST_CASE("joint angle and progress advance monotonically") {
    const Polyline tri = open_tri_wheel(0.9);
    const Staircase sc{Stair{300.0, 160.0}, 6, 800.0, 600.0};
    RolloutConfig cfg;
    cfg.max_progress_mm = 5000.0;
    cfg.start_x_mm = 300.0;
    const auto path = roll_wheel(tri, sc, cfg);
    for (std::size_t i = 1; i < path.size(); ++i) {
        CHECK(path[i].joint_angle_deg >= path[i - 1].joint_angle_deg);
        CHECK(path[i].s_mm >= path[i - 1].s_mm);
    }
}

TEST_CASE("rollout never penetrates the terrain") {
    const Polyline tri = open_tri_wheel(0.9, 40);
    const Staircase sc{Stair{300.0, 160.0}, 5, 700.0, 600.0};
    RolloutConfig cfg;
    cfg.max_progress_mm = 4000.0;
    cfg.start_x_mm = 300.0;
    cfg.step_ds_mm = 5.0;
    const auto path = roll_wheel(tri, sc, cfg);
    const Polyline terrain = staircase_profile(sc);

    // replay each sampled pose and audit clearance with the oracle helpers
    for (const auto& p : path) {
        oracle::BruteState st;
        st.rotate_about(Vec2{0.0, 0.0}, deg2rad(p.joint_angle_deg));
        st.center = p.wheel_center_mm;
        const double clearance = oracle::signed_clearance(st.world(tri), terrain);
        CHECK(clearance >= -cfg.contact_tol_mm);
        CHECK(clearance <= cfg.contact_tol_mm);  // touching at every sample
    }
}

TEST_CASE("engine agrees with the dense-stepping oracle") {
    const Polyline terrain_sc =
        staircase_profile(Staircase{Stair{300.0, 160.0}, 2, 900.0, 900.0});

    SUBCASE("leg envelope on flat ground") {
        const Polyline leg = pro_leg_profile(ProModuleSpec::standard(), 24);
        const Staircase sc{Stair{300.0, 160.0}, 1, 3000.0, 100.0};
        RolloutConfig cfg;
        cfg.max_progress_mm = 900.0;
        cfg.start_x_mm = 500.0;
        cfg.effective_radius_mm = 100.0;
        const auto path = roll_wheel(leg, sc, cfg);

        const auto brute = oracle::brute_roll(leg, staircase_profile(sc), 500.0,
                                              900.0 / 100.0, 0.1);
        for (const auto& [roll, center] : brute) {
            const Vec2 engine = center_at(path, roll * 100.0);
            CHECK((engine - center).norm() < 0.5);
        }
    }

    SUBCASE("open wheel over two steps") {
        const Polyline tri = open_tri_wheel(0.9, 24);
        const Staircase sc{Stair{300.0, 160.0}, 2, 900.0, 900.0};
        RolloutConfig cfg;
        cfg.max_progress_mm = 1600.0;
        cfg.start_x_mm = 450.0;
        const double r_eff = mean_radius(tri);
        cfg.effective_radius_mm = r_eff;
        const auto path = roll_wheel(tri, sc, cfg);

        const auto brute = oracle::brute_roll(tri, terrain_sc, 450.0, 1600.0 / r_eff, 0.1);
        for (const auto& [roll, center] : brute) {
            const Vec2 engine = center_at(path, roll * r_eff);
            CHECK((engine - center).norm() < 0.5);
        }
    }
}

TEST_CASE("leg-mode envelope keeps the centre inside the expected band") {
    const auto pro = ProModuleSpec::standard();
    const Polyline leg = pro_leg_profile(pro, 96);
    const Staircase sc{Stair{300.0, 160.0}, 1, 6000.0, 100.0};
    RolloutConfig cfg;
    cfg.max_progress_mm = 3000.0;
    cfg.start_x_mm = 600.0;
    cfg.effective_radius_mm = pro.rim_radius_mm;
    const auto path = roll_wheel(leg, sc, cfg);
    double lo = 1e18, hi = -1e18;
    for (const auto& p : path) {
        if (p.s_mm < 700.0) continue;  // settle
        lo = std::min(lo, p.wheel_center_mm.y());
        hi = std::max(hi, p.wheel_center_mm.y());
    }
    CHECK(lo >= 98.0);
    CHECK(hi <= 143.0);
    CHECK(lo <= 102.0);   // the band floor is reached
    CHECK(hi >= 139.0);   // and so is the ceiling
}

TEST_CASE("steady climb repeats with the stair period") {
    const Polyline tri = open_tri_wheel(0.9);
    const Staircase sc{Stair{300.0, 160.0}, 24, 800.0, 800.0};
    RolloutConfig cfg;
    cfg.max_progress_mm = 28000.0;
    cfg.start_x_mm = 400.0;
    cfg.step_ds_mm = 0.5;
    const double r_eff = mean_radius(tri);
    cfg.effective_radius_mm = r_eff;
    const auto path = roll_wheel(tri, sc, cfg);

    // One step consumes one spoke, a third of a revolution. The lock is
    // reached geometrically; probe after the transient has died down.
    const double s_period = deg2rad(120.0) * r_eff;
    int checked = 0;
    for (const auto& p : path) {
        const double x = p.wheel_center_mm.x();
        if (x < sc.lead_in_mm + 16 * 300.0 || x > sc.lead_in_mm + 21 * 300.0) continue;
        const Vec2 next = center_at(path, p.s_mm + s_period);
        CHECK((next - p.wheel_center_mm - Vec2{300.0, 160.0}).norm() < cfg.contact_tol_mm);
        ++checked;
    }
    CHECK(checked > 1000);
}

TEST_CASE("a wedged wheel reports Stuck with its progress") {
    const Polyline tri = open_tri_wheel(1.0);
    const Polyline reversed(tri.rbegin(), tri.rend());
    const Staircase sc{Stair{300.0, 160.0}, 8, 800.0, 800.0};
    RolloutConfig cfg;
    cfg.max_progress_mm = 9000.0;
    cfg.start_x_mm = 400.0;
    try {
        (void)roll_wheel(reversed, sc, cfg);
        FAIL("expected Stuck");
    } catch (const Stuck& e) {
        CHECK(e.progress_mm() > 0.0);
        CHECK(std::isfinite(e.center_x_mm()));
        CHECK(std::isfinite(e.center_y_mm()));
    }
}

TEST_CASE("body rollout on flat ground is level") {
    const auto pro = ProModuleSpec::standard();
    const Polyline circle = pro_wheel_profile(pro, 512);
    const Staircase sc{Stair{300.0, 160.0}, 1, 5000.0, 100.0};
    RolloutConfig cfg;
    cfg.max_progress_mm = 3000.0;
    cfg.start_x_mm = 1500.0;
    cfg.effective_radius_mm = pro.rim_radius_mm;
    ChassisSpec chassis;
    chassis.wheelbase_m = 0.51;
    const auto body = body_rollout(chassis, circle, sc, cfg);
    REQUIRE(body.size() > 100);
    // the polygonised rim leaves a ~1e-3 deg ripple; an ideal circle is flat
    for (const auto& b : body) {
        CHECK(std::abs(b.pitch_deg) < 0.01);
        CHECK(std::abs(b.front_angle_deg - b.rear_angle_deg -
                       (body.front().front_angle_deg - body.front().rear_angle_deg)) < 1e-3);
    }
}

TEST_CASE("zero wheelbase is rejected") {
    CHECK_THROWS_AS((void)body_from_path({}, 0.0), BadParams);
    ChassisSpec chassis;
    chassis.wheelbase_m = 0.0;
    const Staircase sc{Stair{300.0, 160.0}, 1, 1000.0, 100.0};
    CHECK_THROWS_AS(
        (void)body_rollout(chassis, pro_wheel_profile(ProModuleSpec::standard(), 64), sc,
                           RolloutConfig{}),
        BadParams);
}

TEST_CASE("phase difference repeats once the climb is steady") {
    const Polyline tri = open_tri_wheel(0.9);
    const Staircase sc{Stair{300.0, 160.0}, 16, 800.0, 800.0};
    RolloutConfig cfg;
    cfg.max_progress_mm = 18000.0;
    cfg.start_x_mm = 400.0;
    const double r_eff = mean_radius(tri);
    cfg.effective_radius_mm = r_eff;
    const auto path = roll_wheel(tri, sc, cfg);
    const auto body = body_from_path(path, 510.0);
    REQUIRE(body.size() > 2000);

    const double s_period = deg2rad(120.0) * r_eff;
    // interpolate the phase series at s and s + one stair period
    const auto phase_at = [&](double s) {
        for (std::size_t i = 1; i < body.size(); ++i) {
            if (body[i].s_mm >= s) {
                const double w = body[i].s_mm - body[i - 1].s_mm;
                const double u = w > 0.0 ? (s - body[i - 1].s_mm) / w : 0.0;
                const double a = body[i - 1].front_angle_deg - body[i - 1].rear_angle_deg;
                const double b = body[i].front_angle_deg - body[i].rear_angle_deg;
                return a + u * (b - a);
            }
        }
        return body.back().front_angle_deg - body.back().rear_angle_deg;
    };
    int checked = 0;
    for (const auto& b : body) {
        const double x = b.body_center_mm.x();
        if (x < sc.lead_in_mm + 8 * 300.0 || x > sc.lead_in_mm + 12 * 300.0) continue;
        CHECK(std::abs(phase_at(b.s_mm + s_period) -
                       (b.front_angle_deg - b.rear_angle_deg)) < 0.5);
        ++checked;
    }
    CHECK(checked > 500);
}

TEST_CASE("trajectory RMSE of synthetic body paths") {
    const Staircase sc{Stair{300.0, 160.0}, 8, 500.0, 500.0};
    const double slope = 160.0 / 300.0;

    SUBCASE("points on the climb line have zero RMSE") {
        std::vector<BodySample> body;
        for (int i = 0; i <= 600; ++i) {
            const double x = 600.0 + i * 3.0;
            body.push_back({static_cast<double>(i), Vec2{x, slope * x + 40.0}, 0.0, 0.0, 0.0});
        }
        CHECK(trajectory_rmse(body, sc) < 1e-12);
    }

    SUBCASE("alternating perpendicular offsets of e give RMSE e") {
        const double e = 3.5;
        const double norm = std::sqrt(1.0 + slope * slope);
        // all samples inside the steady window and balanced in sign, so the
        // intercept fit cannot absorb any of the offset
        std::vector<BodySample> body;
        for (int i = 0; i < 600; ++i) {
            const double x = 810.0 + i * 2.9;
            const double off = (i % 2 == 0 ? e : -e) * norm;
            body.push_back({static_cast<double>(i), Vec2{x, slope * x + off}, 0.0, 0.0, 0.0});
        }
        CHECK(trajectory_rmse(body, sc) == doctest::Approx(e).epsilon(1e-9));
    }

    SUBCASE("too few steady periods throw") {
        std::vector<BodySample> body;
        for (int i = 0; i <= 100; ++i) {
            const double x = 800.0 + i * 2.0;  // covers well under 3 periods
            body.push_back({static_cast<double>(i), Vec2{x, slope * x}, 0.0, 0.0, 0.0});
        }
        CHECK_THROWS_AS((void)trajectory_rmse(body, sc), TooShort);
    }
}

TEST_CASE("a real climb has a positive finite RMSE") {
    const Polyline tri = open_tri_wheel(0.9);
    const Staircase sc{Stair{300.0, 160.0}, 10, 800.0, 800.0};
    RolloutConfig cfg;
    cfg.max_progress_mm = 12000.0;
    cfg.start_x_mm = 400.0;
    const auto body = body_from_path(roll_wheel(tri, sc, cfg), 510.0);
    const double rmse = trajectory_rmse(body, sc);
    CHECK(rmse > 0.0);
    CHECK(std::isfinite(rmse));
    CHECK(rmse < 100.0);
}

TEST_CASE("halving the sample spacing barely changes the RMSE") {
    const Polyline tri = open_tri_wheel(0.9);
    const Staircase sc{Stair{300.0, 160.0}, 10, 800.0, 800.0};
    RolloutConfig cfg;
    cfg.max_progress_mm = 12000.0;
    cfg.start_x_mm = 400.0;
    cfg.step_ds_mm = 2.0;
    const double coarse = trajectory_rmse(body_from_path(roll_wheel(tri, sc, cfg), 510.0), sc);
    cfg.step_ds_mm = 1.0;
    const double fine = trajectory_rmse(body_from_path(roll_wheel(tri, sc, cfg), 510.0), sc);
    CHECK(std::abs(fine - coarse) / fine < 0.02);
}

TEST_CASE("wheelbase sweep validates its arguments and brackets the optimum") {
    const Polyline tri = open_tri_wheel(0.9);
    const Staircase sc{Stair{300.0, 160.0}, 14, 800.0, 800.0};
    RolloutConfig cfg;
    cfg.max_progress_mm = 16000.0;
    cfg.start_x_mm = 400.0;
    ChassisSpec chassis;

    CHECK_THROWS_AS(
        (void)optimize_wheelbase(chassis, tri, sc, {400.0, 600.0}, 5, cfg), BadParams);
    CHECK_THROWS_AS(
        (void)optimize_wheelbase(chassis, tri, sc, {600.0, 400.0}, 12, cfg), BadParams);

    const auto res = optimize_wheelbase(chassis, tri, sc, {420.0, 620.0}, 11, cfg);
    REQUIRE(res.sweep.size() == 11);
    CHECK(res.rmse_mm <= res.sweep.front().rmse_mm);
    CHECK(res.rmse_mm <= res.sweep.back().rmse_mm);
    CHECK(res.wheelbase_mm > 420.0);
    CHECK(res.wheelbase_mm < 620.0);
}

TEST_CASE("sweep with no viable candidate reports AllStuck") {
    const Polyline tri = open_tri_wheel(0.9);
    // four steps can never cover three steady periods, so every candidate
    // fails the RMSE precondition
    const Staircase sc{Stair{300.0, 160.0}, 4, 800.0, 800.0};
    RolloutConfig cfg;
    cfg.max_progress_mm = 6000.0;
    cfg.start_x_mm = 400.0;
    CHECK_THROWS_AS(
        (void)optimize_wheelbase(ChassisSpec{}, tri, sc, {420.0, 620.0}, 10, cfg), AllStuck);
}
