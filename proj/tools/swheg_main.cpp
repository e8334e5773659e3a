// Command-line front end for the wheel-leg design toolkit.

#include "swheg/config.hpp"
#include "swheg/errors.hpp"
#include "swheg/gait.hpp"
#include "swheg/io.hpp"
#include "swheg/metrics.hpp"
#include "swheg/pro3_module.hpp"
#include "swheg/pro_module.hpp"
#include "swheg/rollout.hpp"
#include "swheg/stairs.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace swheg;

namespace {

struct GlobalOpts {
    std::string spec_path;
    std::string out_dir = ".";
    bool plot = false;
    std::string preset;
    double stair_length = 0.0;
    double stair_height = 0.0;

    std::string command_line;
    RobotConfig robot;
    std::vector<std::string> digests;

    void finalize() {
        if (!spec_path.empty()) {
            robot = load_robot_config(spec_path);
            digests.push_back(fs::path(spec_path).filename().string() + "=fnv1a:" +
                              file_digest(spec_path));
        } else {
            robot = RobotConfig::defaults();
        }
        fs::create_directories(out_dir);
    }

    [[nodiscard]] Stair stair() const {
        const bool have_preset = !preset.empty();
        const bool have_dims = stair_length > 0.0 || stair_height > 0.0;
        if (have_preset && have_dims)
            throw ConfigError("give either --preset or explicit stair dimensions, not both");
        if (have_preset) {
            const auto s = stair_preset(preset);
            if (!s) throw ConfigError("unknown stair preset '" + preset + "'");
            return *s;
        }
        if (stair_length > 0.0 && stair_height > 0.0)
            return Stair{stair_length, stair_height};
        throw ConfigError("no stair given: use --preset or --stair-length and --stair-height");
    }

    [[nodiscard]] std::string provenance() const {
        return provenance_line(command_line, digests);
    }

    void write_json(const std::string& filename, ordered_json j) const {
        ordered_json out;
        out["_provenance"] = provenance();
        for (auto& [k, v] : j.items()) out[k] = v;
        std::ofstream f(fs::path(out_dir) / filename);
        if (!f) throw ConfigError("cannot write " + filename);
        f << out.dump(2) << "\n";
        std::cout << out.dump(2) << "\n";
    }
};

Polyline make_wheel(const GlobalOpts& g, const std::string& kind, double opening,
                    std::optional<double> pushrod_x, int samples) {
    if (kind == "circle") return pro_wheel_profile(g.robot.pro, std::max(64, samples * 3));
    if (kind == "pro-leg") return pro_leg_profile(g.robot.pro, std::max(32, samples));
    if (kind == "pro3") {
        const auto& spec = g.robot.pro3;
        const double x = pushrod_x
                             ? *pushrod_x
                             : spec.rod_min_mm + opening * (spec.rod_max_mm - spec.rod_min_mm);
        return wheel_profile(spec, x, samples);
    }
    throw ConfigError("unknown wheel kind '" + kind + "' (circle, pro-leg, pro3)");
}

void plot_path(const GlobalOpts& g, const Staircase& sc,
               const std::vector<BodySample>& body, const std::string& filename) {
    SvgPlot plot(900, 500);
    plot.add_polyline(staircase_profile(sc), "#444444", 1.5);
    Polyline centers;
    for (const auto& b : body) centers.push_back(b.body_center_mm);
    plot.add_polyline(centers, "#c02020", 1.0);
    plot.write(fs::path(g.out_dir) / filename, g.provenance());
}

int cmd_solve_pushrod(const GlobalOpts& g) {
    const Stair stair = g.stair();
    const auto& spec = g.robot.pro3;
    const double t_aim = required_span(stair, spec);
    const double x = solve_pushrod(spec, stair);
    const double t_of_x = pro3_span(spec, x);
    g.write_json("solve_pushrod.json", {{"x_mm", x},
                                        {"T_aim_mm", t_aim},
                                        {"T_of_x_mm", t_of_x},
                                        {"residual_mm", t_of_x - t_aim}});
    return 0;
}

int cmd_pro_angle(const GlobalOpts& g, double rod_len, double theta, bool have_rod,
                  bool have_theta) {
    const auto& spec = g.robot.pro;
    if (have_rod == have_theta)
        throw ConfigError("give exactly one of --rod-len or --theta");
    double rod = rod_len;
    if (have_theta) rod = pro_rod_for_angle(spec, theta);
    const Vec2 hinge = solve_pro_hinge(spec, rod);
    g.write_json("pro_angle.json", {{"rod_len_mm", rod},
                                    {"theta_deg", pro_opening_angle(spec, rod)},
                                    {"hinge_mm", {hinge.x(), hinge.y()}}});
    return 0;
}

int cmd_pro3_span(const GlobalOpts& g, double x) {
    const ChainState c = pro3_chain(g.robot.pro3, x);
    g.write_json("pro3_span.json", {{"x_mm", x},
                                    {"T_mm", c.T_mm},
                                    {"chain",
                                     {{"alpha1_deg", c.alpha1_deg},
                                      {"alpha2_deg", c.alpha2_deg},
                                      {"alpha3_deg", c.alpha3_deg},
                                      {"alpha4_deg", c.alpha4_deg},
                                      {"alpha5_deg", c.alpha5_deg},
                                      {"alpha6_deg", c.alpha6_deg},
                                      {"L4_mm", c.L4_mm},
                                      {"L5_mm", c.L5_mm},
                                      {"L0_mm", c.L0_mm}}}});
    return 0;
}

int cmd_classify_stair(const GlobalOpts& g) {
    const Stair stair = g.stair();
    g.write_json("classify_stair.json", {{"length_mm", stair.length_mm},
                                         {"height_mm", stair.height_mm},
                                         {"class", to_string(classify(stair))},
                                         {"slope_deg", slope_deg(stair)}});
    return 0;
}

struct RollOpts {
    int steps = 12;
    double lead_in = 800.0;
    double lead_out = 800.0;
    std::string wheel = "pro3";
    double opening = 0.9;
    std::optional<double> pushrod_x;
    int samples = 64;
    double wheelbase_mm = 510.0;
    double step_ds = 1.0;
    double max_progress = 0.0;
};

RolloutConfig make_rollout_cfg(const Staircase& sc, const RollOpts& r) {
    RolloutConfig cfg;
    cfg.step_ds_mm = r.step_ds;
    const double extent = sc.lead_in_mm + sc.n_steps * sc.step.length_mm + sc.lead_out_mm;
    cfg.max_progress_mm = r.max_progress > 0.0 ? r.max_progress : 3.0 * extent;
    return cfg;
}

int cmd_roll(const GlobalOpts& g, const RollOpts& r) {
    const Staircase sc{g.stair(), r.steps, r.lead_in, r.lead_out};
    const Polyline wheel = make_wheel(g, r.wheel, r.opening, r.pushrod_x, r.samples);
    const RolloutConfig cfg = make_rollout_cfg(sc, r);
    const auto path = roll_wheel(wheel, sc, cfg);
    const auto body = body_from_path(path, r.wheelbase_mm);

    std::ofstream csv(fs::path(g.out_dir) / "roll.csv");
    if (!csv) throw ConfigError("cannot write roll.csv");
    csv << "# " << g.provenance() << "\n";
    csv << "s,x,y,pitch_deg,phase_deg\n";
    for (const auto& b : body) {
        csv << fmt::format("{:.6f},{:.6f},{:.6f},{:.6f},{:.6f}\n", b.s_mm,
                           b.body_center_mm.x(), b.body_center_mm.y(), b.pitch_deg,
                           b.front_angle_deg - b.rear_angle_deg);
    }
    std::cout << fmt::format("roll: {} body samples -> {}/roll.csv\n", body.size(), g.out_dir);
    if (g.plot) plot_path(g, sc, body, "roll.svg");
    return 0;
}

int cmd_optimize_wheelbase(const GlobalOpts& g, const RollOpts& r, double wb_min, double wb_max,
                           int grid) {
    const Staircase sc{g.stair(), r.steps, r.lead_in, r.lead_out};
    const Polyline wheel = make_wheel(g, r.wheel, r.opening, r.pushrod_x, r.samples);
    const RolloutConfig cfg = make_rollout_cfg(sc, r);
    const auto res = optimize_wheelbase(g.robot.chassis, wheel, sc, {wb_min, wb_max}, grid, cfg);

    std::ofstream csv(fs::path(g.out_dir) / "wheelbase_sweep.csv");
    if (!csv) throw ConfigError("cannot write wheelbase_sweep.csv");
    csv << "# " << g.provenance() << "\n";
    csv << "wheelbase_mm,rmse_mm,ok\n";
    for (const auto& row : res.sweep)
        csv << fmt::format("{:.6f},{:.6f},{}\n", row.wheelbase_mm, row.rmse_mm,
                           row.ok ? 1 : 0);

    g.write_json("wheelbase_optimum.json",
                 {{"wheelbase_mm", res.wheelbase_mm}, {"rmse_mm", res.rmse_mm}});
    if (g.plot) {
        SvgPlot plot(700, 450);
        Polyline curve;
        for (const auto& row : res.sweep)
            if (row.ok) curve.emplace_back(row.wheelbase_mm, row.rmse_mm);
        plot.add_polyline(curve, "#2040c0", 1.5);
        plot.write(fs::path(g.out_dir) / "wheelbase_rmse.svg", g.provenance());
    }
    return 0;
}

int cmd_gait_trace(const GlobalOpts& g, const std::string& gait, const std::string& mode,
                   GaitParams params, double rate, double periods) {
    if (rate <= 0.0 || periods <= 0.0)
        throw ConfigError("--rate and --periods must be positive");
    params.mode = mode == "swheg" ? GaitMode::SWheg : GaitMode::RHex;
    if (mode != "rhex" && mode != "swheg")
        throw ConfigError("unknown mode '" + mode + "' (rhex, swheg)");
    const GaitTable table = gait_phases(gait);
    params.validate();
    if (params.mode == GaitMode::SWheg) (void)swheg_trajectory(params, 0.0);  // parameter check

    std::ofstream csv(fs::path(g.out_dir) / "gait_trace.csv");
    if (!csv) throw ConfigError("cannot write gait_trace.csv");
    csv << "# " << g.provenance() << "\n";
    csv << "t,leg,angle_deg\n";
    const long n = std::lround(periods * params.T_c_s * rate);
    for (long i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / rate;
        for (int leg = 0; leg < 6; ++leg) {
            const double shifted = t + table.offsets_frac[leg] * params.T_c_s;
            const double angle = params.mode == GaitMode::SWheg
                                     ? swheg_trajectory(params, shifted)
                                     : rhex_trajectory(params, shifted);
            csv << fmt::format("{:.6f},{},{:.6f}\n", t, kLegNames[leg], angle);
        }
    }
    std::cout << fmt::format("gait-trace: {} rows -> {}/gait_trace.csv\n", n * 6, g.out_dir);
    return 0;
}

int cmd_metrics(GlobalOpts& g, const std::string& telemetry, double period, double win_from,
                double win_to) {
    const TelemetryLog log = parse_telemetry(fs::path(telemetry));
    g.digests.push_back(fs::path(telemetry).filename().string() + "=fnv1a:" +
                        file_digest(telemetry));
    const Stair stair = g.stair();

    const double t0 = log.samples.front().t_s;
    const double t1 = log.samples.back().t_s;
    std::pair<double, double> window{t0, t1};
    if (win_from < win_to) {
        window = {win_from, win_to};
    } else if (period > 0.0) {
        window = {t0 + period, t1 - period};  // trim the first and last cycle
    }

    ordered_json j;
    j["mean_deviation_deg"] = mean_deviation(log, stair, window);
    if (period > 0.0) {
        const auto [gap, n] = mean_peak_gap(log, period, window);
        j["mean_peak_gap_deg"] = gap;
        j["n_cycles"] = n;
    } else {
        j["mean_peak_gap_deg"] = nullptr;
        j["n_cycles"] = nullptr;
    }
    if (log.has_power() && log.has_velocity()) {
        double p_sum = 0.0, v_sum = 0.0;
        std::size_t n = 0;
        for (std::size_t i = 0; i < log.samples.size(); ++i) {
            const double t = log.samples[i].t_s;
            if (t < window.first || t > window.second) continue;
            p_sum += log.power_w[i];
            v_sum += log.velocity_mps[i];
            ++n;
        }
        if (n > 0 && v_sum > 0.0) {
            j["specific_resistance"] =
                specific_resistance(p_sum / n, g.robot.chassis.mass_kg, v_sum / n);
        } else {
            j["specific_resistance"] = nullptr;
        }
    } else {
        j["specific_resistance"] = nullptr;
    }
    j["window_s"] = {window.first, window.second};
    g.write_json("metrics.json", j);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Design and analysis toolkit for wheel-leg transformable robots"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    for (int i = 0; i < argc; ++i) {
        if (i) g.command_line += " ";
        g.command_line += argv[i];
    }
    app.add_option("--spec", g.spec_path, "robot config JSON");
    app.add_option("--out", g.out_dir, "output directory");
    app.add_flag("--plot", g.plot, "emit SVG plots");
    app.add_option("--preset", g.preset, "stair preset (A1, A2, B1, C1, C2)");
    app.add_option("--stair-length", g.stair_length, "tread depth L (mm)");
    app.add_option("--stair-height", g.stair_height, "riser height H (mm)");

    auto* solve = app.add_subcommand("solve-pushrod", "push-rod extension for a stair");

    auto* pro_angle = app.add_subcommand("pro-angle", "rim opening angle <-> rod length");
    double rod_len = 0.0, theta = 0.0;
    auto* rod_opt = pro_angle->add_option("--rod-len", rod_len, "push-rod length (mm)");
    auto* theta_opt = pro_angle->add_option("--theta", theta, "opening angle (deg)");

    auto* span = app.add_subcommand("pro3-span", "spoke-tip span for an extension");
    double span_x = 0.0;
    span->add_option("--pushrod-x", span_x, "extension (mm)")->required();

    auto* classify_cmd = app.add_subcommand("classify-stair", "stair class and slope");

    RollOpts r;
    double pushrod_x_val = 0.0;
    const auto add_roll_opts = [&](CLI::App* cmd) -> CLI::Option* {
        cmd->add_option("--steps", r.steps, "number of stair steps");
        cmd->add_option("--lead-in", r.lead_in, "flat ground before the stair (mm)");
        cmd->add_option("--lead-out", r.lead_out, "flat ground after the stair (mm)");
        cmd->add_option("--wheel", r.wheel, "wheel outline: pro3, pro-leg, circle");
        cmd->add_option("--opening", r.opening, "pro3 opening fraction in [0, 1]");
        auto* px = cmd->add_option("--pushrod-x", pushrod_x_val, "explicit pro3 extension (mm)");
        cmd->add_option("--samples", r.samples, "profile samples per spoke");
        cmd->add_option("--step-ds", r.step_ds, "progress sample spacing (mm)");
        cmd->add_option("--max-progress", r.max_progress, "progress limit (mm)");
        return px;
    };

    auto* roll = app.add_subcommand("roll", "roll the wheel over a staircase");
    auto* px_roll = add_roll_opts(roll);
    roll->add_option("--wheelbase-mm", r.wheelbase_mm, "wheelbase for the body pass (mm)");

    auto* opt = app.add_subcommand("optimize-wheelbase", "sweep wheelbase against RMSE");
    auto* px_opt = add_roll_opts(opt);
    double wb_min = 350.0, wb_max = 700.0;
    int grid = 36;
    opt->add_option("--wb-min", wb_min, "sweep lower bound (mm)");
    opt->add_option("--wb-max", wb_max, "sweep upper bound (mm)");
    opt->add_option("--grid", grid, "sweep grid points (>= 10)");

    auto* gait = app.add_subcommand("gait-trace", "clock-driven per-leg joint trace");
    std::string gait_name = "tripod", gait_mode = "rhex";
    GaitParams params{0.0, 180.0, 0.5, 1.0, GaitMode::RHex};
    double rate = 100.0, periods = 2.0;
    gait->add_option("--gait", gait_name, "tripod or ripple");
    gait->add_option("--mode", gait_mode, "rhex or swheg");
    gait->add_option("--theta-s", params.theta_s_deg, "stance start angle (deg)");
    gait->add_option("--theta-f", params.theta_f_deg, "stance end angle (deg)");
    gait->add_option("--t-s", params.t_s_s, "stance time (s)");
    gait->add_option("--t-c", params.T_c_s, "cycle period (s)");
    gait->add_option("--rate", rate, "sample rate (Hz)");
    gait->add_option("--periods", periods, "number of periods");

    auto* metrics_cmd = app.add_subcommand("metrics", "stability metrics from telemetry CSV");
    std::string telemetry;
    double period = 0.0, win_from = 0.0, win_to = 0.0;
    metrics_cmd->add_option("--telemetry", telemetry, "telemetry CSV path")->required();
    metrics_cmd->add_option("--period", period, "gait cycle period (s)");
    metrics_cmd->add_option("--window-from", win_from, "analysis window start (s)");
    metrics_cmd->add_option("--window-to", win_to, "analysis window end (s)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return static_cast<int>(ExitCode::config);
    }

    if (px_roll->count() > 0 || px_opt->count() > 0) r.pushrod_x = pushrod_x_val;

    try {
        g.finalize();
        if (solve->parsed()) return cmd_solve_pushrod(g);
        if (pro_angle->parsed())
            return cmd_pro_angle(g, rod_len, theta, rod_opt->count() > 0,
                                 theta_opt->count() > 0);
        if (span->parsed()) return cmd_pro3_span(g, span_x);
        if (classify_cmd->parsed()) return cmd_classify_stair(g);
        if (roll->parsed()) return cmd_roll(g, r);
        if (opt->parsed()) return cmd_optimize_wheelbase(g, r, wb_min, wb_max, grid);
        if (gait->parsed())
            return cmd_gait_trace(g, gait_name, gait_mode, params, rate, periods);
        if (metrics_cmd->parsed()) return cmd_metrics(g, telemetry, period, win_from, win_to);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
