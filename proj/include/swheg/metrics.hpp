#pragma once

#include "swheg/stairs.hpp"

#include <filesystem>
#include <iosfwd>
#include <utility>
#include <vector>

namespace swheg {

inline constexpr double kGravity = 9.81;  // m/s^2

/// One timestamped attitude sample, ZYX Euler angles in degrees.
struct ImuSample {
    double t_s = 0.0;
    double roll_deg = 0.0;
    double pitch_deg = 0.0;
    double yaw_deg = 0.0;
};

/// Telemetry ingested from CSV. Power/velocity series, when present, are
/// aligned 1:1 with the attitude samples.
struct TelemetryLog {
    std::vector<ImuSample> samples;
    std::vector<double> power_w;       // empty unless the log carries power
    std::vector<double> velocity_mps;  // empty unless the log carries velocity

    [[nodiscard]] bool has_power() const noexcept { return !power_w.empty(); }
    [[nodiscard]] bool has_velocity() const noexcept { return !velocity_mps.empty(); }
};

/// Aggregate stability numbers over an analysis window.
struct StabilityReport {
    double mean_deviation_deg = 0.0;
    double mean_peak_gap_deg = 0.0;
    int n_cycles = 0;
    std::pair<double, double> window_s{0.0, 0.0};
};

/// Attitude cost J = sqrt(roll^2 + pitch^2 + yaw^2), degrees.
[[nodiscard]] double cost_j(double roll_deg, double pitch_deg, double yaw_deg);

/// Mean of (J_i - S) over samples inside [window.first, window.second],
/// S being the stair slope. Throws EmptyWindow when no sample falls inside.
[[nodiscard]] double mean_deviation(const TelemetryLog& log, const Stair& stair,
                                    std::pair<double, double> window_s);

/// Splits the window into consecutive cycle_period segments and averages the
/// per-segment max J - min J. Returns {mean gap, segment count}. Throws
/// TooShort when the window spans less than one period.
[[nodiscard]] std::pair<double, int> mean_peak_gap(const TelemetryLog& log,
                                                   double cycle_period_s,
                                                   std::pair<double, double> window_s);

/// Specific resistance P / (M g v); dimensionless transport cost.
[[nodiscard]] double specific_resistance(double power_w, double mass_kg, double velocity_mps);

/// Theoretical maximum load N F / g - M in kg. A negative value is returned
/// as-is with the overloaded flag set.
struct MaxLoad {
    double load_kg = 0.0;
    bool overloaded = false;
};

[[nodiscard]] MaxLoad max_load(int actuator_count, double force_n, double robot_mass_kg);

/// Read a telemetry CSV. Header forms:
///   t,roll,pitch,yaw[,power,velocity]
///   t,pitch[,power,velocity]            (pitch-only; roll/yaw zero-filled)
/// '#' lines and blank lines are skipped; timestamps must strictly increase.
[[nodiscard]] TelemetryLog parse_telemetry(const std::filesystem::path& path);
[[nodiscard]] TelemetryLog parse_telemetry(std::istream& in, const std::string& name);

}  // namespace swheg
