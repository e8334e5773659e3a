#include "swheg/metrics.hpp"

#include "swheg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

namespace swheg {

double cost_j(double roll_deg, double pitch_deg, double yaw_deg) {
    return std::sqrt(roll_deg * roll_deg + pitch_deg * pitch_deg + yaw_deg * yaw_deg);
}

double mean_deviation(const TelemetryLog& log, const Stair& stair,
                      std::pair<double, double> window_s) {
    const double slope = slope_deg(stair);
    double sum = 0.0;
    std::size_t count = 0;
    for (const ImuSample& s : log.samples) {
        if (s.t_s < window_s.first || s.t_s > window_s.second) continue;
        sum += cost_j(s.roll_deg, s.pitch_deg, s.yaw_deg) - slope;
        ++count;
    }
    if (count == 0) {
        throw EmptyWindow(fmt::format("no telemetry samples in window [{}, {}] s",
                                      window_s.first, window_s.second));
    }
    return sum / static_cast<double>(count);
}

std::pair<double, int> mean_peak_gap(const TelemetryLog& log, double cycle_period_s,
                                     std::pair<double, double> window_s) {
    if (cycle_period_s <= 0.0) throw BadInput("cycle period must be positive");
    const double span = window_s.second - window_s.first;
    const int n_segments = static_cast<int>(std::floor(span / cycle_period_s + 1e-12));
    if (n_segments < 1) {
        throw TooShort(fmt::format("window spans {:.6f} s, less than one cycle ({:.6f} s)",
                                   span, cycle_period_s));
    }
    double gap_sum = 0.0;
    int used = 0;
    for (int k = 0; k < n_segments; ++k) {
        const double t0 = window_s.first + k * cycle_period_s;
        const double t1 = t0 + cycle_period_s;
        double jmin = std::numeric_limits<double>::infinity();
        double jmax = -jmin;
        for (const ImuSample& s : log.samples) {
            if (s.t_s < t0 || s.t_s >= t1) continue;
            const double j = cost_j(s.roll_deg, s.pitch_deg, s.yaw_deg);
            jmin = std::min(jmin, j);
            jmax = std::max(jmax, j);
        }
        if (jmin <= jmax) {
            gap_sum += jmax - jmin;
            ++used;
        }
    }
    if (used == 0) throw TooShort("no cycle segment contained telemetry samples");
    return {gap_sum / used, used};
}

double specific_resistance(double power_w, double mass_kg, double velocity_mps) {
    if (mass_kg <= 0.0 || velocity_mps <= 0.0) {
        throw BadInput(fmt::format("specific resistance needs M > 0 and v > 0 (got {}, {})",
                                   mass_kg, velocity_mps));
    }
    return power_w / (mass_kg * kGravity * velocity_mps);
}

MaxLoad max_load(int actuator_count, double force_n, double robot_mass_kg) {
    if (actuator_count < 1 || force_n <= 0.0 || robot_mass_kg < 0.0) {
        throw BadInput("max_load needs N >= 1, F > 0, M >= 0");
    }
    MaxLoad out;
    out.load_kg = actuator_count * force_n / kGravity - robot_mass_kg;
    out.overloaded = out.load_kg < 0.0;
    return out;
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        // trim surrounding whitespace
        const auto b = cell.find_first_not_of(" \t\r");
        const auto e = cell.find_last_not_of(" \t\r");
        cells.push_back(b == std::string::npos ? std::string{} : cell.substr(b, e - b + 1));
    }
    return cells;
}

double parse_num(const std::string& cell, std::size_t line_no, const std::string& name) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(cell, &pos);
        if (pos != cell.size()) throw std::invalid_argument(cell);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line_no,
                         fmt::format("{}:{}: cannot parse '{}' as a number", name, line_no, cell));
    }
}

}  // namespace

TelemetryLog parse_telemetry(std::istream& in, const std::string& name) {
    enum class Layout { Full, PitchOnly };
    Layout layout{};
    bool with_power = false;
    bool have_header = false;

    TelemetryLog log;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1 && line.size() >= 3 && static_cast<unsigned char>(line[0]) == 0xEF)
            line.erase(0, 3);  // UTF-8 BOM
        if (line.empty() || line[0] == '#') continue;
        auto cells = split_csv(line);
        if (!have_header) {
            if (cells.size() >= 4 && cells[0] == "t" && cells[1] == "roll" &&
                cells[2] == "pitch" && cells[3] == "yaw") {
                layout = Layout::Full;
                with_power = cells.size() == 6 && cells[4] == "power" && cells[5] == "velocity";
                if (cells.size() != 4 && !with_power) {
                    throw ParseError(line_no, fmt::format("{}:{}: bad header '{}'", name,
                                                          line_no, line));
                }
            } else if (cells.size() >= 2 && cells[0] == "t" && cells[1] == "pitch") {
                layout = Layout::PitchOnly;
                with_power = cells.size() == 4 && cells[2] == "power" && cells[3] == "velocity";
                if (cells.size() != 2 && !with_power) {
                    throw ParseError(line_no, fmt::format("{}:{}: bad header '{}'", name,
                                                          line_no, line));
                }
            } else {
                throw ParseError(
                    line_no,
                    fmt::format("{}:{}: expected header t,roll,pitch,yaw[,power,velocity] "
                                "or t,pitch[,power,velocity]",
                                name, line_no));
            }
            have_header = true;
            continue;
        }

        const std::size_t expected =
            (layout == Layout::Full ? 4u : 2u) + (with_power ? 2u : 0u);
        if (cells.size() != expected) {
            throw ParseError(line_no, fmt::format("{}:{}: expected {} fields, got {}", name,
                                                  line_no, expected, cells.size()));
        }
        ImuSample s;
        std::size_t i = 0;
        s.t_s = parse_num(cells[i++], line_no, name);
        if (layout == Layout::Full) {
            s.roll_deg = parse_num(cells[i++], line_no, name);
            s.pitch_deg = parse_num(cells[i++], line_no, name);
            s.yaw_deg = parse_num(cells[i++], line_no, name);
        } else {
            s.pitch_deg = parse_num(cells[i++], line_no, name);
        }
        if (!log.samples.empty() && s.t_s <= log.samples.back().t_s) {
            throw NonMonotonicTime(
                line_no, fmt::format("{}:{}: timestamp {} does not increase (previous {})",
                                     name, line_no, s.t_s, log.samples.back().t_s));
        }
        log.samples.push_back(s);
        if (with_power) {
            log.power_w.push_back(parse_num(cells[i++], line_no, name));
            log.velocity_mps.push_back(parse_num(cells[i++], line_no, name));
        }
    }
    if (!have_header) throw ParseError(line_no, fmt::format("{}: empty file", name));
    if (log.samples.empty()) throw ParseError(line_no, fmt::format("{}: no data rows", name));
    return log;
}

TelemetryLog parse_telemetry(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, fmt::format("cannot open '{}'", path.string()));
    return parse_telemetry(in, path.filename().string());
}

}  // namespace swheg
