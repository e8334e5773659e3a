#include "swheg/rollout.hpp"

#include "swheg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <future>
#include <limits>
#include <numbers>

namespace swheg {

namespace {

constexpr double kPhiEps = 1e-9;       // smallest admissible event rotation, rad
constexpr double kRadiusEps = 1e-9;    // pivot-coincident points are not events
constexpr double kExtentTol = 1e-9;    // segment-extent slack, mm
constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Terrain {
    Polyline pts;                       // deduplicated profile vertices
    double end_x = 0.0;

    explicit Terrain(const Staircase& sc) {
        for (const Vec2& p : staircase_profile(sc)) {
            if (pts.empty() || (p - pts.back()).norm() > kRadiusEps) pts.push_back(p);
        }
        end_x = pts.back().x();
    }
};

// Clockwise angle that rotates direction v1 onto v2, in [0, 2*pi).
double cw_angle(const Vec2& v1, const Vec2& v2) {
    const double ccw = std::atan2(v1.x() * v2.y() - v1.y() * v2.x(), v1.dot(v2));
    double cw = -ccw;
    if (cw < 0.0) cw += kTwoPi;
    return cw;
}

double ccw_angle(const Vec2& v1, const Vec2& v2) {
    const double ccw = std::atan2(v1.x() * v2.y() - v1.y() * v2.x(), v1.dot(v2));
    return ccw < 0.0 ? ccw + kTwoPi : ccw;
}

// Smallest rotation of `moving` about `pivot` (cw or ccw) that lands it on
// segment [a, b]. Updates `best_phi` in place.
template <bool Clockwise>
void circle_segment_event(const Vec2& moving, const Vec2& pivot, const Vec2& a, const Vec2& b,
                          double& best_phi) {
    const Vec2 f = a - pivot;
    const Vec2 d = b - a;
    const double r = (moving - pivot).norm();
    if (r < kRadiusEps) return;
    const double dd = d.squaredNorm();
    if (dd <= 0.0) return;
    const double fd = f.dot(d);
    const double disc = fd * fd - dd * (f.squaredNorm() - r * r);
    if (disc < 0.0) return;
    const double sq = std::sqrt(disc);
    const double len = std::sqrt(dd);
    for (const double t : {(-fd - sq) / dd, (-fd + sq) / dd}) {
        if (t < -kExtentTol / len || t > 1.0 + kExtentTol / len) continue;
        const Vec2 q = a + t * d;
        const double phi = Clockwise ? cw_angle(moving - pivot, q - pivot)
                                     : ccw_angle(moving - pivot, q - pivot);
        if (phi > kPhiEps && phi < best_phi) best_phi = phi;
    }
}

struct WheelState {
    Eigen::Rotation2Dd rot{0.0};
    Vec2 center{0.0, 0.0};
    double roll_rad = 0.0;  // cumulative clockwise rotation

    [[nodiscard]] Vec2 world(const Vec2& body) const { return rot * body + center; }

    void rotate_about(const Vec2& pivot, double phi_cw) {
        const Eigen::Rotation2Dd r(-phi_cw);
        rot = r * rot;
        center = pivot + r * (center - pivot);
        roll_rad += phi_cw;
    }
};

// A touching pair. For a wheel vertex on the terrain the normal is the
// terrain's outward normal; for a step nose on a wheel face it is the
// face's outward normal.
struct Contact {
    Vec2 point{0.0, 0.0};
    Vec2 normal{0.0, 0.0};
    bool nose = false;
};

Vec2 perp_cw(const Vec2& d) { return Vec2{d.y(), -d.x()}; }

// All pairs within a hair of the closest approach. The support set after an
// exact landing has distance ~1e-12; degenerate landings produce several
// simultaneous members.
std::vector<Contact> find_contacts(const std::vector<Vec2>& world, const Terrain& terrain) {
    constexpr double kBand = 1e-7;  // mm above the closest pair
    std::vector<std::pair<double, Contact>> raw;
    double dmin = std::numeric_limits<double>::infinity();

    for (std::size_t k = 0; k + 1 < terrain.pts.size(); ++k) {
        const Vec2& a = terrain.pts[k];
        const Vec2& b = terrain.pts[k + 1];
        const Vec2 dir = (b - a).normalized();
        const Vec2 n{-dir.y(), dir.x()};  // terrain runs left to right; solid below
        for (const Vec2& w : world) {
            const double dist = point_segment_distance(w, a, b);
            dmin = std::min(dmin, dist);
            if (dist <= dmin + kBand) raw.emplace_back(dist, Contact{w, n, false});
        }
    }
    for (const Vec2& n : terrain.pts) {
        for (std::size_t i = 0; i < world.size(); ++i) {
            const Vec2& a = world[i];
            const Vec2& b = world[(i + 1) % world.size()];
            const double dist = point_segment_distance(n, a, b);
            dmin = std::min(dmin, dist);
            if (dist <= dmin + kBand) {
                const Vec2 dir = (b - a).normalized();
                // profile is counter-clockwise, so the outward normal is the
                // clockwise perpendicular
                raw.emplace_back(dist, Contact{n, Vec2{dir.y(), -dir.x()}, true});
            }
        }
    }
    std::vector<Contact> out;
    for (const auto& [dist, c] : raw) {
        if (dist <= dmin + kBand) out.push_back(c);
    }
    return out;
}

// The pivot for forward (clockwise) rotation: a contact about which no other
// contact is driven into its surface. Returns nullopt when the wheel is
// wedged.
std::optional<Vec2> select_pivot(const std::vector<Contact>& contacts) {
    constexpr double kRateEps = 1e-6;  // mm per rad
    for (const Contact& cand : contacts) {
        bool ok = true;
        for (const Contact& other : contacts) {
            if ((other.point - cand.point).norm() < 1e-9) continue;  // same support point
            const Vec2 v = perp_cw(other.point - cand.point);
            const double rate = other.nose ? v.dot(other.normal) : -v.dot(other.normal);
            if (rate > kRateEps) {
                ok = false;
                break;
            }
        }
        if (ok) return cand.point;
    }
    return std::nullopt;
}

// Next touching event while rotating clockwise about `pivot`.
double next_event(const std::vector<Vec2>& world, const Terrain& terrain, const Vec2& pivot) {
    double best = std::numeric_limits<double>::infinity();
    double reach = 0.0;
    for (const Vec2& w : world) reach = std::max(reach, (w - pivot).norm());

    // Wheel vertices sweeping onto terrain segments.
    for (std::size_t k = 0; k + 1 < terrain.pts.size(); ++k) {
        const Vec2& a = terrain.pts[k];
        const Vec2& b = terrain.pts[k + 1];
        if (point_segment_distance(pivot, a, b) > reach) continue;
        for (const Vec2& w : world) circle_segment_event<true>(w, pivot, a, b, best);
    }

    // Terrain vertices (step noses) sweeping onto wheel faces. Relative
    // motion: the wheel turning clockwise is the terrain turning
    // counter-clockwise in the wheel's frame.
    for (const Vec2& n : terrain.pts) {
        const double rn = (n - pivot).norm();
        if (rn < kRadiusEps || rn > reach) continue;
        for (std::size_t i = 0; i < world.size(); ++i) {
            const Vec2& a = world[i];
            const Vec2& b = world[(i + 1) % world.size()];
            const double dmin = point_segment_distance(pivot, a, b);
            const double dmax = std::max((a - pivot).norm(), (b - pivot).norm());
            if (rn < dmin - kExtentTol || rn > dmax + kExtentTol) continue;
            circle_segment_event<false>(n, pivot, a, b, best);
        }
    }
    return best;
}

double terrain_height(const Staircase& sc, double x) {
    if (x < sc.lead_in_mm) return 0.0;
    const int k = std::min<int>(sc.n_steps,
                                static_cast<int>(std::floor((x - sc.lead_in_mm) /
                                                            sc.step.length_mm)) +
                                    1);
    return k * sc.step.height_mm;
}

}  // namespace

std::vector<PoseSample> roll_wheel(const Polyline& profile, const Staircase& sc,
                                   const RolloutConfig& cfg) {
    if (profile.size() < 3) throw BadParams("wheel profile needs at least 3 vertices");
    if (cfg.step_ds_mm <= 0.0) throw BadParams("step_ds must be positive");
    if (cfg.contact_tol_mm <= 0.0) throw BadParams("contact_tol must be positive");

    const Terrain terrain(sc);
    const double r_eff =
        cfg.effective_radius_mm > 0.0 ? cfg.effective_radius_mm : mean_radius(profile);
    const double wheel_reach = max_radius(profile);

    WheelState state;
    state.center.x() = cfg.start_x_mm >= 0.0 ? cfg.start_x_mm : sc.lead_in_mm / 2.0;

    // Drop onto the terrain: the lowest vertex relative to the ground column
    // under it makes first contact.
    double lift = -std::numeric_limits<double>::infinity();
    for (const Vec2& p : profile) {
        const double ground = terrain_height(sc, state.center.x() + p.x());
        lift = std::max(lift, ground - p.y());
    }
    state.center.y() = lift;

    std::vector<PoseSample> samples;
    samples.push_back({0.0, state.center, 0.0});
    double next_s = cfg.step_ds_mm;

    std::vector<Vec2> world(profile.size());
    const auto update_world = [&] {
        for (std::size_t i = 0; i < profile.size(); ++i) world[i] = state.world(profile[i]);
    };

    constexpr int kMaxEvents = 2'000'000;
    int evt = 0;
    for (; evt < kMaxEvents; ++evt) {
        const double s_now = state.roll_rad * r_eff;
        if (s_now >= cfg.max_progress_mm) break;
        if (state.center.x() > terrain.end_x - 1.2 * wheel_reach) break;  // end of terrain

        update_world();
        const auto pivot = select_pivot(find_contacts(world, terrain));
        if (!pivot) {
            throw Stuck(s_now, state.center.x(), state.center.y(),
                        fmt::format("wheel wedged: no support point admits forward rotation "
                                    "at s = {:.3f} mm (centre {:.3f}, {:.3f})",
                                    s_now, state.center.x(), state.center.y()));
        }
        const double phi = next_event(world, terrain, *pivot);
        if (!std::isfinite(phi) || phi > kTwoPi + kPhiEps) {
            throw Stuck(s_now, state.center.x(), state.center.y(),
                        fmt::format("no contact-preserving advance within one revolution at "
                                    "s = {:.3f} mm (centre {:.3f}, {:.3f})",
                                    s_now, state.center.x(), state.center.y()));
        }

        // Emit samples at exact step_ds progress marks inside this event.
        const double s_end = (state.roll_rad + phi) * r_eff;
        while (next_s <= s_end && next_s <= cfg.max_progress_mm) {
            const double dphi = next_s / r_eff - state.roll_rad;
            WheelState probe = state;
            probe.rotate_about(*pivot, dphi);
            samples.push_back({next_s, probe.center, rad2deg(probe.roll_rad)});
            next_s += cfg.step_ds_mm;
        }

        state.rotate_about(*pivot, phi);
    }
    if (evt == kMaxEvents) {
        throw Stuck(state.roll_rad * r_eff, state.center.x(), state.center.y(),
                    "event budget exhausted without reaching the progress target");
    }
    samples.push_back({state.roll_rad * r_eff, state.center, rad2deg(state.roll_rad)});
    return samples;
}

std::vector<BodySample> body_from_path(std::span<const PoseSample> path, double wheelbase_mm) {
    if (wheelbase_mm <= 0.0) throw BadParams("wheelbase must be positive");
    std::vector<BodySample> body;
    if (path.size() < 2) return body;

    for (std::size_t f = 1; f < path.size(); ++f) {
        const Vec2& front = path[f].wheel_center_mm;
        // Walk back to the first crossing of the wheelbase chord.
        std::size_t j = f;
        bool found = false;
        while (j > 0) {
            --j;
            if ((path[j].wheel_center_mm - front).norm() >= wheelbase_mm) {
                found = true;
                break;
            }
        }
        if (!found) continue;

        // Interpolate on segment j -> j+1 where the chord length crosses.
        const Vec2& a = path[j].wheel_center_mm;
        const Vec2& b = path[j + 1].wheel_center_mm;
        double lo = 0.0, hi = 1.0;
        for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (lo + hi);
            (((a + mid * (b - a)) - front).norm() >= wheelbase_mm ? lo : hi) = mid;
        }
        const double u = 0.5 * (lo + hi);
        const Vec2 rear = a + u * (b - a);
        const double rear_angle = path[j].joint_angle_deg +
                                  u * (path[j + 1].joint_angle_deg - path[j].joint_angle_deg);

        BodySample s;
        s.s_mm = path[f].s_mm;
        s.body_center_mm = 0.5 * (front + rear);
        s.pitch_deg = rad2deg(std::atan2(front.y() - rear.y(), front.x() - rear.x()));
        s.front_angle_deg = path[f].joint_angle_deg;
        s.rear_angle_deg = rear_angle;
        body.push_back(s);
    }
    return body;
}

std::vector<BodySample> body_rollout(const ChassisSpec& chassis, const Polyline& profile,
                                     const Staircase& sc, const RolloutConfig& cfg) {
    if (chassis.wheelbase_m <= 0.0) throw BadParams("wheelbase must be positive");
    const auto path = roll_wheel(profile, sc, cfg);
    return body_from_path(path, chassis.wheelbase_m * 1000.0);
}

double trajectory_rmse(std::span<const BodySample> body, const Staircase& sc) {
    const double l = sc.step.length_mm;
    const double h = sc.step.height_mm;
    const double x_lo = sc.lead_in_mm + l;              // drop first step period
    const double x_hi = sc.lead_in_mm + (sc.n_steps - 1) * l;  // and the last

    double kept_min = std::numeric_limits<double>::infinity();
    double kept_max = -kept_min;
    double mean_resid = 0.0;
    std::size_t n = 0;
    const double slope = h / l;
    for (const BodySample& s : body) {
        const double x = s.body_center_mm.x();
        if (x < x_lo || x > x_hi) continue;
        kept_min = std::min(kept_min, x);
        kept_max = std::max(kept_max, x);
        mean_resid += s.body_center_mm.y() - slope * x;
        ++n;
    }
    if (n < 2 || kept_max - kept_min < 3.0 * l - 1e-9) {
        throw TooShort(fmt::format(
            "steady climb covers {:.1f} mm; need >= 3 step periods ({:.1f} mm)",
            n ? kept_max - kept_min : 0.0, 3.0 * l));
    }
    mean_resid /= static_cast<double>(n);

    const double norm = std::sqrt(1.0 + slope * slope);
    double sum2 = 0.0;
    for (const BodySample& s : body) {
        const double x = s.body_center_mm.x();
        if (x < x_lo || x > x_hi) continue;
        const double d = (s.body_center_mm.y() - slope * x - mean_resid) / norm;
        sum2 += d * d;
    }
    return std::sqrt(sum2 / static_cast<double>(n));
}

WheelbaseResult optimize_wheelbase(const ChassisSpec& chassis_template, const Polyline& profile,
                                   const Staircase& sc, std::pair<double, double> range_mm,
                                   int grid, const RolloutConfig& cfg) {
    (void)chassis_template;  // wheels and body share the single rolled path
    if (grid < 10) throw BadParams("wheelbase sweep needs a grid of at least 10");
    const double extent = sc.lead_in_mm + sc.n_steps * sc.step.length_mm + sc.lead_out_mm;
    if (!(range_mm.first > 0.0 && range_mm.first < range_mm.second &&
          range_mm.second < 2.0 * extent)) {
        throw BadParams(fmt::format("wheelbase range ({}, {}) must lie inside (0, {})",
                                    range_mm.first, range_mm.second, 2.0 * extent));
    }

    const auto path = roll_wheel(profile, sc, cfg);

    const auto eval = [&](double wheelbase) -> std::optional<double> {
        try {
            return trajectory_rmse(body_from_path(path, wheelbase), sc);
        } catch (const RolloutError&) {
            return std::nullopt;
        }
    };

    WheelbaseResult out;
    out.sweep.resize(static_cast<std::size_t>(grid));
    {
        std::vector<std::future<void>> jobs;
        jobs.reserve(static_cast<std::size_t>(grid));
        for (int i = 0; i < grid; ++i) {
            jobs.push_back(std::async(std::launch::async, [&, i] {
                const double w = range_mm.first +
                                 (range_mm.second - range_mm.first) * i / (grid - 1);
                const auto rmse = eval(w);
                out.sweep[static_cast<std::size_t>(i)] = {w, rmse.value_or(0.0),
                                                          rmse.has_value()};
            }));
        }
        for (auto& j : jobs) j.get();
    }

    int best = -1;
    for (int i = 0; i < grid; ++i) {
        const auto& row = out.sweep[static_cast<std::size_t>(i)];
        if (row.ok && (best < 0 || row.rmse_mm < out.sweep[static_cast<std::size_t>(best)].rmse_mm))
            best = i;
    }
    if (best < 0) throw AllStuck("no wheelbase candidate produced a steady climb");

    // Golden-section refinement over the bracketing interval.
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = out.sweep[static_cast<std::size_t>(std::max(0, best - 1))].wheelbase_mm;
    double hi = out.sweep[static_cast<std::size_t>(std::min(grid - 1, best + 1))].wheelbase_mm;
    const auto cost = [&](double w) {
        return eval(w).value_or(std::numeric_limits<double>::infinity());
    };
    double x1 = hi - gr * (hi - lo);
    double x2 = lo + gr * (hi - lo);
    double f1 = cost(x1);
    double f2 = cost(x2);
    while (hi - lo > 1.0) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = cost(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = cost(x2);
        }
    }
    const double w_star = 0.5 * (lo + hi);
    const double f_star = cost(w_star);
    const auto& best_row = out.sweep[static_cast<std::size_t>(best)];
    if (f_star <= best_row.rmse_mm) {
        out.wheelbase_mm = w_star;
        out.rmse_mm = f_star;
    } else {
        out.wheelbase_mm = best_row.wheelbase_mm;
        out.rmse_mm = best_row.rmse_mm;
    }
    return out;
}

}  // namespace swheg
