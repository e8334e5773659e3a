#include "swheg/pro3_module.hpp"

#include "swheg/errors.hpp"

#include <cmath>
#include <fmt/format.h>
#include <limits>

namespace swheg {

namespace {

double acos_checked(double arg, ChainStep step) {
    if (arg < -1.0 || arg > 1.0) {
        throw DomainError(step, arg,
                          fmt::format("arccos argument {:.9f} outside [-1, 1] while "
                                      "computing {}",
                                      arg, to_string(step)));
    }
    return std::acos(arg);
}

// Third side of a triangle with sides a, b and included angle. The
// half-angle form avoids the cancellation the plain law of cosines suffers
// when the sides nearly fold onto each other.
double third_side(double a, double b, double included_deg) {
    const double s = std::sin(deg2rad(included_deg) / 2.0);
    const double d = a - b;
    return std::sqrt(d * d + 4.0 * a * b * s * s);
}

bool chain_valid(const Pro3ModuleSpec& spec, double x) {
    try {
        (void)pro3_chain(spec, x);
        return true;
    } catch (const DomainError&) {
        return false;
    }
}

}  // namespace

Pro3ModuleSpec Pro3ModuleSpec::standard() {
    return with_derived_stroke(Pro3ModuleSpec{});
}

Pro3ModuleSpec Pro3ModuleSpec::with_derived_stroke(Pro3ModuleSpec raw) {
    Pro3ModuleSpec s = raw;
    s.rod_min_mm = 0.0;
    s.rod_max_mm = std::numeric_limits<double>::infinity();  // open stroke while scanning
    double lo = 0.0;
    double hi = s.rod_base_mm;  // alpha1 leaves its domain well before this
    while (chain_valid(s, hi)) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (chain_valid(s, mid) ? lo : hi) = mid;
    }
    s.rod_max_mm = lo - 1e-6;
    return s;
}

ChainState pro3_chain(const Pro3ModuleSpec& spec, double x_mm) {
    if (x_mm < spec.rod_min_mm || x_mm > spec.rod_max_mm) {
        throw OutOfStroke(fmt::format("extension {:.6f} mm outside stroke [{:.6f}, {:.6f}] mm",
                                      x_mm, spec.rod_min_mm, spec.rod_max_mm));
    }
    const double chord = spec.rod_base_mm + x_mm;
    ChainState c;

    const double arg1 = (spec.L1_mm * spec.L1_mm + spec.L2_mm * spec.L2_mm - chord * chord) /
                        (2.0 * spec.L1_mm * spec.L2_mm);
    c.alpha1_deg = rad2deg(acos_checked(arg1, ChainStep::alpha1));

    c.L4_mm = third_side(spec.L2_mm, spec.L3_mm, c.alpha1_deg + spec.theta2_deg);

    c.alpha2_deg = c.alpha1_deg + spec.theta2_deg - (180.0 - spec.theta4_deg) / 2.0;

    c.L5_mm = third_side(spec.r1_mm, spec.L3_mm, c.alpha2_deg);

    const double arg3 = (c.L5_mm * c.L5_mm + spec.r1_mm * spec.r1_mm - c.L4_mm * c.L4_mm) /
                        (2.0 * spec.r1_mm * c.L5_mm);
    c.alpha3_deg = rad2deg(acos_checked(arg3, ChainStep::alpha3));

    c.alpha4_deg = c.alpha3_deg - spec.theta3_deg - spec.theta4_deg;

    c.L0_mm = third_side(spec.r2_mm, c.L5_mm, c.alpha4_deg);

    const double arg5 = (c.L0_mm * c.L0_mm + c.L5_mm * c.L5_mm - spec.r2_mm * spec.r2_mm) /
                        (2.0 * c.L0_mm * c.L5_mm);
    c.alpha5_deg = rad2deg(acos_checked(arg5, ChainStep::alpha5));

    c.alpha6_deg = 180.0 - c.alpha5_deg - c.alpha4_deg;

    c.T_mm = std::sqrt(3.0) * third_side(c.L0_mm, spec.r2_mm, c.alpha6_deg);
    return c;
}

double pro3_span(const Pro3ModuleSpec& spec, double x_mm) {
    return pro3_chain(spec, x_mm).T_mm;
}

double required_span(const Stair& stair, const Pro3ModuleSpec& spec) {
    return std::hypot(stair.height_mm, stair.length_mm - spec.L_arc_mm);
}

std::pair<double, double> span_range(const Pro3ModuleSpec& spec) {
    constexpr int kSamples = 4096;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (int i = 0; i <= kSamples; ++i) {
        const double x =
            spec.rod_min_mm + (spec.rod_max_mm - spec.rod_min_mm) * i / kSamples;
        const double t = pro3_span(spec, x);
        lo = std::min(lo, t);
        hi = std::max(hi, t);
    }
    return {lo, hi};
}

double solve_pushrod(const Pro3ModuleSpec& spec, const Stair& stair) {
    const double target = required_span(stair, spec);
    constexpr int kSamples = 4096;
    const double step = (spec.rod_max_mm - spec.rod_min_mm) / kSamples;

    // T is monotone for the stock constants, but scan for the first sign
    // change anyway so the smallest root is returned even if it is not.
    double x_prev = spec.rod_min_mm;
    double f_prev = pro3_span(spec, x_prev) - target;
    if (std::abs(f_prev) < 1e-12) return x_prev;
    for (int i = 1; i <= kSamples; ++i) {
        const double x = spec.rod_min_mm + step * i;
        const double f = pro3_span(spec, x) - target;
        if (f == 0.0) return x;
        if ((f_prev < 0.0) != (f < 0.0)) {
            double lo = x_prev;
            double hi = x;
            double flo = f_prev;
            for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fm = pro3_span(spec, mid) - target;
                if ((fm < 0.0) == (flo < 0.0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            return 0.5 * (lo + hi);
        }
        x_prev = x;
        f_prev = f;
    }
    const auto [tmin, tmax] = span_range(spec);
    throw Unreachable(tmin, tmax,
                      fmt::format("required span {:.4f} mm outside achievable "
                                  "[{:.4f}, {:.4f}] mm",
                                  target, tmin, tmax));
}

Polyline wheel_profile(const Pro3ModuleSpec& spec, double x_mm, int samples_per_spoke) {
    if (samples_per_spoke < 16) throw BadParams("wheel_profile: need >= 16 samples per spoke");
    if (x_mm < spec.rod_min_mm || x_mm > spec.rod_max_mm) {
        throw OutOfStroke(fmt::format("extension {:.6f} mm outside stroke [{:.6f}, {:.6f}] mm",
                                      x_mm, spec.rod_min_mm, spec.rod_max_mm));
    }
    const double open = (x_mm - spec.rod_min_mm) / (spec.rod_max_mm - spec.rod_min_mm);
    const double tip_radius =
        spec.rim_radius_mm + (spec.max_radius_mm - spec.rim_radius_mm) * open;
    // The spoke face sweeps theta1 of the 120 deg sector; the remainder is
    // the tip pad that rides the stair nose.
    const double ramp_deg = std::min(spec.theta1_deg, 120.0);

    Polyline spoke;
    spoke.reserve(static_cast<std::size_t>(samples_per_spoke));
    for (int i = 0; i < samples_per_spoke; ++i) {
        const double local_deg = 120.0 * i / samples_per_spoke;
        const double ramp = std::min(local_deg / ramp_deg, 1.0);
        const double radius = spec.rim_radius_mm + (tip_radius - spec.rim_radius_mm) * ramp;
        const double a = deg2rad(local_deg);
        spoke.emplace_back(radius * std::cos(a), radius * std::sin(a));
    }

    Polyline out;
    out.reserve(spoke.size() * 3);
    const Eigen::Rotation2Dd r120(deg2rad(120.0));
    const Eigen::Rotation2Dd r240(deg2rad(240.0));
    for (const Vec2& p : spoke) out.push_back(p);
    for (const Vec2& p : spoke) out.push_back(r120 * p);
    for (const Vec2& p : spoke) out.push_back(r240 * p);
    return out;
}

}  // namespace swheg
