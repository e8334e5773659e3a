#pragma once

#include "swheg/geometry.hpp"

#include <optional>
#include <string_view>

namespace swheg {

/// One step of a parallel staircase: tread depth L and riser height H, mm.
struct Stair {
    double length_mm = 0.0;  ///< tread depth L
    double height_mm = 0.0;  ///< riser height H

    [[nodiscard]] bool valid() const noexcept { return length_mm > 0.0 && height_mm > 0.0; }
};

/// Repeated-step 2-D staircase with flat lead-in/lead-out ground.
struct Staircase {
    Stair step;
    int n_steps = 1;
    double lead_in_mm = 0.0;
    double lead_out_mm = 0.0;
};

/// Chinese civil-building stair taxonomy. Boundaries are closed so the
/// classification is a total partition; shared edges go to the
/// lower-slope-adjacent class (L = 300 counts as A/C, H = 135 as A/B).
enum class StairClass { A, B, C, Other };

[[nodiscard]] constexpr const char* to_string(StairClass c) noexcept {
    switch (c) {
        case StairClass::A: return "A";
        case StairClass::B: return "B";
        case StairClass::C: return "C";
        case StairClass::Other: return "Other";
    }
    return "?";
}

/// Stair slope in degrees, atan(H / L). Steeper stairs have a bigger slope.
[[nodiscard]] double slope_deg(const Stair& stair);

/// A: L in [240, 300], H in [135, 165];  B: L in (300, 450], H in [135, 165];
/// C: L in [240, 300], H in [80, 135);   otherwise Other.
[[nodiscard]] StairClass classify(const Stair& stair);

/// Rectilinear ground profile of the staircase, monotone non-decreasing in
/// both coordinates: lead-in tread, then riser/tread pairs, the last tread
/// extended by the lead-out. Exactly 2 * n_steps + 2 vertices.
[[nodiscard]] Polyline staircase_profile(const Staircase& sc);

/// Named test-stair presets (A1, A2, B1, C1, C2).
[[nodiscard]] std::optional<Stair> stair_preset(std::string_view name);

}  // namespace swheg
