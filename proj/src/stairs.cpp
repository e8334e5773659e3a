#include "swheg/stairs.hpp"

#include "swheg/errors.hpp"

#include <cmath>

namespace swheg {

double slope_deg(const Stair& stair) {
    if (!stair.valid()) throw BadInput("stair dimensions must be positive");
    return rad2deg(std::atan2(stair.height_mm, stair.length_mm));
}

StairClass classify(const Stair& stair) {
    if (!stair.valid()) throw BadInput("stair dimensions must be positive");
    const double l = stair.length_mm;
    const double h = stair.height_mm;
    const bool l_narrow = l >= 240.0 && l <= 300.0;
    const bool h_tall = h >= 135.0 && h <= 165.0;
    if (l_narrow && h_tall) return StairClass::A;
    if (l > 300.0 && l <= 450.0 && h_tall) return StairClass::B;
    if (l_narrow && h >= 80.0 && h < 135.0) return StairClass::C;
    return StairClass::Other;
}

Polyline staircase_profile(const Staircase& sc) {
    if (!sc.step.valid()) throw BadInput("stair dimensions must be positive");
    if (sc.n_steps < 1) throw BadInput("staircase needs at least one step");
    if (sc.lead_in_mm < 0.0 || sc.lead_out_mm < 0.0) throw BadInput("leads must be >= 0");
    const double l = sc.step.length_mm;
    const double h = sc.step.height_mm;
    Polyline out;
    out.reserve(static_cast<std::size_t>(2 * sc.n_steps + 2));
    out.emplace_back(0.0, 0.0);
    out.emplace_back(sc.lead_in_mm, 0.0);
    for (int k = 1; k <= sc.n_steps; ++k) {
        const double x = sc.lead_in_mm + (k - 1) * l;
        out.emplace_back(x, k * h);              // top of riser k
        const double tread_end = sc.lead_in_mm + k * l + (k == sc.n_steps ? sc.lead_out_mm : 0.0);
        out.emplace_back(tread_end, k * h);      // end of tread k
    }
    return out;
}

std::optional<Stair> stair_preset(std::string_view name) {
    if (name == "A1") return Stair{260.0, 165.0};
    if (name == "A2") return Stair{300.0, 150.0};
    if (name == "B1") return Stair{340.0, 165.0};
    if (name == "C1") return Stair{300.0, 120.0};
    if (name == "C2") return Stair{300.0, 80.0};
    return std::nullopt;
}

}  // namespace swheg
