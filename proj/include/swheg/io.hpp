#pragma once

#include "swheg/geometry.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace swheg {

inline constexpr const char* kToolVersion = "1.0.0";

/// FNV-1a 64 digest of a file's bytes, hex encoded. Used in provenance lines
/// so reruns over identical inputs produce identical outputs.
[[nodiscard]] std::string file_digest(const std::filesystem::path& path);

/// Provenance line recorded at the top of every output artifact: tool
/// version, the invoking command line, input digests. Deterministic.
[[nodiscard]] std::string provenance_line(const std::string& command_line,
                                          const std::vector<std::string>& input_digests);

/// Minimal SVG line-plot writer for scalar series and 2-D polylines.
class SvgPlot {
  public:
    SvgPlot(double width_px, double height_px) : width_(width_px), height_(height_px) {}

    void add_polyline(const Polyline& pts, const std::string& color, double stroke_width = 1.0);

    /// Writes the document; data coordinates are fitted to the canvas with a
    /// uniform scale and a small margin, y up.
    void write(const std::filesystem::path& path, const std::string& provenance) const;

  private:
    struct Series {
        Polyline pts;
        std::string color;
        double stroke;
    };
    double width_;
    double height_;
    std::vector<Series> series_;
};

}  // namespace swheg
