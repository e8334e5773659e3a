#include "swheg/io.hpp"

#include "swheg/errors.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <fstream>
#include <limits>

namespace swheg {

std::string file_digest(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError(fmt::format("cannot open '{}' for digest", path.string()));
    std::uint64_t h = 14695981039346656037ull;
    char buf[4096];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 1099511628211ull;
        }
    }
    return fmt::format("{:016x}", h);
}

std::string provenance_line(const std::string& command_line,
                            const std::vector<std::string>& input_digests) {
    std::string inputs;
    for (const auto& d : input_digests) {
        if (!inputs.empty()) inputs += ",";
        inputs += d;
    }
    return fmt::format("swheg {} | cmd: {} | inputs: {}", kToolVersion, command_line,
                       inputs.empty() ? "none" : inputs);
}

void SvgPlot::add_polyline(const Polyline& pts, const std::string& color, double stroke_width) {
    series_.push_back({pts, color, stroke_width});
}

void SvgPlot::write(const std::filesystem::path& path, const std::string& provenance) const {
    double xmin = std::numeric_limits<double>::infinity();
    double xmax = -xmin, ymin = xmin, ymax = -xmin;
    for (const auto& s : series_) {
        for (const Vec2& p : s.pts) {
            xmin = std::min(xmin, p.x());
            xmax = std::max(xmax, p.x());
            ymin = std::min(ymin, p.y());
            ymax = std::max(ymax, p.y());
        }
    }
    if (!(xmax > xmin) || !(ymax > ymin)) {
        xmin -= 1.0;
        xmax += 1.0;
        ymin -= 1.0;
        ymax += 1.0;
    }
    const double margin = 20.0;
    const double sx = (width_ - 2 * margin) / (xmax - xmin);
    const double sy = (height_ - 2 * margin) / (ymax - ymin);
    const double sc = std::min(sx, sy);

    std::ofstream out(path);
    if (!out) throw ConfigError(fmt::format("cannot write '{}'", path.string()));
    out << fmt::format("<!-- {} -->\n", provenance);
    out << fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" "
        "viewBox=\"0 0 {} {}\">\n",
        width_, height_, width_, height_);
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (const auto& s : series_) {
        out << fmt::format("<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"{}\" points=\"",
                           s.color, s.stroke);
        for (const Vec2& p : s.pts) {
            const double px = margin + (p.x() - xmin) * sc;
            const double py = height_ - margin - (p.y() - ymin) * sc;
            out << fmt::format("{:.2f},{:.2f} ", px, py);
        }
        out << "\"/>\n";
    }
    out << "</svg>\n";
}

}  // namespace swheg
