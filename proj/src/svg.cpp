#include "hexcover/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

namespace hexcover {

namespace {

// SVG y grows downward; the world is drawn mirrored about the x axis
double sy(double y) { return -y; }

std::string num(double value) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.3f", value);
    return buf;
}

void emit_hex(std::ostream& out, const std::array<WorldPoint, 6>& poly, const char* cls,
              const char* style) {
    out << "<polygon class=\"" << cls << "\" points=\"";
    for (std::size_t k = 0; k < 6; ++k) {
        if (k) out << ' ';
        out << num(poly[k].x) << ',' << num(sy(poly[k].y));
    }
    out << "\" " << style << "/>\n";
}

}  // namespace

void render_svg(const MissionResult& result, const Environment& env, const GridParams& g,
                std::ostream& out) {
    const Rect& b = env.bounds;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(b.xmin) << ' '
        << num(sy(b.ymax)) << ' ' << num(b.width()) << ' ' << num(b.height()) << "\">\n";
    out << "<rect x=\"" << num(b.xmin) << "\" y=\"" << num(sy(b.ymax)) << "\" width=\""
        << num(b.width()) << "\" height=\"" << num(b.height())
        << "\" fill=\"#fcfcf8\" stroke=\"none\"/>\n";

    // covered area, one rect per horizontal run of marked raster cells
    const CoverageRaster& raster = result.raster;
    const double cs = raster.cell_size;
    out << "<g fill=\"#4caf50\" fill-opacity=\"0.30\" stroke=\"none\">\n";
    for (int iy = 0; iy < raster.ny; ++iy) {
        int ix = 0;
        while (ix < raster.nx) {
            if (!raster.at(ix, iy)) {
                ++ix;
                continue;
            }
            int run = ix;
            while (run < raster.nx && raster.at(run, iy)) ++run;
            const double x = raster.bounds.xmin + ix * cs;
            const double y_top = raster.bounds.ymin + (iy + 1) * cs;
            out << "<rect class=\"cov\" x=\"" << num(x) << "\" y=\"" << num(sy(y_top))
                << "\" width=\"" << num((run - ix) * cs) << "\" height=\"" << num(cs) << "\"/>\n";
            ix = run;
        }
    }
    out << "</g>\n";

    // all cells the planner holds as occupied (walls included), then the
    // outline grid over the viewport
    std::vector<CubeCoord> occupied;
    for (const auto& [cell, status] : result.planner.explored) {
        if (status == Occupancy::Occupied) occupied.push_back(cell);
    }
    std::sort(occupied.begin(), occupied.end());
    out << "<g>\n";
    for (const CubeCoord& cell : occupied) {
        emit_hex(out, hex_polygon(cell, g), "occ",
                 "fill=\"#5d5d5d\" fill-opacity=\"0.55\" stroke=\"#444444\" "
                 "stroke-width=\"0.02\"");
    }
    const int x_lo = static_cast<int>(std::floor(b.xmin / (1.5 * g.r))) - 1;
    const int x_hi = static_cast<int>(std::ceil(b.xmax / (1.5 * g.r))) + 1;
    const double wy_scale = 2.0 / (std::sqrt(3.0) * g.r);
    for (int x = x_lo; x <= x_hi; ++x) {
        const int y_lo = static_cast<int>(std::floor((b.ymin * wy_scale - x) / 2.0)) - 1;
        const int y_hi = static_cast<int>(std::ceil((b.ymax * wy_scale - x) / 2.0)) + 1;
        for (int y = y_lo; y <= y_hi; ++y) {
            const CubeCoord cell{x, y, -x - y};
            if (std::binary_search(occupied.begin(), occupied.end(), cell)) continue;
            const auto poly = hex_polygon(cell, g);
            const bool in_view = std::any_of(poly.begin(), poly.end(),
                                             [&](WorldPoint p) { return b.contains(p); });
            if (!in_view) continue;
            emit_hex(out, poly, "hex",
                     "fill=\"none\" stroke=\"#b5b5b5\" stroke-width=\"0.02\"");
        }
    }
    out << "</g>\n";

    out << "<g fill=\"#7a5230\" fill-opacity=\"0.85\" stroke=\"#4a3420\" "
           "stroke-width=\"0.02\">\n";
    for (const Disc& d : env.obstacles) {
        out << "<circle class=\"tree\" cx=\"" << num(d.center.x) << "\" cy=\""
            << num(sy(d.center.y)) << "\" r=\"" << num(d.radius) << "\"/>\n";
    }
    out << "</g>\n";

    if (!result.pose_trace.empty()) {
        out << "<polyline class=\"trace\" fill=\"none\" stroke=\"#1f6fff\" "
               "stroke-width=\"0.05\" stroke-opacity=\"0.9\" points=\"";
        for (std::size_t i = 0; i < result.pose_trace.size(); ++i) {
            const Pose& p = result.pose_trace[i];
            if (i) out << ' ';
            out << num(p.x) << ',' << num(sy(p.y));
        }
        out << "\"/>\n";
        const Pose& s = result.pose_trace.front();
        out << "<circle class=\"start\" cx=\"" << num(s.x) << "\" cy=\"" << num(sy(s.y))
            << "\" r=\"0.12\" fill=\"#e53935\" stroke=\"none\"/>\n";
    }
    out << "</svg>\n";
}

}  // namespace hexcover
