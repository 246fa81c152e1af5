#include "hexcover/coverage.hpp"

#include <algorithm>
#include <cmath>

namespace hexcover {

CoverageRaster make_raster(Rect bounds, double cell_size) {
    CoverageRaster raster;
    raster.bounds = bounds;
    raster.cell_size = cell_size;
    raster.nx = std::max(1, static_cast<int>(std::ceil(bounds.width() / cell_size)));
    raster.ny = std::max(1, static_cast<int>(std::ceil(bounds.height() / cell_size)));
    raster.covered.assign(static_cast<std::size_t>(raster.nx) * raster.ny, 0);
    return raster;
}

void sweep_coverage(CoverageRaster& raster, std::span<const Pose> trace, double l_r) {
    const double cs = raster.cell_size;
    const double r2 = l_r * l_r;
    for (const Pose& pose : trace) {
        const double px = pose.x - raster.bounds.xmin;
        const double py = pose.y - raster.bounds.ymin;
        const int iy_lo = std::max(0, static_cast<int>(std::floor((py - l_r) / cs - 0.5)));
        const int iy_hi = std::min(raster.ny - 1, static_cast<int>(std::ceil((py + l_r) / cs)));
        for (int iy = iy_lo; iy <= iy_hi; ++iy) {
            const double dy = (iy + 0.5) * cs - py;
            const double span2 = r2 - dy * dy;
            if (span2 < 0.0) continue;
            const double half = std::sqrt(span2);
            // centers with |x - px| <= half are inside the footprint row
            const int ix_lo = std::max(0, static_cast<int>(std::ceil((px - half) / cs - 0.5)));
            const int ix_hi =
                std::min(raster.nx - 1, static_cast<int>(std::floor((px + half) / cs - 0.5)));
            if (ix_lo > ix_hi) continue;
            auto row = raster.covered.begin() + static_cast<std::size_t>(iy) * raster.nx;
            std::fill(row + ix_lo, row + ix_hi + 1, std::uint8_t{1});
        }
    }
}

double covered_area(const CoverageRaster& raster) {
    const auto marked = std::count(raster.covered.begin(), raster.covered.end(), std::uint8_t{1});
    return static_cast<double>(marked) * raster.cell_size * raster.cell_size;
}

AreaStats coverage_stats(const CoverageRaster& raster, const Environment& env) {
    AreaStats stats;
    const double cs = raster.cell_size;
    std::int64_t free_cells = 0;
    std::int64_t covered_free = 0;
    for (int iy = 0; iy < raster.ny; ++iy) {
        for (int ix = 0; ix < raster.nx; ++ix) {
            const WorldPoint center{raster.bounds.xmin + (ix + 0.5) * cs,
                                    raster.bounds.ymin + (iy + 0.5) * cs};
            const bool in_obstacle =
                std::any_of(env.obstacles.begin(), env.obstacles.end(),
                            [&](const Disc& d) { return d.contains(center); });
            if (in_obstacle) continue;
            ++free_cells;
            if (raster.at(ix, iy)) ++covered_free;
        }
    }
    stats.free_area = static_cast<double>(free_cells) * cs * cs;
    stats.covered_free_area = static_cast<double>(covered_free) * cs * cs;
    stats.coverage_pct =
        free_cells > 0 ? 100.0 * static_cast<double>(covered_free) / free_cells : 0.0;
    return stats;
}

void write_raster_pgm(const CoverageRaster& raster, std::ostream& out) {
    out << "P5\n" << raster.nx << ' ' << raster.ny << "\n255\n";
    // top row first so the image is not mirrored vertically
    for (int iy = raster.ny - 1; iy >= 0; --iy) {
        for (int ix = 0; ix < raster.nx; ++ix) {
            out.put(raster.at(ix, iy) ? static_cast<char>(255) : static_cast<char>(40));
        }
    }
}

}  // namespace hexcover
