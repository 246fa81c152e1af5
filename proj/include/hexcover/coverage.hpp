#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "hexcover/environment.hpp"
#include "hexcover/geom.hpp"

namespace hexcover {

/// Boolean occupancy-of-coverage grid over the environment bounds.
/// Cell (ix, iy) covers the square with center
/// (xmin + (ix+0.5)*cell_size, ymin + (iy+0.5)*cell_size).
struct CoverageRaster {
    Rect bounds;
    double cell_size = 0.05;
    int nx = 0;
    int ny = 0;
    std::vector<std::uint8_t> covered;  // row-major, iy * nx + ix

    bool at(int ix, int iy) const { return covered[static_cast<std::size_t>(iy) * nx + ix] != 0; }
};

CoverageRaster make_raster(Rect bounds, double cell_size);

/// Mark every cell whose center lies within l_r of any trace sample.
/// Sample spacing at or below cell_size leaves no gaps in the swath.
void sweep_coverage(CoverageRaster& raster, std::span<const Pose> trace, double l_r);

/// Total marked area in square meters.
double covered_area(const CoverageRaster& raster);

/// Area accounting that excludes obstacle interiors from both sides:
/// free = cells outside every obstacle disc, covered = marked ∩ free.
struct AreaStats {
    double free_area = 0.0;
    double covered_free_area = 0.0;
    double coverage_pct = 0.0;
};

AreaStats coverage_stats(const CoverageRaster& raster, const Environment& env);

/// Binary PGM (P5) dump, one byte per cell, bottom row last.
void write_raster_pgm(const CoverageRaster& raster, std::ostream& out);

}  // namespace hexcover
