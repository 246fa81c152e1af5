#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>

#include "hexcover/geom.hpp"

namespace hexcover {

/// Cell identifier on the hexagonal grid, using three integer axes that
/// always sum to zero.
struct CubeCoord {
    int x = 0;
    int y = 0;
    int z = 0;

    auto operator<=>(const CubeCoord&) const = default;
};

std::ostream& operator<<(std::ostream& os, const CubeCoord& c);

struct CubeHash {
    std::size_t operator()(const CubeCoord& c) const {
        // x and y determine z, two axes are enough
        std::uint64_t h = static_cast<std::uint32_t>(c.x);
        h = (h << 32) | static_cast<std::uint32_t>(c.y);
        h *= 0x9E3779B97F4A7C15ull;
        h ^= h >> 29;
        return static_cast<std::size_t>(h);
    }
};

/// Hexagon side length (= circumradius) of the grid, in meters.
struct GridParams {
    double r = 1.0;
};

/// The six adjacent cells of c, in a fixed canonical order. This order is
/// the deterministic tie-break order used by the planner.
std::array<CubeCoord, 6> neighbors(const CubeCoord& c);

/// Center of the cell in world coordinates.
WorldPoint cube_to_world(const CubeCoord& c, const GridParams& g);

/// The cell containing p. Points exactly on a cell edge resolve
/// deterministically via cube rounding.
CubeCoord world_to_cube(const WorldPoint& p, const GridParams& g);

/// Minimum hop count between two cells on an obstacle-free grid.
int hex_distance(const CubeCoord& a, const CubeCoord& b);

/// The six corner vertices of the cell, flat-top orientation, vertex 0 at
/// angle 0 from the center.
std::array<WorldPoint, 6> hex_polygon(const CubeCoord& c, const GridParams& g);

}  // namespace hexcover
