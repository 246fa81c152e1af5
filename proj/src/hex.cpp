#include "hexcover/hex.hpp"

#include <cmath>
#include <cstdlib>
#include <ostream>

namespace hexcover {

namespace {
constexpr double kSqrt3 = 1.7320508075688772;
}

std::ostream& operator<<(std::ostream& os, const CubeCoord& c) {
    return os << '(' << c.x << ',' << c.y << ',' << c.z << ')';
}

std::array<CubeCoord, 6> neighbors(const CubeCoord& c) {
    return {{
        {c.x, c.y - 1, c.z + 1},
        {c.x + 1, c.y - 1, c.z},
        {c.x + 1, c.y, c.z - 1},
        {c.x, c.y + 1, c.z - 1},
        {c.x - 1, c.y + 1, c.z},
        {c.x - 1, c.y, c.z + 1},
    }};
}

WorldPoint cube_to_world(const CubeCoord& c, const GridParams& g) {
    return {1.5 * g.r * c.x, 0.5 * kSqrt3 * g.r * (c.y - c.z)};
}

CubeCoord world_to_cube(const WorldPoint& p, const GridParams& g) {
    // Fractional inverse of cube_to_world, then cube rounding: round all
    // three axes and recompute the one with the largest rounding error so
    // the zero-sum invariant holds.
    const double xf = (2.0 / 3.0) * p.x / g.r;
    const double yf = (-1.0 / 3.0) * p.x / g.r + (kSqrt3 / 3.0) * p.y / g.r;
    const double zf = -xf - yf;

    int rx = static_cast<int>(std::lround(xf));
    int ry = static_cast<int>(std::lround(yf));
    int rz = static_cast<int>(std::lround(zf));

    const double dx = std::abs(rx - xf);
    const double dy = std::abs(ry - yf);
    const double dz = std::abs(rz - zf);

    if (dx > dy && dx > dz) {
        rx = -ry - rz;
    } else if (dy > dz) {
        ry = -rx - rz;
    } else {
        rz = -rx - ry;
    }
    return {rx, ry, rz};
}

int hex_distance(const CubeCoord& a, const CubeCoord& b) {
    return (std::abs(a.x - b.x) + std::abs(a.y - b.y) + std::abs(a.z - b.z)) / 2;
}

std::array<WorldPoint, 6> hex_polygon(const CubeCoord& c, const GridParams& g) {
    const WorldPoint center = cube_to_world(c, g);
    std::array<WorldPoint, 6> verts;
    for (int k = 0; k < 6; ++k) {
        const double a = kPi / 3.0 * k;
        verts[k] = {center.x + g.r * std::cos(a), center.y + g.r * std::sin(a)};
    }
    return verts;
}

}  // namespace hexcover
