#include "hexcover/environment.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>

namespace hexcover {

namespace {

// deterministic across platforms, unlike std::uniform_real_distribution
double unit_interval(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
}

double uniform_in(std::mt19937_64& rng, double lo, double hi) {
    return lo + unit_interval(rng) * (hi - lo);
}

double point_segment_distance(WorldPoint p, WorldPoint a, WorldPoint b) {
    const WorldPoint ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 == 0.0) return distance(p, a);
    const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return distance(p, a + t * ab);
}

bool point_in_hex(WorldPoint p, const std::array<WorldPoint, 6>& poly) {
    for (std::size_t k = 0; k < 6; ++k) {
        const WorldPoint a = poly[k];
        const WorldPoint b = poly[(k + 1) % 6];
        if (cross(b - a, p - a) < 0.0) return false;  // vertices wind CCW
    }
    return true;
}

bool hex_intersects_disc(const std::array<WorldPoint, 6>& poly, const Disc& disc) {
    if (point_in_hex(disc.center, poly)) return true;
    for (std::size_t k = 0; k < 6; ++k) {
        if (point_segment_distance(disc.center, poly[k], poly[(k + 1) % 6]) <= disc.radius)
            return true;
    }
    return false;
}

bool discs_intersect(const Disc& a, const Disc& b) {
    return distance(a.center, b.center) < a.radius + b.radius;
}

struct Lattice {
    int cols;
    int rows;
    double sx;
    double sy;
    WorldPoint at(const Rect& bounds, int i, int j) const {
        return {bounds.xmin + sx * (i + 1), bounds.ymin + sy * (j + 1)};
    }
};

Lattice lattice_for(const Rect& bounds, int n) {
    const int cols = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
    const int rows = (n + cols - 1) / cols;
    return {cols, rows, bounds.width() / (cols + 1), bounds.height() / (rows + 1)};
}

}  // namespace

Environment generate_environment(EnvKind kind, Rect bounds, int n_obstacles,
                                 std::pair<double, double> radius_range, std::uint64_t seed,
                                 std::optional<Disc> keep_out) {
    Environment env;
    env.bounds = bounds;
    env.seed = seed;
    if (kind == EnvKind::Empty || n_obstacles <= 0) return env;

    std::mt19937_64 rng(seed);
    auto blocked = [&](const Disc& d) { return keep_out && discs_intersect(d, *keep_out); };

    if (kind == EnvKind::Random) {
        int rejections = 0;
        while (static_cast<int>(env.obstacles.size()) < n_obstacles) {
            Disc d;
            d.radius = uniform_in(rng, radius_range.first, radius_range.second);
            d.center.x = uniform_in(rng, bounds.xmin + d.radius, bounds.xmax - d.radius);
            d.center.y = uniform_in(rng, bounds.ymin + d.radius, bounds.ymax - d.radius);
            const bool overlaps =
                blocked(d) || std::any_of(env.obstacles.begin(), env.obstacles.end(),
                                          [&](const Disc& o) { return discs_intersect(d, o); });
            if (overlaps) {
                if (++rejections > 10000)
                    throw PlacementFailure("could not place non-overlapping obstacles");
                continue;
            }
            env.obstacles.push_back(d);
        }
        return env;
    }

    // lattice layouts: strict for Uniform, jittered for InRow
    const Lattice lat = lattice_for(bounds, n_obstacles);
    const double jitter = kind == EnvKind::InRow ? 0.2 * std::min(lat.sx, lat.sy) : 0.0;
    int placed = 0;
    for (int j = 0; j < lat.rows && placed < n_obstacles; ++j) {
        for (int i = 0; i < lat.cols && placed < n_obstacles; ++i) {
            Disc d;
            d.radius = placed % 2 == 0 ? radius_range.first : radius_range.second;
            d.center = lat.at(bounds, i, j);
            if (jitter > 0.0) {
                d.center.x += uniform_in(rng, -jitter, jitter);
                d.center.y += uniform_in(rng, -jitter, jitter);
            }
            d.center.x = std::clamp(d.center.x, bounds.xmin + d.radius, bounds.xmax - d.radius);
            d.center.y = std::clamp(d.center.y, bounds.ymin + d.radius, bounds.ymax - d.radius);
            ++placed;
            if (blocked(d)) continue;  // keep the start cell clear
            env.obstacles.push_back(d);
        }
    }
    return env;
}

Occupancy hex_occupancy(const Environment& env, const CubeCoord& hex, const GridParams& g) {
    const std::array<WorldPoint, 6> poly = hex_polygon(hex, g);
    for (const WorldPoint& v : poly) {
        if (!env.bounds.contains(v)) return Occupancy::Occupied;  // wall cell
    }
    for (const Disc& d : env.obstacles) {
        if (hex_intersects_disc(poly, d)) return Occupancy::Occupied;
    }
    return Occupancy::Free;
}

std::vector<Observation> sense_navigation(const Environment& env, WorldPoint pose,
                                          const SensorConfig& cfg, const GridParams& g) {
    std::vector<Observation> out;
    const CubeCoord at = world_to_cube(pose, g);
    // centers of cells at hex distance k are at least 1.5*r*k away, so this
    // ring covers every cell whose polygon could fit inside the sensor range
    const int ring =
        static_cast<int>(std::ceil((cfg.nav_radius + g.r) / (1.5 * g.r))) + 1;
    for (int dx = -ring; dx <= ring; ++dx) {
        for (int dy = std::max(-ring, -dx - ring); dy <= std::min(ring, -dx + ring); ++dy) {
            const int dz = -dx - dy;
            const CubeCoord cand{at.x + dx, at.y + dy, at.z + dz};
            const std::array<WorldPoint, 6> poly = hex_polygon(cand, g);
            const bool inside = std::all_of(poly.begin(), poly.end(), [&](WorldPoint v) {
                return distance(v, pose) <= cfg.nav_radius;
            });
            if (inside) out.emplace_back(cand, hex_occupancy(env, cand, g));
        }
    }
    return out;
}

std::vector<CubeCoord> reachable_free_set(const Environment& env, const CubeCoord& start,
                                          const GridParams& g) {
    std::vector<CubeCoord> out;
    if (hex_occupancy(env, start, g) != Occupancy::Free) return out;
    VisitedSet seen{start};
    std::deque<CubeCoord> queue{start};
    while (!queue.empty()) {
        const CubeCoord cell = queue.front();
        queue.pop_front();
        out.push_back(cell);
        for (const CubeCoord& n : neighbors(cell)) {
            if (seen.contains(n) || hex_occupancy(env, n, g) != Occupancy::Free) continue;
            seen.insert(n);
            queue.push_back(n);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hexcover
