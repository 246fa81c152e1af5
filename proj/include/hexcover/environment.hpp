#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hexcover/geom.hpp"
#include "hexcover/hex.hpp"
#include "hexcover/planner.hpp"

namespace hexcover {

enum class EnvKind { Random, Uniform, InRow, Empty };

/// Ground-truth world: axis-aligned bounds with disc obstacles (tree trunks).
struct Environment {
    Rect bounds;
    std::vector<Disc> obstacles;
    std::uint64_t seed = 0;
};

struct PlacementFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Procedural obstacle fields, deterministic per seed.
/// Random: rejection-sampled non-overlapping discs fully inside bounds.
/// Uniform: a strict lattice alternating the two radii of radius_range.
/// InRow: the same lattice with seeded positional jitter.
/// Empty: no obstacles.
/// Discs intersecting the optional keep_out disc are resampled (Random) or
/// dropped (lattice kinds) so a start cell can be kept clear.
Environment generate_environment(EnvKind kind, Rect bounds, int n_obstacles,
                                 std::pair<double, double> radius_range, std::uint64_t seed,
                                 std::optional<Disc> keep_out = std::nullopt);

/// Ground-truth cell status: Occupied when the cell polygon intersects any
/// obstacle disc or pokes outside the bounds (walls), Free otherwise.
Occupancy hex_occupancy(const Environment& env, const CubeCoord& hex, const GridParams& g);

struct SensorConfig {
    double nav_radius = 0.0;  // navigation sensor range [m]
    double l_r = 0.5;         // observation footprint radius [m]
};

/// Idealized noise-free navigation sensing: classifies every cell whose
/// polygon lies entirely within nav_radius of the pose. Output order is
/// deterministic (scanline over the candidate ring).
std::vector<Observation> sense_navigation(const Environment& env, WorldPoint pose,
                                          const SensorConfig& cfg, const GridParams& g);

/// All Free cells reachable from start through adjacent Free cells,
/// sorted by (x, y, z). The walls bound the search.
std::vector<CubeCoord> reachable_free_set(const Environment& env, const CubeCoord& start,
                                          const GridParams& g);

}  // namespace hexcover
