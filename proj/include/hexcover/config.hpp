#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hexcover/environment.hpp"

namespace hexcover {

enum class VariantChoice { HDCP, HDCP_E, Both };
enum class StartChoice { Center, LowerLeft, Explicit };

/// Flat key=value experiment description. CLI flags mirror the key names.
struct ExperimentConfig {
    EnvKind env_kind = EnvKind::Random;
    double bounds_w = 20.0;
    double bounds_h = 20.0;
    int n_obstacles = 20;
    double radius_min = 0.15;  // trunk radii: two tree sizes per map
    double radius_max = 0.35;
    std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    VariantChoice variant = VariantChoice::Both;
    StartChoice start = StartChoice::Center;
    double start_x = 0.0;  // offset of the robot from the lower-left corner
    double start_y = 0.0;  // (only used when start is an explicit point)
    double r_t = 0.5;
    double l_r = 0.5;
    double r_min = 0.3;
    double v = 1.0;
    double dt = 0.02;
    double cell_r = 0.0;       // 0 means derive as l_r + r_t
    double raster_cell = 0.05;
    double nav_radius = 0.0;   // 0 means derive as 2*sqrt(3)*cell radius
    bool observe_only = false; // credit coverage only while observing
    std::string out_dir = "out";

    bool operator==(const ExperimentConfig&) const = default;
};

std::string to_string(EnvKind kind);
std::string to_string(VariantChoice variant);

/// Throws std::runtime_error naming the offending line on any unknown key or
/// unparsable value. Lines that are empty or start with '#' are skipped.
ExperimentConfig parse_config(std::string_view text);

/// Inverse of parse_config: parse(serialize(cfg)) == cfg, byte-stable.
std::string serialize_config(const ExperimentConfig& cfg);

/// Throws std::invalid_argument on out-of-range physical parameters.
void validate_config(const ExperimentConfig& cfg);

/// HEXCOVER_SEED (comma-separated list) replaces the seed list when set.
void apply_env_seed_override(ExperimentConfig& cfg);

/// Cell radius after applying the derive-from-footprint default.
double resolved_cell_r(const ExperimentConfig& cfg);

/// World bounds anchored so the robot's start cell sits at the origin:
/// Center puts the origin mid-bounds, LowerLeft insets it 2 cell radii from
/// the corner, Explicit uses the configured offset from the corner.
Rect mission_bounds(const ExperimentConfig& cfg);

}  // namespace hexcover
