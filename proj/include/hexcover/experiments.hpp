#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hexcover/config.hpp"
#include "hexcover/simulator.hpp"

namespace hexcover {

struct TrialRow {
    int trial = 0;  // 1-based position within its variant group
    Variant variant = Variant::HDCP;
    EnvKind env_kind = EnvKind::Random;
    std::uint64_t seed = 0;
    double coverage_pct = 0.0;
    double sim_time = 0.0;
    double avg_speed = 0.0;
    double path_length = 0.0;
    int hexes_visited = 0;
    bool completed = false;
};

struct ExperimentOutput {
    std::vector<TrialRow> rows;  // sorted by (variant, seed)
    std::string csv;             // per-trial rows plus one aggregate row per variant
};

std::string to_string(Variant variant);

/// World for one trial: bounds anchored per the start choice and obstacles
/// generated from the seed, with the start cell kept clear.
Environment environment_for(const ExperimentConfig& cfg, std::uint64_t seed);

MissionConfig mission_config_for(const ExperimentConfig& cfg, Variant variant);

/// Called once per finished mission (serialized across workers).
using MissionHook =
    std::function<void(Variant, std::uint64_t, const MissionResult&, const Environment&)>;

/// Run every (variant, seed) mission, fan out over jobs worker threads, and
/// assemble the metrics table. Output is byte-identical for any jobs value.
ExperimentOutput run_experiments(const ExperimentConfig& cfg, int jobs = 1,
                                 const MissionHook& hook = {});

}  // namespace hexcover
