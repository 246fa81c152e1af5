#pragma once

#include <cstddef>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

#include "hexcover/coverage.hpp"
#include "hexcover/dubins.hpp"
#include "hexcover/environment.hpp"
#include "hexcover/hex.hpp"
#include "hexcover/planner.hpp"

namespace hexcover {

struct MissionConfig {
    Variant variant = Variant::HDCP;
    GridParams grid;  // cell radius r, normally l_r + r_t
    PathParams path;
    SensorConfig sensor{0.0, 0.5};  // nav_radius 0 means "use 2*sqrt(3)*r"
    double dt = 0.02;
    double raster_cell = 0.05;
    CubeCoord start_hex{0, 0, 0};
    bool observe_only_coverage = false;  // credit only observing-circle samples
    std::size_t max_steps = 200000;      // planner command safety cap
    std::ostream* planner_log = nullptr;
};

struct MissionResult {
    std::vector<Pose> pose_trace;
    double coverage_pct = 0.0;
    double sim_time = 0.0;    // path_length / v
    double avg_speed = 0.0;   // covered free area / sim_time [m^2/s]
    double path_length = 0.0;
    int hexes_visited = 0;
    bool completed = false;
    PlannerState planner;   // final planner memory, kept for inspection
    CoverageRaster raster;
    std::vector<DubinsPath> geometry;  // every executed path, in order
};

/// Transition requested into a cell that ground truth says is occupied.
/// Cannot happen with noise-free sensing; indicates a planner/sensor bug.
struct Stuck : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Run one coverage mission: sense, plan, build the smooth path, advance at
/// constant speed, repeat until the planner reports done. Deterministic for
/// a given environment and config. Trace samples are spaced v*dt apart in
/// arc length across the whole mission, ending with the exact final pose.
MissionResult run_mission(const Environment& env, const MissionConfig& cfg);

/// Fill in raster, coverage/speed/time metrics from the recorded trace.
void compute_metrics(MissionResult& result, const Environment& env, const MissionConfig& cfg);

/// CSV with header t,x,y,theta,mode.
void write_trace_csv(std::ostream& out, std::span<const Pose> trace);

}  // namespace hexcover
