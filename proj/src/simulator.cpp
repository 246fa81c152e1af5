#include "hexcover/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace hexcover {

namespace {

// Streams pose samples spaced v*dt apart in arc length across path
// boundaries, so speed stays constant over the whole mission trace.
struct TraceBuilder {
    std::vector<Pose>& out;
    double step;  // v * dt [m]
    double v;
    double total_s = 0.0;
    std::uint64_t next_index = 0;

    void append(const DubinsPath& path, char mode) {
        const double len = path_length(path);
        for (;; ++next_index) {
            const double s_global = step * static_cast<double>(next_index);
            if (s_global > total_s + len + 1e-12) break;
            const double local = std::clamp(s_global - total_s, 0.0, len);
            const PathPoint pp = pose_on_path(path, local);
            out.push_back({s_global / v, pp.p.x, pp.p.y, pp.heading, mode});
        }
        total_s += len;
    }

    void finish(const PathPoint& end, char mode) {
        const double t_end = total_s / v;
        if (out.empty() || t_end - out.back().t > 1e-12)
            out.push_back({t_end, end.p.x, end.p.y, end.heading, mode});
    }
};

}  // namespace

MissionResult run_mission(const Environment& env, const MissionConfig& cfg) {
    validate(cfg.path);
    if (!(cfg.dt > 0.0)) throw std::invalid_argument("dt must be positive");
    if (!(cfg.grid.r > 0.0)) throw std::invalid_argument("cell radius must be positive");

    const GridParams g = cfg.grid;
    SensorConfig sensor = cfg.sensor;
    if (sensor.nav_radius <= 0.0) sensor.nav_radius = 2.0 * std::sqrt(3.0) * g.r;
    sensor.l_r = cfg.path.l_r;

    if (hex_occupancy(env, cfg.start_hex, g) != Occupancy::Free)
        throw std::invalid_argument("start cell is not free");

    MissionResult result;
    result.planner = make_planner(cfg.variant, cfg.start_hex);
    result.planner.step_log = cfg.planner_log;
    PlannerState& planner = result.planner;

    const WorldPoint start_center = cube_to_world(cfg.start_hex, g);
    WorldPoint mu = start_center + WorldPoint{cfg.path.r_t, 0.0};
    Sense sense = Sense::CCW;

    {
        const auto first_look = sense_navigation(env, start_center, sensor, g);
        update_explored(planner, first_look);
    }

    TraceBuilder trace{result.pose_trace, cfg.path.v * cfg.dt, cfg.path.v};
    PathPoint last_end{mu, kPi / 2.0};  // on-circle start pose, CCW tangent
    char last_mode = 'T';

    for (std::size_t commands = 0;; ++commands) {
        if (commands > cfg.max_steps) throw std::runtime_error("mission exceeded command cap");
        const PlannerCommand cmd = planner_step(planner);
        if (std::holds_alternative<DoneCmd>(cmd)) break;

        if (const auto* obs = std::get_if<ObserveCmd>(&cmd)) {
            const WorldPoint center = cube_to_world(obs->hex, g);
            const DubinsPath circle = build_observe_circle(center, mu, cfg.path, sense);
            trace.append(circle, 'O');
            result.path_length += path_length(circle);
            last_end = pose_on_path(circle, path_length(circle));
            last_mode = 'O';
            result.geometry.push_back(circle);
            continue;  // mu and sense are unchanged by a closed loop
        }

        const auto& hop = std::get<TransitionCmd>(cmd);
        if (hex_occupancy(env, hop.to, g) != Occupancy::Free)
            throw Stuck("planner requested a transition into an occupied cell");
        const TransitionResult leg =
            build_transition(cube_to_world(hop.from, g), cube_to_world(hop.to, g), mu, cfg.path,
                             sense);
        trace.append(leg.path, 'T');
        result.path_length += path_length(leg.path);
        last_end = pose_on_path(leg.path, path_length(leg.path));
        last_mode = 'T';
        result.geometry.push_back(leg.path);
        mu = leg.mu_j;
        sense = leg.sense_j;

        const auto look = sense_navigation(env, cube_to_world(hop.to, g), sensor, g);
        update_explored(planner, look);
    }
    trace.finish(last_end, last_mode);

    // audit: the constructed trajectory must never touch an obstacle
    for (const Pose& p : result.pose_trace) {
        for (const Disc& d : env.obstacles) {
            if (d.contains({p.x, p.y})) throw std::logic_error("trace sample inside an obstacle");
        }
    }

    result.completed = is_mission_complete(planner);
    result.hexes_visited = static_cast<int>(planner.visited.size());
    compute_metrics(result, env, cfg);
    return result;
}

void compute_metrics(MissionResult& result, const Environment& env, const MissionConfig& cfg) {
    result.raster = make_raster(env.bounds, cfg.raster_cell);
    if (cfg.observe_only_coverage) {
        std::vector<Pose> observing;
        std::copy_if(result.pose_trace.begin(), result.pose_trace.end(),
                     std::back_inserter(observing), [](const Pose& p) { return p.mode == 'O'; });
        sweep_coverage(result.raster, observing, cfg.path.l_r);
    } else {
        sweep_coverage(result.raster, result.pose_trace, cfg.path.l_r);
    }
    const AreaStats stats = coverage_stats(result.raster, env);
    result.coverage_pct = stats.coverage_pct;
    result.sim_time = result.path_length / cfg.path.v;
    result.avg_speed = result.sim_time > 0.0 ? stats.covered_free_area / result.sim_time : 0.0;
}

void write_trace_csv(std::ostream& out, std::span<const Pose> trace) {
    out << "t,x,y,theta,mode\n";
    char line[160];
    for (const Pose& p : trace) {
        std::snprintf(line, sizeof line, "%.6f,%.6f,%.6f,%.6f,%c\n", p.t, p.x, p.y, p.theta,
                      p.mode);
        out << line;
    }
}

}  // namespace hexcover
