#include "hexcover/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <sstream>
#include <thread>

namespace hexcover {

namespace {

struct Stats {
    double mean = 0.0;
    double stddev = 0.0;  // sample standard deviation
};

Stats stats_of(const std::vector<double>& xs) {
    Stats s;
    if (xs.empty()) return s;
    for (double x : xs) s.mean += x;
    s.mean /= static_cast<double>(xs.size());
    if (xs.size() > 1) {
        double sq = 0.0;
        for (double x : xs) sq += (x - s.mean) * (x - s.mean);
        s.stddev = std::sqrt(sq / static_cast<double>(xs.size() - 1));
    }
    return s;
}

std::string fmt(const char* format, double a, double b = 0.0) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, a, b);
    return buf;
}

}  // namespace

std::string to_string(Variant variant) {
    return variant == Variant::HDCP ? "hdcp" : "hdcp_e";
}

Environment environment_for(const ExperimentConfig& cfg, std::uint64_t seed) {
    const Rect bounds = mission_bounds(cfg);
    const Disc keep_out{{0.0, 0.0}, resolved_cell_r(cfg)};
    return generate_environment(cfg.env_kind, bounds, cfg.n_obstacles,
                                {cfg.radius_min, cfg.radius_max}, seed, keep_out);
}

MissionConfig mission_config_for(const ExperimentConfig& cfg, Variant variant) {
    MissionConfig mc;
    mc.variant = variant;
    mc.grid.r = resolved_cell_r(cfg);
    mc.path = PathParams{cfg.r_t, cfg.l_r, cfg.r_min, cfg.v};
    mc.sensor = SensorConfig{cfg.nav_radius, cfg.l_r};
    mc.dt = cfg.dt;
    mc.raster_cell = cfg.raster_cell;
    mc.observe_only_coverage = cfg.observe_only;
    return mc;
}

ExperimentOutput run_experiments(const ExperimentConfig& cfg, int jobs, const MissionHook& hook) {
    validate_config(cfg);

    std::vector<Variant> variants;
    if (cfg.variant == VariantChoice::HDCP || cfg.variant == VariantChoice::Both)
        variants.push_back(Variant::HDCP);
    if (cfg.variant == VariantChoice::HDCP_E || cfg.variant == VariantChoice::Both)
        variants.push_back(Variant::HDCP_E);

    struct Task {
        Variant variant;
        std::uint64_t seed;
    };
    std::vector<Task> tasks;
    for (Variant variant : variants) {
        for (std::uint64_t seed : cfg.seeds) tasks.push_back({variant, seed});
    }

    ExperimentOutput output;
    output.rows.resize(tasks.size());

    std::atomic<std::size_t> cursor{0};
    std::mutex hook_mutex;
    std::exception_ptr first_error;

    auto worker = [&] {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= tasks.size()) return;
            try {
                const Task& task = tasks[i];
                const Environment env = environment_for(cfg, task.seed);
                const MissionConfig mc = mission_config_for(cfg, task.variant);
                const MissionResult result = run_mission(env, mc);
                TrialRow& row = output.rows[i];
                row.variant = task.variant;
                row.env_kind = cfg.env_kind;
                row.seed = task.seed;
                row.coverage_pct = result.coverage_pct;
                row.sim_time = result.sim_time;
                row.avg_speed = result.avg_speed;
                row.path_length = result.path_length;
                row.hexes_visited = result.hexes_visited;
                row.completed = result.completed;
                if (hook) {
                    const std::scoped_lock lock(hook_mutex);
                    hook(task.variant, task.seed, result, env);
                }
            } catch (...) {
                const std::scoped_lock lock(hook_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    const int n_workers =
        std::clamp<int>(jobs, 1, static_cast<int>(std::max<std::size_t>(tasks.size(), 1)));
    if (n_workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(n_workers));
        for (int t = 0; t < n_workers; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    std::stable_sort(output.rows.begin(), output.rows.end(),
                     [](const TrialRow& a, const TrialRow& b) {
                         if (a.variant != b.variant) return a.variant < b.variant;
                         return a.seed < b.seed;
                     });
    int trial = 0;
    Variant group = Variant::HDCP;
    for (TrialRow& row : output.rows) {
        if (trial == 0 || row.variant != group) {
            group = row.variant;
            trial = 0;
        }
        row.trial = ++trial;
    }

    std::ostringstream csv;
    csv << "trial,variant,env_kind,seed,coverage_pct,sim_time_s,avg_speed_m2_s,"
           "path_length_m,hexes_visited,completed\n";
    for (const TrialRow& row : output.rows) {
        csv << row.trial << ',' << to_string(row.variant) << ',' << to_string(row.env_kind) << ','
            << row.seed << ',' << fmt("%.2f", row.coverage_pct) << ','
            << fmt("%.2f", row.sim_time) << ',' << fmt("%.4f", row.avg_speed) << ','
            << fmt("%.2f", row.path_length) << ',' << row.hexes_visited << ','
            << (row.completed ? 1 : 0) << '\n';
    }
    for (Variant variant : variants) {
        std::vector<double> cov, time, speed, length, visited;
        int done = 0;
        int total = 0;
        for (const TrialRow& row : output.rows) {
            if (row.variant != variant) continue;
            cov.push_back(row.coverage_pct);
            time.push_back(row.sim_time);
            speed.push_back(row.avg_speed);
            length.push_back(row.path_length);
            visited.push_back(row.hexes_visited);
            done += row.completed ? 1 : 0;
            ++total;
        }
        const Stats c = stats_of(cov), t = stats_of(time), s = stats_of(speed),
                    l = stats_of(length), h = stats_of(visited);
        csv << "aggregate," << to_string(variant) << ',' << to_string(cfg.env_kind) << ",-,"
            << fmt("%.1f±%.1f", c.mean, c.stddev) << ','
            << fmt("%.1f±%.1f", t.mean, t.stddev) << ','
            << fmt("%.3f±%.3f", s.mean, s.stddev) << ','
            << fmt("%.1f±%.1f", l.mean, l.stddev) << ',' << fmt("%.1f", h.mean) << ','
            << done << '/' << total << '\n';
    }
    output.csv = csv.str();
    return output;
}

}  // namespace hexcover
