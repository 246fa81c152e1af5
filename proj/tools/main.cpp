#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hexcover/config.hpp"
#include "hexcover/experiments.hpp"
#include "hexcover/svg.hpp"

namespace fs = std::filesystem;
using namespace hexcover;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

std::string num_arg(double value) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    (void)ec;
    return std::string(buf, end);
}

// every config key gets a mirror flag; only flags the user passed override
// the loaded file
struct Overrides {
    std::optional<std::string> env_kind, variant, start, seeds, out_dir;
    std::optional<double> bounds_w, bounds_h, radius_min, radius_max;
    std::optional<double> r_t, l_r, r_min, v, dt, cell_r, raster_cell, nav_radius;
    std::optional<int> n_obstacles;
    std::optional<bool> observe_only;

    void add_flags(CLI::App* cmd) {
        cmd->add_option("--env-kind", env_kind, "random|uniform|inrow|empty");
        cmd->add_option("--bounds-w", bounds_w, "world width [m]");
        cmd->add_option("--bounds-h", bounds_h, "world height [m]");
        cmd->add_option("--n-obstacles", n_obstacles, "obstacle count");
        cmd->add_option("--radius-min", radius_min, "smallest obstacle radius [m]");
        cmd->add_option("--radius-max", radius_max, "largest obstacle radius [m]");
        cmd->add_option("--seeds", seeds, "comma-separated seed list");
        cmd->add_option("--variant", variant, "hdcp|hdcp_e|both");
        cmd->add_option("--start", start, "center|lowerleft|x,y");
        cmd->add_option("--r-t", r_t, "turning circle radius [m]");
        cmd->add_option("--l-r", l_r, "observation footprint radius [m]");
        cmd->add_option("--r-min", r_min, "minimum turning radius [m]");
        cmd->add_option("--v", v, "forward speed [m/s]");
        cmd->add_option("--dt", dt, "sample period [s]");
        cmd->add_option("--cell-r", cell_r, "hex cell radius [m], 0 = l_r + r_t");
        cmd->add_option("--raster-cell", raster_cell, "coverage raster cell [m]");
        cmd->add_option("--nav-radius", nav_radius, "navigation sensor range [m], 0 = auto");
        cmd->add_option("--observe-only", observe_only,
                        "credit coverage only while observing (0|1)");
        cmd->add_option("--out-dir", out_dir, "output directory");
    }

    void apply(ExperimentConfig& cfg) const {
        std::string text;
        auto set = [&](const char* key, const std::string& value) {
            text += key;
            text += '=';
            text += value;
            text += '\n';
        };
        // reuse the config parser so flag values face identical validation
        if (env_kind) set("env_kind", *env_kind);
        if (bounds_w) set("bounds_w", num_arg(*bounds_w));
        if (bounds_h) set("bounds_h", num_arg(*bounds_h));
        if (n_obstacles) set("n_obstacles", std::to_string(*n_obstacles));
        if (radius_min) set("radius_min", num_arg(*radius_min));
        if (radius_max) set("radius_max", num_arg(*radius_max));
        if (seeds) set("seeds", *seeds);
        if (variant) set("variant", *variant);
        if (start) set("start", *start);
        if (r_t) set("r_t", num_arg(*r_t));
        if (l_r) set("l_r", num_arg(*l_r));
        if (r_min) set("r_min", num_arg(*r_min));
        if (v) set("v", num_arg(*v));
        if (dt) set("dt", num_arg(*dt));
        if (cell_r) set("cell_r", num_arg(*cell_r));
        if (raster_cell) set("raster_cell", num_arg(*raster_cell));
        if (nav_radius) set("nav_radius", num_arg(*nav_radius));
        if (observe_only) set("observe_only", *observe_only ? "1" : "0");
        if (out_dir) set("out_dir", *out_dir);
        if (text.empty()) return;

        cfg = parse_config(serialize_config(cfg) + text);
    }
};

ExperimentConfig load_config(const std::string& config_path, const Overrides& overrides) {
    ExperimentConfig cfg;
    if (!config_path.empty()) cfg = parse_config(read_file(config_path));
    overrides.apply(cfg);
    apply_env_seed_override(cfg);
    validate_config(cfg);
    return cfg;
}

std::vector<Pose> read_trace_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<Pose> trace;
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty trace file: " + path);
    if (line.rfind("t,x,y,theta,mode", 0) != 0)
        throw std::runtime_error("unexpected trace header: " + line);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        Pose p;
        char mode = 'T';
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%c", &p.t, &p.x, &p.y, &p.theta, &mode) !=
            5) {
            throw std::runtime_error("bad trace line: " + line);
        }
        p.mode = mode;
        trace.push_back(p);
    }
    return trace;
}

int cmd_run(const ExperimentConfig& cfg, int jobs, bool no_svg, bool write_traces) {
    fs::create_directories(cfg.out_dir);
    const fs::path out_dir(cfg.out_dir);

    const GridParams g{resolved_cell_r(cfg)};
    MissionHook hook;
    if (!no_svg || write_traces) {
        hook = [&](Variant variant, std::uint64_t seed, const MissionResult& result,
                   const Environment& env) {
            std::ostringstream stem;
            stem << "trace_" << to_string(variant) << '_' << to_string(cfg.env_kind) << "_seed"
                 << seed;
            if (!no_svg) {
                std::ofstream svg(out_dir / (stem.str() + ".svg"), std::ios::binary);
                render_svg(result, env, g, svg);
            }
            if (write_traces) {
                std::ofstream csv(out_dir / (stem.str() + ".csv"), std::ios::binary);
                write_trace_csv(csv, result.pose_trace);
            }
        };
    }

    const ExperimentOutput output = run_experiments(cfg, jobs, hook);
    write_file(out_dir / "metrics.csv", output.csv);
    write_file(out_dir / "config_used.txt", serialize_config(cfg));

    std::cout << output.csv;
    std::cout << "wrote " << (out_dir / "metrics.csv").string() << '\n';
    return 0;
}

int cmd_render(const ExperimentConfig& cfg, std::uint64_t seed, const std::string& trace_path,
               const std::string& out_path) {
    const Environment env = environment_for(cfg, seed);
    const GridParams g{resolved_cell_r(cfg)};

    MissionResult result;
    result.pose_trace = read_trace_csv(trace_path);
    const MissionConfig mc = mission_config_for(cfg, Variant::HDCP);
    compute_metrics(result, env, mc);
    // no planner memory in a bare trace: shade ground-truth occupancy instead
    const SensorConfig sensor{2.0 * std::sqrt(3.0) * g.r, cfg.l_r};
    for (const Pose& p : result.pose_trace) {
        for (const Observation& obs : sense_navigation(env, {p.x, p.y}, sensor, g)) {
            result.planner.explored.insert(obs);
        }
    }

    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    render_svg(result, env, g, out);
    std::cout << "wrote " << out_path << '\n';
    return 0;
}

int cmd_oracle(const ExperimentConfig& cfg, std::uint64_t seed) {
    const Environment env = environment_for(cfg, seed);
    const GridParams g{resolved_cell_r(cfg)};
    const std::vector<CubeCoord> reachable = reachable_free_set(env, {0, 0, 0}, g);
    std::cout << "env_kind=" << to_string(cfg.env_kind) << " seed=" << seed << '\n';
    std::cout << "bounds=" << env.bounds.width() << 'x' << env.bounds.height()
              << " obstacles=" << env.obstacles.size() << '\n';
    std::cout << "reachable_free_cells=" << reachable.size() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hex-decomposition coverage planning for a constant-speed Dubins vehicle"};
    app.require_subcommand(1);

    std::string config_path;
    int jobs = 1;
    bool no_svg = false;
    bool write_traces = false;
    std::uint64_t seed_arg = 0;
    bool seed_given = false;
    std::string trace_path, out_path = "trace.svg";

    auto* run = app.add_subcommand("run", "run seeded experiments; write metrics CSV and SVGs");
    run->add_option("--config", config_path, "key=value config file");
    run->add_option("--jobs", jobs, "parallel missions")->check(CLI::PositiveNumber);
    run->add_flag("--no-svg", no_svg, "skip SVG rendering");
    run->add_flag("--write-traces", write_traces, "write one pose-trace CSV per mission");
    Overrides run_overrides;
    run_overrides.add_flags(run);

    auto* render = app.add_subcommand("render", "render a recorded trace CSV to SVG");
    render->add_option("--config", config_path, "key=value config file");
    render->add_option("--seed", seed_arg, "seed that generated the environment")
        ->each([&](const std::string&) { seed_given = true; });
    render->add_option("--trace", trace_path, "trace CSV (t,x,y,theta,mode)")->required();
    render->add_option("--out", out_path, "output SVG path");
    Overrides render_overrides;
    render_overrides.add_flags(render);

    auto* oracle = app.add_subcommand("oracle", "report flood-fill reachable free cells");
    oracle->add_option("--config", config_path, "key=value config file");
    oracle->add_option("--seed", seed_arg, "environment seed")->each([&](const std::string&) {
        seed_given = true;
    });
    Overrides oracle_overrides;
    oracle_overrides.add_flags(oracle);

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            return cmd_run(load_config(config_path, run_overrides), jobs, no_svg, write_traces);
        }
        if (render->parsed()) {
            const ExperimentConfig cfg = load_config(config_path, render_overrides);
            return cmd_render(cfg, seed_given ? seed_arg : cfg.seeds.front(), trace_path,
                              out_path);
        }
        const ExperimentConfig cfg = load_config(config_path, oracle_overrides);
        return cmd_oracle(cfg, seed_given ? seed_arg : cfg.seeds.front());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
