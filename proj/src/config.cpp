#include "hexcover/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace hexcover {

namespace {

std::string fmt_double(double value) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    (void)ec;  // 32 bytes always fit the shortest round-trip form
    return std::string(buf, end);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

double parse_double(std::string_view key, std::string_view value) {
    double out = 0.0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw std::runtime_error("bad numeric value for '" + std::string(key) + "': " +
                                 std::string(value));
    }
    return out;
}

int parse_int(std::string_view key, std::string_view value) {
    int out = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw std::runtime_error("bad integer value for '" + std::string(key) + "': " +
                                 std::string(value));
    }
    return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
    if (value == "1" || value == "true") return true;
    if (value == "0" || value == "false") return false;
    throw std::runtime_error("bad boolean value for '" + std::string(key) + "': " +
                             std::string(value));
}

std::vector<std::uint64_t> parse_seed_list(std::string_view value) {
    std::vector<std::uint64_t> seeds;
    std::size_t pos = 0;
    while (pos <= value.size()) {
        std::size_t comma = value.find(',', pos);
        if (comma == std::string_view::npos) comma = value.size();
        const std::string_view item = trim(value.substr(pos, comma - pos));
        if (!item.empty()) {
            std::uint64_t seed = 0;
            auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), seed);
            if (ec != std::errc{} || ptr != item.data() + item.size())
                throw std::runtime_error("bad seed value: " + std::string(item));
            seeds.push_back(seed);
        }
        pos = comma + 1;
    }
    return seeds;
}

EnvKind parse_env_kind(std::string_view value) {
    if (value == "random") return EnvKind::Random;
    if (value == "uniform") return EnvKind::Uniform;
    if (value == "inrow") return EnvKind::InRow;
    if (value == "empty") return EnvKind::Empty;
    throw std::runtime_error("unknown env_kind: " + std::string(value));
}

VariantChoice parse_variant(std::string_view value) {
    if (value == "hdcp") return VariantChoice::HDCP;
    if (value == "hdcp_e") return VariantChoice::HDCP_E;
    if (value == "both") return VariantChoice::Both;
    throw std::runtime_error("unknown variant: " + std::string(value));
}

}  // namespace

std::string to_string(EnvKind kind) {
    switch (kind) {
        case EnvKind::Random: return "random";
        case EnvKind::Uniform: return "uniform";
        case EnvKind::InRow: return "inrow";
        case EnvKind::Empty: return "empty";
    }
    return "random";
}

std::string to_string(VariantChoice variant) {
    switch (variant) {
        case VariantChoice::HDCP: return "hdcp";
        case VariantChoice::HDCP_E: return "hdcp_e";
        case VariantChoice::Both: return "both";
    }
    return "both";
}

ExperimentConfig parse_config(std::string_view text) {
    ExperimentConfig cfg;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        const std::string_view line = trim(text.substr(pos, eol - pos));
        pos = eol + 1;
        if (line.empty() || line.front() == '#') continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            throw std::runtime_error("expected key=value, got: " + std::string(line));
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));

        if (key == "env_kind") {
            cfg.env_kind = parse_env_kind(value);
        } else if (key == "bounds_w") {
            cfg.bounds_w = parse_double(key, value);
        } else if (key == "bounds_h") {
            cfg.bounds_h = parse_double(key, value);
        } else if (key == "n_obstacles") {
            cfg.n_obstacles = parse_int(key, value);
        } else if (key == "radius_min") {
            cfg.radius_min = parse_double(key, value);
        } else if (key == "radius_max") {
            cfg.radius_max = parse_double(key, value);
        } else if (key == "seeds") {
            cfg.seeds = parse_seed_list(value);
        } else if (key == "variant") {
            cfg.variant = parse_variant(value);
        } else if (key == "start") {
            if (value == "center") {
                cfg.start = StartChoice::Center;
            } else if (value == "lowerleft") {
                cfg.start = StartChoice::LowerLeft;
            } else {
                const std::size_t comma = value.find(',');
                if (comma == std::string_view::npos)
                    throw std::runtime_error("start must be center, lowerleft, or x,y");
                cfg.start = StartChoice::Explicit;
                cfg.start_x = parse_double(key, trim(value.substr(0, comma)));
                cfg.start_y = parse_double(key, trim(value.substr(comma + 1)));
            }
        } else if (key == "r_t") {
            cfg.r_t = parse_double(key, value);
        } else if (key == "l_r") {
            cfg.l_r = parse_double(key, value);
        } else if (key == "r_min") {
            cfg.r_min = parse_double(key, value);
        } else if (key == "v") {
            cfg.v = parse_double(key, value);
        } else if (key == "dt") {
            cfg.dt = parse_double(key, value);
        } else if (key == "cell_r") {
            cfg.cell_r = parse_double(key, value);
        } else if (key == "raster_cell") {
            cfg.raster_cell = parse_double(key, value);
        } else if (key == "nav_radius") {
            cfg.nav_radius = parse_double(key, value);
        } else if (key == "observe_only") {
            cfg.observe_only = parse_bool(key, value);
        } else if (key == "out_dir") {
            cfg.out_dir = std::string(value);
        } else {
            throw std::runtime_error("unknown config key: " + std::string(key));
        }
    }
    return cfg;
}

std::string serialize_config(const ExperimentConfig& cfg) {
    std::ostringstream out;
    out << "env_kind=" << to_string(cfg.env_kind) << '\n';
    out << "bounds_w=" << fmt_double(cfg.bounds_w) << '\n';
    out << "bounds_h=" << fmt_double(cfg.bounds_h) << '\n';
    out << "n_obstacles=" << cfg.n_obstacles << '\n';
    out << "radius_min=" << fmt_double(cfg.radius_min) << '\n';
    out << "radius_max=" << fmt_double(cfg.radius_max) << '\n';
    out << "seeds=";
    for (std::size_t i = 0; i < cfg.seeds.size(); ++i) {
        if (i) out << ',';
        out << cfg.seeds[i];
    }
    out << '\n';
    out << "variant=" << to_string(cfg.variant) << '\n';
    out << "start=";
    switch (cfg.start) {
        case StartChoice::Center: out << "center"; break;
        case StartChoice::LowerLeft: out << "lowerleft"; break;
        case StartChoice::Explicit:
            out << fmt_double(cfg.start_x) << ',' << fmt_double(cfg.start_y);
            break;
    }
    out << '\n';
    out << "r_t=" << fmt_double(cfg.r_t) << '\n';
    out << "l_r=" << fmt_double(cfg.l_r) << '\n';
    out << "r_min=" << fmt_double(cfg.r_min) << '\n';
    out << "v=" << fmt_double(cfg.v) << '\n';
    out << "dt=" << fmt_double(cfg.dt) << '\n';
    out << "cell_r=" << fmt_double(cfg.cell_r) << '\n';
    out << "raster_cell=" << fmt_double(cfg.raster_cell) << '\n';
    out << "nav_radius=" << fmt_double(cfg.nav_radius) << '\n';
    out << "observe_only=" << (cfg.observe_only ? 1 : 0) << '\n';
    out << "out_dir=" << cfg.out_dir << '\n';
    return out.str();
}

void validate_config(const ExperimentConfig& cfg) {
    if (!(cfg.bounds_w > 0.0) || !(cfg.bounds_h > 0.0))
        throw std::invalid_argument("bounds must be positive");
    if (cfg.n_obstacles < 0) throw std::invalid_argument("n_obstacles must be non-negative");
    if (!(cfg.radius_min > 0.0) || cfg.radius_max < cfg.radius_min)
        throw std::invalid_argument("need 0 < radius_min <= radius_max");
    if (cfg.seeds.empty()) throw std::invalid_argument("seed list is empty");
    if (!(cfg.r_min > 0.0) || !(cfg.r_min <= cfg.r_t) || !(cfg.r_t <= cfg.l_r))
        throw std::invalid_argument("need 0 < r_min <= r_t <= l_r");
    if (!(cfg.v > 0.0)) throw std::invalid_argument("v must be positive");
    if (!(cfg.dt > 0.0)) throw std::invalid_argument("dt must be positive");
    if (cfg.cell_r < 0.0) throw std::invalid_argument("cell_r must be non-negative");
    if (!(cfg.raster_cell > 0.0) || cfg.raster_cell > cfg.l_r / 5.0 + 1e-12)
        throw std::invalid_argument("raster_cell must be positive and at most l_r/5");
    if (cfg.nav_radius < 0.0) throw std::invalid_argument("nav_radius must be non-negative");
    const double r = resolved_cell_r(cfg);
    if (cfg.nav_radius > 0.0 && cfg.nav_radius < 2.0 * std::sqrt(3.0) * r)
        throw std::invalid_argument("nav_radius too small to sense adjacent cells");
    if (cfg.r_t > r / 2.0 + 1e-12)
        throw std::invalid_argument("turning radius above half the cell radius is unsafe");
}

void apply_env_seed_override(ExperimentConfig& cfg) {
    const char* env = std::getenv("HEXCOVER_SEED");
    if (!env || *env == '\0') return;
    cfg.seeds = parse_seed_list(env);
    if (cfg.seeds.empty()) throw std::runtime_error("HEXCOVER_SEED is set but holds no seeds");
}

double resolved_cell_r(const ExperimentConfig& cfg) {
    return cfg.cell_r > 0.0 ? cfg.cell_r : cfg.l_r + cfg.r_t;
}

Rect mission_bounds(const ExperimentConfig& cfg) {
    const double r = resolved_cell_r(cfg);
    double ox = 0.0;  // robot offset from the lower-left corner
    double oy = 0.0;
    switch (cfg.start) {
        case StartChoice::Center:
            ox = cfg.bounds_w / 2.0;
            oy = cfg.bounds_h / 2.0;
            break;
        case StartChoice::LowerLeft:
            ox = 2.0 * r;
            oy = 2.0 * r;
            break;
        case StartChoice::Explicit:
            ox = cfg.start_x;
            oy = cfg.start_y;
            break;
    }
    return Rect{-ox, -oy, cfg.bounds_w - ox, cfg.bounds_h - oy};
}

}  // namespace hexcover
