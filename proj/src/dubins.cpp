#include "hexcover/dubins.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hexcover {

namespace {

constexpr double kSnapEps = 1e-9;

double angle_of(WorldPoint p) { return std::atan2(p.y, p.x); }

// tangent direction of the circle at offset `radial` from its center for the
// given travel sense (not normalized)
WorldPoint circle_tangent(WorldPoint radial, Sense sense) {
    return sense == Sense::CCW ? rot90_ccw(radial) : rot90_cw(radial);
}

}  // namespace

void validate(const PathParams& params) {
    if (!(params.r_min > 0.0)) throw std::invalid_argument("r_min must be positive");
    if (!(params.v > 0.0)) throw std::invalid_argument("v must be positive");
    if (!(params.r_min <= params.r_t))
        throw std::invalid_argument("turning circle radius r_t below minimum turning radius");
    if (!(params.r_t <= params.l_r))
        throw std::invalid_argument("turning circle radius r_t exceeds footprint radius l_r");
}

std::array<TangentSolution, 2> outer_tangents(const WorldPoint& c1, const WorldPoint& c2,
                                              double r_t) {
    const WorldPoint delta = c2 - c1;
    const double d = norm(delta);
    if (d < 1e-9) throw DegenerateCenters("circle centers coincide");
    const WorldPoint n = (1.0 / d) * rot90_ccw(delta);
    return {TangentSolution{c1 + r_t * n, c2 + r_t * n, TangentKind::Outer},
            TangentSolution{c1 - r_t * n, c2 - r_t * n, TangentKind::Outer}};
}

std::array<TangentSolution, 2> inner_tangents(const WorldPoint& c1, const WorldPoint& c2,
                                              double r_t) {
    const WorldPoint delta = c2 - c1;
    const double w = dot(delta, delta);
    if (w < 4.0 * r_t * r_t) throw CirclesTooClose("circles overlap, no inner tangents");
    const double root = std::sqrt(w - 4.0 * r_t * r_t);
    const WorldPoint along = (2.0 * r_t * r_t / w) * delta;
    const WorldPoint across = (r_t * root / w) * rot90_cw(delta);
    const WorldPoint phi_a = c1 + along + across;
    const WorldPoint phi_b = c1 + (along - across);
    // the inner tangent points are point-symmetric about the midpoint
    return {TangentSolution{phi_a, c1 + delta - (phi_a - c1), TangentKind::Inner},
            TangentSolution{phi_b, c1 + delta - (phi_b - c1), TangentKind::Inner}};
}

double directed_arc_angle(const WorldPoint& mu, const WorldPoint& phi, const WorldPoint& center,
                          Sense sense) {
    const double a_mu = angle_of(mu - center);
    const double a_phi = angle_of(phi - center);
    return wrap_positive(sense == Sense::CCW ? a_phi - a_mu : a_mu - a_phi);
}

TangentSolution select_tangent(const WorldPoint& mu_i, const WorldPoint& c1, Sense sense,
                               const std::vector<TangentSolution>& candidates) {
    if (candidates.empty()) throw std::invalid_argument("no tangent candidates");
    const TangentSolution* best = &candidates.front();
    double best_angle = directed_arc_angle(mu_i, best->phi, c1, sense);
    for (std::size_t i = 1; i < candidates.size(); ++i) {
        const double angle = directed_arc_angle(mu_i, candidates[i].phi, c1, sense);
        if (angle < best_angle) {
            best_angle = angle;
            best = &candidates[i];
        }
    }
    return *best;
}

TransitionArc transition_arc_params(const WorldPoint& mu_i, const TangentSolution& sol,
                                    double r_t) {
    const double chord = distance(mu_i, sol.phi);
    if (chord > 2.0 * r_t + 1e-9) {
        std::ostringstream msg;
        msg << "chord " << chord << " exceeds circle diameter " << 2.0 * r_t;
        throw ChordTooLong(msg.str());
    }
    const double cos_alpha = std::clamp(1.0 - chord * chord / (2.0 * r_t * r_t), -1.0, 1.0);
    return {std::acos(cos_alpha), distance(sol.phi, sol.mu_next)};
}

DubinsPath build_observe_circle(const WorldPoint& hex_center, const WorldPoint& mu,
                                const PathParams& params, Sense sense) {
    const double residual = std::abs(distance(hex_center, mu) - params.r_t);
    if (residual > 1e-9) throw AnchorOffCircle("anchor not on the observing circle");
    ArcSegment arc;
    arc.center = hex_center;
    arc.radius = params.r_t;
    arc.start_angle = angle_of(mu - hex_center);
    arc.sweep = sense == Sense::CCW ? kTwoPi : -kTwoPi;
    DubinsPath path;
    path.segments.emplace_back(arc);
    path.anchor = mu;
    path.sense = sense;
    return path;
}

TransitionResult build_transition(const WorldPoint& c_i, const WorldPoint& c_j,
                                  const WorldPoint& mu_i, const PathParams& params, Sense sense) {
    std::vector<TangentSolution> candidates;
    candidates.reserve(4);
    for (const TangentSolution& sol : outer_tangents(c_i, c_j, params.r_t)) {
        candidates.push_back(sol);
    }
    const double w = dot(c_j - c_i, c_j - c_i);
    if (w >= 4.0 * params.r_t * params.r_t) {
        for (const TangentSolution& sol : inner_tangents(c_i, c_j, params.r_t)) {
            candidates.push_back(sol);
        }
    }

    // keep only departures aligned with the travel direction; exactly one
    // outer and (when they exist) one inner candidate survive
    std::vector<TangentSolution> feasible;
    for (const TangentSolution& sol : candidates) {
        const WorldPoint dir = sol.mu_next - sol.phi;
        if (norm(dir) < 1e-12) {
            feasible.push_back(sol);  // touching circles: tangent line degenerates
            continue;
        }
        if (dot(circle_tangent(sol.phi - c_i, sense), dir) > 0.0) feasible.push_back(sol);
    }

    const TangentSolution chosen = select_tangent(mu_i, c_i, sense, feasible);
    const double sweep_angle = directed_arc_angle(mu_i, chosen.phi, c_i, sense);

    DubinsPath path;
    path.anchor = mu_i;
    path.sense = sense;
    if (sweep_angle > kSnapEps && kTwoPi - sweep_angle > kSnapEps) {
        ArcSegment arc;
        arc.center = c_i;
        arc.radius = params.r_t;
        arc.start_angle = angle_of(mu_i - c_i);
        arc.sweep = sense == Sense::CCW ? sweep_angle : -sweep_angle;
        path.segments.emplace_back(arc);
    }
    if (distance(chosen.phi, chosen.mu_next) > 1e-12)
        path.segments.emplace_back(LineSegment{chosen.phi, chosen.mu_next});

    TransitionResult result;
    result.path = std::move(path);
    result.mu_j = chosen.mu_next;
    result.sense_j = chosen.kind == TangentKind::Outer ? sense : flip(sense);
    return result;
}

double segment_length(const PathSegment& seg) {
    if (const auto* arc = std::get_if<ArcSegment>(&seg))
        return std::abs(arc->sweep) * arc->radius;
    const auto& line = std::get<LineSegment>(seg);
    return distance(line.start, line.end);
}

double path_length(const DubinsPath& path) {
    double total = 0.0;
    for (const PathSegment& seg : path.segments) total += segment_length(seg);
    return total;
}

PathPoint pose_on_segment(const PathSegment& seg, double s) {
    s = std::clamp(s, 0.0, segment_length(seg));
    if (const auto* arc = std::get_if<ArcSegment>(&seg)) {
        const double dir = arc->sweep >= 0.0 ? 1.0 : -1.0;
        const double ang = arc->start_angle + dir * s / arc->radius;
        const WorldPoint p = arc->center + arc->radius * WorldPoint{std::cos(ang), std::sin(ang)};
        return {p, wrap_angle(ang + dir * kPi / 2.0)};
    }
    const auto& line = std::get<LineSegment>(seg);
    const WorldPoint d = line.end - line.start;
    const double len = norm(d);
    const double t = len > 0.0 ? s / len : 0.0;
    return {line.start + t * d, angle_of(d)};
}

PathPoint pose_on_path(const DubinsPath& path, double s) {
    if (path.segments.empty()) return {path.anchor, 0.0};
    s = std::max(s, 0.0);
    for (std::size_t i = 0; i + 1 < path.segments.size(); ++i) {
        const double len = segment_length(path.segments[i]);
        if (s <= len) return pose_on_segment(path.segments[i], s);
        s -= len;
    }
    return pose_on_segment(path.segments.back(), s);
}

std::vector<Pose> sample_path(const DubinsPath& path, double v, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
    if (!(v > 0.0)) throw std::invalid_argument("v must be positive");
    const double total = path_length(path);
    const double step = v * dt;
    std::vector<Pose> out;
    double s = 0.0;
    for (std::size_t k = 0; s <= total + 1e-12; s = step * ++k) {
        const PathPoint pp = pose_on_path(path, std::min(s, total));
        out.push_back({s / v, pp.p.x, pp.p.y, pp.heading, 'T'});
    }
    if (out.empty() || total - out.back().t * v > 1e-12) {
        const PathPoint pp = pose_on_path(path, total);
        out.push_back({total / v, pp.p.x, pp.p.y, pp.heading, 'T'});
    }
    return out;
}

}  // namespace hexcover
