#pragma once

#include <array>
#include <stdexcept>
#include <variant>
#include <vector>

#include "hexcover/geom.hpp"

namespace hexcover {

/// Motion and footprint parameters of the vehicle. The turning circle used
/// for observing and for transition arcs has radius r_t; it must be at least
/// the minimum turning radius and no larger than the sensing footprint so a
/// full loop sweeps the whole cell area the plan credits it for.
struct PathParams {
    double r_t = 0.5;    // turning circle radius [m]
    double l_r = 0.5;    // coverage footprint radius [m]
    double r_min = 0.3;  // minimum turning radius [m]
    double v = 1.0;      // constant forward speed [m/s]
};

/// Throws std::invalid_argument unless 0 < r_min <= r_t <= l_r and v > 0.
void validate(const PathParams& params);

enum class Sense { CCW, CW };

constexpr Sense flip(Sense s) { return s == Sense::CCW ? Sense::CW : Sense::CCW; }

enum class TangentKind { Inner, Outer };

/// Circular arc. sweep is signed: positive turns counter-clockwise.
struct ArcSegment {
    WorldPoint center;
    double radius = 0.0;
    double start_angle = 0.0;
    double sweep = 0.0;
};

struct LineSegment {
    WorldPoint start;
    WorldPoint end;
};

using PathSegment = std::variant<ArcSegment, LineSegment>;

/// A smooth constant-curvature-bounded path: consecutive segments share
/// endpoints and tangent headings. anchor is the point on the source circle
/// where the path begins.
struct DubinsPath {
    std::vector<PathSegment> segments;
    WorldPoint anchor;
    Sense sense = Sense::CCW;
};

/// One tangent line between two equal circles: departure point phi on the
/// source circle, arrival point mu_next on the target circle.
struct TangentSolution {
    WorldPoint phi;
    WorldPoint mu_next;
    TangentKind kind = TangentKind::Outer;
};

struct DegenerateCenters : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CirclesTooClose : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ChordTooLong : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct AnchorOffCircle : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Both outer tangent pairs of the equal circles (c1, r_t), (c2, r_t).
/// Throws DegenerateCenters when the centers are closer than 1e-9.
std::array<TangentSolution, 2> outer_tangents(const WorldPoint& c1, const WorldPoint& c2,
                                              double r_t);

/// Both inner (crossing) tangent pairs. Throws CirclesTooClose when the
/// circles overlap (center distance below 2*r_t), in which case only outer
/// tangents exist.
std::array<TangentSolution, 2> inner_tangents(const WorldPoint& c1, const WorldPoint& c2,
                                              double r_t);

/// Arc angle in [0, 2pi) swept traveling from mu to phi around center in the
/// given rotation sense.
double directed_arc_angle(const WorldPoint& mu, const WorldPoint& phi, const WorldPoint& center,
                          Sense sense);

/// The candidate reachable with the least rotation from mu_i along the
/// current sense. Ties keep the earliest candidate.
TangentSolution select_tangent(const WorldPoint& mu_i, const WorldPoint& c1, Sense sense,
                               const std::vector<TangentSolution>& candidates);

struct TransitionArc {
    double alpha;  // arc angle in [0, pi] subtended by the chord mu_i -> phi
    double l;      // straight-line length phi -> mu_next
};

/// Closed-form arc angle from the chord between the current anchor and the
/// departure point, plus the tangent segment length. Throws ChordTooLong if
/// the chord exceeds the circle diameter (plus 1e-9 slack).
TransitionArc transition_arc_params(const WorldPoint& mu_i, const TangentSolution& sol,
                                    double r_t);

/// Full observation loop: one 2pi arc around hex_center starting and ending
/// at mu. Throws AnchorOffCircle when mu is not on the circle within 1e-9.
DubinsPath build_observe_circle(const WorldPoint& hex_center, const WorldPoint& mu,
                                const PathParams& params, Sense sense);

struct TransitionResult {
    DubinsPath path;
    WorldPoint mu_j;  // anchor on the target circle
    Sense sense_j;    // rotation sense after arrival (outer keeps it, inner flips)
};

/// Arc-plus-tangent-line path from the circle about c_i (entered at mu_i,
/// rotating with the given sense) to the circle about c_j. Candidates that
/// would require leaving against the travel direction are discarded; among
/// the rest the one needing the least rotation wins. A sweep below 1e-9 rad
/// drops the arc segment entirely.
TransitionResult build_transition(const WorldPoint& c_i, const WorldPoint& c_j,
                                  const WorldPoint& mu_i, const PathParams& params, Sense sense);

double segment_length(const PathSegment& seg);
double path_length(const DubinsPath& path);

struct PathPoint {
    WorldPoint p;
    double heading = 0.0;
};

/// Point and tangent heading at arc length s into the segment (s clamped).
PathPoint pose_on_segment(const PathSegment& seg, double s);

/// Point and tangent heading at arc length s along the whole path (clamped).
PathPoint pose_on_path(const DubinsPath& path, double s);

/// Poses spaced v*dt apart in arc length from the path start, plus the exact
/// endpoint. Timestamps start at 0; headings are tangent to the path.
std::vector<Pose> sample_path(const DubinsPath& path, double v, double dt);

}  // namespace hexcover
