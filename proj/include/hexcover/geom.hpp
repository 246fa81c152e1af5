#pragma once

#include <cmath>

namespace hexcover {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

struct WorldPoint {
    double x = 0.0;
    double y = 0.0;
};

inline WorldPoint operator+(WorldPoint a, WorldPoint b) { return {a.x + b.x, a.y + b.y}; }
inline WorldPoint operator-(WorldPoint a, WorldPoint b) { return {a.x - b.x, a.y - b.y}; }
inline WorldPoint operator*(double s, WorldPoint p) { return {s * p.x, s * p.y}; }

inline double dot(WorldPoint a, WorldPoint b) { return a.x * b.x + a.y * b.y; }
inline double cross(WorldPoint a, WorldPoint b) { return a.x * b.y - a.y * b.x; }
inline double norm(WorldPoint p) { return std::hypot(p.x, p.y); }
inline double distance(WorldPoint a, WorldPoint b) { return norm(a - b); }

// Quarter-turn rotations; the tangent direction of a circle at offset p
// from its center is rot90_ccw(p) for counter-clockwise travel.
inline WorldPoint rot90_ccw(WorldPoint p) { return {-p.y, p.x}; }
inline WorldPoint rot90_cw(WorldPoint p) { return {p.y, -p.x}; }

/// Wrap an angle to (-pi, pi].
inline double wrap_angle(double a) {
    a = std::fmod(a, kTwoPi);
    if (a <= -kPi) a += kTwoPi;
    if (a > kPi) a -= kTwoPi;
    return a;
}

/// Wrap an angle to [0, 2*pi).
inline double wrap_positive(double a) {
    a = std::fmod(a, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    return a;
}

struct Rect {
    double xmin = 0.0;
    double ymin = 0.0;
    double xmax = 0.0;
    double ymax = 0.0;

    double width() const { return xmax - xmin; }
    double height() const { return ymax - ymin; }
    double area() const { return width() * height(); }
    bool contains(WorldPoint p) const {
        return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax;
    }
};

struct Disc {
    WorldPoint center;
    double radius = 0.0;

    bool contains(WorldPoint p) const { return distance(center, p) <= radius; }
};

/// Timed sample of the robot trajectory. mode is 'O' while the robot runs
/// an observing circle and 'T' while it transitions between cells.
struct Pose {
    double t = 0.0;
    double x = 0.0;
    double y = 0.0;
    double theta = 0.0;
    char mode = 'T';
};

}  // namespace hexcover
