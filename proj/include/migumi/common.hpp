#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace migumi {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTau = 2.0 * std::numbers::pi;

/// Geometry failure with context (degenerate booleans, non-manifold output, ...).
class GeometryError : public std::runtime_error {
public:
    explicit GeometryError(const std::string &what) : std::runtime_error(what) {}
};

/// Schema/IO failure; carries the document path of the offending node.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string &path, const std::string &what)
        : std::runtime_error(path + ": " + what), m_path(path) {}
    const std::string &path() const { return m_path; }

private:
    std::string m_path;
};

/// Default tolerances, all in mm (or mm^2 where noted). Configurable at call sites.
struct Tolerances {
    double intersection = 1e-7;   // curve/curve intersection snapping
    double sdfCheck = 1e-6;       // |sdf - offset| acceptance for level-set samples
    double area = 1e-4;           // mm^2, boolean area consistency
    double chord = 0.02;          // arc polygonization at export/raster boundaries
    double perturb = 1e-6;        // nudge applied to near-tangent boolean inputs
};

inline Tolerances &tolerances() {
    static Tolerances t;
    return t;
}

struct Vec2 {
    double x = 0.0, y = 0.0;

    Vec2() = default;
    Vec2(double px, double py) : x(px), y(py) {}

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2 &operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
    Vec2 &operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }
    bool operator==(const Vec2 &) const = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double lengthSq(Vec2 a) { return dot(a, a); }
inline double length(Vec2 a) { return std::sqrt(lengthSq(a)); }
inline double distance(Vec2 a, Vec2 b) { return length(a - b); }
inline Vec2 operator*(double s, Vec2 v) { return v * s; }
inline Vec2 normalized(Vec2 a) {
    double l = length(a);
    return l > 0.0 ? a / l : Vec2{0.0, 0.0};
}
/// CCW perpendicular.
inline Vec2 perp(Vec2 a) { return {-a.y, a.x}; }
inline bool fuzzyEqual(Vec2 a, Vec2 b, double eps) { return distance(a, b) <= eps; }

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3() = default;
    Vec3(double px, double py, double pz) : x(px), y(py), z(pz) {}

    Vec3 operator+(Vec3 o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(Vec3 o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    bool operator==(const Vec3 &) const = default;
    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double lengthSq(Vec3 a) { return dot(a, a); }
inline double length(Vec3 a) { return std::sqrt(lengthSq(a)); }
inline Vec3 operator*(double s, Vec3 v) { return v * s; }
inline Vec3 normalized(Vec3 a) {
    double l = length(a);
    return l > 0.0 ? a / l : Vec3{0.0, 0.0, 0.0};
}

struct Box2 {
    Vec2 lo{std::numeric_limits<double>::max(), std::numeric_limits<double>::max()};
    Vec2 hi{std::numeric_limits<double>::lowest(), std::numeric_limits<double>::lowest()};

    bool empty() const { return lo.x > hi.x || lo.y > hi.y; }
    void expand(Vec2 p) {
        lo.x = std::min(lo.x, p.x); lo.y = std::min(lo.y, p.y);
        hi.x = std::max(hi.x, p.x); hi.y = std::max(hi.y, p.y);
    }
    void expand(const Box2 &b) { expand(b.lo); expand(b.hi); }
    void inflate(double m) { lo.x -= m; lo.y -= m; hi.x += m; hi.y += m; }
    bool overlaps(const Box2 &b, double margin = 0.0) const {
        return lo.x - margin <= b.hi.x && b.lo.x - margin <= hi.x &&
               lo.y - margin <= b.hi.y && b.lo.y - margin <= hi.y;
    }
    bool contains(Vec2 p) const {
        return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y;
    }
    Vec2 size() const { return hi - lo; }
    Vec2 center() const { return (lo + hi) * 0.5; }
};

struct Box3 {
    Vec3 lo{std::numeric_limits<double>::max(), std::numeric_limits<double>::max(),
            std::numeric_limits<double>::max()};
    Vec3 hi{std::numeric_limits<double>::lowest(), std::numeric_limits<double>::lowest(),
            std::numeric_limits<double>::lowest()};

    bool empty() const { return lo.x > hi.x; }
    void expand(Vec3 p) {
        lo.x = std::min(lo.x, p.x); lo.y = std::min(lo.y, p.y); lo.z = std::min(lo.z, p.z);
        hi.x = std::max(hi.x, p.x); hi.y = std::max(hi.y, p.y); hi.z = std::max(hi.z, p.z);
    }
    void expand(const Box3 &b) { expand(b.lo); expand(b.hi); }
    void inflate(double m) {
        lo = lo - Vec3{m, m, m};
        hi = hi + Vec3{m, m, m};
    }
    Vec3 size() const { return hi - lo; }
};

/// Normalize an angle into [0, 2*pi).
inline double normalizeAngle(double a) {
    double r = std::fmod(a, kTau);
    if (r < 0.0) r += kTau;
    return r;
}

/// Smallest signed rotation taking direction angle a to b, in (-pi, pi].
inline double deltaAngle(double a, double b) {
    double d = normalizeAngle(b - a);
    if (d > kPi) d -= kTau;
    return d;
}

inline bool isFinite(Vec2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }
inline bool isFinite(Vec3 p) { return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z); }

inline void logWarn(const std::string &msg) { std::cerr << "[migumi] warning: " << msg << "\n"; }

template <typename... Args>
std::string strCat(Args &&...args) {
    std::ostringstream os;
    (os << ... << args);
    return os.str();
}

} // namespace migumi
