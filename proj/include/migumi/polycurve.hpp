#pragma once

#include "common.hpp"

#include <cassert>
#include <optional>

namespace migumi {

// ---------------------------------------------------------------------------
// Vertex-bulge segments.
//
// A segment runs v1 -> v2. bulge = tan(sweep/4); zero means a straight line,
// positive means the arc sweeps counterclockwise about its center (and lies to
// the right of the travel direction), negative the mirror image. A closed
// curve is a cyclic list of vertices with one bulge per outgoing segment.
// ---------------------------------------------------------------------------

struct ArcGeom {
    Vec2 center;
    double radius = 0.0;
    double startAngle = 0.0; // angle of v1 about center
    double sweep = 0.0;      // signed, = 4*atan(bulge)
};

struct Segment {
    Vec2 a, b;
    double bulge = 0.0;

    bool isArc() const { return bulge != 0.0; }
};

inline double bulgeSweep(double bulge) { return 4.0 * std::atan(bulge); }

/// Radius of the arc for a chord of length `chord` and the given bulge.
inline double bulgeRadius(double chord, double bulge) {
    double ab = std::abs(bulge);
    return chord * (1.0 + bulge * bulge) / (4.0 * ab);
}

inline ArcGeom arcGeom(const Segment &s) {
    assert(s.isArc());
    Vec2 w = s.b - s.a;
    double c = length(w);
    double b = s.bulge;
    ArcGeom g;
    g.radius = bulgeRadius(c, b);
    double sagitta = std::abs(b) * c / 2.0;
    Vec2 nR = c > 0.0 ? Vec2{w.y, -w.x} / c : Vec2{0.0, 0.0}; // right of travel
    double side = b > 0.0 ? 1.0 : -1.0;
    g.center = (s.a + s.b) * 0.5 - side * (g.radius - sagitta) * nR;
    g.startAngle = std::atan2(s.a.y - g.center.y, s.a.x - g.center.x);
    g.sweep = bulgeSweep(b);
    return g;
}

inline double segmentLength(const Segment &s) {
    if (!s.isArc()) return distance(s.a, s.b);
    ArcGeom g = arcGeom(s);
    return g.radius * std::abs(g.sweep);
}

inline Vec2 segmentPointAt(const Segment &s, double t) {
    if (!s.isArc()) return s.a + (s.b - s.a) * t;
    ArcGeom g = arcGeom(s);
    double a = g.startAngle + t * g.sweep;
    return g.center + Vec2{std::cos(a), std::sin(a)} * g.radius;
}

/// Unit tangent in the travel direction at parameter t.
inline Vec2 segmentTangentAt(const Segment &s, double t) {
    if (!s.isArc()) return normalized(s.b - s.a);
    ArcGeom g = arcGeom(s);
    double a = g.startAngle + t * g.sweep;
    double sgn = g.sweep >= 0.0 ? 1.0 : -1.0;
    return Vec2{-std::sin(a), std::cos(a)} * sgn;
}

/// Right-of-travel unit normal at parameter t. For a CCW outer boundary this
/// is the outward normal of the enclosed region; for a CW hole it points into
/// the hole, which is again outward for the region.
inline Vec2 segmentNormalAt(const Segment &s, double t) {
    Vec2 tg = segmentTangentAt(s, t);
    return {tg.y, -tg.x};
}

struct ClosestPoint {
    Vec2 point;
    double t = 0.0;
    double dist = 0.0;
};

inline ClosestPoint closestOnSegment(const Segment &s, Vec2 p) {
    ClosestPoint r;
    if (!s.isArc()) {
        Vec2 w = s.b - s.a;
        double l2 = lengthSq(w);
        double t = l2 > 0.0 ? std::clamp(dot(p - s.a, w) / l2, 0.0, 1.0) : 0.0;
        r.t = t;
        r.point = s.a + w * t;
        r.dist = distance(p, r.point);
        return r;
    }
    ArcGeom g = arcGeom(s);
    Vec2 d = p - g.center;
    double dl = length(d);
    if (dl < 1e-300) {
        r.t = 0.0;
        r.point = s.a;
        r.dist = g.radius;
        return r;
    }
    double ang = std::atan2(d.y, d.x);
    double sgn = g.sweep >= 0.0 ? 1.0 : -1.0;
    double rel = normalizeAngle(sgn * (ang - g.startAngle));
    if (rel <= std::abs(g.sweep)) {
        r.t = rel / std::abs(g.sweep);
        r.point = g.center + d * (g.radius / dl);
        r.dist = std::abs(dl - g.radius);
        return r;
    }
    double da = distance(p, s.a), db = distance(p, s.b);
    if (da <= db) {
        r.t = 0.0; r.point = s.a; r.dist = da;
    } else {
        r.t = 1.0; r.point = s.b; r.dist = db;
    }
    return r;
}

inline double distToSegment(const Segment &s, Vec2 p) { return closestOnSegment(s, p).dist; }

inline Box2 segmentBounds(const Segment &s) {
    Box2 b;
    b.expand(s.a);
    b.expand(s.b);
    if (s.isArc()) {
        ArcGeom g = arcGeom(s);
        // axis-extreme points of the circle that lie on the arc
        double sgn = g.sweep >= 0.0 ? 1.0 : -1.0;
        for (double ext : {0.0, kPi / 2.0, kPi, 3.0 * kPi / 2.0}) {
            double rel = normalizeAngle(sgn * (ext - g.startAngle));
            if (rel <= std::abs(g.sweep))
                b.expand(g.center + Vec2{std::cos(ext), std::sin(ext)} * g.radius);
        }
    }
    return b;
}

// ---------------------------------------------------------------------------
// PolyCurve
// ---------------------------------------------------------------------------

/// Closed boundary of line/arc segments in vertex-bulge form. Coordinates are
/// millimeters. Orientation: outer boundaries CCW (positive signed area),
/// holes CW. Simple by contract; see checkSimple() in intersect.hpp.
struct PolyCurve {
    std::vector<Vec2> vertices;
    std::vector<double> bulges; // one per outgoing segment, same count as vertices

    PolyCurve() = default;
    PolyCurve(std::vector<Vec2> v, std::vector<double> b)
        : vertices(std::move(v)), bulges(std::move(b)) {
        assert(vertices.size() == bulges.size());
    }

    std::size_t size() const { return vertices.size(); }
    bool empty() const { return vertices.empty(); }

    Segment segment(std::size_t i) const {
        std::size_t j = (i + 1) % vertices.size();
        return {vertices[i], vertices[j], bulges[i]};
    }

    static PolyCurve rect(Vec2 lo, Vec2 hi) {
        return PolyCurve({{lo.x, lo.y}, {hi.x, lo.y}, {hi.x, hi.y}, {lo.x, hi.y}},
                         {0.0, 0.0, 0.0, 0.0});
    }

    static PolyCurve disk(Vec2 c, double r) {
        return PolyCurve({{c.x - r, c.y}, {c.x + r, c.y}}, {1.0, 1.0});
    }
};

inline double signedArea(const PolyCurve &pc) {
    double a = 0.0;
    std::size_t n = pc.size();
    for (std::size_t i = 0; i < n; ++i) {
        Vec2 p = pc.vertices[i];
        Vec2 q = pc.vertices[(i + 1) % n];
        a += cross(p, q);
        if (pc.bulges[i] != 0.0) {
            Segment s = pc.segment(i);
            ArcGeom g = arcGeom(s);
            double th = std::abs(g.sweep);
            double seg = 0.5 * g.radius * g.radius * (th - std::sin(th));
            a += (g.sweep >= 0.0 ? 2.0 : -2.0) * seg;
        }
    }
    return a / 2.0;
}

inline double perimeter(const PolyCurve &pc) {
    double l = 0.0;
    for (std::size_t i = 0; i < pc.size(); ++i) l += segmentLength(pc.segment(i));
    return l;
}

inline Box2 bounds(const PolyCurve &pc) {
    Box2 b;
    for (std::size_t i = 0; i < pc.size(); ++i) b.expand(segmentBounds(pc.segment(i)));
    return b;
}

inline Box2 bounds(const std::vector<PolyCurve> &set) {
    Box2 b;
    for (const auto &pc : set) b.expand(bounds(pc));
    return b;
}

inline PolyCurve reversed(const PolyCurve &pc) {
    std::size_t n = pc.size();
    PolyCurve r;
    r.vertices.resize(n);
    r.bulges.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        r.vertices[k] = pc.vertices[(n - k) % n];
        r.bulges[k] = -pc.bulges[(n - 1 - k) % n];
    }
    return r;
}

inline PolyCurve translated(const PolyCurve &pc, Vec2 d) {
    PolyCurve r = pc;
    for (auto &v : r.vertices) v += d;
    return r;
}

/// Rigid 2D transform (rotation + translation), optionally mirrored about the
/// x axis before rotating. Mirroring flips bulges and traversal orientation.
struct Transform2 {
    double c = 1.0, s = 0.0; // cos/sin of rotation
    Vec2 t{0.0, 0.0};
    bool mirror = false;

    Vec2 apply(Vec2 p) const {
        if (mirror) p.y = -p.y;
        return {c * p.x - s * p.y + t.x, s * p.x + c * p.y + t.y};
    }
    static Transform2 identity() { return {}; }
    static Transform2 translation(Vec2 d) { return {1.0, 0.0, d, false}; }
    static Transform2 rotation(double ang, Vec2 t = {}) {
        return {std::cos(ang), std::sin(ang), t, false};
    }
};

inline PolyCurve transformed(const PolyCurve &pc, const Transform2 &xf) {
    PolyCurve r = pc;
    for (auto &v : r.vertices) v = xf.apply(v);
    if (xf.mirror) {
        for (auto &b : r.bulges) b = -b;
        r = reversed(r); // restore outward orientation convention
    }
    return r;
}

// ---------------------------------------------------------------------------
// Containment & SDF
// ---------------------------------------------------------------------------

/// Parity contribution of one curve for a +x ray from p: chord-polygon
/// crossings, then one extra flip per arc whose circular-segment region
/// contains p (the region between chord and arc). XOR of the two equals the
/// exact even-odd membership for the true curved boundary.
inline bool curveParity(const PolyCurve &pc, Vec2 p) {
    bool inside = false;
    std::size_t n = pc.size();
    for (std::size_t i = 0; i < n; ++i) {
        Vec2 a = pc.vertices[i];
        Vec2 b = pc.vertices[(i + 1) % n];
        if ((a.y > p.y) != (b.y > p.y)) {
            double xInt = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if (xInt > p.x) inside = !inside;
        }
        if (pc.bulges[i] != 0.0) {
            Segment s = pc.segment(i);
            ArcGeom g = arcGeom(s);
            if (distance(p, g.center) < g.radius) {
                // same side of the chord as the arc bulge?
                double sideVal = cross(b - a, p - a);
                if (pc.bulges[i] * sideVal < 0.0) inside = !inside;
            }
        }
    }
    return inside;
}

inline bool insideCurveSet(const std::vector<PolyCurve> &set, Vec2 p) {
    bool inside = false;
    for (const auto &pc : set)
        if (curveParity(pc, p)) inside = !inside;
    return inside;
}

inline double distanceToCurveSet(const std::vector<PolyCurve> &set, Vec2 p) {
    double d = std::numeric_limits<double>::max();
    for (const auto &pc : set)
        for (std::size_t i = 0; i < pc.size(); ++i)
            d = std::min(d, distToSegment(pc.segment(i), p));
    return d;
}

/// Exact signed distance to the region bounded by a set of pairwise disjoint
/// simple closed curves (even-odd). Negative inside.
inline double curveSetSdf(const std::vector<PolyCurve> &set, Vec2 p) {
    if (set.empty()) return std::numeric_limits<double>::max();
    double d = distanceToCurveSet(set, p);
    return insideCurveSet(set, p) ? -d : d;
}

inline double totalArea(const std::vector<PolyCurve> &set) {
    double a = 0.0;
    for (const auto &pc : set) a += signedArea(pc);
    return a;
}

} // namespace migumi
