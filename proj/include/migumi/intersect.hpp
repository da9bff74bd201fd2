#pragma once

#include "polycurve.hpp"

namespace migumi {

// ---------------------------------------------------------------------------
// Segment/segment intersection with tolerance, including collinear and
// cocircular overlap intervals. Overlap reporting is what keeps booleans
// usable on inputs whose boundaries share runs of geometry (mating joint
// profiles do this constantly).
// ---------------------------------------------------------------------------

struct PointHit {
    Vec2 p;
    double tA = 0.0, tB = 0.0;
};

struct OverlapHit {
    // parameter intervals, tA0 < tA1 on segment A; B params matched pointwise
    double tA0 = 0.0, tA1 = 0.0;
    double tB0 = 0.0, tB1 = 0.0;
    Vec2 p0, p1; // endpoints of the shared run (at tA0 and tA1)
};

struct SegIntersections {
    std::vector<PointHit> points;
    std::vector<OverlapHit> overlaps;

    bool any() const { return !points.empty() || !overlaps.empty(); }
};

namespace detail {

inline double snapParam(double t, double tolT) {
    if (std::abs(t) <= tolT) return 0.0;
    if (std::abs(t - 1.0) <= tolT) return 1.0;
    return t;
}

inline bool paramInRange(double t, double tolT) { return t >= -tolT && t <= 1.0 + tolT; }

/// Angular position of p relative to arc start, as a segment parameter; <0 if
/// off the arc (beyond the sweep by more than tolT-equivalent).
inline double arcParamOf(const ArcGeom &g, Vec2 p, double tol) {
    double sgn = g.sweep >= 0.0 ? 1.0 : -1.0;
    double ang = std::atan2(p.y - g.center.y, p.x - g.center.x);
    double rel = normalizeAngle(sgn * (ang - g.startAngle));
    double total = std::abs(g.sweep);
    double angTol = tol / std::max(g.radius, 1e-12);
    if (rel <= total + angTol) return std::clamp(rel / total, 0.0, 1.0);
    // also allow wrap-around: rel just below 2*pi means just before start
    if (rel >= kTau - angTol) return 0.0;
    return -1.0;
}

inline void lineLine(const Segment &A, const Segment &B, double tol, SegIntersections &out) {
    Vec2 dA = A.b - A.a, dB = B.b - B.a;
    double lA = length(dA), lB = length(dB);
    if (lA <= tol || lB <= tol) return;
    double denom = cross(dA, dB);
    Vec2 w = B.a - A.a;
    if (std::abs(denom) <= 1e-12 * lA * lB) {
        // parallel; collinear iff B.a is on A's line
        if (std::abs(cross(dA, w)) > tol * lA) return;
        double t0 = dot(w, dA) / (lA * lA);
        double t1 = dot(B.b - A.a, dA) / (lA * lA);
        bool flipped = t1 < t0;
        if (flipped) std::swap(t0, t1);
        double lo = std::max(t0, 0.0), hi = std::min(t1, 1.0);
        if (hi - lo <= tol / lA) {
            if (hi - lo >= -tol / lA) {
                double tm = (lo + hi) / 2.0;
                double tb = (tm - t0) / std::max(t1 - t0, 1e-300);
                if (flipped) tb = 1.0 - tb;
                out.points.push_back({A.a + dA * tm, snapParam(tm, tol / lA), snapParam(tb, tol / lB)});
            }
            return;
        }
        OverlapHit o;
        o.tA0 = lo; o.tA1 = hi;
        auto bParam = [&](double ta) {
            double tb = (ta - t0) / (t1 - t0);
            return flipped ? 1.0 - tb : tb;
        };
        // un-swap mapping: t0/t1 are sorted A params of B's endpoints
        double bAt0 = flipped ? 1.0 : 0.0, bAt1 = flipped ? 0.0 : 1.0;
        auto lerpB = [&](double ta) {
            return bAt0 + (bAt1 - bAt0) * (ta - t0) / (t1 - t0);
        };
        (void)bParam;
        o.tB0 = snapParam(lerpB(lo), tol / lB);
        o.tB1 = snapParam(lerpB(hi), tol / lB);
        o.tA0 = snapParam(o.tA0, tol / lA);
        o.tA1 = snapParam(o.tA1, tol / lA);
        o.p0 = A.a + dA * o.tA0;
        o.p1 = A.a + dA * o.tA1;
        out.overlaps.push_back(o);
        return;
    }
    double t = cross(w, dB) / denom;
    double u = cross(w, dA) / denom;
    if (paramInRange(t, tol / lA) && paramInRange(u, tol / lB)) {
        t = snapParam(std::clamp(t, 0.0, 1.0), tol / lA);
        u = snapParam(std::clamp(u, 0.0, 1.0), tol / lB);
        out.points.push_back({A.a + dA * t, t, u});
    }
}

inline void lineArc(const Segment &L, const Segment &Arc, double tol, bool lineIsA,
                    SegIntersections &out) {
    ArcGeom g = arcGeom(Arc);
    Vec2 d = L.b - L.a;
    double lL = length(d);
    if (lL <= tol) return;
    Vec2 f = L.a - g.center;
    double aa = dot(d, d);
    double bb = 2.0 * dot(f, d);
    double cc = dot(f, f) - g.radius * g.radius;
    double disc = bb * bb - 4.0 * aa * cc;
    // a near-tangent line: treat the double root once
    double discTol = 2.0 * aa * g.radius * tol;
    std::vector<double> roots;
    if (disc > discTol) {
        double sq = std::sqrt(disc);
        double q = bb < 0.0 ? (-bb + sq) / 2.0 : (-bb - sq) / 2.0;
        roots.push_back(q / aa);
        roots.push_back(cc / q);
    } else if (disc > -discTol) {
        roots.push_back(-bb / (2.0 * aa));
    }
    for (double t : roots) {
        if (!paramInRange(t, tol / lL)) continue;
        double tl = snapParam(std::clamp(t, 0.0, 1.0), tol / lL);
        Vec2 p = L.a + d * tl;
        double ta = arcParamOf(g, p, tol);
        if (ta < 0.0) continue;
        if (lineIsA)
            out.points.push_back({p, tl, ta});
        else
            out.points.push_back({p, ta, tl});
    }
}

inline void arcArc(const Segment &A, const Segment &B, double tol, SegIntersections &out) {
    ArcGeom ga = arcGeom(A), gb = arcGeom(B);
    double d = distance(ga.center, gb.center);
    if (d <= tol && std::abs(ga.radius - gb.radius) <= tol) {
        // cocircular: intersect angular intervals on the common circle
        auto ccwInterval = [](const ArcGeom &g) {
            double s = g.sweep >= 0.0 ? g.startAngle : g.startAngle + g.sweep;
            return std::pair<double, double>{normalizeAngle(s), std::abs(g.sweep)};
        };
        auto [a0, la] = ccwInterval(ga);
        auto [b0, lb] = ccwInterval(gb);
        double rel = normalizeAngle(b0 - a0);
        double angTol = tol / std::max(ga.radius, 1e-12);
        struct Piece { double lo, hi; };
        std::vector<Piece> pieces;
        double lo1 = rel, hi1 = rel + lb;
        pieces.push_back({std::max(lo1, 0.0), std::min(hi1, la)});
        if (hi1 > kTau) pieces.push_back({0.0, std::min(hi1 - kTau, la)});
        for (auto [lo, hi] : pieces) {
            if (hi - lo <= angTol) {
                if (hi - lo >= -angTol) {
                    double mid = (lo + hi) / 2.0;
                    double absAng = a0 + mid;
                    Vec2 p = ga.center + Vec2{std::cos(absAng), std::sin(absAng)} * ga.radius;
                    double ta = arcParamOf(ga, p, tol), tb = arcParamOf(gb, p, tol);
                    if (ta >= 0.0 && tb >= 0.0) out.points.push_back({p, ta, tb});
                }
                continue;
            }
            OverlapHit o;
            auto at = [&](double rel2) {
                double absAng = a0 + rel2;
                return ga.center + Vec2{std::cos(absAng), std::sin(absAng)} * ga.radius;
            };
            Vec2 p0 = at(lo), p1 = at(hi);
            double ta0 = arcParamOf(ga, p0, tol), ta1 = arcParamOf(ga, p1, tol);
            double tb0 = arcParamOf(gb, p0, tol), tb1 = arcParamOf(gb, p1, tol);
            if (ta0 < 0.0 || ta1 < 0.0 || tb0 < 0.0 || tb1 < 0.0) continue;
            if (ta0 > ta1) { std::swap(ta0, ta1); std::swap(tb0, tb1); std::swap(p0, p1); }
            o.tA0 = ta0; o.tA1 = ta1; o.tB0 = tb0; o.tB1 = tb1;
            o.p0 = p0; o.p1 = p1;
            out.overlaps.push_back(o);
        }
        return;
    }
    if (d > ga.radius + gb.radius + tol) return;
    if (d < std::abs(ga.radius - gb.radius) - tol) return;
    Vec2 u = (gb.center - ga.center) / std::max(d, 1e-300);
    double a = (d * d + ga.radius * ga.radius - gb.radius * gb.radius) / (2.0 * d);
    double h2 = ga.radius * ga.radius - a * a;
    std::vector<Vec2> cand;
    if (h2 <= tol * ga.radius) {
        cand.push_back(ga.center + u * a);
    } else {
        double h = std::sqrt(h2);
        cand.push_back(ga.center + u * a + perp(u) * h);
        cand.push_back(ga.center + u * a - perp(u) * h);
    }
    for (Vec2 p : cand) {
        double ta = arcParamOf(ga, p, tol), tb = arcParamOf(gb, p, tol);
        if (ta >= 0.0 && tb >= 0.0) out.points.push_back({p, ta, tb});
    }
}

} // namespace detail

inline SegIntersections intersectSegments(const Segment &A, const Segment &B,
                                          double tol = tolerances().intersection) {
    SegIntersections out;
    if (!segmentBounds(A).overlaps(segmentBounds(B), tol)) return out;
    if (!A.isArc() && !B.isArc())
        detail::lineLine(A, B, tol, out);
    else if (!A.isArc())
        detail::lineArc(A, B, tol, true, out);
    else if (!B.isArc())
        detail::lineArc(B, A, tol, false, out);
    else
        detail::arcArc(A, B, tol, out);
    return out;
}

// ---------------------------------------------------------------------------
// Simplicity
// ---------------------------------------------------------------------------

/// True iff the curve's segments are pairwise non-intersecting except at
/// shared endpoints (and with no collinear/cocircular overlaps).
inline bool isSimple(const PolyCurve &pc, double tol = tolerances().intersection) {
    std::size_t n = pc.size();
    if (n < 2) return false;
    std::vector<Segment> segs(n);
    std::vector<Box2> boxes(n);
    for (std::size_t i = 0; i < n; ++i) {
        segs[i] = pc.segment(i);
        boxes[i] = segmentBounds(segs[i]);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!boxes[i].overlaps(boxes[j], tol)) continue;
            SegIntersections hits = intersectSegments(segs[i], segs[j], tol);
            if (!hits.overlaps.empty()) return false;
            bool adjacentNext = (j == i + 1);
            bool adjacentPrev = (i == 0 && j == n - 1);
            for (const auto &h : hits.points) {
                if (adjacentNext && h.tA == 1.0 && h.tB == 0.0) continue;
                if (adjacentPrev && h.tB == 1.0 && h.tA == 0.0) continue;
                return false;
            }
        }
    }
    return true;
}

/// True iff no pair of boundaries from different curves comes within tol of
/// touching (crossings included). Distinct-curve disjointness is what makes
/// min/max SDF composition exact.
inline bool boundariesDisjoint(const std::vector<PolyCurve> &set,
                               double tol = tolerances().intersection,
                               std::vector<std::pair<std::size_t, std::size_t>> *offending = nullptr) {
    bool ok = true;
    for (std::size_t a = 0; a < set.size(); ++a) {
        for (std::size_t b = a + 1; b < set.size(); ++b) {
            if (!bounds(set[a]).overlaps(bounds(set[b]), tol)) continue;
            bool touch = false;
            for (std::size_t i = 0; i < set[a].size() && !touch; ++i) {
                Segment sa = set[a].segment(i);
                for (std::size_t j = 0; j < set[b].size() && !touch; ++j) {
                    Segment sb = set[b].segment(j);
                    if (intersectSegments(sa, sb, tol).any()) touch = true;
                    else {
                        // proximity without crossing also breaks exactness only
                        // if within tol; cheap check via endpoint/closest pairs
                        if (distToSegment(sa, sb.a) <= tol || distToSegment(sa, sb.b) <= tol ||
                            distToSegment(sb, sa.a) <= tol || distToSegment(sb, sa.b) <= tol)
                            touch = true;
                    }
                }
            }
            if (touch) {
                ok = false;
                if (offending) offending->push_back({a, b});
            }
        }
    }
    return ok;
}

} // namespace migumi
