#pragma once

#include "intersect.hpp"

#include <map>
#include <unordered_map>

namespace migumi {

// ---------------------------------------------------------------------------
// Offsetting of closed vertex-bulge curve sets.
//
// offsetCurveSet(set, delta) returns the boundary of {x : sdf(x) <= delta},
// i.e. dilation for delta > 0 and erosion for delta < 0. The approach:
//
//   1. offset every segment along its right-of-travel normal and bridge every
//      vertex with a circular join arc of radius |delta|;
//   2. split the raw loops at all mutual intersections;
//   3. keep only pieces whose points satisfy sdf_original = delta (probes at
//      sub-segment midpoints; validity cannot change between crossings);
//   4. stitch surviving pieces back into closed loops, dropping degenerate
//      and orientation-flipped remnants.
// ---------------------------------------------------------------------------

namespace offsetdetail {

constexpr double kSnap = 1e-9;
constexpr double kAreaEps = 1e-9;

struct RawLoop {
    std::vector<Segment> segs;
};

inline Segment subSegment(const Segment &s, double t0, double t1, Vec2 p0, Vec2 p1) {
    Segment out;
    out.a = p0;
    out.b = p1;
    if (s.isArc()) {
        double sweep = bulgeSweep(s.bulge) * (t1 - t0);
        out.bulge = std::tan(sweep / 4.0);
    } else {
        out.bulge = 0.0;
    }
    return out;
}

inline RawLoop rawOffsetLoop(const PolyCurve &pc, double delta) {
    RawLoop loop;
    std::size_t n = pc.size();
    std::vector<Segment> offs;
    std::vector<std::size_t> srcIdx;
    for (std::size_t i = 0; i < n; ++i) {
        Segment s = pc.segment(i);
        double len = segmentLength(s);
        if (len <= kSnap) continue;
        Segment o;
        if (!s.isArc()) {
            Vec2 d = normalized(s.b - s.a);
            Vec2 nr{d.y, -d.x};
            o = {s.a + nr * delta, s.b + nr * delta, 0.0};
        } else {
            ArcGeom g = arcGeom(s);
            double side = s.bulge > 0.0 ? 1.0 : -1.0;
            double r2 = g.radius + side * delta;
            Vec2 ua = normalized(s.a - g.center);
            Vec2 ub = normalized(s.b - g.center);
            if (r2 > kSnap) {
                o = {g.center + ua * r2, g.center + ub * r2, s.bulge};
            } else {
                // collapsed arc; emit the degenerate chord, pruning removes it
                o = {g.center + ua * r2, g.center + ub * r2, 0.0};
            }
        }
        if (distance(o.a, o.b) <= kSnap && !o.isArc()) continue;
        offs.push_back(o);
        srcIdx.push_back(i);
    }
    std::size_t m = offs.size();
    if (m == 0) return loop;
    for (std::size_t k = 0; k < m; ++k) {
        const Segment &cur = offs[k];
        const Segment &nxt = offs[(k + 1) % m];
        loop.segs.push_back(cur);
        Vec2 e = cur.b, s2 = nxt.a;
        if (distance(e, s2) <= kSnap) {
            loop.segs.back().b = s2; // weld
            continue;
        }
        Vec2 v = pc.vertices[(srcIdx[k] + 1) % n]; // original shared vertex
        double sweep = deltaAngle(std::atan2(e.y - v.y, e.x - v.x),
                                  std::atan2(s2.y - v.y, s2.x - v.x));
        Segment join{e, s2, std::tan(sweep / 4.0)};
        loop.segs.push_back(join);
    }
    return loop;
}

struct SplitPoint {
    double t;
    Vec2 p;
};

struct Chain {
    std::vector<Segment> segs;
    bool keep = true;
};

inline std::uint64_t quantKey(Vec2 p) {
    auto q = [](double v) {
        return static_cast<std::uint64_t>(static_cast<std::int64_t>(std::llround(v / 1e-7)));
    };
    return q(p.x) * 1000003u ^ q(p.y);
}

} // namespace offsetdetail

/// Boundary of {x : sdf_set(x) <= delta}. Empty result means the offset
/// region vanished (over-erosion), which is a valid outcome, not an error.
inline std::vector<PolyCurve> offsetCurveSet(const std::vector<PolyCurve> &set, double delta,
                                             double tol = tolerances().intersection) {
    using namespace offsetdetail;
    if (delta == 0.0 || set.empty()) return set;

    std::vector<RawLoop> loops;
    for (const auto &pc : set) {
        RawLoop l = rawOffsetLoop(pc, delta);
        if (!l.segs.empty()) loops.push_back(std::move(l));
    }
    if (loops.empty()) return {};

    // global segment table
    struct SegRef {
        std::size_t loop, idx;
    };
    std::vector<SegRef> refs;
    for (std::size_t li = 0; li < loops.size(); ++li)
        for (std::size_t si = 0; si < loops[li].segs.size(); ++si) refs.push_back({li, si});

    std::vector<std::vector<SplitPoint>> splits(refs.size());
    std::vector<Box2> boxes(refs.size());
    auto segOf = [&](std::size_t k) -> const Segment & { return loops[refs[k].loop].segs[refs[k].idx]; };
    for (std::size_t k = 0; k < refs.size(); ++k) boxes[k] = segmentBounds(segOf(k));

    auto addSplit = [&](std::size_t k, double t, Vec2 p) {
        if (t <= 0.0 || t >= 1.0) return;
        splits[k].push_back({t, p});
    };

    for (std::size_t a = 0; a < refs.size(); ++a) {
        for (std::size_t b = a + 1; b < refs.size(); ++b) {
            bool sameLoop = refs[a].loop == refs[b].loop;
            std::size_t nb = loops[refs[a].loop].segs.size();
            bool adjacentNext = sameLoop && refs[b].idx == refs[a].idx + 1;
            bool adjacentPrev = sameLoop && refs[a].idx == 0 && refs[b].idx == nb - 1;
            if (!boxes[a].overlaps(boxes[b], tol)) continue;
            SegIntersections hits = intersectSegments(segOf(a), segOf(b), tol);
            for (const auto &h : hits.points) {
                if (adjacentNext && h.tA >= 1.0 - 1e-12 && h.tB <= 1e-12) continue;
                if (adjacentPrev && h.tB >= 1.0 - 1e-12 && h.tA <= 1e-12) continue;
                addSplit(a, h.tA, h.p);
                addSplit(b, h.tB, h.p);
            }
            for (const auto &o : hits.overlaps) {
                addSplit(a, o.tA0, o.p0);
                addSplit(a, o.tA1, o.p1);
                addSplit(b, o.tB0, o.p0);
                addSplit(b, o.tB1, o.p1);
            }
        }
    }

    // cut loops into chains at split points
    std::vector<Chain> chains;
    std::size_t refBase = 0;
    for (std::size_t li = 0; li < loops.size(); ++li) {
        const auto &segs = loops[li].segs;
        bool anySplit = false;
        for (std::size_t si = 0; si < segs.size(); ++si)
            if (!splits[refBase + si].empty()) anySplit = true;

        std::vector<Segment> pieces;            // flattened subsegments in order
        std::vector<bool> cutAfter;             // cut boundary after piece i
        for (std::size_t si = 0; si < segs.size(); ++si) {
            auto sp = splits[refBase + si];
            std::sort(sp.begin(), sp.end(), [](auto &x, auto &y) { return x.t < y.t; });
            double t0 = 0.0;
            Vec2 p0 = segs[si].a;
            for (const auto &s : sp) {
                if (s.t - t0 > 1e-12) {
                    pieces.push_back(subSegment(segs[si], t0, s.t, p0, s.p));
                    cutAfter.push_back(true);
                } else if (!pieces.empty()) {
                    cutAfter.back() = true;
                }
                t0 = s.t;
                p0 = s.p;
            }
            pieces.push_back(subSegment(segs[si], t0, 1.0, p0, segs[si].b));
            cutAfter.push_back(false);
        }
        refBase += segs.size();
        if (pieces.empty()) continue;

        if (!anySplit) {
            Chain c;
            c.segs = pieces;
            chains.push_back(std::move(c));
            continue;
        }
        // rotate so the walk starts right after a cut
        std::size_t start = 0;
        for (std::size_t i = 0; i < pieces.size(); ++i)
            if (cutAfter[i]) { start = i + 1; break; }
        Chain cur;
        for (std::size_t k = 0; k < pieces.size(); ++k) {
            std::size_t i = (start + k) % pieces.size();
            cur.segs.push_back(pieces[i]);
            if (cutAfter[i]) {
                chains.push_back(std::move(cur));
                cur = Chain{};
            }
        }
        if (!cur.segs.empty()) chains.push_back(std::move(cur));
    }

    // probe-prune: every surviving point must sit on the delta level set
    const double pruneTol = 1e-6;
    for (auto &c : chains) {
        for (const auto &s : c.segs) {
            double len = segmentLength(s);
            if (len <= kSnap) continue;
            int nProbes = len > std::abs(delta) ? 3 : 1;
            for (int k = 0; k < nProbes && c.keep; ++k) {
                Vec2 probe = segmentPointAt(s, (k + 0.5) / nProbes);
                double sd = curveSetSdf(set, probe);
                if (std::abs(sd - delta) > pruneTol) c.keep = false;
            }
            if (!c.keep) break;
        }
    }

    // stitch kept chains into closed loops
    std::unordered_multimap<std::uint64_t, std::size_t> byStart;
    std::vector<bool> used(chains.size(), false);
    for (std::size_t i = 0; i < chains.size(); ++i) {
        if (!chains[i].keep || chains[i].segs.empty()) {
            used[i] = true;
            continue;
        }
        byStart.insert({quantKey(chains[i].segs.front().a), i});
    }

    std::vector<PolyCurve> out;
    for (std::size_t i = 0; i < chains.size(); ++i) {
        if (used[i]) continue;
        std::vector<Segment> path;
        std::size_t cur = i;
        bool closed = false;
        Vec2 startPt = chains[i].segs.front().a;
        for (std::size_t guard = 0; guard <= chains.size(); ++guard) {
            used[cur] = true;
            for (const auto &s : chains[cur].segs) path.push_back(s);
            Vec2 end = path.back().b;
            if (distance(end, startPt) <= 1e-6) {
                closed = true;
                break;
            }
            auto range = byStart.equal_range(quantKey(end));
            std::size_t next = SIZE_MAX;
            double bestTurn = -1e9;
            Vec2 inTan = segmentTangentAt(path.back(), 1.0);
            for (auto it = range.first; it != range.second; ++it) {
                std::size_t cand = it->second;
                if (used[cand]) continue;
                if (distance(chains[cand].segs.front().a, end) > 1e-6) continue;
                Vec2 outTan = segmentTangentAt(chains[cand].segs.front(), 0.0);
                double turn = deltaAngle(std::atan2(inTan.y, inTan.x), std::atan2(outTan.y, outTan.x));
                if (turn > bestTurn) {
                    bestTurn = turn;
                    next = cand;
                }
            }
            if (next == SIZE_MAX) break;
            cur = next;
        }
        if (!closed || path.empty()) continue;
        PolyCurve pc;
        for (const auto &s : path) {
            if (distance(s.a, s.b) <= kSnap && !s.isArc()) continue;
            pc.vertices.push_back(s.a);
            pc.bulges.push_back(s.bulge);
        }
        if (pc.size() < 2) continue;
        if (std::abs(signedArea(pc)) <= kAreaEps) continue;
        out.push_back(std::move(pc));
    }

    // nesting sanity: a clockwise loop must be a hole of some counter-clockwise loop
    std::vector<PolyCurve> final;
    std::vector<const PolyCurve *> ccw;
    for (const auto &pc : out)
        if (signedArea(pc) > 0.0) ccw.push_back(&pc);
    for (auto &pc : out) {
        if (signedArea(pc) > 0.0) {
            final.push_back(std::move(pc));
            continue;
        }
        Vec2 probe = segmentPointAt(pc.segment(0), 0.5);
        bool inOuter = false;
        for (const auto *o : ccw)
            if (curveParity(*o, probe)) inOuter = !inOuter;
        if (inOuter) final.push_back(std::move(pc));
        else logWarn("offsetCurveSet: dropped stray clockwise loop");
    }
    return final;
}

/// Polygonize arcs to chords with sagitta below chordTol. Used only at
/// raster/mesh/export boundaries; the kernel keeps arcs exact.
inline PolyCurve polygonized(const PolyCurve &pc, double chordTol = tolerances().chord) {
    PolyCurve out;
    for (std::size_t i = 0; i < pc.size(); ++i) {
        Segment s = pc.segment(i);
        if (!s.isArc()) {
            out.vertices.push_back(s.a);
            out.bulges.push_back(0.0);
            continue;
        }
        ArcGeom g = arcGeom(s);
        double maxStep = 2.0 * std::acos(std::clamp(1.0 - chordTol / g.radius, -1.0, 1.0));
        int nSeg = std::max(1, static_cast<int>(std::ceil(std::abs(g.sweep) / std::max(maxStep, 1e-3))));
        for (int k = 0; k < nSeg; ++k) {
            out.vertices.push_back(segmentPointAt(s, static_cast<double>(k) / nSeg));
            out.bulges.push_back(0.0);
        }
    }
    return out;
}

inline std::vector<PolyCurve> polygonized(const std::vector<PolyCurve> &set, double chordTol) {
    std::vector<PolyCurve> out;
    out.reserve(set.size());
    for (const auto &pc : set) out.push_back(polygonized(pc, chordTol));
    return out;
}

} // namespace migumi
