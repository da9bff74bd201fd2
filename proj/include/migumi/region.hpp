#pragma once

#include "intersect.hpp"

#include <memory>
#include <variant>

namespace migumi {

// ---------------------------------------------------------------------------
// Region2D: CSG tree over 2D primitives evaluated by min/max composition.
// Composition yields a pseudo-SDF in general; it is the exact Euclidean
// distance when no two leaf boundaries intersect (validateExactness).
// ---------------------------------------------------------------------------

struct DiskLeaf {
    Vec2 center;
    double radius = 0.0;
};

struct RectLeaf {
    Vec2 center;
    Vec2 halfSize;
    double angle = 0.0; // radians
};

/// Region {p : dot(p, normal) - offset <= 0}.
struct HalfPlaneLeaf {
    Vec2 normal{1.0, 0.0};
    double offset = 0.0;
};

/// Even-odd region of one or more closed curves (outer CCW, holes CW).
struct PolyCurveLeaf {
    std::vector<PolyCurve> curves;
};

enum class CsgOp { Union, Intersection, Difference, Complement, Offset };

struct RegionNode;
using RegionNodePtr = std::shared_ptr<const RegionNode>;

struct RegionNode {
    using Leaf = std::variant<DiskLeaf, RectLeaf, HalfPlaneLeaf, PolyCurveLeaf>;

    std::optional<Leaf> leaf;
    CsgOp op = CsgOp::Union;
    std::vector<RegionNodePtr> children;
    double offsetAmount = 0.0; // for CsgOp::Offset: boundary moved outward by this

    bool isLeaf() const { return leaf.has_value(); }
};

struct Region2D {
    RegionNodePtr root;
    std::optional<bool> exactHint; // set by validateExactness or constructors

    bool valid() const { return root != nullptr; }

    static Region2D leaf(RegionNode::Leaf l, std::optional<bool> exact = std::nullopt) {
        auto n = std::make_shared<RegionNode>();
        n->leaf = std::move(l);
        Region2D r{n, exact};
        return r;
    }
    static Region2D disk(Vec2 c, double radius) { return leaf(DiskLeaf{c, radius}, true); }
    static Region2D rect(Vec2 c, Vec2 halfSize, double angle = 0.0) {
        return leaf(RectLeaf{c, halfSize, angle}, true);
    }
    static Region2D halfPlane(Vec2 n, double offset) {
        return leaf(HalfPlaneLeaf{normalized(n), offset}, true);
    }
    static Region2D polyCurves(std::vector<PolyCurve> curves,
                               std::optional<bool> exact = std::nullopt) {
        return leaf(PolyCurveLeaf{std::move(curves)}, exact);
    }
    static Region2D empty() { return polyCurves({}, true); }

    static Region2D compose(CsgOp op, std::vector<Region2D> parts) {
        auto n = std::make_shared<RegionNode>();
        n->op = op;
        for (auto &p : parts) n->children.push_back(p.root);
        return Region2D{n, std::nullopt};
    }
    static Region2D unionOf(std::vector<Region2D> parts) {
        return compose(CsgOp::Union, std::move(parts));
    }
    static Region2D intersectionOf(std::vector<Region2D> parts) {
        return compose(CsgOp::Intersection, std::move(parts));
    }
    /// First child minus the union of the rest.
    static Region2D differenceOf(std::vector<Region2D> parts) {
        return compose(CsgOp::Difference, std::move(parts));
    }
    static Region2D complementOf(Region2D r) { return compose(CsgOp::Complement, {std::move(r)}); }
    static Region2D offsetOf(Region2D r, double amount) {
        auto out = compose(CsgOp::Offset, {std::move(r)});
        const_cast<RegionNode *>(out.root.get())->offsetAmount = amount;
        return out;
    }
};

namespace detail {

inline double leafSdf(const RegionNode::Leaf &leaf, Vec2 p) {
    if (auto d = std::get_if<DiskLeaf>(&leaf)) return distance(p, d->center) - d->radius;
    if (auto r = std::get_if<RectLeaf>(&leaf)) {
        Vec2 q = p - r->center;
        if (r->angle != 0.0) {
            double c = std::cos(-r->angle), s = std::sin(-r->angle);
            q = {c * q.x - s * q.y, s * q.x + c * q.y};
        }
        Vec2 dd{std::abs(q.x) - r->halfSize.x, std::abs(q.y) - r->halfSize.y};
        Vec2 outer{std::max(dd.x, 0.0), std::max(dd.y, 0.0)};
        return length(outer) + std::min(std::max(dd.x, dd.y), 0.0);
    }
    if (auto h = std::get_if<HalfPlaneLeaf>(&leaf)) return dot(p, h->normal) - h->offset;
    const auto &pc = std::get<PolyCurveLeaf>(leaf);
    return curveSetSdf(pc.curves, p);
}

inline double nodeSdf(const RegionNode &n, Vec2 p) {
    if (n.isLeaf()) return leafSdf(*n.leaf, p);
    switch (n.op) {
    case CsgOp::Union: {
        double v = std::numeric_limits<double>::max();
        for (const auto &c : n.children) v = std::min(v, nodeSdf(*c, p));
        return v;
    }
    case CsgOp::Intersection: {
        double v = std::numeric_limits<double>::lowest();
        for (const auto &c : n.children) v = std::max(v, nodeSdf(*c, p));
        return v;
    }
    case CsgOp::Difference: {
        if (n.children.empty()) return std::numeric_limits<double>::max();
        double v = nodeSdf(*n.children[0], p);
        for (std::size_t i = 1; i < n.children.size(); ++i)
            v = std::max(v, -nodeSdf(*n.children[i], p));
        return v;
    }
    case CsgOp::Complement:
        return -nodeSdf(*n.children.at(0), p);
    case CsgOp::Offset:
        return nodeSdf(*n.children.at(0), p) - n.offsetAmount;
    }
    return std::numeric_limits<double>::max();
}

/// Boundary of a leaf as polycurves for exactness validation and compilation.
/// Half-planes are clipped to `clip` (a generous bounding box).
inline std::vector<PolyCurve> leafBoundary(const RegionNode::Leaf &leaf, const Box2 &clip) {
    if (auto d = std::get_if<DiskLeaf>(&leaf)) {
        if (d->radius <= 0.0) return {};
        return {PolyCurve::disk(d->center, d->radius)};
    }
    if (auto r = std::get_if<RectLeaf>(&leaf)) {
        PolyCurve pc = PolyCurve::rect(-1.0 * r->halfSize, r->halfSize);
        Transform2 xf = Transform2::rotation(r->angle, r->center);
        return {transformed(pc, xf)};
    }
    if (auto h = std::get_if<HalfPlaneLeaf>(&leaf)) {
        // half-plane as a large rectangle on the material side
        Vec2 c = clip.empty() ? Vec2{0, 0} : clip.center();
        double ext = clip.empty() ? 1e6 : (length(clip.size()) + 1.0) * 2.0;
        Vec2 n = h->normal, tdir = perp(n);
        Vec2 onLine = n * h->offset + tdir * dot(c, tdir);
        std::vector<Vec2> vs = {onLine + tdir * ext, onLine + tdir * ext - n * ext,
                                onLine - tdir * ext - n * ext, onLine - tdir * ext};
        return {PolyCurve(vs, {0, 0, 0, 0})};
    }
    return std::get<PolyCurveLeaf>(leaf).curves;
}

inline void collectLeaves(const RegionNodePtr &n, std::vector<const RegionNode *> &out) {
    if (!n) return;
    if (n->isLeaf()) {
        out.push_back(n.get());
        return;
    }
    for (const auto &c : n->children) collectLeaves(c, out);
}

inline Box2 leafBounds(const RegionNode::Leaf &leaf) {
    if (auto d = std::get_if<DiskLeaf>(&leaf)) {
        Box2 b;
        b.expand(d->center - Vec2{d->radius, d->radius});
        b.expand(d->center + Vec2{d->radius, d->radius});
        return b;
    }
    if (std::get_if<HalfPlaneLeaf>(&leaf)) {
        Box2 b;
        b.expand({-1e9, -1e9});
        b.expand({1e9, 1e9});
        return b;
    }
    if (auto r = std::get_if<RectLeaf>(&leaf)) {
        PolyCurve pc = transformed(PolyCurve::rect(-1.0 * r->halfSize, r->halfSize),
                                   Transform2::rotation(r->angle, r->center));
        return bounds(pc);
    }
    return bounds(std::get<PolyCurveLeaf>(leaf).curves);
}

} // namespace detail

/// Pseudo-SDF of the region: negative inside, positive outside, zero on the
/// boundary; exact Euclidean distance when the region's leaf boundaries are
/// pairwise disjoint.
inline double evalSdf(const Region2D &region, Vec2 p) {
    if (!region.valid()) throw std::invalid_argument("evalSdf: empty region tree");
    if (!isFinite(p)) throw std::invalid_argument("evalSdf: non-finite query point");
    return detail::nodeSdf(*region.root, p);
}

inline Box2 regionBounds(const Region2D &region) {
    std::vector<const RegionNode *> leaves;
    detail::collectLeaves(region.root, leaves);
    Box2 b;
    for (const auto *n : leaves) b.expand(detail::leafBounds(*n->leaf));
    return b;
}

struct ExactnessReport {
    bool exact = true;
    std::vector<std::pair<std::size_t, std::size_t>> offendingLeafPairs;
};

/// Checks that no two leaf boundaries come within tol of crossing; also sets
/// the region's exact hint.
inline ExactnessReport validateExactness(Region2D &region, double tol = tolerances().intersection) {
    std::vector<const RegionNode *> leaves;
    detail::collectLeaves(region.root, leaves);
    Box2 clip = regionBounds(region);
    if (clip.empty() || clip.size().x > 1e8) {
        clip = Box2{};
        clip.expand({-1e3, -1e3});
        clip.expand({1e3, 1e3});
    }
    ExactnessReport rep;
    std::vector<std::vector<PolyCurve>> boundaries(leaves.size());
    for (std::size_t i = 0; i < leaves.size(); ++i)
        boundaries[i] = detail::leafBoundary(*leaves[i]->leaf, clip);
    for (std::size_t a = 0; a < leaves.size(); ++a) {
        for (std::size_t b = a + 1; b < leaves.size(); ++b) {
            std::vector<PolyCurve> both = boundaries[a];
            std::size_t na = both.size();
            both.insert(both.end(), boundaries[b].begin(), boundaries[b].end());
            std::vector<std::pair<std::size_t, std::size_t>> off;
            if (!boundariesDisjoint(both, tol, &off)) {
                bool crossPair = false;
                for (auto [i, j] : off)
                    if (i < na && j >= na) crossPair = true;
                if (crossPair) {
                    rep.exact = false;
                    rep.offendingLeafPairs.push_back({a, b});
                }
            }
        }
    }
    region.exactHint = rep.exact;
    return rep;
}

inline Region2D transformed(const Region2D &region, const Transform2 &xf) {
    std::function<RegionNodePtr(const RegionNodePtr &)> rec =
        [&](const RegionNodePtr &n) -> RegionNodePtr {
        auto out = std::make_shared<RegionNode>();
        if (n->isLeaf()) {
            if (auto d = std::get_if<DiskLeaf>(&*n->leaf)) {
                out->leaf = DiskLeaf{xf.apply(d->center), d->radius};
            } else if (auto r = std::get_if<RectLeaf>(&*n->leaf)) {
                if (xf.mirror) {
                    PolyCurve pc =
                        transformed(PolyCurve::rect(-1.0 * r->halfSize, r->halfSize),
                                    Transform2::rotation(r->angle, r->center));
                    out->leaf = PolyCurveLeaf{{transformed(pc, xf)}};
                } else {
                    double rot = std::atan2(xf.s, xf.c);
                    out->leaf = RectLeaf{xf.apply(r->center), r->halfSize, r->angle + rot};
                }
            } else if (auto h = std::get_if<HalfPlaneLeaf>(&*n->leaf)) {
                Vec2 n2 = h->normal;
                if (xf.mirror) n2.y = -n2.y;
                Vec2 nr{xf.c * n2.x - xf.s * n2.y, xf.s * n2.x + xf.c * n2.y};
                // point on old boundary maps to new boundary
                Vec2 p0 = xf.apply(h->normal * h->offset);
                out->leaf = HalfPlaneLeaf{nr, dot(p0, nr)};
            } else {
                const auto &pcs = std::get<PolyCurveLeaf>(*n->leaf);
                PolyCurveLeaf l2;
                for (const auto &pc : pcs.curves) l2.curves.push_back(transformed(pc, xf));
                out->leaf = std::move(l2);
            }
            return out;
        }
        out->op = n->op;
        out->offsetAmount = n->offsetAmount;
        for (const auto &c : n->children) out->children.push_back(rec(c));
        return out;
    };
    return Region2D{rec(region.root), region.exactHint};
}

} // namespace migumi
