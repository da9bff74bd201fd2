#pragma once

#include "offset.hpp"

namespace migumi {

/// Disk structuring element (the rotational footprint of a flat-end bit).
struct StructuringDisk {
    double radius = 0.0;
};

/// Boundary of {x : sdf(x) <= -r}: every segment moved inward by r, reflex
/// corners filled with arcs, self-intersections pruned, vanished components
/// removed. Empty set is a valid result.
inline std::vector<PolyCurve> erode(const std::vector<PolyCurve> &region, double r) {
    if (r < 0.0) throw std::invalid_argument("erode: negative radius");
    if (r == 0.0) return region;
    return offsetCurveSet(region, -r);
}

/// Boundary of {x : sdf(x) <= r}; the output encloses the input.
inline std::vector<PolyCurve> dilate(const std::vector<PolyCurve> &region, double r) {
    if (r < 0.0) throw std::invalid_argument("dilate: negative radius");
    if (r == 0.0) return region;
    return offsetCurveSet(region, r);
}

/// Morphological opening: largest subset of the region sweepable by a disk of
/// radius r. Anti-extensive and idempotent.
inline std::vector<PolyCurve> open(const std::vector<PolyCurve> &region, double r) {
    if (r == 0.0) return region;
    return dilate(erode(region, r), r);
}

struct MinkowskiReport {
    bool millable = true;
    double violationArea = 0.0; // mm^2, area lost under opening
    std::vector<PolyCurve> opened;
};

/// A region is reachable by the disk iff opening leaves it unchanged. Since
/// opening is anti-extensive the symmetric difference equals area(X) -
/// area(open(X)).
inline MinkowskiReport checkMinkowski(const std::vector<PolyCurve> &region, double r,
                                      double areaTol) {
    MinkowskiReport rep;
    rep.opened = open(region, r);
    double a0 = totalArea(region);
    double a1 = totalArea(rep.opened);
    rep.violationArea = std::max(0.0, a0 - a1);
    rep.millable = rep.violationArea <= areaTol;
    return rep;
}

/// Default tolerance used by millability checks: a fraction of the removal
/// region's own area.
inline double defaultMinkowskiTol(const std::vector<PolyCurve> &region, double fraction = 0.005) {
    return std::abs(totalArea(region)) * fraction;
}

} // namespace migumi
