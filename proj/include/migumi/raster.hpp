#pragma once

#include "region.hpp"

namespace migumi {

// ---------------------------------------------------------------------------
// Raster occupancy grids. These back the brute-force morphology oracle and
// the evaluation metrics; the geometry kernel itself never rasterizes.
// ---------------------------------------------------------------------------

struct RasterRegion {
    Vec2 origin;       // center of cell (0,0)
    double pitch = 1.0;
    int nx = 0, ny = 0;
    std::vector<std::uint8_t> occ;

    bool at(int i, int j) const {
        if (i < 0 || j < 0 || i >= nx || j >= ny) return false;
        return occ[static_cast<std::size_t>(j) * nx + i] != 0;
    }
    void set(int i, int j, bool v) { occ[static_cast<std::size_t>(j) * nx + i] = v ? 1 : 0; }
    Vec2 cellCenter(int i, int j) const { return origin + Vec2{i * pitch, j * pitch}; }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto v : occ) c += v;
        return c;
    }
    double area() const { return static_cast<double>(count()) * pitch * pitch; }
    bool empty() const { return count() == 0; }
};

inline constexpr std::size_t kDefaultCellBudget = 80'000'000;

inline RasterRegion makeRaster(const Box2 &box, double pitch,
                               std::size_t cellBudget = kDefaultCellBudget) {
    if (pitch <= 0.0) throw std::invalid_argument("makeRaster: pitch must be positive");
    RasterRegion g;
    g.pitch = pitch;
    if (box.empty()) return g;
    g.nx = static_cast<int>(std::floor((box.hi.x - box.lo.x) / pitch)) + 1;
    g.ny = static_cast<int>(std::floor((box.hi.y - box.lo.y) / pitch)) + 1;
    if (static_cast<std::size_t>(g.nx) * g.ny > cellBudget)
        throw GeometryError(strCat("raster grid of ", g.nx, "x", g.ny,
                                   " exceeds the cell budget; use a larger pitch"));
    g.origin = box.lo;
    g.occ.assign(static_cast<std::size_t>(g.nx) * g.ny, 0);
    return g;
}

template <typename InsideFn>
RasterRegion rasterize(const Box2 &box, double pitch, InsideFn &&inside,
                       std::size_t cellBudget = kDefaultCellBudget) {
    RasterRegion g = makeRaster(box, pitch, cellBudget);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            if (inside(g.cellCenter(i, j))) g.set(i, j, true);
    return g;
}

inline RasterRegion rasterize(const std::vector<PolyCurve> &set, double pitch, double margin,
                              std::size_t cellBudget = kDefaultCellBudget) {
    Box2 box = bounds(set);
    if (box.empty()) return makeRaster(box, pitch, cellBudget);
    box.inflate(margin);
    return rasterize(box, pitch, [&](Vec2 p) { return insideCurveSet(set, p); }, cellBudget);
}

namespace rasterdetail {

// Felzenszwalb–Huttenlocher 1D squared distance transform (lower envelope).
inline void edt1d(const std::vector<double> &f, std::vector<double> &d, std::vector<int> &v,
                  std::vector<double> &z) {
    int n = static_cast<int>(f.size());
    d.assign(n, 0.0);
    v.assign(n, 0);
    z.assign(n + 1, 0.0);
    int k = 0;
    v[0] = 0;
    z[0] = -std::numeric_limits<double>::infinity();
    z[1] = std::numeric_limits<double>::infinity();
    for (int q = 1; q < n; ++q) {
        double s;
        while (true) {
            int p = v[k];
            s = ((f[q] + q * q) - (f[p] + p * p)) / (2.0 * q - 2.0 * p);
            if (s <= z[k]) { --k; } else break;
        }
        ++k;
        v[k] = q;
        z[k] = s;
        z[k + 1] = std::numeric_limits<double>::infinity();
    }
    k = 0;
    for (int q = 0; q < n; ++q) {
        while (z[k + 1] < q) ++k;
        int p = v[k];
        d[q] = (q - p) * (q - p) + f[p];
    }
}

/// Squared distance (in cells) to the nearest set cell of `feature`.
inline std::vector<double> edt2d(const RasterRegion &g, bool featureValue) {
    const double inf = 1e18;
    std::vector<double> dist(static_cast<std::size_t>(g.nx) * g.ny);
    for (std::size_t i = 0; i < dist.size(); ++i)
        dist[i] = (g.occ[i] != 0) == featureValue ? 0.0 : inf;
    std::vector<double> f, d, z;
    std::vector<int> v;
    // columns
    f.resize(g.ny);
    for (int i = 0; i < g.nx; ++i) {
        for (int j = 0; j < g.ny; ++j) f[j] = dist[static_cast<std::size_t>(j) * g.nx + i];
        edt1d(f, d, v, z);
        for (int j = 0; j < g.ny; ++j) dist[static_cast<std::size_t>(j) * g.nx + i] = d[j];
    }
    // rows
    f.resize(g.nx);
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) f[i] = dist[static_cast<std::size_t>(j) * g.nx + i];
        edt1d(f, d, v, z);
        for (int i = 0; i < g.nx; ++i) dist[static_cast<std::size_t>(j) * g.nx + i] = d[i];
    }
    return dist;
}

} // namespace rasterdetail

inline RasterRegion erodeRaster(const RasterRegion &g, double r) {
    RasterRegion out = g;
    if (g.occ.empty()) return out;
    auto d2 = rasterdetail::edt2d(g, false); // distance to complement
    double k2 = (r / g.pitch) * (r / g.pitch);
    for (std::size_t i = 0; i < out.occ.size(); ++i) out.occ[i] = (g.occ[i] && d2[i] > k2) ? 1 : 0;
    return out;
}

inline RasterRegion dilateRaster(const RasterRegion &g, double r) {
    RasterRegion out = g;
    if (g.occ.empty()) return out;
    auto d2 = rasterdetail::edt2d(g, true); // distance to occupied
    double k2 = (r / g.pitch) * (r / g.pitch);
    for (std::size_t i = 0; i < out.occ.size(); ++i) out.occ[i] = d2[i] <= k2 ? 1 : 0;
    return out;
}

inline RasterRegion openRaster(const RasterRegion &g, double r) {
    return dilateRaster(erodeRaster(g, r), r);
}

enum class RasterMorphOp { Erode, Dilate, Open };

/// Grid-based morphology oracle: rasterizes the region (with a 2r + pitch
/// margin so kernels never clip) and applies the disk kernel on the grid.
inline RasterRegion rasterMorphology(const Region2D &region, double r, double pitch,
                                     RasterMorphOp op = RasterMorphOp::Open,
                                     std::size_t cellBudget = kDefaultCellBudget) {
    if (r > 0.0 && pitch > r / 20.0)
        throw std::invalid_argument("rasterMorphology: pitch must be <= r/20");
    Box2 box = regionBounds(region);
    if (box.empty()) return makeRaster(box, pitch, cellBudget);
    box.inflate(2.0 * r + 2.0 * pitch);
    RasterRegion g =
        rasterize(box, pitch, [&](Vec2 p) { return evalSdf(region, p) <= 0.0; }, cellBudget);
    switch (op) {
    case RasterMorphOp::Erode: return erodeRaster(g, r);
    case RasterMorphOp::Dilate: return dilateRaster(g, r);
    case RasterMorphOp::Open: return openRaster(g, r);
    }
    return g;
}

/// Cells whose membership differs between the grid and an analytic region.
inline std::size_t mismatchCells(const RasterRegion &g, const std::vector<PolyCurve> &set) {
    std::size_t n = 0;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            if (g.at(i, j) != insideCurveSet(set, g.cellCenter(i, j))) ++n;
    return n;
}

inline double symmetricDifferenceArea(const RasterRegion &g, const std::vector<PolyCurve> &set) {
    return static_cast<double>(mismatchCells(g, set)) * g.pitch * g.pitch;
}

/// Cells of `inner` outside `outer`, ignoring a `bandCells`-wide boundary band.
inline std::size_t cellsOutside(const RasterRegion &inner, const RasterRegion &outer,
                                int bandCells = 1) {
    std::size_t bad = 0;
    for (int j = 0; j < inner.ny; ++j) {
        for (int i = 0; i < inner.nx; ++i) {
            if (!inner.at(i, j)) continue;
            bool covered = false;
            for (int dj = -bandCells; dj <= bandCells && !covered; ++dj)
                for (int di = -bandCells; di <= bandCells && !covered; ++di)
                    if (outer.at(i + di, j + dj)) covered = true;
            if (!covered) ++bad;
        }
    }
    return bad;
}

} // namespace migumi
