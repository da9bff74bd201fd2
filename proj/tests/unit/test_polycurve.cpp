#include <catch2/catch_amalgamated.hpp>

#include <migumi/polycurve.hpp>

#include <random>

using namespace migumi;
using Catch::Approx;

TEST_CASE("bulge arc geometry") {
    // quarter circle (1,0) -> (0,1), CCW about the origin
    Segment s{{1.0, 0.0}, {0.0, 1.0}, std::tan(kPi / 8.0)};
    ArcGeom g = arcGeom(s);
    CHECK(g.radius == Approx(1.0));
    CHECK(g.center.x == Approx(0.0).margin(1e-12));
    CHECK(g.center.y == Approx(0.0).margin(1e-12));
    CHECK(g.sweep == Approx(kPi / 2.0));
    CHECK(segmentLength(s) == Approx(kPi / 2.0));

    Vec2 mid = segmentPointAt(s, 0.5);
    CHECK(mid.x == Approx(std::sqrt(0.5)));
    CHECK(mid.y == Approx(std::sqrt(0.5)));

    // right-of-travel normal on a CCW arc is the outward radial
    Vec2 n = segmentNormalAt(s, 0.5);
    CHECK(n.x == Approx(std::sqrt(0.5)));
    CHECK(n.y == Approx(std::sqrt(0.5)));

    // radius matches chord / (2 sin(2 atan b))
    double chord = distance(s.a, s.b);
    CHECK(g.radius == Approx(chord / (2.0 * std::sin(2.0 * std::atan(s.bulge)))));
}

TEST_CASE("disk polycurve area, perimeter, orientation") {
    PolyCurve c = PolyCurve::disk({2.0, -1.0}, 3.0);
    CHECK(signedArea(c) == Approx(kPi * 9.0));
    CHECK(perimeter(c) == Approx(kTau * 3.0));
    PolyCurve r = reversed(c);
    CHECK(signedArea(r) == Approx(-kPi * 9.0));
}

TEST_CASE("unit square sdf values") {
    std::vector<PolyCurve> sq{PolyCurve::rect({-0.5, -0.5}, {0.5, 0.5})};
    CHECK(curveSetSdf(sq, {0.0, 0.0}) == Approx(-0.5));
    CHECK(curveSetSdf(sq, {1.0, 0.0}) == Approx(0.5));
    CHECK(curveSetSdf(sq, {0.5, 0.0}) == Approx(0.0).margin(1e-12));
    CHECK(curveSetSdf(sq, {1.5, 1.5}) == Approx(std::sqrt(2.0)));
}

TEST_CASE("containment with arcs: crescent") {
    // Crescent between two arcs over the chord (-1,0)-(1,0): inner apex (0,0.5),
    // outer apex (0,1.5). CCW traversal: along the inner arc left to right
    // (apex left of travel, bulge -0.5), back along the outer arc (apex right
    // of travel, bulge +1.5). Both circular-segment regions overlap, which is
    // exactly what the XOR parity rule has to get right.
    PolyCurve crescent({{-1.0, 0.0}, {1.0, 0.0}}, {-0.5, 1.5});
    CHECK(signedArea(crescent) > 0.0);
    std::vector<PolyCurve> set{crescent};
    CHECK(insideCurveSet(set, {0.0, 1.0}));        // between the arcs
    CHECK_FALSE(insideCurveSet(set, {0.0, 0.25})); // inside the bite
    CHECK_FALSE(insideCurveSet(set, {0.0, -0.25}));
    CHECK_FALSE(insideCurveSet(set, {0.0, 1.75}));
}

TEST_CASE("square with disk hole: even-odd set") {
    std::vector<PolyCurve> set{PolyCurve::rect({0, 0}, {10, 10}),
                               reversed(PolyCurve::disk({5, 5}, 2.0))};
    CHECK(insideCurveSet(set, {1.0, 1.0}));
    CHECK_FALSE(insideCurveSet(set, {5.0, 5.0}));
    CHECK(curveSetSdf(set, {5.0, 5.0}) == Approx(2.0));
    CHECK(totalArea(set) == Approx(100.0 - kPi * 4.0));
}

namespace {

PolyCurve randomBlob(std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> nd(5, 10);
    std::uniform_real_distribution<double> rd(4.0, 10.0);
    std::uniform_real_distribution<double> bd(-0.4, 0.4);
    int n = nd(rng);
    PolyCurve pc;
    for (int i = 0; i < n; ++i) {
        double ang = kTau * i / n;
        double rad = rd(rng);
        pc.vertices.push_back({rad * std::cos(ang), rad * std::sin(ang)});
        pc.bulges.push_back(bd(rng));
    }
    return pc;
}

} // namespace

TEST_CASE("exact sdf equals brute-force boundary distance") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> qd(-14.0, 14.0);
    for (int trial = 0; trial < 8; ++trial) {
        PolyCurve pc = randomBlob(rng);
        std::vector<PolyCurve> set{pc};
        // dense boundary sampling
        std::vector<Vec2> pts;
        for (std::size_t i = 0; i < pc.size(); ++i) {
            Segment s = pc.segment(i);
            int k = 1 + static_cast<int>(segmentLength(s) / perimeter(pc) * 10000);
            for (int j = 0; j < k; ++j) pts.push_back(segmentPointAt(s, (j + 0.5) / k));
        }
        for (int q = 0; q < 125; ++q) {
            Vec2 p{qd(rng), qd(rng)};
            double brute = std::numeric_limits<double>::max();
            for (Vec2 bp : pts) brute = std::min(brute, distance(p, bp));
            CHECK(std::abs(curveSetSdf(set, p)) == Approx(brute).margin(1e-3));
        }
    }
}

TEST_CASE("reversal preserves geometry") {
    PolyCurve pc({{0, 0}, {4, 0}, {4, 3}, {1, 4}}, {0.3, 0.0, -0.2, 0.0});
    PolyCurve rev = reversed(pc);
    CHECK(signedArea(rev) == Approx(-signedArea(pc)));
    CHECK(perimeter(rev) == Approx(perimeter(pc)));
    for (double t : {0.1, 0.4, 0.9}) {
        // sample points of segment i map onto reversed segment n-1-i
        Segment s = pc.segment(1);
        Segment r = rev.segment(pc.size() - 2);
        Vec2 a = segmentPointAt(s, t);
        Vec2 b = segmentPointAt(r, 1.0 - t);
        CHECK(distance(a, b) < 1e-12);
    }
}

TEST_CASE("transform with mirror flips bulges and keeps region") {
    PolyCurve pc({{0, 0}, {4, 0}, {4, 3}}, {0.5, 0.0, 0.0});
    Transform2 xf;
    xf.mirror = true;
    PolyCurve m = transformed(pc, xf);
    CHECK(signedArea(m) == Approx(signedArea(pc)));
    // mirrored region contains mirrored points
    Vec2 inside{3.0, 1.0};
    CHECK(curveParity(pc, inside) == curveParity(m, {inside.x, -inside.y}));
}
