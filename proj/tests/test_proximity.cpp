#include "doctest.h"

#include "proxinerve/errors.hpp"
#include "proxinerve/proximity.hpp"
#include "support/generators.hpp"

using namespace proxinerve;

namespace {

const ProximityContext kCtx{{0, 0, 10, 10}, {}};

RegionSet squares(std::initializer_list<Rect> rects) {
    std::vector<ConvexPolygon> polys;
    for (const Rect& r : rects)
        polys.push_back(ConvexPolygon::from_rect(r));
    return RegionSet::from_polygons(polys);
}

Tessellation grid3x3() {
    std::vector<Point> sites;
    for (int gy = 0; gy < 3; ++gy)
        for (int gx = 0; gx < 3; ++gx)
            sites.push_back({static_cast<double>(gx), static_cast<double>(gy)});
    return build_tessellation(sites, {-0.5, -0.5, 2.5, 2.5});
}

RegionSet random_set(Rng& rng, const Rect& box, int max_elems) {
    std::vector<ConvexPolygon> polys;
    const int k = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(max_elems)));
    for (int i = 0; i < k; ++i)
        polys.push_back(testing::random_convex_polygon(rng, box));
    return RegionSet::from_polygons(polys);
}

} // namespace

TEST_CASE("near: touching, overlapping, and disjoint region sets") {
    const auto a = squares({{0, 0, 1, 1}});
    const auto corner = squares({{1, 1, 2, 2}});
    const auto apart = squares({{5, 5, 6, 6}});

    const auto touch = near(a, corner, kCtx);
    CHECK(touch.holds());
    CHECK(touch.witness.kind == Witness::Kind::point);
    CHECK(distance(touch.witness.point, {1, 1}) < 1e-9);

    CHECK_FALSE(near(a, apart, kCtx).holds());
    CHECK_FALSE(near(a, RegionSet{}, kCtx).holds());
    CHECK_FALSE(near(RegionSet{}, a, kCtx).holds());
}

TEST_CASE("near over a union: witness comes from the near part") {
    const auto a = squares({{0, 0, 1, 1}});
    const auto b_union_c = squares({{0.5, 0, 1.5, 1}, {8, 8, 9, 9}});
    const auto v = near(a, b_union_c, kCtx);
    CHECK(v.holds());
    REQUIRE(v.witness.kind == Witness::Kind::polygon);
    for (const Point& p : v.witness.polygon)
        CHECK(p.x <= 1.5 + 1e-9);
}

TEST_CASE("near: point elements against regions and points") {
    const auto a = RegionSet::from_points({{0.5, 0.5}});
    const auto sq = squares({{0, 0, 1, 1}});
    CHECK(near(a, sq, kCtx).holds());
    CHECK(near(sq, a, kCtx).holds());

    const auto edge_pt = RegionSet::from_points({{1.0, 0.5}});
    CHECK(near(edge_pt, sq, kCtx).holds());

    const auto outside = RegionSet::from_points({{2.0, 0.5}});
    CHECK_FALSE(near(outside, sq, kCtx).holds());

    const auto same = RegionSet::from_points({{3, 3}});
    const auto same2 = RegionSet::from_points({{3, 3}, {4, 4}});
    CHECK(near(same, same2, kCtx).holds());
}

TEST_CASE("strongly_near: interior overlap vs corner contact") {
    const auto a = squares({{0, 0, 1, 1}});
    const auto overlapping = squares({{0.5, 0, 1.5, 1}});
    const auto corner = squares({{1, 1, 2, 2}});
    const auto edge = squares({{1, 0, 2, 1}});

    const auto v = strongly_near(a, overlapping, kCtx);
    CHECK(v.holds());
    CHECK(v.witness.kind == Witness::Kind::polygon);

    CHECK_FALSE(strongly_near(a, corner, kCtx).holds());
    CHECK_FALSE(strongly_near(a, edge, kCtx).holds());
    CHECK(near(a, corner, kCtx).holds());  // near but not strong
}

TEST_CASE("strongly_near: full-space operand") {
    const auto space = squares({{0, 0, 10, 10}});
    const auto any = squares({{3, 3, 4, 4}});
    CHECK(strongly_near(space, any, kCtx).holds());
    CHECK(strongly_near(any, space, kCtx).holds());
    // empty beats full-space: nothing is strongly near the empty set
    CHECK_FALSE(strongly_near(space, RegionSet{}, kCtx).holds());
}

TEST_CASE("strongly_near: singleton point against region interior") {
    const auto sq = squares({{0, 0, 1, 1}});
    CHECK(strongly_near(RegionSet::from_points({{0.5, 0.5}}), sq, kCtx).holds());
    CHECK(strongly_near(sq, RegionSet::from_points({{0.5, 0.5}}), kCtx).holds());
    // boundary point is near but not strongly near
    CHECK_FALSE(strongly_near(RegionSet::from_points({{1.0, 0.5}}), sq, kCtx).holds());
    // two-point sets have empty interior, so no strong contact with a region
    CHECK_FALSE(
        strongly_near(RegionSet::from_points({{0.5, 0.5}, {8, 8}}), sq, kCtx).holds());
}

TEST_CASE("strongly_near: pure point sets sharing a point") {
    const auto a = RegionSet::from_points({{0.1, 0}, {0.2, 0}, {0.3, 0}});
    const auto b = RegionSet::from_points({{0.2, 0}, {5, 5}});
    const auto v = strongly_near(a, b, kCtx);
    CHECK(v.holds());
    CHECK(distance(v.witness.point, {0.2, 0}) < 1e-9);

    const auto c = RegionSet::from_points({{7, 7}});
    CHECK_FALSE(strongly_near(a, c, kCtx).holds());
}

TEST_CASE("mesh_strongly_near on the 3x3 grid") {
    const auto t = grid3x3();
    CHECK(mesh_strongly_near(4, 1, t).holds());   // center vs south neighbor
    CHECK(mesh_strongly_near(4, 4, t).holds());   // reflexive
    CHECK_FALSE(mesh_strongly_near(4, 0, t).holds());  // corner contact only
    CHECK_FALSE(mesh_strongly_near(0, 8, t).holds());  // remote
    CHECK_THROWS_AS(mesh_strongly_near(4, 99, t), CellNotInTessellation);
}

TEST_CASE("descriptively_near: side counts decide, location does not") {
    const auto hexes = RegionSet::from_polygons(
                           {ConvexPolygon::regular(6, {0, 0}, 1.0),
                            ConvexPolygon::regular(6, {50, 50}, 2.0)})
                           .described();
    const auto sq = squares({{0, 0, 1, 1}}).described();
    const auto spec = DescriptorSpec::side_count();

    const auto a = RegionSet{{hexes.elements[0]}};
    const auto b = RegionSet{{hexes.elements[1]}};
    CHECK(descriptively_near(a, b, spec).holds());
    CHECK_FALSE(descriptively_near(a, sq, spec).holds());

    RegionSet undescribed = squares({{0, 0, 1, 1}});
    CHECK_THROWS_AS(descriptively_near(undescribed, sq, spec), MissingDescription);
}

TEST_CASE("descriptively_strongly_near: regions, singletons, full space") {
    const auto spec = DescriptorSpec::side_count();
    const auto hex1 = RegionSet::from_polygons({ConvexPolygon::regular(6, {0, 0}, 1.0)})
                          .described();
    const auto hex2 = RegionSet::from_polygons({ConvexPolygon::regular(6, {40, 0}, 1.0)})
                          .described();
    const auto pent = RegionSet::from_polygons({ConvexPolygon::regular(5, {20, 0}, 1.0)})
                          .described();

    CHECK(descriptively_strongly_near(hex1, hex2, spec, kCtx).holds());
    CHECK_FALSE(descriptively_strongly_near(hex1, pent, spec, kCtx).holds());

    const auto space = squares({{0, 0, 10, 10}}).described();
    CHECK(descriptively_strongly_near(space, pent, spec, kCtx).holds());

    const auto pt_spec = DescriptorSpec::parse("x:0,y:0");
    const auto x = RegionSet::from_points({{1, 2}}).described();
    const auto y = RegionSet::from_points({{1, 2}}).described();
    const auto z = RegionSet::from_points({{3, 4}}).described();
    CHECK(descriptively_strongly_near(x, y, pt_spec, kCtx).holds());
    CHECK_FALSE(descriptively_strongly_near(x, z, pt_spec, kCtx).holds());

    // a two-point set is not a singleton, and points carry no interior
    const auto xy = RegionSet::from_points({{1, 2}, {3, 4}}).described();
    CHECK_FALSE(descriptively_strongly_near(xy, x, pt_spec, kCtx).holds());
}

TEST_CASE("property: symmetry of all four relations") {
    Rng rng(555);
    const Rect box{0, 0, 10, 10};
    const auto spec = DescriptorSpec::side_count();
    for (int t = 0; t < 100; ++t) {
        const auto A = random_set(rng, box, 3);
        const auto B = random_set(rng, box, 3);
        CHECK(near(A, B, kCtx).holds() == near(B, A, kCtx).holds());
        CHECK(strongly_near(A, B, kCtx).holds() == strongly_near(B, A, kCtx).holds());
        const auto Ad = A.described();
        const auto Bd = B.described();
        CHECK(descriptively_near(Ad, Bd, spec).holds() ==
              descriptively_near(Bd, Ad, spec).holds());
        CHECK(descriptively_strongly_near(Ad, Bd, spec, kCtx).holds() ==
              descriptively_strongly_near(Bd, Ad, spec, kCtx).holds());
    }
}

TEST_CASE("property: strong contact implies nearness, descriptive likewise") {
    Rng rng(666);
    const Rect box{0, 0, 10, 10};
    const auto spec = DescriptorSpec::side_count();
    int strong_seen = 0;
    for (int t = 0; t < 200; ++t) {
        const auto A = random_set(rng, box, 3);
        const auto B = random_set(rng, box, 3);
        if (strongly_near(A, B, kCtx).holds()) {
            ++strong_seen;
            CHECK(near(A, B, kCtx).holds());
        }
        // the whole-space rule holds descriptively-strongly against any set,
        // matching descriptions or not, so the implication is scoped to
        // operands that are not the whole space
        if (kCtx.is_full_space(A) || kCtx.is_full_space(B))
            continue;
        const auto Ad = A.described();
        const auto Bd = B.described();
        if (descriptively_strongly_near(Ad, Bd, spec, kCtx).holds())
            CHECK(descriptively_near(Ad, Bd, spec).holds());
    }
    CHECK(strong_seen > 0);
}

TEST_CASE("property: every holds verdict revalidates against its witness") {
    Rng rng(777);
    const Rect box{0, 0, 10, 10};
    const auto spec = DescriptorSpec::side_count();
    for (int t = 0; t < 100; ++t) {
        const auto A = random_set(rng, box, 3).described();
        const auto B = random_set(rng, box, 3).described();
        for (const auto& v :
             {near(A, B, kCtx), strongly_near(A, B, kCtx),
              descriptively_near(A, B, spec),
              descriptively_strongly_near(A, B, spec, kCtx)}) {
            CHECK(revalidate(v, A, B, kCtx, spec));
        }
    }
}

TEST_CASE("union axiom: near distributes over operand union") {
    Rng rng(888);
    const Rect box{0, 0, 10, 10};
    for (int t = 0; t < 100; ++t) {
        const auto A = random_set(rng, box, 2);
        const auto B = random_set(rng, box, 2);
        const auto C = random_set(rng, box, 2);
        RegionSet bc = B;
        bc.elements.insert(bc.elements.end(), C.elements.begin(), C.elements.end());
        const bool united = near(A, bc, kCtx).holds();
        const bool split = near(A, B, kCtx).holds() || near(A, C, kCtx).holds();
        CHECK(united == split);
    }
}
