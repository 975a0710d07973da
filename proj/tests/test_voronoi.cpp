#include "doctest.h"

#include <cmath>

#include "proxinerve/errors.hpp"
#include "proxinerve/voronoi.hpp"
#include "support/generators.hpp"
#include "support/raster_check.hpp"

using namespace proxinerve;

namespace {

Tessellation grid3x3() {
    std::vector<Point> sites;
    for (int gy = 0; gy < 3; ++gy)
        for (int gx = 0; gx < 3; ++gx)
            sites.push_back({static_cast<double>(gx), static_cast<double>(gy)});
    return build_tessellation(sites, {-0.5, -0.5, 2.5, 2.5});
}

} // namespace

TEST_CASE("single site owns the whole box") {
    const auto t = build_tessellation({{0, 0}}, {-1, -1, 1, 1});
    REQUIRE(t.cells.size() == 1);
    CHECK(t.cells[0].polygon.area() == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(t.cells[0].polygon.equals(t.bbox_polygon()));
    CHECK(t.cells[0].touches_boundary);
    CHECK(t.edges.empty());
}

TEST_CASE("two sites split the box along the bisector") {
    const auto t = build_tessellation({{0, 0}, {1, 0}}, {-1, -1, 2, 1});
    REQUIRE(t.cells.size() == 2);
    CHECK(t.cells[0].polygon.area() == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(t.cells[1].polygon.area() == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(t.cells[0].polygon.equals(ConvexPolygon::from_rect({-1, -1, 0.5, 1})));
    REQUIRE(t.edges.size() == 1);
    CHECK(t.edges[0].a == 0);
    CHECK(t.edges[0].b == 1);
    CHECK(t.edges[0].witness.length() == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("3x3 integer grid gives nine unit squares") {
    const auto t = grid3x3();
    REQUIRE(t.cells.size() == 9);
    for (const Cell& c : t.cells) {
        CHECK(c.polygon.area() == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(c.polygon.size() == 4);
    }
    // center cell is the only interior one
    CHECK_FALSE(t.cells[4].touches_boundary);
    for (int id : {0, 1, 2, 3, 5, 6, 7, 8})
        CHECK(t.cells[static_cast<std::size_t>(id)].touches_boundary);
    CHECK(t.cells[4].polygon.equals(ConvexPolygon::from_rect({0.5, 0.5, 1.5, 1.5})));
}

TEST_CASE("3x3 grid adjacency: center degree 4, corners degree 2") {
    const auto t = grid3x3();
    CHECK(t.degree(4) == 4);
    CHECK(t.neighbors(4) == std::vector<int>{1, 3, 5, 7});
    for (int corner : {0, 2, 6, 8})
        CHECK(t.degree(corner) == 2);
    for (int side : {1, 3, 5, 7})
        CHECK(t.degree(side) == 3);
    CHECK(t.adjacent(4, 1));
    CHECK_FALSE(t.adjacent(4, 0));  // diagonal corner contact is not adjacency
}

TEST_CASE("site validation errors") {
    CHECK_THROWS_AS(build_tessellation({{0, 0}, {0, 0}}, {-1, -1, 1, 1}),
                    DuplicateSite);
    CHECK_THROWS_AS(build_tessellation({{5, 0}}, {-1, -1, 1, 1}), SiteOutsideBox);
    CHECK_THROWS_AS(build_tessellation({{1, 0}}, {-1, -1, 1, 1}), SiteOutsideBox);
    CHECK_THROWS_AS(build_tessellation({}, {-1, -1, 1, 1}), ConfigError);
    CHECK_THROWS_AS(build_tessellation({{0, 0}}, {-1, -1, -1, 1}), ConfigError);
}

TEST_CASE("nearest-site raster basics") {
    const auto solo = nearest_site_oracle({{0, 0}}, {-1, -1, 1, 1}, 8);
    for (int id : solo)
        CHECK(id == 0);

    const Rect box{-1, -1, 2, 1};
    const std::vector<Point> sites{{0, 0}, {1, 0}};
    const auto raster = nearest_site_oracle(sites, box, 151);
    // (0,0) is column 50, center row; (0.75,0) is column 87.5 -> use 0.8 at column 90
    const int rows = 151, center_row = 75;
    CHECK(raster[static_cast<std::size_t>(center_row * rows + 50)] == 0);
    const double x_col90 = box.x0 + box.width() * 90 / 150.0;
    CHECK(x_col90 == doctest::Approx(0.8));
    CHECK(raster[static_cast<std::size_t>(center_row * rows + 90)] == 1);
}

TEST_CASE("find_cell maps each site to its own cell") {
    const auto t = grid3x3();
    for (const Site& s : t.sites)
        CHECK(find_cell(t, s.position) == s.id);
    CHECK_THROWS_AS(find_cell(t, {50, 50}), CellNotInTessellation);
}

TEST_CASE("property: raster membership agreement on random meshes") {
    const Rect box{0, 0, 10, 10};
    const Tolerances tol = Tolerances::for_diagonal(box.diagonal());
    for (uint64_t seed : {1, 2, 3}) {
        Rng rng(seed);
        const auto sites =
            testing::random_sites(rng, {0.5, 0.5, 9.5, 9.5}, 50, 0.05);
        const auto t = build_tessellation(sites, box, tol);
        const auto agreement = testing::raster_agreement(t, 100, tol);
        CHECK(agreement.fraction() >= 0.999);
        CHECK(agreement.off_boundary_failures == 0);
    }
}

TEST_CASE("property: cell areas partition the box") {
    const Rect box{0, 0, 10, 10};
    const Tolerances tol = Tolerances::for_diagonal(box.diagonal());
    for (uint64_t seed : {7, 8}) {
        Rng rng(seed);
        const auto sites =
            testing::random_sites(rng, {0.5, 0.5, 9.5, 9.5}, 40, 0.05);
        const auto t = build_tessellation(sites, box, tol);
        double total = 0.0;
        for (const Cell& c : t.cells)
            total += c.polygon.area();
        CHECK(std::abs(total - box.area()) / box.area() <=
              static_cast<double>(sites.size()) * 1e-9);
    }
}

TEST_CASE("property: rebuilt tessellation is structurally identical") {
    const Rect box{0, 0, 10, 10};
    Rng rng(11);
    const auto sites = testing::random_sites(rng, {0.5, 0.5, 9.5, 9.5}, 30, 0.05);
    const auto t1 = build_tessellation(sites, box);
    const auto t2 = build_tessellation(sites, box);
    REQUIRE(t1.cells.size() == t2.cells.size());
    for (std::size_t i = 0; i < t1.cells.size(); ++i)
        CHECK(t1.cells[i].polygon == t2.cells[i].polygon);
    REQUIRE(t1.edges.size() == t2.edges.size());
    for (std::size_t i = 0; i < t1.edges.size(); ++i) {
        CHECK(t1.edges[i].a == t2.edges[i].a);
        CHECK(t1.edges[i].b == t2.edges[i].b);
    }
}

TEST_CASE("property: every cell strictly contains its site") {
    const Rect box{0, 0, 10, 10};
    Rng rng(13);
    const auto sites = testing::random_sites(rng, {0.5, 0.5, 9.5, 9.5}, 60, 0.02);
    const auto t = build_tessellation(sites, box);
    for (const Cell& c : t.cells)
        CHECK(c.polygon.strictly_contains(t.sites[static_cast<std::size_t>(c.site)].position));
}
