#ifndef PROXINERVE_TESTS_FIXTURES_HPP
#define PROXINERVE_TESTS_FIXTURES_HPP

#include <cmath>
#include <vector>

#include "proxinerve/geometry.hpp"

namespace proxinerve::testing {

struct MeshFixture {
    std::vector<Point> sites;
    Rect box;
};

/**
 * Honeycomb patch with two interior sites whose cells are congruent regular
 * hexagons (area sqrt(3)/2). Both are tied maximal nuclei at degree 6, so the
 * mesh carries exactly two maximal nucleus clusters with matching nucleus
 * descriptions.
 */
inline MeshFixture twin_hexagon_mesh() {
    const double h = std::sqrt(3.0) / 2.0;
    return {
        {
            {0.0, 0.0},
            {1.0, 0.0},
            {-1.0, 0.0},
            {2.0, 0.0},
            {-0.5, h},
            {0.5, h},
            {1.5, h},
            {-0.5, -h},
            {0.5, -h},
            {1.5, -h},
        },
        Rect{-3.0, -2.5, 4.0, 2.5},
    };
}

/**
 * Two eight-satellite wheels tied at degree 8: an interior one whose nucleus
 * cell is an octagon, and one pressed against the right wall whose nucleus
 * cell picks up a ninth side from the box edge. The tied nuclei therefore
 * have differing side counts.
 */
inline MeshFixture mixed_side_count_mesh() {
    MeshFixture f;
    f.box = Rect{0.0, 0.0, 20.0, 10.0};
    const double r = 1.4;
    f.sites.push_back({5.0, 5.0});
    for (int k = 0; k < 8; ++k) {
        const double a = k * M_PI / 4.0;
        f.sites.push_back({5.0 + r * std::cos(a), 5.0 + r * std::sin(a)});
    }
    f.sites.push_back({19.0, 5.0});
    for (int k = 0; k < 8; ++k) {
        const double a = M_PI / 2.0 + k * M_PI / 7.0;
        f.sites.push_back({19.0 + r * std::cos(a), 5.0 + r * std::sin(a)});
    }
    return f;
}

} // namespace proxinerve::testing

#endif
