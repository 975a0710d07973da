#ifndef PROXINERVE_TESTS_GENERATORS_HPP
#define PROXINERVE_TESTS_GENERATORS_HPP

#include <cmath>
#include <optional>
#include <vector>

#include "proxinerve/geometry.hpp"
#include "proxinerve/rng.hpp"

namespace proxinerve::testing {

inline Point random_point_in(Rng& rng, const Rect& box) {
    return {rng.uniform(box.x0, box.x1), rng.uniform(box.y0, box.y1)};
}

/**
 * Random convex polygon inside `box`: the box rectangle cut by a few random
 * half-planes that keep a random interior anchor point.  Always nonempty.
 */
inline ConvexPolygon random_convex_polygon(Rng& rng, const Rect& box,
                                           int cuts = 4) {
    const Point anchor = random_point_in(rng, {box.x0 + 0.25 * box.width(),
                                               box.y0 + 0.25 * box.height(),
                                               box.x1 - 0.25 * box.width(),
                                               box.y1 - 0.25 * box.height()});
    ConvexPolygon poly = ConvexPolygon::from_rect(box);
    for (int c = 0; c < cuts; ++c) {
        const double ang = rng.uniform(0.0, 2.0 * M_PI);
        const Point n = {std::cos(ang), std::sin(ang)};
        const double slack = rng.uniform(0.05, 0.6) * box.diagonal();
        const HalfPlane h = {n, dot(n, anchor) + slack};
        if (auto cut = clip(poly, h))
            poly = *cut;
    }
    return poly;
}

/** Sites with pairwise separation at least min_sep, rejection-sampled. */
inline std::vector<Point> random_sites(Rng& rng, const Rect& box, std::size_t n,
                                       double min_sep) {
    std::vector<Point> sites;
    while (sites.size() < n) {
        const Point p = random_point_in(rng, box);
        bool ok = true;
        for (const Point& q : sites) {
            if (distance(p, q) < min_sep) {
                ok = false;
                break;
            }
        }
        if (ok)
            sites.push_back(p);
    }
    return sites;
}

} // namespace proxinerve::testing

#endif
