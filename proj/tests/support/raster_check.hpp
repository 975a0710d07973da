#ifndef PROXINERVE_TESTS_RASTER_CHECK_HPP
#define PROXINERVE_TESTS_RASTER_CHECK_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "proxinerve/voronoi.hpp"

namespace proxinerve::testing {

struct RasterAgreement {
    std::size_t checked = 0;
    std::size_t agreed = 0;
    std::size_t off_boundary_failures = 0;

    double fraction() const {
        return checked == 0 ? 1.0
                            : static_cast<double>(agreed) / static_cast<double>(checked);
    }
};

/**
 * Compares cell membership against the pure-distance raster oracle.  Raster
 * points whose two nearest sites are within eps_geom of equidistant sit on a
 * cell boundary and are skipped.  Disagreements farther than eps_edge from
 * the containing cell's boundary count as off_boundary_failures.
 */
inline RasterAgreement raster_agreement(const Tessellation& t, int resolution,
                                        const Tolerances& tol) {
    RasterAgreement out;
    const Rect& box = t.bbox;
    for (int row = 0; row < resolution; ++row) {
        const double y = box.y0 + box.height() * row / (resolution - 1);
        for (int col = 0; col < resolution; ++col) {
            const double x = box.x0 + box.width() * col / (resolution - 1);
            const Point p{x, y};

            int oracle = -1;
            double d1 = std::numeric_limits<double>::infinity();
            double d2 = std::numeric_limits<double>::infinity();
            for (const Site& s : t.sites) {
                const double d = distance(p, s.position);
                if (d < d1) {
                    d2 = d1;
                    d1 = d;
                    oracle = s.id;
                } else if (d < d2) {
                    d2 = d;
                }
            }
            if (d2 - d1 <= tol.eps_geom)
                continue;

            int deepest = -1;
            double depth = -std::numeric_limits<double>::infinity();
            for (const Cell& c : t.cells) {
                const double sbd = c.polygon.signed_boundary_distance(p);
                if (sbd > depth) {
                    depth = sbd;
                    deepest = c.site;
                }
            }

            ++out.checked;
            if (deepest == oracle) {
                ++out.agreed;
            } else if (std::abs(depth) > tol.eps_edge) {
                ++out.off_boundary_failures;
            }
        }
    }
    return out;
}

} // namespace proxinerve::testing

#endif
