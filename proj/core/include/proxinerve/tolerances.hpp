#ifndef PROXINERVE_TOLERANCES_HPP
#define PROXINERVE_TOLERANCES_HPP

#include <cmath>

namespace proxinerve {

/**
 * Numeric tolerances shared by all geometric predicates.
 *
 * eps_geom   absolute tolerance for coordinate comparisons and
 *            point/line incidence (perpendicular distances).
 * eps_area   areas below this are treated as degenerate (not a polygon).
 * eps_edge   minimum length for a shared edge to count as mesh contact;
 *            derived from the bounding box as 1e-6 x its diagonal.
 */
struct Tolerances {
    double eps_geom = 1e-9;
    double eps_area = 1e-12;
    double eps_edge = 1e-6;

    static Tolerances for_diagonal(double diag, double eps_geom_override = 0.0) {
        Tolerances t;
        if (eps_geom_override > 0.0)
            t.eps_geom = eps_geom_override;
        t.eps_edge = 1e-6 * diag;
        return t;
    }
};

} // namespace proxinerve

#endif
