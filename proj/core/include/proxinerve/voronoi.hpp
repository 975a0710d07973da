#ifndef PROXINERVE_VORONOI_HPP
#define PROXINERVE_VORONOI_HPP

#include <cstddef>
#include <vector>

#include "proxinerve/geometry.hpp"
#include "proxinerve/tolerances.hpp"

namespace proxinerve {

struct Site {
    int id = 0;
    Point position;
};

/** One bounded Voronoi region together with its generating site. */
struct Cell {
    int site = 0;
    ConvexPolygon polygon;
    /** True when an edge of the region lies on the bounding box, i.e. the
        unbounded region was cut off and the side count is box-distorted. */
    bool touches_boundary = false;
};

/** Edge-adjacency pair (a < b) with its witnessing shared boundary segment. */
struct AdjacencyEdge {
    int a = 0;
    int b = 0;
    Segment witness;
};

class Tessellation {
public:
    Rect bbox;
    std::vector<Site> sites;
    std::vector<Cell> cells;
    std::vector<AdjacencyEdge> edges;  // sorted by (a, b)

    ConvexPolygon bbox_polygon() const { return ConvexPolygon::from_rect(bbox); }

    const Cell& cell(int id) const;

    /** Ids adjacent to `id`, ascending. */
    std::vector<int> neighbors(int id) const;
    std::size_t degree(int id) const;
    bool adjacent(int a, int b) const;
};

/**
 * Bounded Voronoi tessellation: each cell is the box cut by the bisector
 * half-plane toward every other site.  Deterministic: cells ordered by site
 * id, polygons canonical.
 *
 * Throws DuplicateSite when two positions coincide at eps_geom,
 * SiteOutsideBox when a site is not strictly interior to the box,
 * ConfigError when the box is degenerate or no sites are given.
 */
Tessellation build_tessellation(const std::vector<Point>& positions, const Rect& bbox,
                                const Tolerances& tol = {});

/** Recomputes the adjacency relation of already-built cells. */
std::vector<AdjacencyEdge> adjacency_graph(const std::vector<Cell>& cells,
                                           const Tolerances& tol);

/**
 * Row-major resolution x resolution raster (grid inclusive of the box edges)
 * of nearest-site ids, ties broken toward the smallest id.  Pure distance
 * comparisons, independent of the clipping pipeline; test oracle.
 */
std::vector<int> nearest_site_oracle(const std::vector<Point>& positions,
                                     const Rect& bbox, int resolution);

/** Id of the cell containing p (deepest by signed boundary distance; smallest
    id on ties).  Throws CellNotInTessellation when p is outside every cell. */
int find_cell(const Tessellation& t, Point p, const Tolerances& tol = {});

} // namespace proxinerve

#endif
