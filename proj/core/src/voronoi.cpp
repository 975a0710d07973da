#include "proxinerve/voronoi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "proxinerve/errors.hpp"

namespace proxinerve {

namespace {

bool on_box_boundary(const ConvexPolygon& poly, const Rect& box, double eps) {
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Segment e = poly.edge(i);
        const bool on_x0 = std::abs(e.a.x - box.x0) <= eps && std::abs(e.b.x - box.x0) <= eps;
        const bool on_x1 = std::abs(e.a.x - box.x1) <= eps && std::abs(e.b.x - box.x1) <= eps;
        const bool on_y0 = std::abs(e.a.y - box.y0) <= eps && std::abs(e.b.y - box.y0) <= eps;
        const bool on_y1 = std::abs(e.a.y - box.y1) <= eps && std::abs(e.b.y - box.y1) <= eps;
        if (on_x0 || on_x1 || on_y0 || on_y1)
            return true;
    }
    return false;
}

} // namespace

const Cell& Tessellation::cell(int id) const {
    if (id < 0 || static_cast<std::size_t>(id) >= cells.size()) {
        std::ostringstream msg;
        msg << "no cell with id " << id;
        throw CellNotInTessellation(msg.str());
    }
    return cells[static_cast<std::size_t>(id)];
}

std::vector<int> Tessellation::neighbors(int id) const {
    std::vector<int> out;
    for (const AdjacencyEdge& e : edges) {
        if (e.a == id)
            out.push_back(e.b);
        else if (e.b == id)
            out.push_back(e.a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t Tessellation::degree(int id) const { return neighbors(id).size(); }

bool Tessellation::adjacent(int a, int b) const {
    if (a > b)
        std::swap(a, b);
    for (const AdjacencyEdge& e : edges)
        if (e.a == a && e.b == b)
            return true;
    return false;
}

Tessellation build_tessellation(const std::vector<Point>& positions, const Rect& bbox,
                                const Tolerances& tol) {
    if (positions.empty())
        throw ConfigError("tessellation needs at least one site");
    if (bbox.degenerate(tol.eps_geom))
        throw ConfigError("degenerate bounding box");

    const std::size_t n = positions.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point p = positions[i];
        if (p.x <= bbox.x0 + tol.eps_geom || p.x >= bbox.x1 - tol.eps_geom ||
            p.y <= bbox.y0 + tol.eps_geom || p.y >= bbox.y1 - tol.eps_geom) {
            std::ostringstream msg;
            msg << "site " << i << " at (" << p.x << ", " << p.y
                << ") is not strictly inside the bounding box";
            throw SiteOutsideBox(msg.str());
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            if (distance(p, positions[j]) <= tol.eps_geom) {
                std::ostringstream msg;
                msg << "sites " << i << " and " << j << " coincide";
                throw DuplicateSite(msg.str());
            }
        }
    }

    Tessellation t;
    t.bbox = bbox;
    t.sites.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        t.sites.push_back({static_cast<int>(i), positions[i]});

    const ConvexPolygon box_poly = ConvexPolygon::from_rect(bbox);
    t.cells.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        ConvexPolygon cell = box_poly;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i)
                continue;
            auto cut = clip(cell, HalfPlane::bisector(positions[i], positions[j]), tol);
            if (!cut) {
                std::ostringstream msg;
                msg << "cell of site " << i << " vanished while clipping";
                throw InvalidPolygon(msg.str());
            }
            cell = std::move(*cut);
        }
        t.cells.push_back({static_cast<int>(i), cell,
                           on_box_boundary(cell, bbox, tol.eps_geom)});
    }

    t.edges = adjacency_graph(t.cells, tol);
    return t;
}

std::vector<AdjacencyEdge> adjacency_graph(const std::vector<Cell>& cells,
                                           const Tolerances& tol) {
    std::vector<AdjacencyEdge> edges;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        for (std::size_t j = i + 1; j < cells.size(); ++j) {
            if (auto e = shared_edge(cells[i].polygon, cells[j].polygon, tol))
                edges.push_back({static_cast<int>(i), static_cast<int>(j), *e});
        }
    }
    return edges;
}

std::vector<int> nearest_site_oracle(const std::vector<Point>& positions,
                                     const Rect& bbox, int resolution) {
    if (resolution < 2)
        throw ConfigError("raster resolution must be at least 2");
    std::vector<int> raster;
    raster.reserve(static_cast<std::size_t>(resolution) * resolution);
    for (int row = 0; row < resolution; ++row) {
        const double y = bbox.y0 + bbox.height() * row / (resolution - 1);
        for (int col = 0; col < resolution; ++col) {
            const double x = bbox.x0 + bbox.width() * col / (resolution - 1);
            int best = 0;
            double best_d = std::numeric_limits<double>::infinity();
            for (std::size_t s = 0; s < positions.size(); ++s) {
                const double d = distance({x, y}, positions[s]);
                if (d < best_d) {
                    best_d = d;
                    best = static_cast<int>(s);
                }
            }
            raster.push_back(best);
        }
    }
    return raster;
}

int find_cell(const Tessellation& t, Point p, const Tolerances& tol) {
    int best = -1;
    double best_depth = -std::numeric_limits<double>::infinity();
    for (const Cell& c : t.cells) {
        const double depth = c.polygon.signed_boundary_distance(p);
        if (depth > best_depth) {
            best_depth = depth;
            best = c.site;
        }
    }
    if (best < 0 || best_depth < -tol.eps_geom) {
        std::ostringstream msg;
        msg << "point (" << p.x << ", " << p.y << ") lies outside the tessellation";
        throw CellNotInTessellation(msg.str());
    }
    return best;
}

} // namespace proxinerve
