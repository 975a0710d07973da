#ifndef PROXINERVE_GEOMETRY_HPP
#define PROXINERVE_GEOMETRY_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "proxinerve/tolerances.hpp"

namespace proxinerve {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
double norm(Point p);
double distance(Point a, Point b);

/** Directed segment from a to b; valid when the endpoints are distinct. */
struct Segment {
    Point a;
    Point b;

    double length() const { return distance(a, b); }
    Point midpoint() const { return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}; }
};

/** Axis-aligned rectangle, used for bounding boxes. */
struct Rect {
    double x0 = 0.0, y0 = 0.0, x1 = 1.0, y1 = 1.0;

    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
    double diagonal() const;
    double area() const { return width() * height(); }
    bool degenerate(double eps) const { return width() <= eps || height() <= eps; }
    bool contains(Point p) const {
        return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1;
    }
};

/**
 * Closed half-plane {p : normal . p <= offset}.  The perpendicular bisector
 * between sites s and q, taken on s's side, is HalfPlane::bisector(s, q).
 */
struct HalfPlane {
    Point normal;
    double offset = 0.0;

    static HalfPlane bisector(Point s, Point q);

    /** Same set with |normal| = 1, so signed_distance is a true distance. */
    HalfPlane normalized() const;

    /** Negative inside the half-plane, positive outside (unit normal assumed). */
    double signed_distance(Point p) const { return dot(normal, p) - offset; }
};

enum class PolygonRelation { disjoint, point_contact, edge_contact, area_overlap };

/**
 * Intersection of a family of closed convex sets, with the degenerate cases
 * kept first-class: a convex polygon, a segment, a single point, or empty.
 */
struct CommonIntersection {
    enum class Kind { empty, point, segment, polygon };
    Kind kind = Kind::empty;
    Point point;                 // valid when kind == point
    Segment segment;             // valid when kind == segment
    std::vector<Point> polygon;  // valid when kind == polygon (canonical CCW)

    bool empty() const { return kind == Kind::empty; }
};

/**
 * Convex polygon with >= 3 vertices stored counter-clockwise in canonical
 * form: consecutive duplicates and collinear vertices merged (at eps_geom),
 * starting vertex = lexicographic minimum.  Canonical form makes structural
 * equality meaningful, so tessellations compare deterministically.
 */
class ConvexPolygon {
public:
    /** Validates and canonicalizes; throws InvalidPolygon on bad input. */
    static ConvexPolygon from_vertices(std::vector<Point> vertices,
                                       const Tolerances& tol = {});

    static ConvexPolygon from_rect(const Rect& r);

    /** Regular n-gon, vertex 0 at angle `phase`; used by fixtures and tests. */
    static ConvexPolygon regular(int sides, Point center, double circumradius,
                                 double phase = 0.0);

    const std::vector<Point>& vertices() const { return verts_; }
    std::size_t size() const { return verts_.size(); }

    double area() const;
    Point centroid() const;
    double diameter() const;

    /** Edge i runs from vertex i to vertex i+1 (mod n). */
    Segment edge(std::size_t i) const;

    /**
     * Min over edges of the signed distance to the edge line, positive
     * inside.  Distance from p to the boundary when p is inside; negative
     * of (roughly) the separation when outside.
     */
    double signed_boundary_distance(Point p) const;

    bool contains(Point p, const Tolerances& tol = {}) const {
        return signed_boundary_distance(p) >= -tol.eps_geom;
    }
    bool strictly_contains(Point p, const Tolerances& tol = {}) const {
        return signed_boundary_distance(p) > tol.eps_geom;
    }

    /** Structural equality of canonical vertex lists at eps_geom. */
    bool equals(const ConvexPolygon& other, const Tolerances& tol = {}) const;

    friend bool operator==(const ConvexPolygon&, const ConvexPolygon&) = default;

private:
    ConvexPolygon() = default;
    std::vector<Point> verts_;
};

double polygon_area(const std::vector<Point>& vertices);

/**
 * poly intersected with a closed half-plane; empty or degenerate
 * (area < eps_area) results come back as nullopt.
 */
std::optional<ConvexPolygon> clip(const ConvexPolygon& poly, const HalfPlane& h,
                                  const Tolerances& tol = {});

/**
 * Maximal common boundary segment of two polygons with disjoint (or
 * identical) interiors; nullopt for vertex-only contact or disjointness.
 * Contacts shorter than eps_edge do not count.
 */
std::optional<Segment> shared_edge(const ConvexPolygon& a, const ConvexPolygon& b,
                                   const Tolerances& tol = {});

/** Classification of cl(a) ∩ cl(b) at eps_geom granularity. */
PolygonRelation polygons_intersect(const ConvexPolygon& a, const ConvexPolygon& b,
                                   const Tolerances& tol = {});

/** Intersection of the closed polygons, degeneracy tracked (see type). */
CommonIntersection common_intersection(const std::vector<ConvexPolygon>& polys,
                                       const Tolerances& tol = {});

} // namespace proxinerve

#endif
