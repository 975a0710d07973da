#include "proxinerve/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "proxinerve/errors.hpp"

namespace proxinerve {

namespace {

// Clipping keeps points up to eps_geom outside each plane, so chains carry
// O(planes * eps) of slack; cluster radius has to sit above that but far
// below eps_edge.
constexpr double kMergeFactor = 4.0;

double perp_distance(Point p, Point a, Point b) {
    const double len = distance(a, b);
    if (len <= std::numeric_limits<double>::min())
        return distance(p, a);
    return std::abs(cross(b - a, p - a)) / len;
}

bool points_close(Point a, Point b, double eps) {
    return distance(a, b) <= eps;
}

// Canonical form: consecutive duplicates and collinear vertices merged,
// CCW, starting at the lexicographic minimum.  nullopt when fewer than
// three effective vertices remain or a genuinely reflex turn shows up.
std::optional<std::vector<Point>> try_canonical(std::vector<Point> v,
                                                const Tolerances& tol) {
    if (v.size() < 3)
        return std::nullopt;

    // consecutive duplicates (cyclic)
    std::vector<Point> w;
    for (const Point& p : v) {
        if (w.empty() || !points_close(w.back(), p, tol.eps_geom))
            w.push_back(p);
    }
    while (w.size() >= 2 && points_close(w.front(), w.back(), tol.eps_geom))
        w.pop_back();
    if (w.size() < 3)
        return std::nullopt;

    if (polygon_area(w) < 0.0)
        std::reverse(w.begin(), w.end());

    // merge vertices within eps_geom of the chord between their neighbors
    bool changed = true;
    while (changed && w.size() > 3) {
        changed = false;
        for (std::size_t i = 0; i < w.size(); ++i) {
            const Point& prev = w[(i + w.size() - 1) % w.size()];
            const Point& next = w[(i + 1) % w.size()];
            if (perp_distance(w[i], prev, next) <= tol.eps_geom) {
                w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    if (w.size() < 3 || polygon_area(w) < tol.eps_area)
        return std::nullopt;

    // convexity: every remaining turn must be a left turn
    for (std::size_t i = 0; i < w.size(); ++i) {
        const Point& a = w[(i + w.size() - 1) % w.size()];
        const Point& b = w[i];
        const Point& c = w[(i + 1) % w.size()];
        if (cross(b - a, c - b) < 0.0 && perp_distance(b, a, c) > tol.eps_geom)
            return std::nullopt;
    }

    auto lex_less = [](const Point& a, const Point& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    };
    const auto start = std::min_element(w.begin(), w.end(), lex_less);
    std::rotate(w.begin(), start, w.end());
    return w;
}

// Sutherland-Hodgman step against one normalized half-plane.  Boundary is
// inclusive at eps, and degenerate (collapsed) chains are kept so callers
// can track area -> segment -> point degeneracies.
std::vector<Point> clip_chain(const std::vector<Point>& chain, const HalfPlane& h,
                              double eps) {
    std::vector<Point> out;
    const std::size_t n = chain.size();
    out.reserve(n + 2);
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = chain[i];
        const Point& b = chain[(i + 1) % n];
        const double da = h.signed_distance(a);
        const double db = h.signed_distance(b);
        const bool a_in = da <= eps;
        const bool b_in = db <= eps;
        if (a_in)
            out.push_back(a);
        if (a_in != b_in) {
            double t = da / (da - db);
            t = std::clamp(t, 0.0, 1.0);
            out.push_back(a + t * (b - a));
        }
    }
    return out;
}

std::vector<Point> distinct_points(const std::vector<Point>& chain, double radius) {
    std::vector<Point> reps;
    for (const Point& p : chain) {
        bool found = false;
        for (const Point& r : reps) {
            if (points_close(p, r, radius)) {
                found = true;
                break;
            }
        }
        if (!found)
            reps.push_back(p);
    }
    return reps;
}

CommonIntersection classify_chain(const std::vector<Point>& chain,
                                  const Tolerances& tol) {
    CommonIntersection result;
    if (chain.empty())
        return result;

    const double merge_radius = kMergeFactor * tol.eps_geom;
    const std::vector<Point> reps = distinct_points(chain, merge_radius);

    if (reps.size() >= 3 && polygon_area(reps) >= tol.eps_area) {
        if (auto canon = try_canonical(reps, tol)) {
            result.kind = CommonIntersection::Kind::polygon;
            result.polygon = std::move(*canon);
            return result;
        }
    }

    // extreme pair decides segment vs point
    double best = 0.0;
    Point pa = reps.front(), pb = reps.front();
    for (std::size_t i = 0; i < reps.size(); ++i) {
        for (std::size_t j = i + 1; j < reps.size(); ++j) {
            const double d = distance(reps[i], reps[j]);
            if (d > best) {
                best = d;
                pa = reps[i];
                pb = reps[j];
            }
        }
    }
    if (best > merge_radius) {
        auto lex_less = [](const Point& a, const Point& b) {
            return a.x < b.x || (a.x == b.x && a.y < b.y);
        };
        if (lex_less(pb, pa))
            std::swap(pa, pb);
        result.kind = CommonIntersection::Kind::segment;
        result.segment = {pa, pb};
        return result;
    }

    Point mean{0.0, 0.0};
    for (const Point& p : reps)
        mean = mean + p;
    result.kind = CommonIntersection::Kind::point;
    result.point = {mean.x / static_cast<double>(reps.size()),
                    mean.y / static_cast<double>(reps.size())};
    return result;
}

} // namespace

double norm(Point p) { return std::hypot(p.x, p.y); }

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

double Rect::diagonal() const { return std::hypot(width(), height()); }

HalfPlane HalfPlane::bisector(Point s, Point q) {
    const Point n = q - s;
    const Point mid = 0.5 * (s + q);
    return {n, dot(n, mid)};
}

HalfPlane HalfPlane::normalized() const {
    const double len = norm(normal);
    if (len <= std::numeric_limits<double>::min())
        throw InvalidPolygon("half-plane with zero normal");
    return {{normal.x / len, normal.y / len}, offset / len};
}

double polygon_area(const std::vector<Point>& vertices) {
    double twice = 0.0;
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i)
        twice += cross(vertices[i], vertices[(i + 1) % n]);
    return 0.5 * twice;
}

ConvexPolygon ConvexPolygon::from_vertices(std::vector<Point> vertices,
                                           const Tolerances& tol) {
    for (const Point& p : vertices) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw InvalidPolygon("non-finite vertex coordinate");
    }
    auto canon = try_canonical(std::move(vertices), tol);
    if (!canon)
        throw InvalidPolygon("fewer than 3 effective vertices, degenerate area, or reflex turn");
    ConvexPolygon poly;
    poly.verts_ = std::move(*canon);
    return poly;
}

ConvexPolygon ConvexPolygon::from_rect(const Rect& r) {
    return from_vertices({{r.x0, r.y0}, {r.x1, r.y0}, {r.x1, r.y1}, {r.x0, r.y1}});
}

ConvexPolygon ConvexPolygon::regular(int sides, Point center, double circumradius,
                                     double phase) {
    std::vector<Point> v;
    v.reserve(static_cast<std::size_t>(sides));
    for (int k = 0; k < sides; ++k) {
        const double ang = phase + 2.0 * M_PI * k / sides;
        v.push_back({center.x + circumradius * std::cos(ang),
                     center.y + circumradius * std::sin(ang)});
    }
    return from_vertices(std::move(v));
}

double ConvexPolygon::area() const { return polygon_area(verts_); }

Point ConvexPolygon::centroid() const {
    double twice_area = 0.0;
    double cx = 0.0, cy = 0.0;
    const std::size_t n = verts_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = verts_[i];
        const Point& b = verts_[(i + 1) % n];
        const double w = cross(a, b);
        twice_area += w;
        cx += (a.x + b.x) * w;
        cy += (a.y + b.y) * w;
    }
    return {cx / (3.0 * twice_area), cy / (3.0 * twice_area)};
}

double ConvexPolygon::diameter() const {
    // convexity makes vertex pairs sufficient
    double best = 0.0;
    for (std::size_t i = 0; i < verts_.size(); ++i)
        for (std::size_t j = i + 1; j < verts_.size(); ++j)
            best = std::max(best, distance(verts_[i], verts_[j]));
    return best;
}

Segment ConvexPolygon::edge(std::size_t i) const {
    return {verts_[i], verts_[(i + 1) % verts_.size()]};
}

double ConvexPolygon::signed_boundary_distance(Point p) const {
    double sbd = std::numeric_limits<double>::infinity();
    const std::size_t n = verts_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = verts_[i];
        const Point& b = verts_[(i + 1) % n];
        const double len = distance(a, b);
        sbd = std::min(sbd, cross(b - a, p - a) / len);
    }
    return sbd;
}

bool ConvexPolygon::equals(const ConvexPolygon& other, const Tolerances& tol) const {
    const std::size_t n = verts_.size();
    if (n != other.verts_.size())
        return false;
    // canonical start can flip between near-equal minima, so try rotations
    for (std::size_t shift = 0; shift < n; ++shift) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            ok = points_close(verts_[i], other.verts_[(i + shift) % n], tol.eps_geom);
        if (ok)
            return true;
    }
    return false;
}

std::optional<ConvexPolygon> clip(const ConvexPolygon& poly, const HalfPlane& h,
                                  const Tolerances& tol) {
    const HalfPlane hn = h.normalized();
    const std::vector<Point> chain = clip_chain(poly.vertices(), hn, tol.eps_geom);
    auto canon = try_canonical(chain, tol);
    if (!canon)
        return std::nullopt;
    ConvexPolygon out = ConvexPolygon::from_vertices(std::move(*canon), tol);
    return out;
}

std::optional<Segment> shared_edge(const ConvexPolygon& a, const ConvexPolygon& b,
                                   const Tolerances& tol) {
    double best_len = 0.0;
    std::optional<Segment> best;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Segment ea = a.edge(i);
        const double len_a = ea.length();
        const Point dir = {(ea.b.x - ea.a.x) / len_a, (ea.b.y - ea.a.y) / len_a};
        for (std::size_t j = 0; j < b.size(); ++j) {
            const Segment eb = b.edge(j);
            if (perp_distance(eb.a, ea.a, ea.b) > tol.eps_geom ||
                perp_distance(eb.b, ea.a, ea.b) > tol.eps_geom)
                continue;
            double t0 = dot(eb.a - ea.a, dir);
            double t1 = dot(eb.b - ea.a, dir);
            if (t0 > t1)
                std::swap(t0, t1);
            const double lo = std::max(0.0, t0);
            const double hi = std::min(len_a, t1);
            const double len = hi - lo;
            if (len >= tol.eps_edge && len > best_len) {
                best_len = len;
                best = Segment{ea.a + lo * dir, ea.a + hi * dir};
            }
        }
    }
    return best;
}

PolygonRelation polygons_intersect(const ConvexPolygon& a, const ConvexPolygon& b,
                                   const Tolerances& tol) {
    const CommonIntersection ci = common_intersection({a, b}, tol);
    switch (ci.kind) {
        case CommonIntersection::Kind::empty: return PolygonRelation::disjoint;
        case CommonIntersection::Kind::point: return PolygonRelation::point_contact;
        case CommonIntersection::Kind::segment: return PolygonRelation::edge_contact;
        case CommonIntersection::Kind::polygon: return PolygonRelation::area_overlap;
    }
    return PolygonRelation::disjoint;
}

CommonIntersection common_intersection(const std::vector<ConvexPolygon>& polys,
                                       const Tolerances& tol) {
    if (polys.empty())
        throw InvalidPolygon("common_intersection of an empty family");

    std::vector<Point> chain = polys[0].vertices();
    for (std::size_t k = 1; k < polys.size() && !chain.empty(); ++k) {
        const ConvexPolygon& p = polys[k];
        for (std::size_t i = 0; i < p.size() && !chain.empty(); ++i) {
            const Segment e = p.edge(i);
            // inward half-plane of a CCW edge: left side of a->b
            const Point n = {e.b.y - e.a.y, -(e.b.x - e.a.x)};
            const HalfPlane h = HalfPlane{n, dot(n, e.a)}.normalized();
            chain = clip_chain(chain, h, tol.eps_geom);
        }
    }
    return classify_chain(chain, tol);
}

} // namespace proxinerve
