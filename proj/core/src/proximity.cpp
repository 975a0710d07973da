#include "proxinerve/proximity.hpp"

#include <sstream>

#include "proxinerve/errors.hpp"

namespace proxinerve {

namespace {

FeatureVector describe_element(const Element& e) {
    if (e.description)
        return *e.description;
    if (e.is_polygon())
        return describe_cell({0, e.polygon(), false});
    return describe_point(e.point());
}

const FeatureVector& require_description(const Element& e, std::size_t idx,
                                         const char* side) {
    if (!e.description) {
        std::ostringstream msg;
        msg << "element " << idx << " of " << side << " carries no description";
        throw MissingDescription(msg.str());
    }
    return *e.description;
}

Witness witness_from(const CommonIntersection& ci) {
    Witness w;
    switch (ci.kind) {
        case CommonIntersection::Kind::point:
            w.kind = Witness::Kind::point;
            w.point = ci.point;
            break;
        case CommonIntersection::Kind::segment:
            w.kind = Witness::Kind::segment;
            w.segment = ci.segment;
            break;
        case CommonIntersection::Kind::polygon:
            w.kind = Witness::Kind::polygon;
            w.polygon = ci.polygon;
            break;
        case CommonIntersection::Kind::empty:
            break;
    }
    return w;
}

Point representative(const Element& e) {
    return e.is_point() ? e.point() : e.polygon().centroid();
}

ProximityVerdict empty_operand(const char* relation) {
    return {relation, Truth::fails, {}, "empty operand is never in the relation"};
}

std::optional<ProximityVerdict> check_empty(const char* relation,
                                            const RegionSet& A, const RegionSet& B) {
    if (A.empty() || B.empty())
        return empty_operand(relation);
    return std::nullopt;
}

} // namespace

RegionSet RegionSet::from_points(const std::vector<Point>& pts) {
    RegionSet s;
    s.elements.reserve(pts.size());
    for (const Point& p : pts)
        s.elements.push_back({p, std::nullopt});
    return s;
}

RegionSet RegionSet::from_polygons(const std::vector<ConvexPolygon>& polys) {
    RegionSet s;
    s.elements.reserve(polys.size());
    for (const ConvexPolygon& p : polys)
        s.elements.push_back({p, std::nullopt});
    return s;
}

RegionSet RegionSet::from_cells(const Tessellation& t, const std::vector<int>& ids) {
    RegionSet s;
    s.elements.reserve(ids.size());
    for (int id : ids) {
        const Cell& c = t.cell(id);
        s.elements.push_back({c.polygon, describe_cell(c)});
    }
    return s;
}

bool RegionSet::pure_points() const {
    for (const Element& e : elements)
        if (!e.is_point())
            return false;
    return !elements.empty();
}

bool RegionSet::pure_polygons() const {
    for (const Element& e : elements)
        if (!e.is_polygon())
            return false;
    return !elements.empty();
}

RegionSet RegionSet::described() const {
    RegionSet out = *this;
    for (Element& e : out.elements)
        if (!e.description)
            e.description = describe_element(e);
    return out;
}

bool RegionSet::contains_point(Point p, const Tolerances& tol) const {
    for (const Element& e : elements) {
        if (e.is_point()) {
            if (distance(e.point(), p) <= tol.eps_geom)
                return true;
        } else if (e.polygon().contains(p, tol)) {
            return true;
        }
    }
    return false;
}

bool ProximityContext::is_full_space(const RegionSet& s) const {
    const ConvexPolygon space_poly = ConvexPolygon::from_rect(space);
    for (const Element& e : s.elements)
        if (e.is_polygon() && e.polygon().equals(space_poly, tol))
            return true;
    return false;
}

ProximityVerdict near(const RegionSet& A, const RegionSet& B,
                      const ProximityContext& ctx) {
    if (auto v = check_empty("near", A, B))
        return *v;

    for (std::size_t i = 0; i < A.elements.size(); ++i) {
        for (std::size_t j = 0; j < B.elements.size(); ++j) {
            const Element& a = A.elements[i];
            const Element& b = B.elements[j];
            if (a.is_polygon() && b.is_polygon()) {
                const auto ci =
                    common_intersection({a.polygon(), b.polygon()}, ctx.tol);
                if (!ci.empty())
                    return {"near", Truth::holds, witness_from(ci),
                            "closed regions intersect"};
            } else if (a.is_point() && b.is_point()) {
                if (distance(a.point(), b.point()) <= ctx.tol.eps_geom) {
                    Witness w;
                    w.kind = Witness::Kind::point;
                    w.point = a.point();
                    return {"near", Truth::holds, w, "shared point"};
                }
            } else {
                const Point p = a.is_point() ? a.point() : b.point();
                const ConvexPolygon& poly = a.is_point() ? b.polygon() : a.polygon();
                if (poly.contains(p, ctx.tol)) {
                    Witness w;
                    w.kind = Witness::Kind::point;
                    w.point = p;
                    return {"near", Truth::holds, w, "point lies in closed region"};
                }
            }
        }
    }
    return {"near", Truth::fails, {}, "closed unions are disjoint"};
}

ProximityVerdict strongly_near(const RegionSet& A, const RegionSet& B,
                               const ProximityContext& ctx) {
    if (auto v = check_empty("strongly_near", A, B))
        return *v;

    if (ctx.is_full_space(A) || ctx.is_full_space(B)) {
        const RegionSet& other = ctx.is_full_space(A) ? B : A;
        Witness w;
        w.kind = Witness::Kind::point;
        w.point = representative(other.elements.front());
        return {"strongly_near", Truth::holds, w,
                "one operand is the whole space"};
    }

    for (const Element& a : A.elements) {
        if (!a.is_polygon())
            continue;
        for (const Element& b : B.elements) {
            if (!b.is_polygon())
                continue;
            const auto ci = common_intersection({a.polygon(), b.polygon()}, ctx.tol);
            if (ci.kind == CommonIntersection::Kind::polygon)
                return {"strongly_near", Truth::holds, witness_from(ci),
                        "interiors overlap"};
        }
    }

    const auto singleton_in_interior =
        [&ctx](const RegionSet& S, const RegionSet& T) -> std::optional<Witness> {
        if (S.elements.size() != 1 || !S.elements[0].is_point())
            return std::nullopt;
        const Point x = S.elements[0].point();
        for (const Element& t : T.elements) {
            if (t.is_polygon() && t.polygon().strictly_contains(x, ctx.tol)) {
                Witness w;
                w.kind = Witness::Kind::point;
                w.point = x;
                return w;
            }
        }
        return std::nullopt;
    };
    if (auto w = singleton_in_interior(A, B))
        return {"strongly_near", Truth::holds, *w,
                "singleton point interior to a region"};
    if (auto w = singleton_in_interior(B, A))
        return {"strongly_near", Truth::holds, *w,
                "singleton point interior to a region"};

    if (A.pure_points() && B.pure_points()) {
        for (const Element& a : A.elements) {
            for (const Element& b : B.elements) {
                if (distance(a.point(), b.point()) <= ctx.tol.eps_geom) {
                    Witness w;
                    w.kind = Witness::Kind::point;
                    w.point = a.point();
                    return {"strongly_near", Truth::holds, w,
                            "point sets share a point"};
                }
            }
        }
    }

    return {"strongly_near", Truth::fails, {}, "no strong contact"};
}

ProximityVerdict mesh_strongly_near(int a, int b, const Tessellation& t,
                                    const Tolerances& tol) {
    const Cell& ca = t.cell(a);
    const Cell& cb = t.cell(b);
    if (a == b) {
        Witness w;
        w.kind = Witness::Kind::polygon;
        w.polygon = ca.polygon.vertices();
        return {"mesh_strongly_near", Truth::holds, w, "a cell contacts itself"};
    }
    for (const AdjacencyEdge& e : t.edges) {
        if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) {
            Witness w;
            w.kind = Witness::Kind::segment;
            w.segment = e.witness;
            return {"mesh_strongly_near", Truth::holds, w, "cells share an edge"};
        }
    }
    if (auto e = shared_edge(ca.polygon, cb.polygon, tol)) {
        Witness w;
        w.kind = Witness::Kind::segment;
        w.segment = *e;
        return {"mesh_strongly_near", Truth::holds, w, "cells share an edge"};
    }
    return {"mesh_strongly_near", Truth::fails, {},
            "no shared edge of positive length"};
}

ProximityVerdict descriptively_near(const RegionSet& A, const RegionSet& B,
                                    const DescriptorSpec& spec) {
    if (auto v = check_empty("descriptively_near", A, B))
        return *v;

    for (std::size_t i = 0; i < A.elements.size(); ++i) {
        const FeatureVector& fa = require_description(A.elements[i], i, "A");
        for (std::size_t j = 0; j < B.elements.size(); ++j) {
            const FeatureVector& fb = require_description(B.elements[j], j, "B");
            if (features_match(fa, fb, spec)) {
                Witness w;
                w.kind = Witness::Kind::feature_pair;
                w.index_a = i;
                w.index_b = j;
                return {"descriptively_near", Truth::holds, w,
                        "matching descriptions"};
            }
        }
    }
    return {"descriptively_near", Truth::fails, {}, "no matching descriptions"};
}

ProximityVerdict descriptively_strongly_near(const RegionSet& A, const RegionSet& B,
                                             const DescriptorSpec& spec,
                                             const ProximityContext& ctx) {
    if (auto v = check_empty("descriptively_strongly_near", A, B))
        return *v;

    if (ctx.is_full_space(A) || ctx.is_full_space(B)) {
        const RegionSet& other = ctx.is_full_space(A) ? B : A;
        Witness w;
        w.kind = Witness::Kind::point;
        w.point = representative(other.elements.front());
        return {"descriptively_strongly_near", Truth::holds, w,
                "one operand is the whole space"};
    }

    // interior elements are the polygons; points have empty interior
    for (std::size_t i = 0; i < A.elements.size(); ++i) {
        if (!A.elements[i].is_polygon())
            continue;
        const FeatureVector& fa = require_description(A.elements[i], i, "A");
        for (std::size_t j = 0; j < B.elements.size(); ++j) {
            if (!B.elements[j].is_polygon())
                continue;
            const FeatureVector& fb = require_description(B.elements[j], j, "B");
            if (features_match(fa, fb, spec)) {
                Witness w;
                w.kind = Witness::Kind::feature_pair;
                w.index_a = i;
                w.index_b = j;
                return {"descriptively_strongly_near", Truth::holds, w,
                        "matching interior descriptions"};
            }
        }
    }

    const auto singleton_matches_interior =
        [&spec](const RegionSet& S, const RegionSet& T,
                bool swap) -> std::optional<Witness> {
        if (S.elements.size() != 1 || !S.elements[0].is_point())
            return std::nullopt;
        const FeatureVector& fx = require_description(S.elements[0], 0, swap ? "B" : "A");
        for (std::size_t j = 0; j < T.elements.size(); ++j) {
            if (!T.elements[j].is_polygon())
                continue;
            const FeatureVector& ft =
                require_description(T.elements[j], j, swap ? "A" : "B");
            if (features_match(fx, ft, spec)) {
                Witness w;
                w.kind = Witness::Kind::feature_pair;
                w.index_a = swap ? j : 0;
                w.index_b = swap ? 0 : j;
                return w;
            }
        }
        return std::nullopt;
    };
    if (auto w = singleton_matches_interior(A, B, false))
        return {"descriptively_strongly_near", Truth::holds, *w,
                "singleton description found among interior descriptions"};
    if (auto w = singleton_matches_interior(B, A, true))
        return {"descriptively_strongly_near", Truth::holds, *w,
                "singleton description found among interior descriptions"};

    if (A.elements.size() == 1 && A.elements[0].is_point() &&
        B.elements.size() == 1 && B.elements[0].is_point()) {
        const FeatureVector& fa = require_description(A.elements[0], 0, "A");
        const FeatureVector& fb = require_description(B.elements[0], 0, "B");
        if (features_match(fa, fb, spec)) {
            Witness w;
            w.kind = Witness::Kind::feature_pair;
            w.index_a = 0;
            w.index_b = 0;
            return {"descriptively_strongly_near", Truth::holds, w,
                    "singleton descriptions match"};
        }
    }

    return {"descriptively_strongly_near", Truth::fails, {},
            "no descriptive strong contact"};
}

bool revalidate(const ProximityVerdict& v, const RegionSet& A, const RegionSet& B,
                const ProximityContext& ctx, const DescriptorSpec& spec) {
    if (v.truth != Truth::holds)
        return true;

    const auto in_both = [&](Point p) {
        return A.contains_point(p, ctx.tol) && B.contains_point(p, ctx.tol);
    };

    switch (v.witness.kind) {
        case Witness::Kind::none:
            return false;
        case Witness::Kind::point:
            return in_both(v.witness.point);
        case Witness::Kind::segment:
            return in_both(v.witness.segment.a) && in_both(v.witness.segment.b) &&
                   in_both(v.witness.segment.midpoint());
        case Witness::Kind::polygon: {
            for (const Point& p : v.witness.polygon)
                if (!in_both(p))
                    return false;
            return true;
        }
        case Witness::Kind::feature_pair: {
            if (v.witness.index_a >= A.elements.size() ||
                v.witness.index_b >= B.elements.size())
                return false;
            const FeatureVector fa = describe_element(A.elements[v.witness.index_a]);
            const FeatureVector fb = describe_element(B.elements[v.witness.index_b]);
            return features_match(fa, fb, spec);
        }
    }
    return false;
}

} // namespace proxinerve
