#include "proxinerve/axioms.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "proxinerve/clusters.hpp"
#include "proxinerve/errors.hpp"
#include "proxinerve/nerve.hpp"
#include "proxinerve/report.hpp"
#include "proxinerve/rng.hpp"
#include "proxinerve/voronoi.hpp"

namespace proxinerve {

namespace {

using Json = nlohmann::ordered_json;

// margin used by the containment gate of the transitivity laws; far above
// eps_geom so eps-tolerant relation witnesses cannot escape the larger set
constexpr double kContainmentMargin = 1e-6;

ProximityContext context_of(const Configuration& c) {
    return {c.space, {}};
}

RegionSet whole_space(const Rect& space) {
    return RegionSet::from_polygons({ConvexPolygon::from_rect(space)}).described();
}

RegionSet union_of(const RegionSet& a, const RegionSet& b) {
    RegionSet u = a;
    u.elements.insert(u.elements.end(), b.elements.begin(), b.elements.end());
    return u;
}

FeatureVector description_of(const Element& e) {
    if (e.description)
        return *e.description;
    if (e.is_polygon())
        return describe_cell({0, e.polygon(), false});
    return describe_point(e.point());
}

bool is_singleton_point(const RegionSet& s) {
    return s.elements.size() == 1 && s.elements[0].is_point();
}

// Pairwise geometric test of cl(A) meeting cl(B); same primitives as the
// relation engine but a separate walk, so the two can disagree.
bool closed_sets_intersect(const RegionSet& A, const RegionSet& B,
                           const Tolerances& tol) {
    for (const Element& a : A.elements) {
        for (const Element& b : B.elements) {
            if (a.is_polygon() && b.is_polygon()) {
                if (!common_intersection({a.polygon(), b.polygon()}, tol).empty())
                    return true;
            } else if (a.is_point() && b.is_point()) {
                if (distance(a.point(), b.point()) <= tol.eps_geom)
                    return true;
            } else {
                const Point& p = a.is_point() ? a.point() : b.point();
                const ConvexPolygon& poly = a.is_polygon() ? a.polygon() : b.polygon();
                if (poly.contains(p, tol))
                    return true;
            }
        }
    }
    return false;
}

bool interiors_overlap(const RegionSet& A, const RegionSet& B,
                       const Tolerances& tol) {
    for (const Element& a : A.elements) {
        if (!a.is_polygon())
            continue;
        for (const Element& b : B.elements) {
            if (!b.is_polygon())
                continue;
            const auto ci = common_intersection({a.polygon(), b.polygon()}, tol);
            if (ci.kind == CommonIntersection::Kind::polygon)
                return true;
        }
    }
    return false;
}

std::vector<FeatureVector> descriptions_of(const RegionSet& s) {
    std::vector<FeatureVector> out;
    out.reserve(s.elements.size());
    for (const Element& e : s.elements)
        out.push_back(description_of(e));
    return out;
}

std::vector<FeatureVector> interior_descriptions_of(const RegionSet& s) {
    std::vector<FeatureVector> out;
    for (const Element& e : s.elements)
        if (e.is_polygon())
            out.push_back(description_of(e));
    return out;
}

// Goes through the descriptive-intersection module, not the relation engine.
bool descriptions_intersect(const RegionSet& A, const RegionSet& B,
                            const DescriptorSpec& spec) {
    if (A.empty() || B.empty())
        return false;
    return !descriptive_intersection(descriptions_of(A), descriptions_of(B), spec)
                .empty();
}

bool interior_descriptions_intersect(const RegionSet& A, const RegionSet& B,
                                     const DescriptorSpec& spec) {
    const auto da = interior_descriptions_of(A);
    const auto db = interior_descriptions_of(B);
    if (da.empty() || db.empty())
        return false;
    return !descriptive_intersection(da, db, spec).empty();
}

RegionSet interior_elements_of(const RegionSet& s) {
    RegionSet out;
    for (const Element& e : s.elements)
        if (e.is_polygon())
            out.elements.push_back(e);
    return out;
}

// The elements of cl(Int A) ++ cl(Int B) whose description lands in the
// descriptive intersection of the two interior families.
RegionSet descriptive_core(const RegionSet& ia, const RegionSet& ib,
                           const DescriptorSpec& spec) {
    const auto idx =
        descriptive_intersection(descriptions_of(ia), descriptions_of(ib), spec);
    RegionSet out;
    for (std::size_t k : idx) {
        out.elements.push_back(k < ia.elements.size()
                                   ? ia.elements[k]
                                   : ib.elements[k - ia.elements.size()]);
    }
    return out;
}

bool element_shapes_equal(const Element& a, const Element& b) {
    if (a.is_point() != b.is_point())
        return false;
    if (a.is_point())
        return a.point() == b.point();
    return a.polygon() == b.polygon();
}

// Every element of B occurs in C with the same shape and description.
bool element_subset_exact(const RegionSet& B, const RegionSet& C) {
    for (const Element& b : B.elements) {
        bool found = false;
        for (const Element& c : C.elements) {
            if (element_shapes_equal(b, c) &&
                description_of(b) == description_of(c)) {
                found = true;
                break;
            }
        }
        if (!found)
            return false;
    }
    return !B.elements.empty();
}

bool element_inside_polygon(const Element& b, const ConvexPolygon& c) {
    if (b.is_point())
        return c.signed_boundary_distance(b.point()) >= kContainmentMargin;
    for (const Point& v : b.polygon().vertices())
        if (c.signed_boundary_distance(v) < kContainmentMargin)
            return false;
    return true;
}

// Every element of B sits inside some polygon of C with a real margin, so
// the union of B is a subset of the union of C even after eps blurring.
bool union_covered_by(const RegionSet& B, const RegionSet& C) {
    for (const Element& b : B.elements) {
        bool covered = false;
        for (const Element& c : C.elements) {
            if (element_shapes_equal(b, c)) {
                covered = true;
                break;
            }
            if (c.is_polygon() && element_inside_polygon(b, c.polygon())) {
                covered = true;
                break;
            }
        }
        if (!covered)
            return false;
    }
    return !B.elements.empty();
}

struct NamedSet {
    const char* name;
    const RegionSet* set;
};

std::array<NamedSet, 3> abc(const Configuration& c) {
    return {{{"A", &c.A}, {"B", &c.B}, {"C", &c.C}}};
}

std::string pair_text(const NamedSet& x, const NamedSet& y) {
    return std::string("(") + x.name + ", " + y.name + ")";
}

// ---------------------------------------------------------------------------
// law checks; each returns a failure detail or nothing
// ---------------------------------------------------------------------------

std::optional<std::string> check_p0(const Configuration& c) {
    const ProximityContext ctx = context_of(c);
    const RegionSet none;
    const RegionSet X = whole_space(c.space);
    const std::array<NamedSet, 5> targets{{{"A", &c.A},
                                           {"B", &c.B},
                                           {"C", &c.C},
                                           {"X", &X},
                                           {"the empty set", &none}}};
    for (const NamedSet& t : targets) {
        if (near(none, *t.set, ctx).holds())
            return std::string("the empty set came out near ") + t.name;
        if (near(*t.set, none, ctx).holds())
            return std::string(t.name) + " came out near the empty set";
    }
    return std::nullopt;
}

std::optional<std::string> check_p1(const Configuration& c) {
    const ProximityContext ctx = context_of(c);
    const auto sets = abc(c);
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            if (near(*sets[i].set, *sets[j].set, ctx).holds() !=
                near(*sets[j].set, *sets[i].set, ctx).holds())
                return "near is asymmetric on " + pair_text(sets[i], sets[j]);
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_p2(const Configuration& c) {
    const ProximityContext ctx = context_of(c);
    const RegionSet X = whole_space(c.space);
    const std::array<NamedSet, 4> sets{
        {{"A", &c.A}, {"B", &c.B}, {"C", &c.C}, {"X", &X}}};
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            if (closed_sets_intersect(*sets[i].set, *sets[j].set, ctx.tol) &&
                !near(*sets[i].set, *sets[j].set, ctx).holds())
                return "sets sharing a point are not near on " +
                       pair_text(sets[i], sets[j]);
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_p3(const Configuration& c) {
    const ProximityContext ctx = context_of(c);
    const auto sets = abc(c);
    for (std::size_t h = 0; h < sets.size(); ++h) {
        const NamedSet& head = sets[h];
        const NamedSet& left = sets[(h + 1) % 3];
        const NamedSet& right = sets[(h + 2) % 3];
        const RegionSet u = union_of(*left.set, *right.set);
        const bool joint = near(*head.set, u, ctx).holds();
        const bool split = near(*head.set, *left.set, ctx).holds() ||
                           near(*head.set, *right.set, ctx).holds();
        if (joint != split)
            return std::string("near(") + head.name + ", " + left.name + " u " +
                   right.name + ") disagrees with the disjunction";
    }
    return std::nullopt;
}

std::optional<std::string> check_p4(const Configuration& c) {
    const ProximityContext ctx = context_of(c);
    if (c.B.empty())
        return std::nullopt;
    if (!(element_subset_exact(c.B, c.C) || union_covered_by(c.B, c.C)))
        return std::nullopt;
    if (!near(c.A, c.B, ctx).holds())
        return std::nullopt;
    if (!near(c.A, c.C, ctx).holds())
        return std::string("A near B with B inside C, yet near(A, C) fails");
    return std::nullopt;
}

std::optional<std::string> check_p5(const Configuration& c) {
    const ProximityContext ctx = context_of(c);
    const auto sets = abc(c);
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            if (!is_singleton_point(*sets[i].set) ||
                !is_singleton_point(*sets[j].set))
                continue;
            const Point px = sets[i].set->elements[0].point();
            const Point py = sets[j].set->elements[0].point();
            if (near(*sets[i].set, *sets[j].set, ctx).holds() && !(px == py))
                return "distinct points within tolerance count as near on " +
                       pair_text(sets[i], sets[j]);
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_dp0(const Configuration& c) {
    const RegionSet none;
    const RegionSet X = whole_space(c.space);
    const std::array<NamedSet, 5> targets{{{"A", &c.A},
                                           {"B", &c.B},
                                           {"C", &c.C},
                                           {"X", &X},
                                           {"the empty set", &none}}};
    for (const NamedSet& t : targets) {
        if (descriptively_near(none, *t.set, c.spec).holds())
            return std::string("the empty set came out descriptively near ") +
                   t.name;
        if (descriptively_near(*t.set, none, c.spec).holds())
            return std::string(t.name) + " came out descriptively near the empty set";
    }
    return std::nullopt;
}

std::optional<std::string> check_dp1(const Configuration& c) {
    const auto sets = abc(c);
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            if (descriptively_near(*sets[i].set, *sets[j].set, c.spec).holds() !=
                descriptively_near(*sets[j].set, *sets[i].set, c.spec).holds())
                return "descriptive nearness is asymmetric on " +
                       pair_text(sets[i], sets[j]);
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_dp2(const Configuration& c) {
    const auto sets = abc(c);
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            if (descriptions_intersect(*sets[i].set, *sets[j].set, c.spec) &&
                !descriptively_near(*sets[i].set, *sets[j].set, c.spec).holds())
                return "intersecting descriptions without descriptive nearness on " +
                       pair_text(sets[i], sets[j]);
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_dp3(const Configuration& c) {
    const auto sets = abc(c);
    for (std::size_t h = 0; h < sets.size(); ++h) {
        const NamedSet& head = sets[h];
        const NamedSet& left = sets[(h + 1) % 3];
        const NamedSet& right = sets[(h + 2) % 3];
        const RegionSet u = union_of(*left.set, *right.set);
        const bool joint = descriptively_near(*head.set, u, c.spec).holds();
        const bool split =
            descriptively_near(*head.set, *left.set, c.spec).holds() ||
            descriptively_near(*head.set, *right.set, c.spec).holds();
        if (joint != split)
            return std::string("descriptive nearness to ") + left.name + " u " +
                   right.name + " disagrees with the disjunction for " + head.name;
    }
    return std::nullopt;
}

std::optional<std::string> check_dp4(const Configuration& c) {
    if (c.B.empty())
        return std::nullopt;
    if (!element_subset_exact(c.B, c.C))
        return std::nullopt;
    if (!descriptively_near(c.A, c.B, c.spec).holds())
        return std::nullopt;
    if (!descriptively_near(c.A, c.C, c.spec).holds())
        return std::string(
            "A descriptively near B with B's elements all in C, yet "
            "descriptive nearness to C fails");
    return std::nullopt;
}

std::optional<std::string> check_dp5(const Configuration& c) {
    const auto sets = abc(c);
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            if (!is_singleton_point(*sets[i].set) ||
                !is_singleton_point(*sets[j].set))
                continue;
            const FeatureVector fx = description_of(sets[i].set->elements[0]);
            const FeatureVector fy = description_of(sets[j].set->elements[0]);
            if (descriptively_near(*sets[i].set, *sets[j].set, c.spec).holds() &&
                !(fx == fy))
                return "distinct descriptions matching within tolerance on " +
                       pair_text(sets[i], sets[j]);
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_snn0(const Configuration& c) {
    const ProximityContext ctx = context_of(c);
    const RegionSet none;
    const RegionSet X = whole_space(c.space);
    const std::array<NamedSet, 5> targets{{{"A", &c.A},
                                           {"B", &c.B},
                                           {"C", &c.C},
                                           {"X", &X},
                                           {"the empty set", &none}}};
    for (const NamedSet& t : targets) {
        if (strongly_near(none, *t.set, ctx).holds())
            return std::string("the empty set came out strongly near ") + t.name;
        if (strongly_near(*t.set, none, ctx).holds())
            return std::string(t.name) + " came out strongly near the empty set";
    }
    for (const NamedSet& t : abc(c)) {
        if (t.set->empty())
            continue;
        if (!strongly_near(X, *t.set, ctx).holds())
            return std::string("the whole space is not strongly near ") + t.name;
        if (!strongly_near(*t.set, X, ctx).holds())
            return std::string(t.name) + " is not strongly near the whole space";
    }
    if (!strongly_near(X, X, ctx).holds())
        return std::string("the whole space is not strongly near itself");
    return std::nullopt;
}

std::optional<std::string> check_snn1(const Configuration& c) {
    const ProximityContext ctx = context_of(c);
    const auto sets = abc(c);
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            if (strongly_near(*sets[i].set, *sets[j].set, ctx).holds() !=
                strongly_near(*sets[j].set, *sets[i].set, ctx).holds())
                return "strong contact is asymmetric on " +
                       pair_text(sets[i], sets[j]);
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_snn2(const Configuration& c) {
    const ProximityContext ctx = context_of(c);
    const RegionSet X = whole_space(c.space);
    const std::array<NamedSet, 4> sets{
        {{"A", &c.A}, {"B", &c.B}, {"C", &c.C}, {"X", &X}}};
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            if (strongly_near(*sets[i].set, *sets[j].set, ctx).holds() &&
                !closed_sets_intersect(*sets[i].set, *sets[j].set, ctx.tol))
                return "strong contact without a common point on " +
                       pair_text(sets[i], sets[j]);
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_snn3(const Configuration& c) {
    const ProximityContext ctx = context_of(c);
    if (c.family.empty())
        return std::nullopt;
    std::optional<std::size_t> qualifying;
    for (std::size_t i = 0; i < c.family.size(); ++i) {
        const bool has_interior = std::any_of(
            c.family[i].elements.begin(), c.family[i].elements.end(),
            [](const Element& e) { return e.is_polygon(); });
        if (!has_interior)
            continue;
        if (strongly_near(c.A, c.family[i], ctx).holds()) {
            qualifying = i;
            break;
        }
    }
    if (!qualifying)
        return std::nullopt;
    RegionSet u;
    for (const RegionSet& member : c.family)
        u.elements.insert(u.elements.end(), member.elements.begin(),
                          member.elements.end());
    if (!strongly_near(c.A, u, ctx).holds()) {
        std::ostringstream msg;
        msg << "A strongly near family member " << *qualifying
            << " yet not strongly near the family union";
        return msg.str();
    }
    return std::nullopt;
}

std::optional<std::string> check_snn4(const Configuration& c) {
    const ProximityContext ctx = context_of(c);
    const RegionSet X = whole_space(c.space);
    const std::array<NamedSet, 4> sets{
        {{"A", &c.A}, {"B", &c.B}, {"C", &c.C}, {"X", &X}}};
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            if (interiors_overlap(*sets[i].set, *sets[j].set, ctx.tol) &&
                !strongly_near(*sets[i].set, *sets[j].set, ctx).holds())
                return "overlapping interiors without strong contact on " +
                       pair_text(sets[i], sets[j]);
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_snn5(const Configuration& c) {
    const ProximityContext ctx = context_of(c);
    const RegionSet X = whole_space(c.space);
    const std::array<NamedSet, 4> sets{
        {{"A", &c.A}, {"B", &c.B}, {"C", &c.C}, {"X", &X}}};
    for (std::size_t i = 0; i < 3; ++i) {
        if (!is_singleton_point(*sets[i].set))
            continue;
        const Point p = sets[i].set->elements[0].point();
        for (std::size_t j = 0; j < sets.size(); ++j) {
            if (j == i)
                continue;
            const bool interior = std::any_of(
                sets[j].set->elements.begin(), sets[j].set->elements.end(),
                [&](const Element& e) {
                    return e.is_polygon() && e.polygon().strictly_contains(p, ctx.tol);
                });
            if (interior &&
                !strongly_near(*sets[i].set, *sets[j].set, ctx).holds())
                return std::string(sets[i].name) + " sits interior to " +
                       sets[j].name + " without strong contact";
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_snn6(const Configuration& c) {
    const ProximityContext ctx = context_of(c);
    const auto sets = abc(c);
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            if (!is_singleton_point(*sets[i].set) ||
                !is_singleton_point(*sets[j].set))
                continue;
            const Point px = sets[i].set->elements[0].point();
            const Point py = sets[j].set->elements[0].point();
            const bool related =
                strongly_near(*sets[i].set, *sets[j].set, ctx).holds();
            const bool coincide = distance(px, py) <= ctx.tol.eps_geom;
            if (related != coincide)
                return "singleton strong contact disagrees with coincidence on " +
                       pair_text(sets[i], sets[j]);
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_dsnp0(const Configuration& c) {
    const ProximityContext ctx = context_of(c);
    const RegionSet none;
    const RegionSet X = whole_space(c.space);
    const std::array<NamedSet, 5> targets{{{"A", &c.A},
                                           {"B", &c.B},
                                           {"C", &c.C},
                                           {"X", &X},
                                           {"the empty set", &none}}};
    for (const NamedSet& t : targets) {
        if (descriptively_strongly_near(none, *t.set, c.spec, ctx).holds())
            return std::string(
                       "the empty set came out descriptively strongly near ") +
                   t.name;
        if (descriptively_strongly_near(*t.set, none, c.spec, ctx).holds())
            return std::string(t.name) +
                   " came out descriptively strongly near the empty set";
    }
    for (const NamedSet& t : abc(c)) {
        if (t.set->empty())
            continue;
        if (!descriptively_strongly_near(X, *t.set, c.spec, ctx).holds())
            return std::string("the whole space is not descriptively strongly near ") +
                   t.name;
        if (!descriptively_strongly_near(*t.set, X, c.spec, ctx).holds())
            return std::string(t.name) +
                   " is not descriptively strongly near the whole space";
    }
    if (!descriptively_strongly_near(X, X, c.spec, ctx).holds())
        return std::string(
            "the whole space is not descriptively strongly near itself");
    return std::nullopt;
}

std::optional<std::string> check_dsnp1(const Configuration& c) {
    const ProximityContext ctx = context_of(c);
    const auto sets = abc(c);
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            if (descriptively_strongly_near(*sets[i].set, *sets[j].set, c.spec, ctx)
                    .holds() !=
                descriptively_strongly_near(*sets[j].set, *sets[i].set, c.spec, ctx)
                    .holds())
                return "descriptive strong contact is asymmetric on " +
                       pair_text(sets[i], sets[j]);
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_dsnp2(const Configuration& c) {
    const ProximityContext ctx = context_of(c);
    const auto sets = abc(c);
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            if (ctx.is_full_space(*sets[i].set) || ctx.is_full_space(*sets[j].set))
                continue;
            if (descriptively_strongly_near(*sets[i].set, *sets[j].set, c.spec, ctx)
                    .holds() &&
                !descriptions_intersect(*sets[i].set, *sets[j].set, c.spec))
                return "descriptive strong contact without intersecting "
                       "descriptions on " +
                       pair_text(sets[i], sets[j]);
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_dsnp4(const Configuration& c) {
    const ProximityContext ctx = context_of(c);
    const auto sets = abc(c);
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            if (interior_descriptions_intersect(*sets[i].set, *sets[j].set,
                                                c.spec) &&
                !descriptively_strongly_near(*sets[i].set, *sets[j].set, c.spec,
                                             ctx)
                     .holds())
                return "intersecting interior descriptions without descriptive "
                       "strong contact on " +
                       pair_text(sets[i], sets[j]);
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_dsnp5(const Configuration& c) {
    const ProximityContext ctx = context_of(c);
    const auto sets = abc(c);
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (!is_singleton_point(*sets[i].set))
            continue;
        const FeatureVector fx = description_of(sets[i].set->elements[0]);
        for (std::size_t j = 0; j < sets.size(); ++j) {
            if (j == i)
                continue;
            const bool matches = std::any_of(
                sets[j].set->elements.begin(), sets[j].set->elements.end(),
                [&](const Element& e) {
                    return e.is_polygon() &&
                           features_match(fx, description_of(e), c.spec);
                });
            if (matches &&
                !descriptively_strongly_near(*sets[i].set, *sets[j].set, c.spec,
                                             ctx)
                     .holds())
                return std::string(sets[i].name) +
                       "'s description appears among " + sets[j].name +
                       "'s interior descriptions without descriptive strong "
                       "contact";
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_dsnp6(const Configuration& c) {
    const ProximityContext ctx = context_of(c);
    const auto sets = abc(c);
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            if (!is_singleton_point(*sets[i].set) ||
                !is_singleton_point(*sets[j].set))
                continue;
            const FeatureVector fx = description_of(sets[i].set->elements[0]);
            const FeatureVector fy = description_of(sets[j].set->elements[0]);
            const bool related =
                descriptively_strongly_near(*sets[i].set, *sets[j].set, c.spec,
                                            ctx)
                    .holds();
            const bool match = features_match(fx, fy, c.spec);
            if (related != match)
                return "singleton descriptive strong contact disagrees with "
                       "description matching on " +
                       pair_text(sets[i], sets[j]);
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_prop21(const Configuration& c) {
    const auto sets = abc(c);
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            const bool rel =
                descriptively_near(*sets[i].set, *sets[j].set, c.spec).holds();
            const bool cap =
                descriptions_intersect(*sets[i].set, *sets[j].set, c.spec);
            if (rel != cap)
                return "descriptive nearness disagrees with the descriptive "
                       "intersection on " +
                       pair_text(sets[i], sets[j]);
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_prop22(const Configuration& c) {
    const ProximityContext ctx = context_of(c);
    const RegionSet X = whole_space(c.space);
    const std::array<NamedSet, 4> sets{
        {{"A", &c.A}, {"B", &c.B}, {"C", &c.C}, {"X", &X}}};
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            if (strongly_near(*sets[i].set, *sets[j].set, ctx).holds() &&
                !near(*sets[i].set, *sets[j].set, ctx).holds())
                return "part 1: strong contact without nearness on " +
                       pair_text(sets[i], sets[j]);
        }
    }
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
            if (!sets[i].set->pure_points() || !sets[j].set->pure_points())
                continue;
            if (strongly_near(*sets[i].set, *sets[j].set, ctx).holds() &&
                !descriptively_near(*sets[i].set, *sets[j].set, c.spec).holds())
                return "part 2: strong contact of point sets without "
                       "descriptive nearness on " +
                       pair_text(sets[i], sets[j]);
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_prop23(const Configuration& c) {
    const ProximityContext ctx = context_of(c);
    const auto sets = abc(c);
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            const RegionSet& x = *sets[i].set;
            const RegionSet& y = *sets[j].set;
            if (ctx.is_full_space(x) || ctx.is_full_space(y))
                continue;
            if (!descriptively_strongly_near(x, y, c.spec, ctx).holds())
                continue;
            if (!descriptively_near(x, y, c.spec).holds())
                return "part 3: descriptive strong contact without descriptive "
                       "nearness on " +
                       pair_text(sets[i], sets[j]);
            if (is_singleton_point(x) || is_singleton_point(y))
                continue;
            if (!interior_descriptions_intersect(x, y, c.spec))
                return "part 1: descriptive strong contact of non-singletons "
                       "with disjoint interior descriptions on " +
                       pair_text(sets[i], sets[j]);
            const RegionSet ix = interior_elements_of(x);
            const RegionSet iy = interior_elements_of(y);
            if (!descriptively_near(ix, iy, c.spec).holds())
                return "part 1: interiors not descriptively near on " +
                       pair_text(sets[i], sets[j]);
            const RegionSet core = descriptive_core(ix, iy, c.spec);
            if (core.empty() ||
                !descriptively_strongly_near(core, y, c.spec, ctx).holds())
                return "part 2: the descriptive core of the interiors is not "
                       "descriptively strongly near " +
                       std::string(sets[j].name);
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_thm32(const Configuration& c) {
    if (c.mesh_sites.empty())
        return std::nullopt;
    const Tessellation t = build_tessellation(c.mesh_sites, c.space);
    for (const Cluster& k : maximal_nucleus_clusters(t)) {
        const Nerve nv = build_nerve(k, t);
        for (const ProximityVerdict& v : verify_spoke_theorem(nv, t, c.spec)) {
            if (!v.holds()) {
                std::ostringstream msg;
                msg << "spoke pair check failed at nucleus " << k.nucleus << ": "
                    << v.note;
                return msg.str();
            }
        }
    }
    return std::nullopt;
}

struct Law {
    const char* id;
    bool informational;
    const char* note;
    std::optional<std::string> (*check)(const Configuration&);
};

constexpr std::array<Law, 29> kLaws{{
    {"P0", false, "the empty set is near nothing", check_p0},
    {"P1", false, "nearness is symmetric", check_p1},
    {"P2", false, "sets sharing a point are near", check_p2},
    {"P3", false, "nearness to a union is nearness to some part", check_p3},
    {"P4", false,
     "checked in witness form: on configurations whose B lies inside C, so "
     "the pointwise hypothesis holds by construction",
     check_p4},
    {"P5", true,
     "informational: at tolerance eps_geom the relation cannot separate "
     "points closer than the tolerance, so point identity is not certified",
     check_p5},
    {"dP0", false, "the empty set is descriptively near nothing", check_dp0},
    {"dP1", false, "descriptive nearness is symmetric", check_dp1},
    {"dP2", false, "sets with intersecting descriptions are descriptively near",
     check_dp2},
    {"dP3", false,
     "descriptive nearness to a union is descriptive nearness to some part",
     check_dp3},
    {"dP4", false,
     "checked in witness form: on configurations whose B elements all appear "
     "in C, so the pointwise hypothesis holds by construction",
     check_dp4},
    {"dP5", true,
     "informational: matching within tolerance does not certify equal "
     "descriptions",
     check_dp5},
    {"snN0", false,
     "the empty set is strongly near nothing; the whole space is strongly "
     "near every nonempty set",
     check_snn0},
    {"snN1", false, "strong contact is symmetric", check_snn1},
    {"snN2", false, "strong contact forces a common point", check_snn2},
    {"snN3", false,
     "strong contact with a family member of nonempty interior extends to "
     "the family union",
     check_snn3},
    {"snN4", false, "overlapping interiors force strong contact", check_snn4},
    {"snN5", false, "a point interior to a region is strongly near it",
     check_snn5},
    {"snN6", false,
     "singleton points are strongly near exactly when they coincide at "
     "eps_geom",
     check_snn6},
    {"dsnP0", false,
     "the empty set is descriptively strongly near nothing; the whole space "
     "is descriptively strongly near every nonempty set",
     check_dsnp0},
    {"dsnP1", false, "descriptive strong contact is symmetric", check_dsnp1},
    {"dsnP2", false,
     "away from the full space, descriptive strong contact forces "
     "intersecting descriptions",
     check_dsnp2},
    {"dsnP4", false,
     "intersecting interior descriptions force descriptive strong contact",
     check_dsnp4},
    {"dsnP5", false,
     "a point whose description appears among a region's interior "
     "descriptions is descriptively strongly near it",
     check_dsnp5},
    {"dsnP6", false,
     "singleton points are descriptively strongly near exactly when their "
     "descriptions match",
     check_dsnp6},
    {"Prop2.1", false,
     "descriptive nearness coincides with a nonempty descriptive intersection",
     check_prop21},
    {"Prop2.2", false,
     "strong contact entails nearness; on point sets it also entails "
     "descriptive nearness",
     check_prop22},
    {"Prop2.3", false,
     "for non-singleton sets away from the full space: descriptive strong "
     "contact lives on interior descriptions, its interior core stays "
     "descriptively strongly near the second set, and it entails descriptive "
     "nearness",
     check_prop23},
    {"Thm3.2", false,
     "on meshes, strongly near spoke wedge pairs are both near and "
     "descriptively near",
     check_thm32},
}};

const Law* find_law(const std::string& id) {
    for (const Law& law : kLaws)
        if (id == law.id)
            return &law;
    return nullptr;
}

// ---------------------------------------------------------------------------
// configuration generation
// ---------------------------------------------------------------------------

const std::array<const char*, 5> kPolySpecs{{
    "side_count",
    "side_count,area:0",
    "area:0,diameter:0",
    "centroid_x:0,centroid_y:0",
    "side_count,area:1e-9",
}};

constexpr const char* kPointSpec = "x:1e-9,y:1e-9";

ConvexPolygon rect_poly(double x0, double y0, double x1, double y1) {
    return ConvexPolygon::from_rect({x0, y0, x1, y1});
}

Element poly_elem(ConvexPolygon p) {
    Element e;
    e.shape = std::move(p);
    return e;
}

Element point_elem(Point p) {
    Element e;
    e.shape = p;
    return e;
}

Element described_point(Point p, FeatureVector f) {
    Element e;
    e.shape = p;
    e.description = std::move(f);
    return e;
}

FeatureVector polygon_features(const ConvexPolygon& p) {
    return describe_cell({0, p, false});
}

FeatureVector bumped(FeatureVector f) {
    for (auto& entry : f.entries)
        entry.second += 1.0;
    return f;
}

void validate_set(const Configuration& c, const RegionSet& s, const char* which) {
    for (const Element& e : s.elements) {
        if (e.is_point()) {
            if (!c.space.contains(e.point()))
                throw ConfigError("configuration '" + c.name + "': a point of " +
                                  which + " lies outside the space");
        } else {
            for (const Point& v : e.polygon().vertices())
                if (!c.space.contains(v))
                    throw ConfigError("configuration '" + c.name +
                                      "': a polygon of " + which +
                                      " leaves the space");
        }
        const FeatureVector f = description_of(e);
        for (const auto& feat : c.spec.features)
            if (!f.has(feat.name))
                throw ConfigError("configuration '" + c.name +
                                  "': an element description of " + which +
                                  " lacks feature '" + feat.name +
                                  "' required by its spec");
    }
}

void validate_configuration(const Configuration& c) {
    validate_set(c, c.A, "A");
    validate_set(c, c.B, "B");
    validate_set(c, c.C, "C");
    for (const RegionSet& member : c.family)
        validate_set(c, member, "a family member");
    for (const Point& s : c.mesh_sites)
        if (!c.space.contains(s))
            throw ConfigError("configuration '" + c.name +
                              "': a mesh site lies outside the space");
}

void finalize(Configuration& c) {
    c.A = c.A.described();
    c.B = c.B.described();
    c.C = c.C.described();
    for (RegionSet& member : c.family)
        member = member.described();
    validate_configuration(c);
}

Configuration forced_grid_mesh() {
    Configuration c;
    c.name = "forced-grid-mesh";
    for (double y : {2.0, 5.0, 8.0})
        for (double x : {2.0, 5.0, 8.0})
            c.mesh_sites.push_back({x, y});
    const Tessellation t = build_tessellation(c.mesh_sites, c.space);
    c.A = RegionSet::from_cells(t, {1, 3, 4, 5, 7});
    c.B = RegionSet::from_cells(t, {0, 1});
    c.C = RegionSet::from_cells(t, {8});
    return c;
}

std::vector<Configuration> forced_configurations() {
    std::vector<Configuration> out;

    {
        Configuration c;
        c.name = "forced-empty-sets";
        c.B.elements.push_back(poly_elem(rect_poly(2, 2, 3, 3)));
        c.C.elements.push_back(poly_elem(rect_poly(0, 0, 10, 10)));
        out.push_back(std::move(c));
    }
    {
        Configuration c;
        c.name = "forced-corner-contact";
        c.spec = DescriptorSpec::parse("side_count,area:0");
        c.A.elements.push_back(poly_elem(rect_poly(2, 2, 3, 3)));
        c.B.elements.push_back(poly_elem(rect_poly(3, 3, 4, 4)));
        c.C.elements.push_back(poly_elem(rect_poly(5, 5, 7, 6)));
        out.push_back(std::move(c));
    }
    {
        Configuration c;
        c.name = "forced-edge-contact";
        c.spec = DescriptorSpec::parse("area:0,diameter:0");
        c.A.elements.push_back(poly_elem(rect_poly(2, 2, 3, 3)));
        c.B.elements.push_back(poly_elem(rect_poly(3, 2, 4, 3)));
        c.C.elements.push_back(poly_elem(rect_poly(2.5, 2.5, 3.5, 3.5)));
        out.push_back(std::move(c));
    }
    {
        Configuration c;
        c.name = "forced-nested-overlap";
        c.A.elements.push_back(poly_elem(rect_poly(2, 2, 4, 4)));
        c.B.elements.push_back(poly_elem(rect_poly(3, 3, 5, 5)));
        c.C.elements.push_back(poly_elem(rect_poly(3.2, 3.2, 3.8, 3.8)));
        out.push_back(std::move(c));
    }
    {
        Configuration c;
        c.name = "forced-identical-copies";
        c.spec = DescriptorSpec::parse("side_count,area:0,diameter:0");
        c.A.elements.push_back(poly_elem(rect_poly(2, 2, 3, 3)));
        c.B.elements.push_back(poly_elem(rect_poly(2, 2, 3, 3)));
        c.C.elements.push_back(poly_elem(rect_poly(6, 2, 7, 3)));
        out.push_back(std::move(c));
    }
    {
        Configuration c;
        c.name = "forced-full-space";
        c.A.elements.push_back(poly_elem(rect_poly(0, 0, 10, 10)));
        c.B.elements.push_back(poly_elem(rect_poly(4, 4, 6, 6)));
        c.C.elements.push_back(poly_elem(rect_poly(1, 1, 2, 2)));
        out.push_back(std::move(c));
    }
    {
        Configuration c;
        c.name = "forced-singleton-inside";
        const ConvexPolygon square = rect_poly(2, 2, 3, 3);
        c.A.elements.push_back(
            described_point({2.5, 2.5}, polygon_features(square)));
        c.B.elements.push_back(poly_elem(square));
        c.C.elements.push_back(poly_elem(square));
        out.push_back(std::move(c));
    }
    {
        Configuration c;
        c.name = "forced-singleton-boundary";
        const ConvexPolygon square = rect_poly(2, 2, 3, 3);
        c.A.elements.push_back(
            described_point({3.0, 2.5}, polygon_features(square)));
        c.B.elements.push_back(poly_elem(square));
        c.C.elements.push_back(poly_elem(rect_poly(4, 4, 5, 5)));
        out.push_back(std::move(c));
    }
    {
        Configuration c;
        c.name = "forced-singleton-outside";
        const ConvexPolygon square = rect_poly(2, 2, 3, 3);
        c.A.elements.push_back(
            described_point({8, 8}, bumped(polygon_features(square))));
        c.B.elements.push_back(poly_elem(square));
        c.C.elements.push_back(poly_elem(rect_poly(6, 6, 9, 9)));
        out.push_back(std::move(c));
    }
    {
        Configuration c;
        c.name = "forced-shared-point-sets";
        c.spec = DescriptorSpec::parse(kPointSpec);
        c.A.elements.push_back(point_elem({2, 2}));
        c.A.elements.push_back(point_elem({2.5, 2.5}));
        c.B.elements.push_back(point_elem({2.5, 2.5}));
        c.B.elements.push_back(point_elem({7, 7}));
        c.C.elements.push_back(point_elem({1, 9}));
        out.push_back(std::move(c));
    }
    {
        Configuration c;
        c.name = "forced-twin-points";
        c.spec = DescriptorSpec::parse(kPointSpec);
        c.A.elements.push_back(point_elem({4, 4}));
        c.B.elements.push_back(point_elem({4, 4}));
        c.C.elements.push_back(point_elem({6.5, 4}));
        out.push_back(std::move(c));
    }
    {
        Configuration c;
        c.name = "forced-family-interior-guard";
        const ConvexPolygon home = rect_poly(4.5, 4.5, 5.5, 5.5);
        c.A.elements.push_back(poly_elem(home));
        c.B.elements.push_back(poly_elem(rect_poly(1, 1, 2, 2)));
        c.C.elements.push_back(poly_elem(rect_poly(8, 8, 9, 9)));
        RegionSet point_member;
        point_member.elements.push_back(
            described_point({5, 5}, polygon_features(home)));
        RegionSet polygon_member;
        polygon_member.elements.push_back(poly_elem(rect_poly(4, 4, 6, 6)));
        c.family.push_back(std::move(point_member));
        c.family.push_back(std::move(polygon_member));
        out.push_back(std::move(c));
    }
    {
        Configuration c;
        c.name = "forced-family-no-interior";
        const ConvexPolygon home = rect_poly(4.5, 4.5, 5.5, 5.5);
        c.A.elements.push_back(poly_elem(home));
        c.B.elements.push_back(poly_elem(rect_poly(1, 1, 2, 2)));
        c.C.elements.push_back(poly_elem(rect_poly(8, 8, 9, 9)));
        RegionSet point_member;
        point_member.elements.push_back(
            described_point({5, 5}, polygon_features(home)));
        c.family.push_back(std::move(point_member));
        out.push_back(std::move(c));
    }
    out.push_back(sine_wave_axis_config());
    out.push_back(forced_grid_mesh());
    {
        Configuration c;
        c.name = "forced-superset";
        c.A.elements.push_back(poly_elem(rect_poly(2.5, 2.5, 3.5, 3.5)));
        c.B.elements.push_back(poly_elem(rect_poly(3, 3, 4, 4)));
        c.C.elements.push_back(poly_elem(rect_poly(3, 3, 4, 4)));
        c.C.elements.push_back(poly_elem(rect_poly(6, 6, 7, 7)));
        out.push_back(std::move(c));
    }

    for (Configuration& c : out)
        finalize(c);
    return out;
}

const std::array<const char*, 14> kFlavorNames{{
    "overlap", "disjoint", "edge-contact", "corner-contact", "copies",
    "point-clouds", "point-singletons", "point-probe", "full-space", "family",
    "superset", "covered-points", "mesh", "regular-gons",
}};

ConvexPolygon random_rect(Rng& rng) {
    const double x0 = rng.uniform(1.0, 6.5);
    const double y0 = rng.uniform(1.0, 6.5);
    return rect_poly(x0, y0, x0 + rng.uniform(0.8, 2.5),
                     y0 + rng.uniform(0.8, 2.5));
}

Point grid_point(Rng& rng) {
    return {0.5 * (2 + static_cast<double>(rng.below(17))),
            0.5 * (2 + static_cast<double>(rng.below(17)))};
}

std::vector<Point> random_mesh_sites(Rng& rng, const Rect& box,
                                     std::size_t count) {
    std::vector<Point> sites;
    std::size_t attempts = 0;
    while (sites.size() < count && attempts < 100000) {
        ++attempts;
        const Point p{rng.uniform(box.x0 + 0.4, box.x1 - 0.4),
                      rng.uniform(box.y0 + 0.4, box.y1 - 0.4)};
        const bool clear = std::none_of(
            sites.begin(), sites.end(),
            [&](const Point& q) { return distance(p, q) < 0.5; });
        if (clear)
            sites.push_back(p);
    }
    return sites;
}

Configuration build_flavor(std::size_t flavor, Rng& rng, std::string name,
                           const char* poly_spec) {
    Configuration c;
    c.name = std::move(name);
    c.spec = DescriptorSpec::parse(poly_spec);
    switch (flavor) {
        case 0: {  // overlapping rectangles
            const double x0 = rng.uniform(1.0, 4.0);
            const double y0 = rng.uniform(1.0, 4.0);
            const double w = rng.uniform(1.0, 2.5);
            const double h = rng.uniform(1.0, 2.5);
            c.A.elements.push_back(poly_elem(rect_poly(x0, y0, x0 + w, y0 + h)));
            const double dx = rng.uniform(0.2, 0.8) * w;
            const double dy = rng.uniform(0.2, 0.8) * h;
            c.B.elements.push_back(
                poly_elem(rect_poly(x0 + dx, y0 + dy, x0 + dx + w, y0 + dy + h)));
            c.C.elements.push_back(poly_elem(random_rect(rng)));
            break;
        }
        case 1: {  // three separated rectangles
            const auto strip_rect = [&](double lo, double hi) {
                const double x0 = rng.uniform(lo, hi);
                const double y0 = rng.uniform(1.0, 7.5);
                return rect_poly(x0, y0, x0 + rng.uniform(0.8, 1.4),
                                 y0 + rng.uniform(0.8, 1.4));
            };
            c.A.elements.push_back(poly_elem(strip_rect(0.6, 1.5)));
            c.B.elements.push_back(poly_elem(strip_rect(3.8, 4.6)));
            c.C.elements.push_back(poly_elem(strip_rect(7.0, 8.0)));
            break;
        }
        case 2: {  // rectangles sharing part of an edge
            const double x0 = rng.uniform(1.0, 4.0);
            const double y0 = rng.uniform(2.0, 4.0);
            const double w = rng.uniform(0.8, 2.2);
            const double h = rng.uniform(0.8, 2.5);
            c.A.elements.push_back(poly_elem(rect_poly(x0, y0, x0 + w, y0 + h)));
            const double by0 = y0 + rng.uniform(-0.5, 0.5) * h;
            c.B.elements.push_back(poly_elem(rect_poly(
                x0 + w, by0, x0 + w + rng.uniform(0.8, 2.2), by0 + h)));
            c.C.elements.push_back(poly_elem(random_rect(rng)));
            break;
        }
        case 3: {  // rectangles meeting at one corner
            const double x0 = rng.uniform(1.0, 4.0);
            const double y0 = rng.uniform(1.0, 4.0);
            const double w = rng.uniform(0.8, 2.2);
            const double h = rng.uniform(0.8, 2.2);
            c.A.elements.push_back(poly_elem(rect_poly(x0, y0, x0 + w, y0 + h)));
            c.B.elements.push_back(
                poly_elem(rect_poly(x0 + w, y0 + h, x0 + w + rng.uniform(0.8, 2.2),
                                    y0 + h + rng.uniform(0.8, 2.2))));
            c.C.elements.push_back(poly_elem(random_rect(rng)));
            break;
        }
        case 4: {  // exact and integer-translated copies
            const double x0 = 1.0 + static_cast<double>(rng.below(5));
            const double y0 = 1.0 + static_cast<double>(rng.below(5));
            const double w = 1.0 + static_cast<double>(rng.below(2));
            const double h = 1.0 + static_cast<double>(rng.below(2));
            const ConvexPolygon base = rect_poly(x0, y0, x0 + w, y0 + h);
            c.A.elements.push_back(poly_elem(base));
            c.B.elements.push_back(poly_elem(base));
            const double dx = static_cast<double>(rng.below(3));
            const double dy = static_cast<double>(rng.below(3));
            c.C.elements.push_back(
                poly_elem(rect_poly(x0 + dx, y0 + dy, x0 + dx + w, y0 + dy + h)));
            break;
        }
        case 5: {  // point clouds with a forced shared point
            c.spec = DescriptorSpec::parse(kPointSpec);
            const std::size_t na = 2 + rng.below(3);
            for (std::size_t i = 0; i < na; ++i)
                c.A.elements.push_back(point_elem(grid_point(rng)));
            c.B.elements.push_back(c.A.elements[0]);
            const std::size_t nb = 1 + rng.below(3);
            for (std::size_t i = 0; i < nb; ++i)
                c.B.elements.push_back(point_elem(grid_point(rng)));
            const std::size_t nc = 1 + rng.below(4);
            for (std::size_t i = 0; i < nc; ++i)
                c.C.elements.push_back(point_elem(grid_point(rng)));
            break;
        }
        case 6: {  // singleton points, identical or separated
            c.spec = DescriptorSpec::parse(kPointSpec);
            const Point p = grid_point(rng);
            c.A.elements.push_back(point_elem(p));
            if (rng.below(2) == 0) {
                c.B.elements.push_back(point_elem(p));
            } else {
                Point q = grid_point(rng);
                while (q == p)
                    q = grid_point(rng);
                c.B.elements.push_back(point_elem(q));
            }
            c.C.elements.push_back(point_elem(grid_point(rng)));
            break;
        }
        case 7: {  // a described point probing a polygon
            const int sides = 3 + static_cast<int>(rng.below(6));
            const Point center{rng.uniform(3.0, 7.0), rng.uniform(3.0, 7.0)};
            const ConvexPolygon gon = ConvexPolygon::regular(
                sides, center, rng.uniform(0.8, 1.6),
                rng.uniform(0.0, 6.283185307179586));
            c.B.elements.push_back(poly_elem(gon));
            c.A.elements.push_back(described_point(center, polygon_features(gon)));
            c.C.elements.push_back(
                described_point({9.3, 9.3}, bumped(polygon_features(gon))));
            break;
        }
        case 8: {  // one operand is the whole space
            c.A.elements.push_back(poly_elem(rect_poly(
                c.space.x0, c.space.y0, c.space.x1, c.space.y1)));
            const ConvexPolygon r = random_rect(rng);
            c.B.elements.push_back(poly_elem(r));
            c.C.elements.push_back(
                described_point(r.centroid(), polygon_features(r)));
            break;
        }
        case 9: {  // a family around A
            const ConvexPolygon anchor = random_rect(rng);
            RegionSet first;
            first.elements.push_back(poly_elem(anchor));
            c.family.push_back(std::move(first));
            const std::size_t members = 2 + rng.below(4);
            for (std::size_t i = 0; i < members; ++i) {
                RegionSet member;
                if (rng.below(3) == 0) {
                    const std::size_t pts = 1 + rng.below(2);
                    for (std::size_t k = 0; k < pts; ++k)
                        member.elements.push_back(described_point(
                            grid_point(rng), polygon_features(anchor)));
                } else {
                    const std::size_t polys = 1 + rng.below(2);
                    for (std::size_t k = 0; k < polys; ++k)
                        member.elements.push_back(poly_elem(random_rect(rng)));
                }
                c.family.push_back(std::move(member));
            }
            const Point m = anchor.centroid();
            c.A.elements.push_back(poly_elem(
                rect_poly(m.x - 0.5, m.y - 0.5, m.x + 0.5, m.y + 0.5)));
            c.B.elements.push_back(poly_elem(random_rect(rng)));
            c.C.elements.push_back(poly_elem(random_rect(rng)));
            break;
        }
        case 10: {  // C extends B element for element
            const ConvexPolygon r1 = random_rect(rng);
            c.B.elements.push_back(poly_elem(r1));
            if (rng.below(2) == 0)
                c.B.elements.push_back(poly_elem(random_rect(rng)));
            c.C = c.B;
            c.C.elements.push_back(poly_elem(random_rect(rng)));
            const Point m = r1.centroid();
            c.A.elements.push_back(poly_elem(
                rect_poly(m.x - 0.6, m.y - 0.6, m.x + 0.6, m.y + 0.6)));
            break;
        }
        case 11: {  // points covered by one large region
            const double w = rng.uniform(3.0, 5.0);
            const double h = rng.uniform(3.0, 5.0);
            const ConvexPolygon cover = rect_poly(2, 2, 2 + w, 2 + h);
            const std::size_t pts = 2 + rng.below(2);
            for (std::size_t i = 0; i < pts; ++i) {
                const Point p{rng.uniform(2.5, 1.5 + w),
                              rng.uniform(2.5, 1.5 + h)};
                c.B.elements.push_back(described_point(p, polygon_features(cover)));
            }
            c.A.elements.push_back(c.B.elements[0]);
            c.C.elements.push_back(poly_elem(cover));
            break;
        }
        case 12: {  // region sets cut from a real mesh
            c.spec = DescriptorSpec::side_count();
            c.mesh_sites = random_mesh_sites(rng, c.space, 8 + rng.below(7));
            const Tessellation t = build_tessellation(c.mesh_sites, c.space);
            const auto clusters = maximal_nucleus_clusters(t);
            c.A = RegionSet::from_cells(t, clusters.front().members);
            const int other = static_cast<int>(rng.below(t.cells.size()));
            c.B = RegionSet::from_cells(t, nucleus_cluster(t, other).members);
            const int lone = static_cast<int>(rng.below(t.cells.size()));
            c.C = RegionSet::from_cells(t, {lone});
            break;
        }
        default: {  // two overlapping regular polygons and a far one
            const int sides = 3 + static_cast<int>(rng.below(6));
            const Point center{rng.uniform(3.0, 5.5), rng.uniform(3.0, 5.5)};
            const double r = rng.uniform(0.8, 1.4);
            c.A.elements.push_back(
                poly_elem(ConvexPolygon::regular(sides, center, r)));
            c.B.elements.push_back(poly_elem(ConvexPolygon::regular(
                sides, {center.x + 0.8 * r, center.y}, r)));
            const int far_sides =
                rng.below(2) == 0 ? sides : 3 + static_cast<int>(rng.below(6));
            c.C.elements.push_back(poly_elem(ConvexPolygon::regular(
                far_sides, {8.2, 8.2}, rng.uniform(0.8, 1.2))));
            break;
        }
    }
    return c;
}

} // namespace

const std::vector<std::string>& axiom_registry() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        v.reserve(kLaws.size());
        for (const Law& law : kLaws)
            v.push_back(law.id);
        return v;
    }();
    return ids;
}

std::vector<Configuration> generate_configurations(std::uint64_t seed,
                                                   std::size_t n) {
    std::vector<Configuration> out;
    out.reserve(n);
    for (Configuration& c : forced_configurations()) {
        if (out.size() == n)
            break;
        out.push_back(std::move(c));
    }
    Rng rng(seed);
    std::size_t i = 0;
    while (out.size() < n) {
        const std::size_t flavor = i % kFlavorNames.size();
        std::string name =
            "random-" + std::to_string(i) + "-" + kFlavorNames[flavor];
        Configuration c = build_flavor(flavor, rng, std::move(name),
                                       kPolySpecs[i % kPolySpecs.size()]);
        finalize(c);
        out.push_back(std::move(c));
        ++i;
    }
    return out;
}

AxiomReport check_axiom(const std::string& id,
                        const std::vector<Configuration>& configs) {
    const Law* law = find_law(id);
    if (!law)
        throw UnknownAxiom("no check registered for id '" + id + "'");
    AxiomReport r;
    r.id = id;
    r.informational = law->informational;
    r.note = law->note;
    r.trials = configs.size();
    for (const Configuration& c : configs) {
        if (auto detail = law->check(c))
            r.failures.push_back({c.name, *detail, serialize_configuration(c)});
    }
    return r;
}

std::vector<AxiomReport> run_full_suite(std::uint64_t seed, std::size_t n) {
    const std::vector<Configuration> configs = generate_configurations(seed, n);
    std::vector<AxiomReport> reports;
    reports.reserve(axiom_registry().size());
    for (const std::string& id : axiom_registry())
        reports.push_back(check_axiom(id, configs));
    return reports;
}

bool suite_passes(const std::vector<AxiomReport>& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const AxiomReport& r) { return r.passed(); });
}

std::string suite_header() {
    return "Finite check over generated configurations: a failure demonstrates "
           "an implementation bug, while passing trials are evidence, not a "
           "proof.";
}

std::vector<double> sine_wave_axis_roots() {
    const auto f = [](double x) { return std::sin(5.0 / x); };
    std::vector<double> roots;
    const int steps = 4096;
    double prev_x = 0.1;
    double prev_f = f(prev_x);
    for (int i = 1; i <= steps; ++i) {
        const double x = 0.1 + 0.9 * static_cast<double>(i) / steps;
        const double fx = f(x);
        if ((prev_f <= 0.0) != (fx <= 0.0)) {
            double lo = prev_x;
            double hi = x;
            while (hi - lo > 1e-14) {
                const double mid = 0.5 * (lo + hi);
                if ((f(lo) <= 0.0) != (f(mid) <= 0.0))
                    hi = mid;
                else
                    lo = mid;
            }
            roots.push_back(0.5 * (lo + hi));
        }
        prev_x = x;
        prev_f = fx;
    }
    return roots;
}

Configuration sine_wave_axis_config() {
    Configuration c;
    c.name = "forced-sine-axis";
    c.space = {0.0, -1.0, 2.0, 1.0};
    c.spec = DescriptorSpec::parse(kPointSpec);
    for (const double r : sine_wave_axis_roots()) {
        c.A.elements.push_back(point_elem({r, 0.0}));
        c.B.elements.push_back(point_elem({r, std::sin(5.0 / r)}));
    }
    c.C.elements.push_back(point_elem({0.5, 0.8}));
    c.A = c.A.described();
    c.B = c.B.described();
    c.C = c.C.described();
    validate_configuration(c);
    return c;
}

// ---------------------------------------------------------------------------
// serialization
// ---------------------------------------------------------------------------

namespace {

void emit_description(std::ostream& out, const FeatureVector& f) {
    out << "{";
    for (std::size_t i = 0; i < f.entries.size(); ++i) {
        if (i)
            out << ", ";
        out << json_quote(f.entries[i].first) << ": "
            << canonical_number(f.entries[i].second);
    }
    out << "}";
}

void emit_element(std::ostream& out, const Element& e) {
    if (e.is_point()) {
        out << "{\"kind\": \"point\", \"at\": [" << canonical_number(e.point().x)
            << ", " << canonical_number(e.point().y) << "], \"description\": ";
    } else {
        out << "{\"kind\": \"polygon\", \"vertices\": [";
        const auto& vs = e.polygon().vertices();
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (i)
                out << ", ";
            out << "[" << canonical_number(vs[i].x) << ", "
                << canonical_number(vs[i].y) << "]";
        }
        out << "], \"description\": ";
    }
    emit_description(out, description_of(e));
    out << "}";
}

void emit_element_array(std::ostream& out, const RegionSet& s,
                        const std::string& pad) {
    if (s.elements.empty()) {
        out << "[]";
        return;
    }
    out << "[\n";
    for (std::size_t i = 0; i < s.elements.size(); ++i) {
        out << pad << "  ";
        emit_element(out, s.elements[i]);
        out << (i + 1 < s.elements.size() ? ",\n" : "\n");
    }
    out << pad << "]";
}

void emit_configuration(std::ostream& out, const Configuration& c, int indent) {
    const std::string in0(static_cast<std::size_t>(indent), ' ');
    const std::string in1 = in0 + "  ";
    const std::string in2 = in1 + "  ";
    out << "{\n";
    out << in1 << "\"name\": " << json_quote(c.name) << ",\n";
    out << in1 << "\"space\": [" << canonical_number(c.space.x0) << ", "
        << canonical_number(c.space.y0) << ", " << canonical_number(c.space.x1)
        << ", " << canonical_number(c.space.y1) << "],\n";
    out << in1 << "\"spec\": " << json_quote(c.spec.to_string()) << ",\n";
    out << in1 << "\"sets\": {\n";
    const std::array<NamedSet, 3> sets = abc(c);
    for (std::size_t i = 0; i < sets.size(); ++i) {
        out << in2 << "\"" << sets[i].name << "\": ";
        emit_element_array(out, *sets[i].set, in2);
        out << (i + 1 < sets.size() ? ",\n" : "\n");
    }
    out << in1 << "},\n";
    out << in1 << "\"family\": [";
    if (c.family.empty()) {
        out << "],\n";
    } else {
        out << "\n";
        for (std::size_t i = 0; i < c.family.size(); ++i) {
            out << in2;
            emit_element_array(out, c.family[i], in2);
            out << (i + 1 < c.family.size() ? ",\n" : "\n");
        }
        out << in1 << "],\n";
    }
    out << in1 << "\"mesh_sites\": [";
    for (std::size_t i = 0; i < c.mesh_sites.size(); ++i) {
        if (i)
            out << ", ";
        out << "[" << canonical_number(c.mesh_sites[i].x) << ", "
            << canonical_number(c.mesh_sites[i].y) << "]";
    }
    out << "]\n";
    out << in0 << "}";
}

Element element_from_json(const Json& je) {
    const std::string kind = je.at("kind").get<std::string>();
    Element e;
    if (kind == "point") {
        e.shape = Point{je.at("at").at(0).get<double>(),
                        je.at("at").at(1).get<double>()};
    } else if (kind == "polygon") {
        std::vector<Point> vs;
        for (const auto& v : je.at("vertices"))
            vs.push_back({v.at(0).get<double>(), v.at(1).get<double>()});
        e.shape = ConvexPolygon::from_vertices(std::move(vs));
    } else {
        throw ParseError("unknown element kind '" + kind + "'");
    }
    FeatureVector f;
    for (const auto& [key, value] : je.at("description").items())
        f.entries.emplace_back(key, value.get<double>());
    e.description = std::move(f);
    return e;
}

RegionSet set_from_json(const Json& js) {
    RegionSet s;
    for (const auto& je : js)
        s.elements.push_back(element_from_json(je));
    return s;
}

Configuration configuration_from_json(const Json& j) {
    Configuration c;
    c.name = j.at("name").get<std::string>();
    const auto& sp = j.at("space");
    c.space = {sp.at(0).get<double>(), sp.at(1).get<double>(),
               sp.at(2).get<double>(), sp.at(3).get<double>()};
    c.spec = DescriptorSpec::parse(j.at("spec").get<std::string>());
    c.A = set_from_json(j.at("sets").at("A"));
    c.B = set_from_json(j.at("sets").at("B"));
    c.C = set_from_json(j.at("sets").at("C"));
    for (const auto& m : j.at("family"))
        c.family.push_back(set_from_json(m));
    for (const auto& s : j.at("mesh_sites"))
        c.mesh_sites.push_back({s.at(0).get<double>(), s.at(1).get<double>()});
    return c;
}

} // namespace

std::string serialize_configuration(const Configuration& c) {
    std::ostringstream out;
    emit_configuration(out, c, 0);
    out << "\n";
    return out.str();
}

Configuration parse_configuration(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed configuration JSON: ") +
                         e.what());
    }
    Configuration c;
    try {
        c = configuration_from_json(j);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("configuration JSON structure: ") +
                         e.what());
    }
    validate_configuration(c);
    return c;
}

std::string emit_suite_report(const std::vector<AxiomReport>& reports,
                              std::uint64_t seed, std::size_t trials) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"schema\": " << kReportSchemaVersion << ",\n";
    out << "  \"suite\": {\n";
    out << "    \"seed\": " << seed << ",\n";
    out << "    \"trials\": " << trials << ",\n";
    out << "    \"note\": " << json_quote(suite_header()) << "\n";
    out << "  },\n";
    out << "  \"axioms\": [";
    if (reports.empty()) {
        out << "]\n";
    } else {
        out << "\n";
        for (std::size_t i = 0; i < reports.size(); ++i) {
            const AxiomReport& r = reports[i];
            out << "    {\n";
            out << "      \"id\": " << json_quote(r.id) << ",\n";
            out << "      \"trials\": " << r.trials << ",\n";
            out << "      \"informational\": "
                << (r.informational ? "true" : "false") << ",\n";
            out << "      \"note\": " << json_quote(r.note) << ",\n";
            out << "      \"failures\": [";
            if (r.failures.empty()) {
                out << "]\n";
            } else {
                out << "\n";
                for (std::size_t k = 0; k < r.failures.size(); ++k) {
                    const AxiomFailure& f = r.failures[k];
                    out << "        {\n";
                    out << "          \"configuration_name\": "
                        << json_quote(f.config_name) << ",\n";
                    out << "          \"detail\": " << json_quote(f.detail)
                        << ",\n";
                    out << "          \"configuration\": ";
                    emit_configuration(out, parse_configuration(f.config_json),
                                       10);
                    out << "\n        }"
                        << (k + 1 < r.failures.size() ? ",\n" : "\n");
                }
                out << "      ]\n";
            }
            out << "    }" << (i + 1 < reports.size() ? ",\n" : "\n");
        }
        out << "  ]\n";
    }
    out << "}\n";
    return out.str();
}

std::vector<AxiomReport> parse_suite_report(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed suite report JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("schema") ||
        !j.at("schema").is_number_integer())
        throw ParseError("suite report lacks an integer schema field");
    if (j.at("schema").get<int>() != kReportSchemaVersion) {
        std::ostringstream msg;
        msg << "suite report schema " << j.at("schema").get<int>()
            << " does not match the supported version " << kReportSchemaVersion;
        throw SchemaVersionMismatch(msg.str());
    }
    std::vector<AxiomReport> reports;
    try {
        for (const auto& ja : j.at("axioms")) {
            AxiomReport r;
            r.id = ja.at("id").get<std::string>();
            r.trials = ja.at("trials").get<std::size_t>();
            r.informational = ja.at("informational").get<bool>();
            r.note = ja.at("note").get<std::string>();
            for (const auto& jf : ja.at("failures")) {
                AxiomFailure f;
                f.config_name = jf.at("configuration_name").get<std::string>();
                f.detail = jf.at("detail").get<std::string>();
                f.config_json = serialize_configuration(
                    configuration_from_json(jf.at("configuration")));
                r.failures.push_back(std::move(f));
            }
            reports.push_back(std::move(r));
        }
    } catch (const Json::exception& e) {
        throw ParseError(std::string("suite report structure: ") + e.what());
    }
    return reports;
}

std::vector<AxiomReport> replay_failures(const std::string& report_text) {
    std::vector<AxiomReport> out;
    for (const AxiomReport& r : parse_suite_report(report_text)) {
        if (r.failures.empty())
            continue;
        std::vector<Configuration> configs;
        configs.reserve(r.failures.size());
        for (const AxiomFailure& f : r.failures)
            configs.push_back(parse_configuration(f.config_json));
        out.push_back(check_axiom(r.id, configs));
    }
    return out;
}

} // namespace proxinerve
