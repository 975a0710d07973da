#ifndef PROXINERVE_PROXIMITY_HPP
#define PROXINERVE_PROXIMITY_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "proxinerve/description.hpp"
#include "proxinerve/geometry.hpp"
#include "proxinerve/voronoi.hpp"

namespace proxinerve {

/** A region-set element: a bare point or a closed convex polygon. */
struct Element {
    std::variant<Point, ConvexPolygon> shape;
    std::optional<FeatureVector> description;

    bool is_point() const { return std::holds_alternative<Point>(shape); }
    bool is_polygon() const { return std::holds_alternative<ConvexPolygon>(shape); }
    const Point& point() const { return std::get<Point>(shape); }
    const ConvexPolygon& polygon() const { return std::get<ConvexPolygon>(shape); }
};

/** Finite set of elements; the operand type of every proximity relation. */
struct RegionSet {
    std::vector<Element> elements;

    static RegionSet from_points(const std::vector<Point>& pts);
    static RegionSet from_polygons(const std::vector<ConvexPolygon>& polys);
    /** Cell polygons of `ids` with their region descriptions attached. */
    static RegionSet from_cells(const Tessellation& t, const std::vector<int>& ids);

    bool empty() const { return elements.empty(); }
    bool pure_points() const;
    bool pure_polygons() const;

    /** Copy with default descriptions filled in where missing (region
        features for polygons, coordinates for points). */
    RegionSet described() const;

    /** True when p lies in the closed union of the elements (eps_geom). */
    bool contains_point(Point p, const Tolerances& tol) const;
};

struct Witness {
    enum class Kind { none, point, segment, polygon, feature_pair };
    Kind kind = Kind::none;
    Point point;
    Segment segment;
    std::vector<Point> polygon;
    std::size_t index_a = 0;  // element index in A (feature_pair)
    std::size_t index_b = 0;  // element index in B (feature_pair)
};

enum class Truth { holds, fails, precondition_unmet };

struct ProximityVerdict {
    std::string relation;
    Truth truth = Truth::fails;
    Witness witness;
    std::string note;

    bool holds() const { return truth == Truth::holds; }
};

/** Carries the ambient space: the bounding box plays the role of the whole
    space X in the full-space rules of the strong relations. */
struct ProximityContext {
    Rect space;
    Tolerances tol;

    bool is_full_space(const RegionSet& s) const;
};

/** Spatial nearness: the closed unions share at least one point. */
ProximityVerdict near(const RegionSet& A, const RegionSet& B,
                      const ProximityContext& ctx);

/**
 * Strong contact: interiors overlap (polygon pairs), a full-space operand,
 * a singleton point interior to a polygon element, or pure point sets
 * sharing a point.  Corner-only polygon contact is near but not strong.
 */
ProximityVerdict strongly_near(const RegionSet& A, const RegionSet& B,
                               const ProximityContext& ctx);

/** Mesh strong contact: same cell, or cells sharing a positive-length edge. */
ProximityVerdict mesh_strongly_near(int a, int b, const Tessellation& t,
                                    const Tolerances& tol = {});

/** Descriptive nearness: some element of one set matches some element of the
    other under the spec.  Location plays no part. */
ProximityVerdict descriptively_near(const RegionSet& A, const RegionSet& B,
                                    const DescriptorSpec& spec);

/**
 * Descriptive strong contact: matching interior (polygon) elements, a
 * full-space operand, a singleton whose description appears among the other
 * set's polygon descriptions, or two singletons with equal descriptions.
 */
ProximityVerdict descriptively_strongly_near(const RegionSet& A, const RegionSet& B,
                                             const DescriptorSpec& spec,
                                             const ProximityContext& ctx);

/** Re-checks a verdict's witness against the operands; a holds verdict must
    revalidate, anything else revalidates vacuously. */
bool revalidate(const ProximityVerdict& v, const RegionSet& A, const RegionSet& B,
                const ProximityContext& ctx,
                const DescriptorSpec& spec = DescriptorSpec::side_count());

} // namespace proxinerve

#endif
