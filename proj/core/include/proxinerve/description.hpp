#ifndef PROXINERVE_DESCRIPTION_HPP
#define PROXINERVE_DESCRIPTION_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "proxinerve/voronoi.hpp"

namespace proxinerve {

/** Ordered list of named real features describing a region or point. */
struct FeatureVector {
    std::vector<std::pair<std::string, double>> entries;

    bool has(const std::string& name) const;
    /** Throws ArityMismatch when the feature is absent. */
    double at(const std::string& name) const;

    friend bool operator==(const FeatureVector&, const FeatureVector&) = default;
};

/**
 * Which features participate in matching and how close is close enough.
 * side_count is always compared exactly whatever tolerance is written.
 */
struct DescriptorSpec {
    struct Entry {
        std::string name;
        double tol = 0.0;
    };
    std::vector<Entry> features;

    /** The default: exact side_count match. */
    static DescriptorSpec side_count();

    /**
     * Comma-separated feature list with optional per-feature tolerance,
     * e.g. "side_count,area:1e-3".  Real-valued features default to
     * tol 1e-6; side_count is always exact.  Throws ConfigError.
     */
    static DescriptorSpec parse(const std::string& text);

    std::string to_string() const;
};

/** (centroid_x, centroid_y, area, diameter, side_count) of the cell polygon. */
FeatureVector describe_cell(const Cell& c);

/** (x, y) of a bare point element. */
FeatureVector describe_point(Point p);

/** True iff every selected feature agrees within its tolerance. */
bool features_match(const FeatureVector& u, const FeatureVector& v,
                    const DescriptorSpec& spec);

/**
 * Indices (into the concatenation A ++ B) of the elements whose description
 * matches some description in A and some in B.  Realizes the descriptive
 * intersection of two described families.
 */
std::vector<std::size_t> descriptive_intersection(
    const std::vector<FeatureVector>& A, const std::vector<FeatureVector>& B,
    const DescriptorSpec& spec);

/**
 * Same over any number of families: indices into their concatenation of
 * elements matching at least one description in every family.
 */
std::vector<std::size_t> descriptive_intersection_all(
    const std::vector<std::vector<FeatureVector>>& families,
    const DescriptorSpec& spec);

} // namespace proxinerve

#endif
