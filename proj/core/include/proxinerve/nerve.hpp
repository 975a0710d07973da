#ifndef PROXINERVE_NERVE_HPP
#define PROXINERVE_NERVE_HPP

#include <cstddef>
#include <vector>

#include "proxinerve/clusters.hpp"
#include "proxinerve/proximity.hpp"

namespace proxinerve {

/** A nucleus paired with one edge-adjacent arm; the wedge arm ∪ nucleus. */
struct Spoke {
    int nucleus = 0;
    int arm = 0;
    Segment witness;  // the shared edge
};

/** Downward-closed family of member subsets with nonempty joint contact. */
struct SimplicialComplex {
    std::vector<int> vertices;               // ascending cell ids
    std::vector<std::vector<int>> simplices; // sorted ids; by size then lex

    std::size_t count_of_dimension(std::size_t dim) const;
    long long euler_characteristic() const;
    bool has_simplex(const std::vector<int>& sorted_ids) const;
    bool downward_closed() const;
    /** Every simplex extends to one through the apex. */
    bool is_cone_over(int apex) const;
};

struct Nerve {
    Cluster cluster;
    std::vector<Spoke> spokes;
    SimplicialComplex complex;
};

/** One spoke per non-nucleus member, ordered by arm id.
    Throws DescriptiveClusterHasNoSpokes for descriptive clusters. */
std::vector<Spoke> build_spokes(const Cluster& c, const Tessellation& t,
                                const Tolerances& tol = {});

/**
 * Subsets of cluster members whose closed polygons have a common point
 * become simplices; enumerated size-upward with monotone pruning.  Caps the
 * subset count at 2^20 (ClusterTooLarge beyond).
 */
SimplicialComplex build_nerve_complex(const Cluster& c, const Tessellation& t,
                                      const Tolerances& tol = {});

Nerve build_nerve(const Cluster& c, const Tessellation& t,
                  const Tolerances& tol = {});

/**
 * The spoke wedges arm ∪ N all contain the nucleus, so their common
 * intersection is nonempty with the nucleus polygon as witness; verified
 * geometrically, not assumed.
 */
ProximityVerdict verify_nerve_lemma(const Nerve& nv, const Tessellation& t,
                                    const Tolerances& tol = {});

/**
 * For every spoke pair: strong contact of the wedges must entail both
 * spatial and descriptive nearness.  One verdict per pair; a verdict that
 * fails carries the offending pair in its note.
 */
std::vector<ProximityVerdict> verify_spoke_theorem(const Nerve& nv,
                                                   const Tessellation& t,
                                                   const DescriptorSpec& spec,
                                                   const Tolerances& tol = {});

/**
 * Falsifiable contractibility evidence for the nerve and the union.
 * cone_over_nucleus is diagnostic, not part of the pass condition: two arms
 * that wrap around a third can touch away from the nucleus, which leaves the
 * complex contractible (all the numbers below intact) without making it a
 * cone with apex at the nucleus.
 */
struct HomotopyReport {
    long long complex_euler = 0;
    bool cone_over_nucleus = false;
    bool union_connected = false;
    long long union_euler = 0;
    std::size_t boundary_loops = 0;

    bool passes() const {
        return complex_euler == 1 && union_connected && union_euler == 1 &&
               boundary_loops == 1;
    }
};

HomotopyReport homotopy_type_proxy(const Nerve& nv, const Tessellation& t,
                                   const Tolerances& tol = {});

/**
 * Descriptive intersection across the member families of several nerves.
 * Vacuous for fewer than two nerves; precondition_unmet when the nuclei
 * side counts differ; otherwise holds iff the joint descriptive
 * intersection is nonempty, witnessed by a matching nuclei pair.
 */
ProximityVerdict verify_descriptive_nerve_theorem(
    const std::vector<Nerve>& nerves, const Tessellation& t,
    const DescriptorSpec& spec = DescriptorSpec::side_count());

} // namespace proxinerve

#endif
