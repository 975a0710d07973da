#ifndef PROXINERVE_CLUSTERS_HPP
#define PROXINERVE_CLUSTERS_HPP

#include <cstddef>
#include <vector>

#include "proxinerve/description.hpp"
#include "proxinerve/voronoi.hpp"

namespace proxinerve {

enum class ClusterKind { spatial, descriptive };

/** A nucleus with every cell in the kind's contact relation with it.
    The nucleus is a member; degree counts the others. */
struct Cluster {
    int nucleus = 0;
    std::vector<int> members;  // ascending, nucleus included
    ClusterKind kind = ClusterKind::spatial;

    std::size_t degree() const { return members.size() - 1; }
    bool contains(int id) const;
};

/** The cells edge-adjacent to n, plus n itself. */
Cluster nucleus_cluster(const Tessellation& t, int n);

/** Every cluster whose degree ties the mesh maximum, ascending nucleus id. */
std::vector<Cluster> maximal_nucleus_clusters(const Tessellation& t);

/** The cells whose descriptions match n's, plus n itself; location-free. */
Cluster descriptive_nucleus_cluster(const Tessellation& t, int n,
                                    const DescriptorSpec& spec);

std::vector<Cluster> maximal_descriptive_clusters(const Tessellation& t,
                                                  const DescriptorSpec& spec);

} // namespace proxinerve

#endif
