#include "proxinerve/clusters.hpp"

#include <algorithm>

#include "proxinerve/errors.hpp"

namespace proxinerve {

bool Cluster::contains(int id) const {
    return std::binary_search(members.begin(), members.end(), id);
}

Cluster nucleus_cluster(const Tessellation& t, int n) {
    t.cell(n);  // validates the id
    Cluster c;
    c.nucleus = n;
    c.kind = ClusterKind::spatial;
    c.members = t.neighbors(n);
    c.members.push_back(n);
    std::sort(c.members.begin(), c.members.end());
    return c;
}

std::vector<Cluster> maximal_nucleus_clusters(const Tessellation& t) {
    std::vector<Cluster> all;
    all.reserve(t.cells.size());
    std::size_t max_degree = 0;
    for (const Cell& cell : t.cells) {
        all.push_back(nucleus_cluster(t, cell.site));
        max_degree = std::max(max_degree, all.back().degree());
    }
    std::vector<Cluster> maximal;
    for (Cluster& c : all)
        if (c.degree() == max_degree)
            maximal.push_back(std::move(c));
    return maximal;
}

Cluster descriptive_nucleus_cluster(const Tessellation& t, int n,
                                    const DescriptorSpec& spec) {
    const Cell& nucleus = t.cell(n);
    const FeatureVector fn = describe_cell(nucleus);
    Cluster c;
    c.nucleus = n;
    c.kind = ClusterKind::descriptive;
    for (const Cell& cell : t.cells) {
        if (cell.site == n || features_match(describe_cell(cell), fn, spec))
            c.members.push_back(cell.site);
    }
    std::sort(c.members.begin(), c.members.end());
    return c;
}

std::vector<Cluster> maximal_descriptive_clusters(const Tessellation& t,
                                                  const DescriptorSpec& spec) {
    std::vector<Cluster> all;
    all.reserve(t.cells.size());
    std::size_t max_degree = 0;
    for (const Cell& cell : t.cells) {
        all.push_back(descriptive_nucleus_cluster(t, cell.site, spec));
        max_degree = std::max(max_degree, all.back().degree());
    }
    std::vector<Cluster> maximal;
    for (Cluster& c : all)
        if (c.degree() == max_degree)
            maximal.push_back(std::move(c));
    return maximal;
}

} // namespace proxinerve
