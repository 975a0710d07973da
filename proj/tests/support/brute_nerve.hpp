#ifndef PROXINERVE_TESTS_BRUTE_NERVE_HPP
#define PROXINERVE_TESTS_BRUTE_NERVE_HPP

#include <algorithm>
#include <set>
#include <vector>

#include "proxinerve/clusters.hpp"
#include "proxinerve/geometry.hpp"
#include "proxinerve/rng.hpp"
#include "proxinerve/voronoi.hpp"

namespace proxinerve::testing {

/**
 * Independent nerve enumeration: every nonempty member subset, tested by
 * common_intersection with the polygon order shuffled, no pruning.
 */
inline std::set<std::vector<int>> brute_nerve_simplices(const Cluster& c,
                                                        const Tessellation& t,
                                                        Rng& rng) {
    std::set<std::vector<int>> simplices;
    const std::size_t m = c.members.size();
    for (std::size_t mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> ids;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (1u << i))
                ids.push_back(c.members[i]);

        std::vector<ConvexPolygon> polys;
        for (int id : ids)
            polys.push_back(t.cell(id).polygon);
        for (std::size_t i = polys.size(); i > 1; --i)
            std::swap(polys[i - 1], polys[rng.below(i)]);

        if (!common_intersection(polys).empty())
            simplices.insert(ids);
    }
    return simplices;
}

} // namespace proxinerve::testing

#endif
