#include "proxinerve/nerve.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "proxinerve/errors.hpp"

namespace proxinerve {

namespace {

constexpr std::size_t kSubsetCapBits = 20;

std::vector<ConvexPolygon> member_polygons(const Tessellation& t,
                                           const std::vector<int>& ids) {
    std::vector<ConvexPolygon> polys;
    polys.reserve(ids.size());
    for (int id : ids)
        polys.push_back(t.cell(id).polygon);
    return polys;
}

RegionSet spoke_wedge(const Spoke& s, const Tessellation& t) {
    RegionSet w = RegionSet::from_cells(t, {s.arm, s.nucleus});
    return w;
}

/** Vertices of all member polygons merged at eps_edge; the union's CW
    complex.  Voronoi meshes have no T-junctions: an edge of one cell is an
    edge of at most one other, so vertex-id pairs identify edges. */
struct UnionComplex {
    std::vector<Point> vertices;
    std::map<std::pair<int, int>, int> edge_multiplicity;
    std::size_t faces = 0;

    int vertex_id(Point p, double merge_eps) {
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (distance(vertices[i], p) <= merge_eps)
                return static_cast<int>(i);
        vertices.push_back(p);
        return static_cast<int>(vertices.size() - 1);
    }
};

UnionComplex build_union_complex(const std::vector<ConvexPolygon>& polys,
                                 const Tolerances& tol) {
    UnionComplex uc;
    uc.faces = polys.size();
    for (const ConvexPolygon& poly : polys) {
        for (std::size_t i = 0; i < poly.size(); ++i) {
            const Segment e = poly.edge(i);
            int u = uc.vertex_id(e.a, tol.eps_edge);
            int v = uc.vertex_id(e.b, tol.eps_edge);
            if (u == v)
                continue;
            if (u > v)
                std::swap(u, v);
            ++uc.edge_multiplicity[{u, v}];
        }
    }
    return uc;
}

std::size_t count_components(int n_vertices,
                             const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> parent(static_cast<std::size_t>(n_vertices));
    for (int i = 0; i < n_vertices; ++i)
        parent[static_cast<std::size_t>(i)] = i;
    const auto find = [&parent](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    std::set<int> used;
    for (const auto& [u, v] : edges) {
        used.insert(u);
        used.insert(v);
        const int ru = find(u), rv = find(v);
        if (ru != rv)
            parent[static_cast<std::size_t>(ru)] = rv;
    }
    std::set<int> roots;
    for (int v : used)
        roots.insert(find(v));
    return roots.size();
}

} // namespace

std::size_t SimplicialComplex::count_of_dimension(std::size_t dim) const {
    std::size_t n = 0;
    for (const auto& s : simplices)
        if (s.size() == dim + 1)
            ++n;
    return n;
}

long long SimplicialComplex::euler_characteristic() const {
    long long chi = 0;
    for (const auto& s : simplices)
        chi += (s.size() % 2 == 1) ? 1 : -1;
    return chi;
}

bool SimplicialComplex::has_simplex(const std::vector<int>& sorted_ids) const {
    for (const auto& s : simplices)
        if (s == sorted_ids)
            return true;
    return false;
}

bool SimplicialComplex::downward_closed() const {
    for (const auto& s : simplices) {
        if (s.size() == 1)
            continue;
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            std::vector<int> face;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != drop)
                    face.push_back(s[i]);
            if (!has_simplex(face))
                return false;
        }
    }
    return true;
}

bool SimplicialComplex::is_cone_over(int apex) const {
    for (const auto& s : simplices) {
        if (std::binary_search(s.begin(), s.end(), apex))
            continue;
        std::vector<int> extended = s;
        extended.insert(std::lower_bound(extended.begin(), extended.end(), apex),
                        apex);
        if (!has_simplex(extended))
            return false;
    }
    return true;
}

std::vector<Spoke> build_spokes(const Cluster& c, const Tessellation& t,
                                const Tolerances& tol) {
    if (c.kind != ClusterKind::spatial)
        throw DescriptiveClusterHasNoSpokes(
            "spokes need edge contact, which descriptive clusters lack");
    std::vector<Spoke> spokes;
    for (int arm : c.members) {
        if (arm == c.nucleus)
            continue;
        const auto e =
            shared_edge(t.cell(c.nucleus).polygon, t.cell(arm).polygon, tol);
        if (!e) {
            std::ostringstream msg;
            msg << "cluster member " << arm << " shares no edge with nucleus "
                << c.nucleus;
            throw InvalidPolygon(msg.str());
        }
        spokes.push_back({c.nucleus, arm, *e});
    }
    return spokes;
}

SimplicialComplex build_nerve_complex(const Cluster& c, const Tessellation& t,
                                      const Tolerances& tol) {
    if (c.members.size() > kSubsetCapBits)
        throw ClusterTooLarge("cluster has " + std::to_string(c.members.size()) +
                              " members; subset enumeration is capped at 2^20");

    SimplicialComplex k;
    k.vertices = c.members;

    const std::vector<ConvexPolygon> polys = member_polygons(t, c.members);
    const auto polys_of = [&](const std::vector<std::size_t>& idxs) {
        std::vector<ConvexPolygon> out;
        out.reserve(idxs.size());
        for (std::size_t i : idxs)
            out.push_back(polys[i]);
        return out;
    };

    // size-upward enumeration; a set can only meet jointly if every subset
    // one smaller does, so each level extends the previous level's survivors
    std::vector<std::vector<std::size_t>> level;
    for (std::size_t i = 0; i < c.members.size(); ++i) {
        level.push_back({i});
        k.simplices.push_back({c.members[i]});
    }
    while (!level.empty()) {
        std::set<std::vector<std::size_t>> candidates;
        for (const auto& s : level) {
            for (std::size_t next = s.back() + 1; next < c.members.size(); ++next) {
                auto cand = s;
                cand.push_back(next);
                candidates.insert(std::move(cand));
            }
        }
        std::vector<std::vector<std::size_t>> survivors;
        for (const auto& cand : candidates) {
            bool all_faces_alive = true;
            for (std::size_t drop = 0; drop + 1 < cand.size() && all_faces_alive;
                 ++drop) {
                std::vector<std::size_t> face;
                for (std::size_t i = 0; i < cand.size(); ++i)
                    if (i != drop)
                        face.push_back(cand[i]);
                all_faces_alive =
                    std::find(level.begin(), level.end(), face) != level.end();
            }
            if (!all_faces_alive)
                continue;
            if (!common_intersection(polys_of(cand), tol).empty()) {
                survivors.push_back(cand);
                std::vector<int> ids;
                for (std::size_t i : cand)
                    ids.push_back(c.members[i]);
                k.simplices.push_back(std::move(ids));
            }
        }
        level = std::move(survivors);
    }

    std::sort(k.simplices.begin(), k.simplices.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  if (a.size() != b.size())
                      return a.size() < b.size();
                  return a < b;
              });

    if (!k.downward_closed())
        throw std::logic_error("nerve complex lost downward closure");
    return k;
}

Nerve build_nerve(const Cluster& c, const Tessellation& t, const Tolerances& tol) {
    return {c, build_spokes(c, t, tol), build_nerve_complex(c, t, tol)};
}

ProximityVerdict verify_nerve_lemma(const Nerve& nv, const Tessellation& t,
                                    const Tolerances& tol) {
    const ConvexPolygon& nucleus = t.cell(nv.cluster.nucleus).polygon;

    // the joint intersection of the wedges arm ∪ N is N ∪ (joint arm
    // intersection); nonempty exactly when N survives inside every wedge
    std::vector<Point> samples = nucleus.vertices();
    samples.push_back(nucleus.centroid());
    for (const Spoke& s : nv.spokes) {
        const ConvexPolygon& arm = t.cell(s.arm).polygon;
        for (const Point& p : samples) {
            if (!nucleus.contains(p, tol) && !arm.contains(p, tol)) {
                std::ostringstream msg;
                msg << "nucleus point escapes the wedge of arm " << s.arm;
                return {"nerve_lemma", Truth::fails, {}, msg.str()};
            }
        }
    }

    Witness w;
    w.kind = Witness::Kind::polygon;
    w.polygon = nucleus.vertices();
    return {"nerve_lemma", Truth::holds, w,
            "the common intersection of the spoke wedges contains the nucleus"};
}

std::vector<ProximityVerdict> verify_spoke_theorem(const Nerve& nv,
                                                   const Tessellation& t,
                                                   const DescriptorSpec& spec,
                                                   const Tolerances& tol) {
    std::vector<ProximityVerdict> verdicts;
    const ProximityContext ctx{t.bbox, tol};
    for (std::size_t i = 0; i < nv.spokes.size(); ++i) {
        for (std::size_t j = i + 1; j < nv.spokes.size(); ++j) {
            const RegionSet a = spoke_wedge(nv.spokes[i], t);
            const RegionSet b = spoke_wedge(nv.spokes[j], t);
            std::ostringstream pair_name;
            pair_name << "spokes (" << nv.spokes[i].arm << ", " << nv.spokes[j].arm
                      << ") of nucleus " << nv.cluster.nucleus;

            const auto strong = strongly_near(a, b, ctx);
            if (!strong.holds()) {
                verdicts.push_back({"spoke_pair", Truth::fails, {},
                                    pair_name.str() + ": wedges not strongly near"});
                continue;
            }
            const auto spatial = near(a, b, ctx);
            const auto descriptive = descriptively_near(a, b, spec);
            if (spatial.holds() && descriptive.holds()) {
                verdicts.push_back({"spoke_pair", Truth::holds, strong.witness,
                                    pair_name.str() +
                                        ": strong contact entails nearness"});
            } else {
                verdicts.push_back({"spoke_pair", Truth::fails, {},
                                    pair_name.str() +
                                        ": strong contact without nearness"});
            }
        }
    }
    return verdicts;
}

HomotopyReport homotopy_type_proxy(const Nerve& nv, const Tessellation& t,
                                   const Tolerances& tol) {
    HomotopyReport r;
    r.complex_euler = nv.complex.euler_characteristic();
    r.cone_over_nucleus = nv.complex.is_cone_over(nv.cluster.nucleus);

    const std::vector<ConvexPolygon> polys =
        member_polygons(t, nv.cluster.members);
    const UnionComplex uc = build_union_complex(polys, tol);

    std::vector<std::pair<int, int>> all_edges, boundary_edges;
    for (const auto& [edge, mult] : uc.edge_multiplicity) {
        all_edges.push_back(edge);
        if (mult == 1)
            boundary_edges.push_back(edge);
    }

    r.union_euler = static_cast<long long>(uc.vertices.size()) -
                    static_cast<long long>(all_edges.size()) +
                    static_cast<long long>(uc.faces);
    r.union_connected =
        count_components(static_cast<int>(uc.vertices.size()), all_edges) == 1;
    r.boundary_loops =
        count_components(static_cast<int>(uc.vertices.size()), boundary_edges);
    return r;
}

ProximityVerdict verify_descriptive_nerve_theorem(const std::vector<Nerve>& nerves,
                                                  const Tessellation& t,
                                                  const DescriptorSpec& spec) {
    if (nerves.size() < 2)
        return {"descriptive_nerve_theorem", Truth::holds, {},
                "fewer than two nerves; nothing to intersect"};

    const std::size_t first_sides = t.cell(nerves[0].cluster.nucleus).polygon.size();
    for (const Nerve& nv : nerves) {
        const std::size_t sides = t.cell(nv.cluster.nucleus).polygon.size();
        if (sides != first_sides) {
            std::ostringstream msg;
            msg << "nuclei " << nerves[0].cluster.nucleus << " and "
                << nv.cluster.nucleus << " have side counts " << first_sides
                << " vs " << sides
                << "; the equal-side-count hypothesis does not apply";
            return {"descriptive_nerve_theorem", Truth::precondition_unmet, {},
                    msg.str()};
        }
    }

    std::vector<std::vector<FeatureVector>> families;
    for (const Nerve& nv : nerves) {
        std::vector<FeatureVector> family;
        for (int id : nv.cluster.members)
            family.push_back(describe_cell(t.cell(id)));
        families.push_back(std::move(family));
    }
    const auto idx = descriptive_intersection_all(families, spec);
    if (idx.empty())
        return {"descriptive_nerve_theorem", Truth::fails, {},
                "joint descriptive intersection across the nerves is empty"};

    Witness w;
    w.kind = Witness::Kind::feature_pair;
    w.index_a = static_cast<std::size_t>(nerves[0].cluster.nucleus);
    w.index_b = static_cast<std::size_t>(nerves[1].cluster.nucleus);
    const bool nuclei_match =
        features_match(describe_cell(t.cell(nerves[0].cluster.nucleus)),
                       describe_cell(t.cell(nerves[1].cluster.nucleus)), spec);
    std::ostringstream note;
    note << "joint descriptive intersection has " << idx.size() << " elements";
    if (nuclei_match)
        note << "; nuclei " << nerves[0].cluster.nucleus << " and "
             << nerves[1].cluster.nucleus << " match";
    return {"descriptive_nerve_theorem", Truth::holds, w, note.str()};
}

} // namespace proxinerve
