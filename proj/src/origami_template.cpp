#include "origami/origami_template.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace origami {

std::string to_string(TemplateIssueKind kind) {
    switch (kind) {
        case TemplateIssueKind::FacetMismatch: return "FacetMismatch";
        case TemplateIssueKind::LocalDisagreement: return "LocalDisagreement";
        case TemplateIssueKind::FoldFacetsIntersect: return "FoldFacetsIntersect";
        case TemplateIssueKind::Disconnected: return "Disconnected";
        case TemplateIssueKind::LoopEdge: return "LoopEdge";
        case TemplateIssueKind::FacetReused: return "FacetReused";
        case TemplateIssueKind::BadReference: return "BadReference";
    }
    return "?";
}

std::optional<std::size_t> OrigamiTemplate::vertex_index(const std::string& id) const {
    for (std::size_t i = 0; i < vertex_ids.size(); ++i)
        if (vertex_ids[i] == id) return i;
    return std::nullopt;
}

std::vector<std::size_t> OrigamiTemplate::fold_facets(std::size_t vertex) const {
    std::vector<std::size_t> out;
    for (const TemplateEdge& e : edges)
        for (const TemplateEnd& end : e.ends)
            if (end.vertex == vertex) out.push_back(end.facet);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// same hyperplane = equal (normal, offset) up to a simultaneous sign flip
bool same_hyperplane(const Halfspace& a, const Halfspace& b) {
    if (a == b) return true;
    if (a.offset != -b.offset) return false;
    for (std::size_t i = 0; i < a.normal.size(); ++i)
        if (a.normal[i] != -b.normal[i]) return false;
    return true;
}

}  // namespace

ValidationResult validate_template(const RawTemplate& raw) {
    ValidationResult res;
    ValidationReport& rep = res.report;

    OrigamiTemplate t;
    t.dim = raw.dimension;
    std::map<std::string, std::size_t> index;
    for (const auto& [id, poly] : raw.polytopes) {
        if (index.count(id)) {
            rep.issues.push_back({TemplateIssueKind::BadReference, "", id, 0, 0,
                                  "duplicate polytope id '" + id + "'"});
            continue;
        }
        if (poly.dim() != raw.dimension) {
            rep.issues.push_back({TemplateIssueKind::BadReference, "", id, 0, 0,
                                  "polytope '" + id + "' has the wrong dimension"});
            continue;
        }
        index[id] = t.polytopes.size();
        t.vertex_ids.push_back(id);
        t.polytopes.push_back(poly);
    }
    if (t.polytopes.empty())
        rep.issues.push_back(
            {TemplateIssueKind::BadReference, "", "", 0, 0, "template has no polytopes"});

    std::set<std::string> edge_ids;
    for (const RawEdge& re : raw.edges) {
        if (!edge_ids.insert(re.id).second) {
            rep.issues.push_back({TemplateIssueKind::BadReference, re.id, "", 0, 0,
                                  "duplicate edge id '" + re.id + "'"});
            continue;
        }
        if (re.ends.empty() || re.ends.size() > 2) {
            rep.issues.push_back({TemplateIssueKind::BadReference, re.id, "", 0, 0,
                                  "edge must have one or two ends"});
            continue;
        }
        TemplateEdge edge{re.id, {}};
        bool ok = true;
        for (const EdgeEndRef& ref : re.ends) {
            auto it = index.find(ref.polytope);
            if (it == index.end()) {
                rep.issues.push_back({TemplateIssueKind::BadReference, re.id, ref.polytope, 0, 0,
                                      "edge references unknown polytope '" + ref.polytope + "'"});
                ok = false;
                continue;
            }
            if (ref.facet >= t.polytopes[it->second].facet_count()) {
                rep.issues.push_back({TemplateIssueKind::BadReference, re.id, ref.polytope,
                                      ref.facet, 0, "facet index out of range"});
                ok = false;
                continue;
            }
            edge.ends.push_back(TemplateEnd{it->second, ref.facet});
        }
        if (!ok) continue;

        if (edge.ends.size() == 2 && edge.ends[0].vertex == edge.ends[1].vertex) {
            // Both ends at one polytope: rejected whether or not the facets
            // coincide (a self-gluing cannot be coöriented consistently here).
            rep.issues.push_back({TemplateIssueKind::LoopEdge, re.id,
                                  t.vertex_ids[edge.ends[0].vertex], edge.ends[0].facet,
                                  edge.ends[1].facet, "edge has both ends on one polytope"});
            continue;
        }
        if (edge.ends.size() == 2) {
            const DelzantPolytope& pu = t.polytopes[edge.ends[0].vertex];
            const DelzantPolytope& pv = t.polytopes[edge.ends[1].vertex];
            const Halfspace& hu = pu.facet(edge.ends[0].facet);
            const Halfspace& hv = pv.facet(edge.ends[1].facet);
            if (!same_hyperplane(hu, hv)) {
                rep.issues.push_back({TemplateIssueKind::FacetMismatch, re.id, "",
                                      edge.ends[0].facet, edge.ends[1].facet,
                                      "endpoint facets lie on different hyperplanes"});
                continue;
            }
            if (hu != hv || pu.local_fan_at_facet(edge.ends[0].facet) !=
                                pv.local_fan_at_facet(edge.ends[1].facet)) {
                rep.issues.push_back({TemplateIssueKind::LocalDisagreement, re.id, "",
                                      edge.ends[0].facet, edge.ends[1].facet,
                                      "polytopes do not agree near the shared facet"});
                continue;
            }
        }
        t.edges.push_back(std::move(edge));
    }

    // one facet serves at most one edge; fold facets pairwise disjoint
    for (std::size_t v = 0; v < t.vertex_count(); ++v) {
        std::vector<std::pair<std::size_t, std::string>> used;  // (facet, edge id)
        for (const TemplateEdge& e : t.edges)
            for (const TemplateEnd& end : e.ends)
                if (end.vertex == v) used.emplace_back(end.facet, e.id);
        for (std::size_t a = 0; a < used.size(); ++a)
            for (std::size_t b = a + 1; b < used.size(); ++b) {
                if (used[a].first == used[b].first) {
                    rep.issues.push_back({TemplateIssueKind::FacetReused, used[b].second,
                                          t.vertex_ids[v], used[a].first, 0,
                                          "facet already serves edge '" + used[a].second + "'"});
                } else if (!t.polytopes[v].facets_disjoint(used[a].first, used[b].first)) {
                    rep.issues.push_back({TemplateIssueKind::FoldFacetsIntersect, used[a].second,
                                          t.vertex_ids[v], used[a].first, used[b].first,
                                          "fold facets share a vertex (edges '" + used[a].second +
                                              "', '" + used[b].second + "')"});
                }
            }
    }

    // connectivity over ordinary edges
    if (!t.polytopes.empty()) {
        std::vector<char> seen(t.vertex_count(), 0);
        std::vector<std::size_t> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (const TemplateEdge& e : t.edges) {
                if (e.dangling()) continue;
                for (int side : {0, 1})
                    if (e.ends[side].vertex == v && !seen[e.ends[1 - side].vertex]) {
                        seen[e.ends[1 - side].vertex] = 1;
                        stack.push_back(e.ends[1 - side].vertex);
                    }
            }
        }
        for (std::size_t v = 0; v < t.vertex_count(); ++v)
            if (!seen[v]) {
                rep.issues.push_back({TemplateIssueKind::Disconnected, "", t.vertex_ids[v], 0, 0,
                                      "polytope '" + t.vertex_ids[v] +
                                          "' is not connected to the rest of the template"});
                break;
            }
    }

    if (rep.ok()) res.tmpl = std::move(t);
    return res;
}

GraphStats graph_stats(const OrigamiTemplate& t) {
    GraphStats s;
    s.vertex_count = t.vertex_count();
    for (const TemplateEdge& e : t.edges)
        (e.dangling() ? s.dangling_count : s.edge_count) += 1;
    s.cycle_rank = 1 + s.edge_count - s.vertex_count;  // connected by validation
    s.acyclic = s.cycle_rank == 0;

    // bipartite = 2-colorable over ordinary edges
    std::vector<int> color(t.vertex_count(), -1);
    s.bipartite = true;
    std::vector<std::size_t> stack{0};
    if (!color.empty()) color[0] = 0;
    while (!stack.empty() && s.bipartite) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (const TemplateEdge& e : t.edges) {
            if (e.dangling()) continue;
            for (int side : {0, 1}) {
                if (e.ends[side].vertex != v) continue;
                std::size_t w = e.ends[1 - side].vertex;
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    s.bipartite = false;
                }
            }
        }
    }
    return s;
}

OrbitSummary orbit_space_summary(const OrigamiTemplate& t) {
    // union-find over (vertex, facet) pairs of non-fold facets
    std::vector<std::vector<char>> is_fold(t.vertex_count());
    for (std::size_t v = 0; v < t.vertex_count(); ++v)
        is_fold[v].assign(t.polytopes[v].facet_count(), 0);
    for (const TemplateEdge& e : t.edges)
        for (const TemplateEnd& end : e.ends) is_fold[end.vertex][end.facet] = 1;

    std::vector<TemplateEnd> nodes;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> node_of;
    for (std::size_t v = 0; v < t.vertex_count(); ++v)
        for (std::size_t f = 0; f < t.polytopes[v].facet_count(); ++f)
            if (!is_fold[v][f]) {
                node_of[{v, f}] = nodes.size();
                nodes.push_back(TemplateEnd{v, f});
            }
    std::vector<std::size_t> parent(nodes.size());
    std::iota(parent.begin(), parent.end(), std::size_t(0));
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    // Across each ordinary edge, a non-fold facet adjacent to the fold on one
    // side continues into the facet with the same half-space data adjacent to
    // the fold on the other side.
    for (const TemplateEdge& e : t.edges) {
        if (e.dangling()) continue;
        std::size_t u = e.ends[0].vertex, v = e.ends[1].vertex;
        for (std::size_t a : t.polytopes[u].adjacent_facets(e.ends[0].facet)) {
            if (is_fold[u][a]) continue;
            for (std::size_t b : t.polytopes[v].adjacent_facets(e.ends[1].facet)) {
                if (is_fold[v][b]) continue;
                if (t.polytopes[u].facet(a) == t.polytopes[v].facet(b)) {
                    std::size_t x = find(node_of[{u, a}]), y = find(node_of[{v, b}]);
                    if (x != y) parent[x] = y;
                }
            }
        }
    }

    OrbitSummary out;
    std::map<std::size_t, std::size_t> class_of;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        std::size_t root = find(i);
        auto it = class_of.find(root);
        if (it == class_of.end()) {
            class_of[root] = out.classes.size();
            out.classes.push_back(
                OrbitFacetClass{t.polytopes[nodes[i].vertex].facet(nodes[i].facet), {nodes[i]}});
        } else {
            out.classes[it->second].members.push_back(nodes[i]);
        }
    }
    out.normal_matrix = IntMatrix(t.dim, out.classes.size());
    for (std::size_t c = 0; c < out.classes.size(); ++c)
        for (std::size_t r = 0; r < t.dim; ++r)
            out.normal_matrix.at(r, c) = out.classes[c].halfspace.normal[r];

    for (std::size_t v = 0; v < t.vertex_count(); ++v) {
        const DelzantPolytope& p = t.polytopes[v];
        for (std::size_t vert = 0; vert < p.vertices().size(); ++vert) {
            bool interior = true;
            for (std::size_t f : p.vertex_facets(vert))
                if (is_fold[v][f]) interior = false;
            if (interior) ++out.fixed_point_count;
        }
    }
    return out;
}

}  // namespace origami
