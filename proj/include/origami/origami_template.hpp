#pragma once

#include <optional>
#include <string>
#include <vector>

#include "origami/polytope.hpp"

namespace origami {

// Raw (unvalidated) template data as it comes from a file: polytopes keyed by
// id and edges referencing (polytope id, facet index) pairs.  An edge with a
// single end is dangling and marks a boundary component.
struct EdgeEndRef {
    std::string polytope;
    std::size_t facet = 0;
};

struct RawEdge {
    std::string id;
    std::vector<EdgeEndRef> ends;  // one or two entries
};

struct RawTemplate {
    std::size_t dimension = 0;
    std::vector<std::pair<std::string, DelzantPolytope>> polytopes;
    std::vector<RawEdge> edges;
};

enum class TemplateIssueKind {
    FacetMismatch,       // endpoint facets lie on different hyperplanes
    LocalDisagreement,   // shared hyperplane but the polytopes differ near it
    FoldFacetsIntersect, // two fold facets of one polytope share a vertex
    Disconnected,
    LoopEdge,
    FacetReused,         // one facet serves two edges
    BadReference,        // unknown id, facet out of range, malformed edge
};

std::string to_string(TemplateIssueKind kind);

struct TemplateIssue {
    TemplateIssueKind kind;
    std::string edge_id;    // when tied to an edge
    std::string vertex_id;  // when tied to a polytope
    std::size_t facet = 0;
    std::size_t other_facet = 0;
    std::string message;
};

struct ValidationReport {
    std::vector<TemplateIssue> issues;
    bool ok() const { return issues.empty(); }
};

// Validated template: indices instead of ids, every check passed.
struct TemplateEnd {
    std::size_t vertex = 0;
    std::size_t facet = 0;
    bool operator==(const TemplateEnd&) const = default;
};

struct TemplateEdge {
    std::string id;
    std::vector<TemplateEnd> ends;
    bool dangling() const { return ends.size() == 1; }
};

struct OrigamiTemplate {
    std::size_t dim = 0;
    std::vector<std::string> vertex_ids;
    std::vector<DelzantPolytope> polytopes;
    std::vector<TemplateEdge> edges;

    std::size_t vertex_count() const { return polytopes.size(); }
    std::optional<std::size_t> vertex_index(const std::string& id) const;
    /// Facet indices of this polytope used by incident edges, dangling included.
    std::vector<std::size_t> fold_facets(std::size_t vertex) const;
};

struct ValidationResult {
    std::optional<OrigamiTemplate> tmpl;  // present iff report.ok()
    ValidationReport report;
};

/// All checks: references resolve, no loops, each ordinary edge glues two
/// polytopes that agree near the shared facet, fold facets per polytope are
/// pairwise disjoint, one edge per facet, graph connected.
ValidationResult validate_template(const RawTemplate& raw);

struct GraphStats {
    std::size_t vertex_count = 0;    // L
    std::size_t edge_count = 0;      // R, ordinary edges only
    std::size_t cycle_rank = 0;      // 1 + R - L
    std::size_t dangling_count = 0;
    bool acyclic = false;
    bool bipartite = false;          // orientability of the manifold
};

GraphStats graph_stats(const OrigamiTemplate& t);

// Facets of the orbit space: classes of non-fold polytope facets glued across
// edges.  Facets in one class carry identical half-space data.
struct OrbitFacetClass {
    Halfspace halfspace;
    std::vector<TemplateEnd> members;
};

struct OrbitSummary {
    std::vector<OrbitFacetClass> classes;
    IntMatrix normal_matrix;         // one column per class
    std::size_t fixed_point_count = 0;  // polytope vertices off all fold facets
};

OrbitSummary orbit_space_summary(const OrigamiTemplate& t);

}  // namespace origami
