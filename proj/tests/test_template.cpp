#include "doctest.h"

#include "origami/origami_template.hpp"

using namespace origami;

namespace {

Halfspace hs(std::vector<long> normal, long offset) {
    std::vector<Int> n(normal.begin(), normal.end());
    return Halfspace{std::move(n), Rat(offset)};
}

DelzantPolytope unit_square() {
    // facets: 0 left, 1 bottom, 2 right, 3 top
    return DelzantPolytope::build({hs({-1, 0}, 0), hs({0, -1}, 0), hs({1, 0}, 1), hs({0, 1}, 1)});
}

DelzantPolytope unit_triangle() {
    return DelzantPolytope::build({hs({-1, 0}, 0), hs({0, -1}, 0), hs({1, 1}, 1)});
}

DelzantPolytope truncated_cube() {
    return DelzantPolytope::build({hs({-1, -1, -1}, -1), hs({1, 0, 0}, 2), hs({-1, 0, 0}, 0),
                                   hs({0, 1, 0}, 2), hs({0, -1, 0}, 0), hs({0, 0, 1}, 2),
                                   hs({0, 0, -1}, 0)});
}

// two identical squares glued along both vertical facets
RawTemplate two_squares_template() {
    RawTemplate raw;
    raw.dimension = 2;
    raw.polytopes.emplace_back("a", unit_square());
    raw.polytopes.emplace_back("b", unit_square());
    raw.edges.push_back({"left", {{"a", 0}, {"b", 0}}});
    raw.edges.push_back({"right", {{"a", 2}, {"b", 2}}});
    return raw;
}

TemplateIssueKind first_issue(const RawTemplate& raw) {
    ValidationResult res = validate_template(raw);
    REQUIRE_FALSE(res.report.ok());
    return res.report.issues.front().kind;
}

}  // namespace

TEST_CASE("two glued squares validate") {
    ValidationResult res = validate_template(two_squares_template());
    REQUIRE(res.report.ok());
    REQUIRE(res.tmpl.has_value());
    const OrigamiTemplate& t = *res.tmpl;

    GraphStats s = graph_stats(t);
    CHECK(s.vertex_count == 2);
    CHECK(s.edge_count == 2);
    CHECK(s.cycle_rank == 1);
    CHECK_FALSE(s.acyclic);
    CHECK(s.bipartite);
    CHECK(s.dangling_count == 0);

    OrbitSummary orbit = orbit_space_summary(t);
    REQUIRE(orbit.classes.size() == 2);
    for (const OrbitFacetClass& c : orbit.classes) {
        CHECK(c.members.size() == 2);
        CHECK((c.halfspace == hs({0, -1}, 0) || c.halfspace == hs({0, 1}, 1)));
    }
    CHECK(orbit.fixed_point_count == 0);
    CHECK(orbit.normal_matrix.cols() == 2);
}

TEST_CASE("single triangle with no edges validates") {
    RawTemplate raw;
    raw.dimension = 2;
    raw.polytopes.emplace_back("p", unit_triangle());
    ValidationResult res = validate_template(raw);
    REQUIRE(res.report.ok());
    GraphStats s = graph_stats(*res.tmpl);
    CHECK(s.cycle_rank == 0);
    CHECK(s.acyclic);
    OrbitSummary orbit = orbit_space_summary(*res.tmpl);
    CHECK(orbit.classes.size() == 3);
    CHECK(orbit.fixed_point_count == 3);
    CHECK(rational_rank(orbit.normal_matrix) == 2);
}

TEST_CASE("disagreement near the shared facet is caught") {
    // [0,1]^2 against [-1,0]x[0,2], both with a facet on the line x = 0
    DelzantPolytope other = DelzantPolytope::build(
        {hs({1, 0}, 0), hs({0, -1}, 0), hs({-1, 0}, 1), hs({0, 1}, 2)});
    RawTemplate raw;
    raw.dimension = 2;
    raw.polytopes.emplace_back("a", unit_square());
    raw.polytopes.emplace_back("b", other);
    raw.edges.push_back({"e", {{"a", 0}, {"b", 0}}});
    CHECK(first_issue(raw) == TemplateIssueKind::LocalDisagreement);
}

TEST_CASE("facets on different hyperplanes are a mismatch") {
    RawTemplate raw = two_squares_template();
    raw.edges[1] = {"right", {{"a", 2}, {"b", 3}}};  // x = 1 against y = 1
    CHECK(first_issue(raw) == TemplateIssueKind::FacetMismatch);
}

TEST_CASE("loop edges are rejected") {
    RawTemplate raw;
    raw.dimension = 2;
    raw.polytopes.emplace_back("a", unit_square());
    raw.edges.push_back({"e", {{"a", 0}, {"a", 2}}});
    CHECK(first_issue(raw) == TemplateIssueKind::LoopEdge);
}

TEST_CASE("intersecting fold facets are rejected") {
    RawTemplate raw = two_squares_template();
    raw.edges[1] = {"bottom", {{"a", 1}, {"b", 1}}};  // left and bottom share a corner
    CHECK(first_issue(raw) == TemplateIssueKind::FoldFacetsIntersect);
}

TEST_CASE("one facet cannot serve two edges") {
    RawTemplate raw = two_squares_template();
    raw.edges.push_back({"again", {{"a", 0}, {"b", 0}}});
    CHECK(first_issue(raw) == TemplateIssueKind::FacetReused);
}

TEST_CASE("disconnected templates are rejected") {
    RawTemplate raw;
    raw.dimension = 2;
    raw.polytopes.emplace_back("a", unit_triangle());
    raw.polytopes.emplace_back("b", unit_triangle());
    CHECK(first_issue(raw) == TemplateIssueKind::Disconnected);
}

TEST_CASE("bad references are reported") {
    RawTemplate raw = two_squares_template();
    raw.edges.push_back({"x", {{"zzz", 0}, {"b", 1}}});
    CHECK(first_issue(raw) == TemplateIssueKind::BadReference);
    RawTemplate raw2 = two_squares_template();
    raw2.edges[0] = {"left", {{"a", 9}, {"b", 0}}};
    CHECK(first_issue(raw2) == TemplateIssueKind::BadReference);
}

TEST_CASE("dangling edges are recorded but excluded from the cycle count") {
    RawTemplate raw;
    raw.dimension = 2;
    raw.polytopes.emplace_back("a", unit_square());
    raw.edges.push_back({"boundary", {{"a", 0}}});
    ValidationResult res = validate_template(raw);
    REQUIRE(res.report.ok());
    GraphStats s = graph_stats(*res.tmpl);
    CHECK(s.edge_count == 0);
    CHECK(s.dangling_count == 1);
    CHECK(s.acyclic);
    // the dangling facet is a fold facet for the orbit space
    OrbitSummary orbit = orbit_space_summary(*res.tmpl);
    CHECK(orbit.classes.size() == 3);
    CHECK(orbit.fixed_point_count == 2);  // the two vertices off the left facet
}

TEST_CASE("dangling facets participate in fold disjointness") {
    RawTemplate raw;
    raw.dimension = 2;
    raw.polytopes.emplace_back("a", unit_square());
    raw.edges.push_back({"b1", {{"a", 0}}});
    raw.edges.push_back({"b2", {{"a", 1}}});
    CHECK(first_issue(raw) == TemplateIssueKind::FoldFacetsIntersect);
}

TEST_CASE("path of three squares is a tree") {
    RawTemplate raw;
    raw.dimension = 2;
    for (const char* id : {"a", "b", "c"}) raw.polytopes.emplace_back(id, unit_square());
    raw.edges.push_back({"e1", {{"a", 2}, {"b", 2}}});
    raw.edges.push_back({"e2", {{"b", 0}, {"c", 0}}});
    ValidationResult res = validate_template(raw);
    REQUIRE(res.report.ok());
    GraphStats s = graph_stats(*res.tmpl);
    CHECK(s.vertex_count == 3);
    CHECK(s.edge_count == 2);
    CHECK(s.cycle_rank == 0);
    CHECK(s.acyclic);
    CHECK(s.bipartite);
}

TEST_CASE("two truncated cubes glued along both special facets") {
    RawTemplate raw;
    raw.dimension = 3;
    raw.polytopes.emplace_back("a", truncated_cube());
    raw.polytopes.emplace_back("b", truncated_cube());
    raw.edges.push_back({"cut", {{"a", 0}, {"b", 0}}});
    raw.edges.push_back({"far", {{"a", 1}, {"b", 1}}});
    ValidationResult res = validate_template(raw);
    REQUIRE(res.report.ok());
    GraphStats s = graph_stats(*res.tmpl);
    CHECK(s.cycle_rank == 1);
    CHECK(s.bipartite);
    OrbitSummary orbit = orbit_space_summary(*res.tmpl);
    // 10 vertices per copy, 3 on the cut facet and 4 on the far square
    CHECK(orbit.fixed_point_count == 6);
    CHECK(rational_rank(orbit.normal_matrix) == 3);
}
