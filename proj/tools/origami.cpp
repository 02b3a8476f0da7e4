#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "origami/betti.hpp"
#include "origami/io.hpp"

using namespace origami;
using nlohmann::json;

namespace {

std::string polytope_error_name(PolytopeErrorKind k) {
    switch (k) {
        case PolytopeErrorKind::Unbounded: return "Unbounded";
        case PolytopeErrorKind::Empty: return "Empty";
        case PolytopeErrorKind::NotFullDimensional: return "NotFullDimensional";
        case PolytopeErrorKind::NotSimple: return "NotSimple";
        case PolytopeErrorKind::NotSmooth: return "NotSmooth";
        case PolytopeErrorKind::RedundantHalfspace: return "RedundantHalfspace";
        case PolytopeErrorKind::NonPrimitiveNormal: return "NonPrimitiveNormal";
        case PolytopeErrorKind::BadInput: return "BadInput";
        case PolytopeErrorKind::InvalidFacet: return "InvalidFacet";
    }
    return "?";
}

std::string group_description(const Pi1Descriptor& pi1) {
    std::vector<std::string> parts;
    if (!pi1.cyclic_part.is_trivial()) parts.push_back(to_string(pi1.cyclic_part));
    if (pi1.free_rank == 1) parts.push_back("Z");
    else if (pi1.free_rank > 1) parts.push_back("F_" + std::to_string(pi1.free_rank));
    if (parts.empty()) return "1";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += " x " + parts[i];
    return out;
}

json torsion_json(const std::vector<Int>& factors) {
    json out = json::array();
    for (const Int& k : factors) out.push_back(k.get_str());
    return out;
}

json issues_json(const ValidationReport& report) {
    json issues = json::array();
    for (const TemplateIssue& i : report.issues)
        issues.push_back({{"kind", to_string(i.kind)},
                          {"edge", i.edge_id},
                          {"polytope", i.vertex_id},
                          {"facet", i.facet},
                          {"other_facet", i.other_facet},
                          {"message", i.message}});
    return issues;
}

struct Output {
    std::string path;  // empty = stdout
    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(path);
        if (!out) throw IoError("cannot write '" + path + "'");
        out << text;
    }
};

int cmd_validate(const TemplateFile& file, const ValidationResult& vr, bool as_json,
                 const Output& out) {
    if (as_json) {
        json j{{"ok", vr.report.ok()},
               {"dimension", file.raw.dimension},
               {"polytopes", file.raw.polytopes.size()},
               {"edges", file.raw.edges.size()},
               {"issues", issues_json(vr.report)}};
        out.write(j.dump(2) + "\n");
    } else {
        std::ostringstream s;
        s << (vr.report.ok() ? "valid" : "invalid") << " template: "
          << file.raw.polytopes.size() << " polytope(s), " << file.raw.edges.size()
          << " edge(s), dimension " << file.raw.dimension << "\n";
        for (const TemplateIssue& i : vr.report.issues)
            s << "  " << to_string(i.kind) << ": " << i.message << "\n";
        out.write(s.str());
    }
    return vr.report.ok() ? 0 : 1;
}

int cmd_invariants(const TemplateFile& file, const OrigamiTemplate& t, bool as_json,
                   const Output& out) {
    GraphStats g = graph_stats(t);
    AbelianGroup nx = lattice_quotient_NX(t);
    Pi1Descriptor pi1 = fundamental_group(t);  // may throw on boundary with cycles
    AbelianGroup h1 = first_homology(t);
    PrismaticInfo pr = detect_prismatic(t);
    OrbitSummary orbit = orbit_space_summary(t);
    bool closed = g.dangling_count == 0;

    if (as_json) {
        json j{{"dimension", t.dim},
               {"manifold_dimension", 2 * t.dim},
               {"graph",
                {{"polytopes", g.vertex_count},
                 {"fold_edges", g.edge_count},
                 {"cycle_rank", g.cycle_rank},
                 {"dangling", g.dangling_count},
                 {"acyclic", g.acyclic},
                 {"bipartite", g.bipartite}}},
               {"lattice_quotient", to_string(nx)},
               {"fundamental_group",
                {{"description", group_description(pi1)},
                 {"cyclic_part", to_string(pi1.cyclic_part)},
                 {"free_rank", pi1.free_rank}}},
               {"first_homology",
                {{"free_rank", h1.free_rank}, {"torsion", torsion_json(h1.invariant_factors)}}},
               {"simply_connected", pi1.trivial()},
               {"orientable", g.bipartite},
               {"prismatic", pr.prismatic},
               {"fixed_points", orbit.fixed_point_count}};
        if (pr.prismatic) {
            json h = json::array();
            for (std::size_t x : pr.fiber->h_vector()) h.push_back(x);
            j["fiber"] = {{"dimension", pr.fiber->dim()},
                          {"facets", pr.fiber->facet_count()},
                          {"h_vector", std::move(h)}};
        }
        if (closed) j["euler_characteristic"] = euler_characteristic(t);
        if (!file.notes.empty()) j["notes"] = file.notes;
        out.write(j.dump(2) + "\n");
    } else {
        std::ostringstream s;
        s << "manifold dimension: " << 2 * t.dim << (closed ? "" : " (with boundary)") << "\n";
        s << "graph: " << g.vertex_count << " polytope(s), " << g.edge_count
          << " fold edge(s), cycle rank " << g.cycle_rank;
        if (g.dangling_count) s << ", " << g.dangling_count << " dangling";
        s << "\n";
        s << "lattice quotient: " << to_string(nx) << "\n";
        s << "fundamental group: " << group_description(pi1)
          << (pi1.trivial() ? " (simply connected)" : "") << "\n";
        s << "first homology: " << to_string(h1) << "\n";
        s << "orientable: " << (g.bipartite ? "yes" : "no") << "\n";
        s << "prismatic: " << (pr.prismatic ? "yes" : "no") << "\n";
        if (closed) s << "euler characteristic: " << euler_characteristic(t) << "\n";
        if (!file.notes.empty()) s << "notes: " << file.notes << "\n";
        out.write(s.str());
    }
    return 0;
}

int cmd_betti(const TemplateFile& file, const OrigamiTemplate& t, bool as_json,
              const Output& out) {
    BettiReport r = solve_betti(t);
    if (as_json) {
        json betti = json::array();
        for (const auto& b : r.betti)
            betti.push_back(b ? json(*b) : json(nullptr));
        json residual = json::array();
        for (const BettiRelation& rel : r.residual) {
            json coeffs = json::array();
            for (const Int& c : rel.coeffs) coeffs.push_back(c.get_si());
            residual.push_back({{"coefficients", std::move(coeffs)}, {"value", rel.value.get_si()}});
        }
        json j{{"dimension", t.dim},
               {"manifold_dimension", r.dim},
               {"method", to_string(r.method)},
               {"betti", std::move(betti)},
               {"torsion_h2", torsion_json(r.torsion_h2)},
               {"residual_relations", std::move(residual)},
               {"euler_characteristic", euler_characteristic(t)}};
        if (!file.notes.empty()) j["notes"] = file.notes;
        out.write(j.dump(2) + "\n");
    } else {
        std::ostringstream s;
        s << "method: " << to_string(r.method) << "\n";
        s << "betti:";
        for (const auto& b : r.betti) {
            if (b) s << " " << *b;
            else s << " ?";
        }
        s << "\n";
        if (!r.torsion_h2.empty()) {
            s << "torsion in H^2:";
            for (const Int& k : r.torsion_h2) s << " Z/" << k.get_str();
            s << "\n";
        }
        for (const BettiRelation& rel : r.residual) {
            s << "relation:";
            bool lead = true;
            for (std::size_t k = 0; k < rel.coeffs.size(); ++k) {
                if (rel.coeffs[k] == 0) continue;
                Int c = rel.coeffs[k];
                s << " " << (c < 0 ? "- " : (lead ? "" : "+ "));
                if (abs(c) != 1) s << Int(abs(c)).get_str() << "*";
                s << "b" << k;
                lead = false;
            }
            s << " = " << rel.value.get_str() << "\n";
        }
        s << "euler characteristic: " << euler_characteristic(t) << "\n";
        if (!file.notes.empty()) s << "notes: " << file.notes << "\n";
        out.write(s.str());
    }
    return 0;
}

int cmd_cutpieces(const TemplateFile& file, const OrigamiTemplate& t, bool as_json,
                  const Output& out) {
    json pieces = json::array();
    std::ostringstream text;
    for (std::size_t i = 0; i < t.vertex_count(); ++i) {
        const DelzantPolytope& p = t.polytopes[i];
        std::vector<std::size_t> folds = t.fold_facets(i);
        json toric = json::array();
        for (std::size_t k = 0; k <= 2 * t.dim; ++k)
            toric.push_back(k % 2 ? 0 : p.h_vector()[k / 2]);
        json piece{{"polytope", t.vertex_ids[i]},
                   {"fold_facets", folds},
                   {"toric_betti", std::move(toric)}};
        text << "piece " << t.vertex_ids[i] << ": h-vector (";
        for (std::size_t k = 0; k <= t.dim; ++k)
            text << (k ? "," : "") << p.h_vector()[k];
        text << ")";
        if (!folds.empty()) {
            ComplementCohomology c =
                complement_cohomology(p, std::set<std::size_t>(folds.begin(), folds.end()));
            json groups = json::array();
            json ranks = json::array();
            text << ", complement:";
            for (const AbelianGroup& g : c.groups) {
                groups.push_back(to_string(g));
                ranks.push_back(g.free_rank);
                text << " " << to_string(g);
            }
            piece["complement"] = {{"groups", std::move(groups)},
                                   {"ranks", std::move(ranks)},
                                   {"prismatic", c.prismatic},
                                   {"euler", complement_euler(p, std::set<std::size_t>(
                                                                     folds.begin(), folds.end()))
                                                 .get_si()}};
        }
        text << "\n";
        pieces.push_back(std::move(piece));
    }

    json folds = json::array();
    for (const TemplateEdge& e : t.edges) {
        const TemplateEnd& end = e.ends.front();
        FoldComponentInvariants f = fold_component_invariants(t.polytopes[end.vertex], end.facet);
        json betti = json::array();
        for (std::size_t b : f.betti) betti.push_back(b);
        json fold{{"edge", e.id}, {"betti", std::move(betti)}};
        if (f.euler_magnitude) fold["euler_magnitude"] = f.euler_magnitude->get_si();
        if (f.dim4_type != Dim4FoldType::None) fold["type"] = to_string(f.dim4_type);
        text << "fold " << e.id << ": betti (";
        for (std::size_t k = 0; k < f.betti.size(); ++k) text << (k ? "," : "") << f.betti[k];
        text << ")";
        if (f.dim4_type != Dim4FoldType::None) text << " " << to_string(f.dim4_type);
        text << "\n";
        folds.push_back(std::move(fold));
    }

    if (as_json) {
        json j{{"dimension", t.dim},
               {"pieces", std::move(pieces)},
               {"folds", std::move(folds)}};
        if (!file.notes.empty()) j["notes"] = file.notes;
        out.write(j.dump(2) + "\n");
    } else {
        out.write(text.str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"toric origami template toolkit"};
    app.require_subcommand(1);

    std::string path;
    bool as_json = false;
    Output out;
    std::string command;
    for (const char* name : {"validate", "invariants", "betti", "cutpieces", "export-dot"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("file", path, "template JSON file")->required();
        sub->add_flag("--json", as_json, "machine-readable output");
        sub->add_option("--out", out.path, "write the report to a file");
        sub->callback([&command, name] { command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        TemplateFile file = load_template(path);
        ValidationResult vr = validate_template(file.raw);
        if (command == "validate") return cmd_validate(file, vr, as_json, out);
        if (!vr.report.ok()) {
            cmd_validate(file, vr, as_json, out);
            return 1;
        }
        const OrigamiTemplate& t = *vr.tmpl;
        if (command == "invariants") return cmd_invariants(file, t, as_json, out);
        if (command == "betti") return cmd_betti(file, t, as_json, out);
        if (command == "cutpieces") return cmd_cutpieces(file, t, as_json, out);
        out.write(export_dot(t));
        return 0;
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const PolytopeError& e) {
        std::cerr << "polytope error (" << polytope_error_name(e.kind) << "): " << e.what()
                  << "\n";
        return 1;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
