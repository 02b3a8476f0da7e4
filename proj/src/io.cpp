#include "origami/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace origami {

using nlohmann::json;

namespace {

Rat parse_rational(const json& j, const std::string& field) {
    if (j.is_number_integer()) return Rat(Int(long(j.get<long long>())));
    if (!j.is_string()) throw SchemaError(field, "expected an integer or a \"p/q\" string");
    const std::string s = j.get<std::string>();
    std::size_t slash = s.find('/');
    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den[0] == '-' || Int(den) == 0)
        throw SchemaError(field, "malformed rational '" + s + "'");
    Rat value{Int(num), Int(den)};
    value.canonicalize();
    return value;
}

json rational_to_json(const Rat& r) {
    if (r.get_den() == 1 && r.get_num().fits_slong_p()) return json(r.get_num().get_si());
    return json(r.get_str());
}

const json& require(const json& j, const std::string& key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(where, "missing key '" + key + "'");
    return *it;
}

}  // namespace

TemplateFile parse_template(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw SchemaError("(document)", e.what());
    }
    if (!j.is_object()) throw SchemaError("(document)", "top level must be an object");

    TemplateFile out;
    const json& dim = require(j, "dimension", "dimension");
    if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0)
        throw SchemaError("dimension", "must be a positive integer");
    out.raw.dimension = dim.get<std::size_t>();
    if (j.contains("notes")) {
        if (!j["notes"].is_string()) throw SchemaError("notes", "must be a string");
        out.notes = j["notes"].get<std::string>();
    }

    std::map<std::string, std::size_t> facet_counts;
    const json& polys = require(j, "polytopes", "polytopes");
    if (!polys.is_array() || polys.empty())
        throw SchemaError("polytopes", "must be a non-empty array");
    for (std::size_t pi = 0; pi < polys.size(); ++pi) {
        const std::string where = "polytopes[" + std::to_string(pi) + "]";
        const json& p = polys[pi];
        if (!p.is_object()) throw SchemaError(where, "must be an object");
        std::string id = require(p, "id", where + ".id").get<std::string>();
        if (facet_counts.count(id)) throw SchemaError(where + ".id", "duplicate id '" + id + "'");
        const json& normals = require(p, "normals", where + ".normals");
        const json& offsets = require(p, "offsets", where + ".offsets");
        if (!normals.is_array() || !offsets.is_array() || normals.size() != offsets.size())
            throw SchemaError(where, "normals and offsets must be arrays of equal length");
        std::vector<Halfspace> hs;
        for (std::size_t f = 0; f < normals.size(); ++f) {
            const std::string fw = where + ".normals[" + std::to_string(f) + "]";
            if (!normals[f].is_array() || normals[f].size() != out.raw.dimension)
                throw SchemaError(fw, "expected " + std::to_string(out.raw.dimension) +
                                          " integer entries");
            Halfspace h;
            for (const json& c : normals[f]) {
                if (!c.is_number_integer()) throw SchemaError(fw, "entries must be integers");
                h.normal.emplace_back(long(c.get<long long>()));
            }
            h.offset = parse_rational(offsets[f], where + ".offsets[" + std::to_string(f) + "]");
            hs.push_back(std::move(h));
        }
        facet_counts[id] = hs.size();
        out.raw.polytopes.emplace_back(std::move(id), DelzantPolytope::build(std::move(hs)));
    }

    if (j.contains("edges")) {
        const json& edges = j["edges"];
        if (!edges.is_array()) throw SchemaError("edges", "must be an array");
        for (std::size_t ei = 0; ei < edges.size(); ++ei) {
            const std::string where = "edges[" + std::to_string(ei) + "]";
            const json& e = edges[ei];
            if (!e.is_object()) throw SchemaError(where, "must be an object");
            RawEdge edge;
            edge.id = require(e, "id", where + ".id").get<std::string>();
            const json& ends = require(e, "ends", where + ".ends");
            if (!ends.is_array() || ends.empty() || ends.size() > 2)
                throw SchemaError(where + ".ends", "expected 1 or 2 entries");
            for (std::size_t k = 0; k < ends.size(); ++k) {
                const std::string ew = where + ".ends[" + std::to_string(k) + "]";
                EdgeEndRef ref;
                ref.polytope = require(ends[k], "polytope", ew + ".polytope").get<std::string>();
                const json& facet = require(ends[k], "facet", ew + ".facet");
                if (!facet.is_number_unsigned()) throw SchemaError(ew + ".facet", "must be >= 0");
                ref.facet = facet.get<std::size_t>();
                auto it = facet_counts.find(ref.polytope);
                if (it == facet_counts.end())
                    throw SchemaError(ew + ".polytope", "unknown id '" + ref.polytope + "'");
                if (ref.facet >= it->second)
                    throw SchemaError(ew + ".facet", "facet index out of range");
                edge.ends.push_back(std::move(ref));
            }
            out.raw.edges.push_back(std::move(edge));
        }
    }
    return out;
}

TemplateFile load_template(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_template(buf.str());
}

std::string serialize_template(const TemplateFile& t) {
    json j;
    j["dimension"] = t.raw.dimension;
    if (!t.notes.empty()) j["notes"] = t.notes;
    j["polytopes"] = json::array();
    for (const auto& [id, poly] : t.raw.polytopes) {
        json p;
        p["id"] = id;
        p["normals"] = json::array();
        p["offsets"] = json::array();
        for (const Halfspace& h : poly.facets()) {
            json normal = json::array();
            for (const Int& c : h.normal) normal.push_back(c.get_si());
            p["normals"].push_back(std::move(normal));
            p["offsets"].push_back(rational_to_json(h.offset));
        }
        j["polytopes"].push_back(std::move(p));
    }
    j["edges"] = json::array();
    for (const RawEdge& e : t.raw.edges) {
        json ends = json::array();
        for (const EdgeEndRef& ref : e.ends)
            ends.push_back({{"polytope", ref.polytope}, {"facet", ref.facet}});
        j["edges"].push_back({{"id", e.id}, {"ends", std::move(ends)}});
    }
    return j.dump(2) + "\n";
}

std::string export_dot(const OrigamiTemplate& t) {
    std::ostringstream out;
    auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\') q += '\\';
            q += c;
        }
        return q + "\"";
    };
    out << "graph template {\n";
    for (const std::string& id : t.vertex_ids) out << "  " << quote(id) << ";\n";
    std::size_t boundary = 0;
    for (const TemplateEdge& e : t.edges) {
        const std::string a = t.vertex_ids[e.ends[0].vertex];
        if (e.dangling()) {
            std::string anchor = "__boundary" + std::to_string(boundary++);
            out << "  " << quote(anchor) << " [shape=none, label=\"\"];\n";
            out << "  " << quote(a) << " -- " << quote(anchor);
        } else {
            out << "  " << quote(a) << " -- " << quote(t.vertex_ids[e.ends[1].vertex]);
        }
        out << " [label=" << quote(e.id) << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string to_string(const AbelianGroup& g) {
    std::ostringstream out;
    bool first = true;
    auto sep = [&] {
        if (!first) out << " x ";
        first = false;
    };
    if (g.free_rank == 1) {
        sep();
        out << "Z";
    } else if (g.free_rank > 1) {
        sep();
        out << "Z^" << g.free_rank;
    }
    for (const Int& k : g.invariant_factors) {
        sep();
        out << "Z/" << k.get_str();
    }
    if (first) out << "1";
    return out.str();
}

}  // namespace origami
