#pragma once

#include <stdexcept>
#include <string>

#include "origami/origami_template.hpp"

namespace origami {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// malformed template data; `field` names the offending location
struct SchemaError : std::runtime_error {
    SchemaError(std::string field, const std::string& msg)
        : std::runtime_error(field + ": " + msg), field(std::move(field)) {}
    std::string field;
};

// Template file payload: the raw template plus free-form notes carried along
// into reports.
struct TemplateFile {
    RawTemplate raw;
    std::string notes;
};

/// Parse a template from JSON text.  Offsets may be integers or "p/q"
/// strings.  Polytope construction errors propagate as PolytopeError.
TemplateFile parse_template(const std::string& json_text);

TemplateFile load_template(const std::string& path);

/// Canonical serialization: original order, rationals in lowest terms.
std::string serialize_template(const TemplateFile& t);

/// Undirected multigraph in DOT; dangling edges end in an unlabeled point
/// node of shape `none`.
std::string export_dot(const OrigamiTemplate& t);

std::string to_string(const AbelianGroup& g);

}  // namespace origami
