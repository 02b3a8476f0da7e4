#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "origami/lattice.hpp"

namespace origami {

struct Halfspace {
    std::vector<Int> normal;  // primitive outward normal
    Rat offset;               // { x : <normal, x> <= offset }

    bool operator==(const Halfspace& other) const = default;
    bool operator<(const Halfspace& other) const {
        if (normal != other.normal) return normal < other.normal;
        return offset < other.offset;
    }
};

enum class PolytopeErrorKind {
    Unbounded,
    Empty,
    NotFullDimensional,
    NotSimple,
    NotSmooth,
    RedundantHalfspace,
    NonPrimitiveNormal,
    BadInput,
    InvalidFacet,
};

struct PolytopeError : std::runtime_error {
    PolytopeError(PolytopeErrorKind kind, std::string msg)
        : std::runtime_error(std::move(msg)), kind(kind) {}
    PolytopeErrorKind kind;
    std::size_t index = 0;   // offending half-space for the *Halfspace/Normal kinds
    std::vector<Rat> vertex; // offending vertex for NotSimple / NotSmooth
    Int determinant = 0;     // |det| of incident normals for NotSmooth
};

/// A face identified by the set of all facets containing it.  For a simple
/// polytope |indices| equals the codimension of the face.
struct FaceRef {
    std::set<std::size_t> facet_indices;
    auto operator<=>(const FaceRef& other) const = default;
};

/// Simple, rational, smooth polytope in half-space presentation with all
/// derived combinatorial data computed eagerly at construction.
class DelzantPolytope {
public:
    /// Validates and builds; throws PolytopeError on non-Delzant input.
    static DelzantPolytope build(std::vector<Halfspace> halfspaces);

    /// The 0-dimensional polytope (a single point, no facets); the facet of a
    /// segment is one of these.
    static DelzantPolytope point();

    std::size_t dim() const { return dim_; }
    std::size_t facet_count() const { return facets_.size(); }
    const std::vector<Halfspace>& facets() const { return facets_; }
    const Halfspace& facet(std::size_t i) const { return facets_.at(i); }

    const std::vector<std::vector<Rat>>& vertices() const { return vertices_; }
    /// Facet indices incident to vertex v (exactly dim() of them).
    const std::set<std::size_t>& vertex_facets(std::size_t v) const { return vertex_facets_.at(v); }
    /// Vertices lying on facet f.
    const std::vector<std::size_t>& facet_vertices(std::size_t f) const {
        return facet_vertices_.at(f);
    }

    /// All nonempty faces keyed by codimension 0..dim (codim 0 is the
    /// polytope itself with empty index set).
    const std::vector<std::vector<FaceRef>>& face_lattice() const { return faces_by_codim_; }
    /// f_vector[k] = number of k-dimensional proper faces, k = 0..dim-1.
    const std::vector<std::size_t>& f_vector() const { return f_vector_; }
    /// h_vector[k] = coefficient of t^k; h_0 = 1 corresponds to H^0.
    const std::vector<std::size_t>& h_vector() const { return h_vector_; }

    /// True when the given facet set has a common vertex.
    bool is_face(const std::set<std::size_t>& facet_indices) const;
    bool facets_disjoint(std::size_t f, std::size_t g) const;
    bool facets_adjacent(std::size_t f, std::size_t g) const;
    std::vector<std::size_t> adjacent_facets(std::size_t f) const;

    /// Fold-neighbourhood data: the facet's own half-space plus the
    /// half-spaces of all facets adjacent to it.
    std::set<Halfspace> local_fan_at_facet(std::size_t f) const;

    bool operator==(const DelzantPolytope& other) const { return facets_ == other.facets_; }

    DelzantPolytope() = default;  // empty shell; use build()

private:
    std::size_t dim_ = 0;
    std::vector<Halfspace> facets_;
    std::vector<std::vector<Rat>> vertices_;
    std::vector<std::set<std::size_t>> vertex_facets_;
    std::vector<std::vector<std::size_t>> facet_vertices_;
    std::vector<std::vector<FaceRef>> faces_by_codim_;
    std::vector<std::size_t> f_vector_;
    std::vector<std::size_t> h_vector_;
};

struct FacetSubpolytope {
    DelzantPolytope polytope;  // the facet as an (n-1)-dimensional Delzant polytope
    /// parent_facet[i] = index in the parent of the facet whose intersection
    /// with the chosen facet is facet i of the subpolytope.
    std::vector<std::size_t> parent_facet;
    /// Lattice basis of normal^perp used as coordinates (n x (n-1) columns)
    /// and the parent vertex mapped to the subpolytope origin.
    IntMatrix basis;
    std::vector<Rat> origin;
};

/// The facet as a lower-dimensional Delzant polytope in the induced lattice,
/// with the facet-to-parent-facet correspondence.
FacetSubpolytope facet_subpolytope(const DelzantPolytope& p, std::size_t facet);

}  // namespace origami
