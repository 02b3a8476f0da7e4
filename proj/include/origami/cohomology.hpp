#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "origami/polytope.hpp"

namespace origami {

struct CohomologyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// H^{2k} of the compact toric manifold of a Delzant polytope, presented as
/// face monomials in the facet variables modulo Stanley-Reisner and linear
/// relations.  The quotient is free; projection/lift translate between
/// monomial coordinates and the chosen quotient basis.
struct GradedBasis {
    std::size_t degree = 0;  // k; cohomological degree 2k
    /// Exponent vectors over the facet variables; support is always a face.
    std::vector<std::vector<unsigned>> monomials;
    /// One column per relation, in monomial coordinates.
    IntMatrix relation_matrix;
    std::size_t rank = 0;  // = h_k of the polytope
    IntMatrix projection;  // rank x #monomials: class of a monomial vector
    IntMatrix lift;        // #monomials x rank: representative of a basis class

    std::size_t monomial_index(const std::vector<unsigned>& exponents) const;
};

GradedBasis graded_basis(const DelzantPolytope& p, std::size_t k);

struct GradedMap {
    IntMatrix matrix;  // target quotient coords x source quotient coords
    std::size_t source_degree = 0;
    std::size_t target_degree = 0;
};

/// Cup product with a degree-1 class (given in quotient coordinates of
/// graded_basis(p, 1)), as a map H^{2k} -> H^{2k+2}.
GradedMap multiply_by_class(const DelzantPolytope& p, const std::vector<Int>& cls, std::size_t k);

/// The divisor-inclusion map  (+)_{s in S} H^{2k-2}(B_s) -> H^{2k}(Y):
/// a monomial on the divisor over fold facet s maps to y_s times its lift.
/// Source coordinates are the concatenated quotient bases of the facet
/// subpolytopes, in the iteration order of S.
GradedMap phi_tilde(const DelzantPolytope& p, const std::set<std::size_t>& fold_facets,
                    std::size_t k);

/// H^j(Y \ B; Z) for j = 0..2n, from the four-term exact sequences:
/// odd groups are kernels of phi_tilde, even groups its cokernels.
struct ComplementCohomology {
    std::vector<AbelianGroup> groups;  // size 2n+1
    bool prismatic = false;            // complement fibers over T^2
};

ComplementCohomology complement_cohomology(const DelzantPolytope& p,
                                           const std::set<std::size_t>& fold_facets);

/// chi(Y \ B) = vertex count of p minus the vertex counts of the fold facets.
Int complement_euler(const DelzantPolytope& p, const std::set<std::size_t>& fold_facets);

enum class Dim4FoldType { None, S1xS2, S3, Lens };

/// The fold component over facet s: a circle bundle over the toric manifold
/// of the facet, with Euler class the restriction of y_s.
struct FoldComponentInvariants {
    std::vector<Int> euler_class;     // quotient coordinates in H^2(B_s)
    std::optional<Int> euler_magnitude;  // |e| when H^2(B_s) has rank 1
    std::vector<std::size_t> betti;   // b^0 .. b^{2n-1} of the component
    Dim4FoldType dim4_type = Dim4FoldType::None;
};

FoldComponentInvariants fold_component_invariants(const DelzantPolytope& p, std::size_t s);

std::string to_string(Dim4FoldType t);

}  // namespace origami
