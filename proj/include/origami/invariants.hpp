#pragma once

#include <optional>
#include <stdexcept>

#include "origami/origami_template.hpp"

namespace origami {

// pi1(M) = (N / N_X) x (free group of rank cycle_rank); the abelian factor is
// always trivial, finite cyclic or infinite cyclic.
struct Pi1Descriptor {
    AbelianGroup cyclic_part;
    std::size_t free_rank = 0;

    bool trivial() const { return cyclic_part.is_trivial() && free_rank == 0; }
};

struct InvariantsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// dangling edges present together with cycles: not supported
struct BoundaryWithCycles : InvariantsError {
    using InvariantsError::InvariantsError;
};

// a prismatic lattice quotient without the prismatic template structure;
// never expected on validated input
struct StructuralContradiction : InvariantsError {
    using InvariantsError::InvariantsError;
};

/// Z^n modulo the span of the orbit-space facet normals.
AbelianGroup lattice_quotient_NX(const OrigamiTemplate& t);

Pi1Descriptor fundamental_group(const OrigamiTemplate& t);

/// Abelianization of the fundamental group.  The torsion part also equals the
/// torsion of H^2 of the manifold.
AbelianGroup first_homology(const OrigamiTemplate& t);

struct PrismaticInfo {
    bool prismatic = false;
    std::optional<DelzantPolytope> fiber;  // present iff prismatic
};

/// The manifold is a product with T^2 iff N/N_X is infinite cyclic; when it
/// is, the template graph must be a cycle with exactly two parallel fold
/// facets per polytope, and the fiber polytope is the fold facet itself.
PrismaticInfo detect_prismatic(const OrigamiTemplate& t);

/// Number of torus-fixed points; equals the Euler characteristic and is never 1.
std::size_t euler_characteristic(const OrigamiTemplate& t);

}  // namespace origami
