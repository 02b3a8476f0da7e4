#include "origami/invariants.hpp"

namespace origami {

AbelianGroup lattice_quotient_NX(const OrigamiTemplate& t) {
    return cokernel_structure(orbit_space_summary(t).normal_matrix);
}

Pi1Descriptor fundamental_group(const OrigamiTemplate& t) {
    GraphStats s = graph_stats(t);
    if (s.dangling_count > 0 && s.cycle_rank > 0)
        throw BoundaryWithCycles(
            "fundamental group with boundary is only known for acyclic templates");
    Pi1Descriptor pi;
    pi.cyclic_part = lattice_quotient_NX(t);
    pi.free_rank = s.cycle_rank;
    // trivial / finite cyclic / infinite cyclic trichotomy
    if (pi.cyclic_part.free_rank > 1 || pi.cyclic_part.invariant_factors.size() > 1 ||
        (pi.cyclic_part.free_rank == 1 && !pi.cyclic_part.invariant_factors.empty()))
        throw InvariantsError("lattice quotient is not cyclic: " + pi.cyclic_part.to_string());
    return pi;
}

AbelianGroup first_homology(const OrigamiTemplate& t) {
    Pi1Descriptor pi = fundamental_group(t);
    AbelianGroup h1;
    h1.free_rank = pi.free_rank + pi.cyclic_part.free_rank;
    h1.invariant_factors = pi.cyclic_part.invariant_factors;
    return h1;
}

PrismaticInfo detect_prismatic(const OrigamiTemplate& t) {
    GraphStats s = graph_stats(t);
    if (s.dangling_count > 0)
        throw InvariantsError("prismatic detection requires a template without boundary");
    PrismaticInfo info;
    if (!lattice_quotient_NX(t).is_infinite_cyclic()) return info;
    info.prismatic = true;

    // Structural consequences: the graph is a cycle and every polytope has
    // exactly two fold facets, one a parallel opposite copy of the other.
    if (s.cycle_rank != 1)
        throw StructuralContradiction("infinite cyclic quotient but the graph is not a cycle");
    for (std::size_t v = 0; v < t.vertex_count(); ++v) {
        std::vector<std::size_t> folds = t.fold_facets(v);
        if (folds.size() != 2)
            throw StructuralContradiction("prismatic polytope without exactly two fold facets");
        const Halfspace& a = t.polytopes[v].facet(folds[0]);
        const Halfspace& b = t.polytopes[v].facet(folds[1]);
        for (std::size_t i = 0; i < t.dim; ++i)
            if (a.normal[i] != -b.normal[i])
                throw StructuralContradiction("prismatic fold facets are not parallel");
    }
    info.fiber = facet_subpolytope(t.polytopes[0], t.fold_facets(0)[0]).polytope;
    return info;
}

std::size_t euler_characteristic(const OrigamiTemplate& t) {
    if (graph_stats(t).dangling_count > 0)
        throw InvariantsError("Euler characteristic requires a template without boundary");
    std::size_t chi = orbit_space_summary(t).fixed_point_count;
    if (chi == 1) throw InvariantsError("fixed point count 1 is impossible; template corrupt");
    return chi;
}

}  // namespace origami
