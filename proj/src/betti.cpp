#include "origami/betti.hpp"

#include <cassert>
#include <set>

namespace origami {

namespace {

void require_closed(const OrigamiTemplate& t) {
    for (const TemplateEdge& e : t.edges)
        if (e.dangling()) throw BettiError("template has dangling edges");
}

std::vector<Int> torsion_part(const OrigamiTemplate& t) {
    return lattice_quotient_NX(t).invariant_factors;
}

BettiReport known_report(std::size_t dim, std::vector<std::size_t> values, BettiMethod method,
                         const OrigamiTemplate& t) {
    assert(values.size() == dim + 1);
    BettiReport out;
    out.dim = dim;
    for (std::size_t v : values) out.betti.emplace_back(v);
    out.method = method;
    out.torsion_h2 = torsion_part(t);
    return out;
}

// toric manifold ranks: h_j in degree 2j, zero in odd degrees
std::vector<std::size_t> toric_ranks(const DelzantPolytope& p) {
    std::vector<std::size_t> out(2 * p.dim() + 1, 0);
    for (std::size_t j = 0; j <= p.dim(); ++j) out[2 * j] = p.h_vector()[j];
    return out;
}

}  // namespace

bool BettiReport::complete() const {
    for (const auto& b : betti)
        if (!b) return false;
    return true;
}

std::string to_string(BettiMethod m) {
    switch (m) {
        case BettiMethod::ClosedFormDim4: return "closed_form_dim4";
        case BettiMethod::KunnethPrismatic: return "kunneth_prismatic";
        case BettiMethod::ConstraintSolved: return "constraint_solved";
        case BettiMethod::Underdetermined: return "underdetermined";
    }
    return "?";
}

BettiReport betti_dim4(const OrigamiTemplate& t) {
    if (t.dim != 2) throw BettiError("closed form applies to 4-manifolds only");
    require_closed(t);
    if (detect_prismatic(t).prismatic)
        return known_report(4, {1, 2, 2, 2, 1}, BettiMethod::ClosedFormDim4, t);
    GraphStats g = graph_stats(t);
    std::size_t l = g.cycle_rank;
    std::size_t fixed = orbit_space_summary(t).fixed_point_count;
    std::size_t b2 = fixed + 2 * g.edge_count - 2 * g.vertex_count;
    return known_report(4, {1, l, b2, l, 1}, BettiMethod::ClosedFormDim4, t);
}

BettiReport betti_prismatic(const OrigamiTemplate& t) {
    PrismaticInfo info = detect_prismatic(t);
    if (!info.prismatic) throw BettiError("template is not prismatic");
    const std::vector<std::size_t>& h = info.fiber->h_vector();
    // M = Y_F x T^2; b(T^2) = (1,2,1) and b^{2j}(Y_F) = h_j
    std::size_t n = t.dim;
    auto fiber_rank = [&](long k) -> std::size_t {
        if (k < 0 || k % 2 != 0 || std::size_t(k / 2) >= h.size()) return 0;
        return h[std::size_t(k / 2)];
    };
    std::vector<std::size_t> b;
    for (long k = 0; k <= long(2 * n); ++k)
        b.push_back(fiber_rank(k) + 2 * fiber_rank(k - 1) + fiber_rank(k - 2));
    return known_report(2 * n, b, BettiMethod::KunnethPrismatic, t);
}

MVConstraintSystem mv_constraint_system(const OrigamiTemplate& t) {
    require_closed(t);
    std::size_t n = t.dim;
    MVConstraintSystem sys;
    sys.dim = 2 * n;

    Int chi_pieces(0);
    for (std::size_t i = 0; i < t.vertex_count(); ++i) {
        std::vector<std::size_t> folds_vec = t.fold_facets(i);
        std::set<std::size_t> folds(folds_vec.begin(), folds_vec.end());
        if (folds.empty()) {
            sys.piece_ranks.push_back(toric_ranks(t.polytopes[i]));
            chi_pieces += Int(t.polytopes[i].vertices().size());
            continue;
        }
        ComplementCohomology c = complement_cohomology(t.polytopes[i], folds);
        std::vector<std::size_t> ranks;
        for (const AbelianGroup& g : c.groups) ranks.push_back(g.free_rank);
        sys.piece_ranks.push_back(std::move(ranks));
        chi_pieces += complement_euler(t.polytopes[i], folds);
    }

    for (const TemplateEdge& e : t.edges) {
        const TemplateEnd& end = e.ends.front();
        FoldComponentInvariants f = fold_component_invariants(t.polytopes[end.vertex], end.facet);
        long chi = 0;
        for (std::size_t k = 0; k < f.betti.size(); ++k)
            chi += (k % 2 ? -1 : 1) * long(f.betti[k]);
        if (chi != 0) throw BettiError("fold component has nonzero Euler characteristic");
        sys.fold_ranks.push_back(f.betti);
    }

    // chi(M) = sum chi(A_i): the fold components contribute nothing
    sys.euler = Int(euler_characteristic(t));
    if (sys.euler != chi_pieces) throw BettiError("Euler bookkeeping mismatch");

    GraphStats g = graph_stats(t);
    std::size_t b1 = g.cycle_rank + lattice_quotient_NX(t).free_rank;
    sys.fixed.assign(2 * n + 1, std::nullopt);
    sys.fixed[0] = 1;
    sys.fixed[2 * n] = 1;
    if (n >= 1) {
        sys.fixed[1] = b1;
        sys.fixed[2 * n - 1] = b1;
    }
    sys.poincare_duality = g.bipartite;
    return sys;
}

BettiReport solve_constraint_system(const MVConstraintSystem& sys) {
    std::size_t d = sys.dim;
    BettiReport out;
    out.dim = d;
    out.betti = sys.fixed;

    if (sys.poincare_duality)
        for (std::size_t k = 0; k <= d; ++k)
            if (!out.betti[k] && out.betti[d - k]) out.betti[k] = out.betti[d - k];

    // group the unknowns into duality classes and reduce the alternating-sum
    // identity to those classes
    std::vector<std::size_t> unknown;
    for (std::size_t k = 0; k <= d; ++k)
        if (!out.betti[k]) unknown.push_back(k);

    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t k : unknown) {
        if (sys.poincare_duality && k > d - k) {
            for (auto& c : classes)
                if (c.front() == d - k) c.push_back(k);
            continue;
        }
        classes.push_back({k});
    }

    Int rhs = sys.euler;
    for (std::size_t k = 0; k <= d; ++k)
        if (out.betti[k]) rhs -= (k % 2 ? -Int(*out.betti[k]) : Int(*out.betti[k]));

    std::vector<Int> coeff(classes.size(), Int(0));
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (std::size_t k : classes[c]) coeff[c] += (k % 2 ? Int(-1) : Int(1));

    bool solvable = classes.size() <= 1;
    if (classes.empty()) {
        if (rhs != 0) throw BettiError("inconsistent constraint system");
    } else if (classes.size() == 1 && coeff[0] != 0 && rhs % coeff[0] == 0 &&
               rhs / coeff[0] >= 0) {
        Int value = rhs / coeff[0];
        for (std::size_t k : classes[0]) out.betti[k] = std::size_t(value.get_ui());
    } else {
        solvable = false;
    }

    if (solvable) {
        out.method = BettiMethod::ConstraintSolved;
    } else {
        out.method = BettiMethod::Underdetermined;
        if (sys.poincare_duality)
            for (std::size_t k : unknown)
                if (k < d - k && !out.betti[d - k]) {
                    BettiRelation r;
                    r.coeffs.assign(d + 1, Int(0));
                    r.coeffs[k] = 1;
                    r.coeffs[d - k] = -1;
                    r.value = 0;
                    out.residual.push_back(std::move(r));
                }
        BettiRelation alt;
        alt.coeffs.assign(d + 1, Int(0));
        for (std::size_t k : unknown) alt.coeffs[k] = (k % 2 ? Int(-1) : Int(1));
        alt.value = rhs;
        out.residual.push_back(std::move(alt));
    }
    return out;
}

BettiReport solve_betti(const OrigamiTemplate& t) {
    require_closed(t);
    if (t.dim == 2) return betti_dim4(t);
    if (detect_prismatic(t).prismatic) return betti_prismatic(t);
    if (t.edges.empty())  // no folds: M is the compact toric manifold itself
        return known_report(2 * t.dim, toric_ranks(t.polytopes.front()),
                            BettiMethod::ConstraintSolved, t);
    BettiReport out = solve_constraint_system(mv_constraint_system(t));
    out.torsion_h2 = torsion_part(t);
    return out;
}

}  // namespace origami
