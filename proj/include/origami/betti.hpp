#pragma once

#include <optional>
#include <vector>

#include "origami/cohomology.hpp"
#include "origami/invariants.hpp"

namespace origami {

struct BettiError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class BettiMethod {
    ClosedFormDim4,
    KunnethPrismatic,
    ConstraintSolved,
    Underdetermined,
};

std::string to_string(BettiMethod m);

/// A linear relation sum_k coeff[k] * b^k = value over the Betti numbers,
/// coefficients indexed by cohomological degree 0..2n.
struct BettiRelation {
    std::vector<Int> coeffs;
    Int value;
};

struct BettiReport {
    std::size_t dim = 0;  // 2n
    /// b^0 .. b^{2n}; nullopt marks an undetermined degree.
    std::vector<std::optional<std::size_t>> betti;
    BettiMethod method = BettiMethod::Underdetermined;
    /// Residual relations among the undetermined degrees (empty when solved).
    std::vector<BettiRelation> residual;
    /// Torsion of H^2(M) = torsion of N/N_X.
    std::vector<Int> torsion_h2;

    bool complete() const;
};

/// The Mayer-Vietoris bookkeeping: ranks of the pieces, the degrees pinned
/// down directly, the Euler-characteristic identity and duality constraints.
struct MVConstraintSystem {
    std::size_t dim = 0;  // 2n
    /// H^k ranks of the complement piece at each template vertex, k = 0..2n.
    std::vector<std::vector<std::size_t>> piece_ranks;
    /// b^k of the fold component over each template edge, k = 0..2n-1.
    std::vector<std::vector<std::size_t>> fold_ranks;
    /// Degrees fixed a priori: b^0, b^1, b^{2n-1}, b^{2n}.
    std::vector<std::optional<std::size_t>> fixed;
    /// Required value of sum (-1)^k b^k; equals the fixed point count.
    Int euler;
    /// Whether b^k = b^{2n-k} may be imposed (orientable, i.e. bipartite graph).
    bool poincare_duality = false;
};

/// Closed form in dimension 4.
BettiReport betti_dim4(const OrigamiTemplate& t);

/// Kunneth formula for a product with T^2, any dimension.
BettiReport betti_prismatic(const OrigamiTemplate& t);

MVConstraintSystem mv_constraint_system(const OrigamiTemplate& t);

/// Combine the fixed degrees with the relations; solved when they pin every
/// degree down, otherwise the residual relations are reported.
BettiReport solve_constraint_system(const MVConstraintSystem& sys);

/// Dispatch: dimension 4 -> closed form, prismatic -> Kunneth, otherwise the
/// constraint route (possibly underdetermined).
BettiReport solve_betti(const OrigamiTemplate& t);

}  // namespace origami
