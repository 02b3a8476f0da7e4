#include "doctest.h"

#include <random>

#include "generators.hpp"
#include "origami/cohomology.hpp"
#include "shapes.hpp"

using namespace origami;

namespace {

// quotient coordinates of a single facet variable
std::vector<Int> variable_class(const GradedBasis& deg1, std::size_t var,
                                std::size_t facet_count) {
    std::vector<unsigned> exps(facet_count, 0);
    exps[var] = 1;
    std::vector<Int> out(deg1.rank, Int(0));
    std::size_t idx = deg1.monomial_index(exps);
    for (std::size_t r = 0; r < deg1.rank; ++r) out[r] = deg1.projection.at(r, idx);
    return out;
}

std::vector<std::size_t> free_ranks(const ComplementCohomology& c) {
    std::vector<std::size_t> out;
    for (const AbelianGroup& g : c.groups) out.push_back(g.free_rank);
    return out;
}

}  // namespace

TEST_CASE("graded ranks match the h-vector") {
    DelzantPolytope tri = shapes::unit_triangle();
    CHECK(graded_basis(tri, 0).rank == 1);
    CHECK(graded_basis(tri, 1).rank == 1);
    CHECK(graded_basis(tri, 2).rank == 1);

    DelzantPolytope tc = shapes::truncated_cube();
    CHECK(graded_basis(tc, 1).rank == 4);
    CHECK(graded_basis(tc, 2).rank == 4);
    CHECK(graded_basis(tc, 3).rank == 1);
    CHECK_THROWS_AS(graded_basis(tc, 4), CohomologyError);
}

TEST_CASE("graded ranks on random smooth polytopes") {
    std::mt19937 rng(2024);
    for (int iter = 0; iter < 30; ++iter) {
        DelzantPolytope p = testgen::random_smooth_polytope(rng, 2 + iter % 2, 4);
        for (std::size_t k = 0; k <= p.dim(); ++k)
            CHECK(graded_basis(p, k).rank == p.h_vector()[k]);  // torsion-freeness asserted inside
    }
}

TEST_CASE("cup products on the triangle and square") {
    DelzantPolytope tri = shapes::unit_triangle();
    GradedBasis d1 = graded_basis(tri, 1);
    GradedMap sq = multiply_by_class(tri, variable_class(d1, 1, 3), 1);
    REQUIRE(sq.matrix.rows() == 1);
    REQUIRE(sq.matrix.cols() == 1);
    CHECK(abs(sq.matrix.at(0, 0)) == 1);  // generator squares to the top class

    DelzantPolytope square = shapes::unit_square();
    GradedBasis s1 = graded_basis(square, 1);
    GradedMap top = multiply_by_class(square, variable_class(s1, 3, 4), 1);
    REQUIRE(top.matrix.rows() == 1);
    REQUIRE(top.matrix.cols() == 2);
    CHECK(rational_rank(top.matrix) == 1);  // y_top * y_bottom = 0, y_top * y_side = point

    GradedMap zero = multiply_by_class(square, {Int(0), Int(0)}, 1);
    CHECK(zero.matrix.is_zero());
}

TEST_CASE("divisor inclusion on the truncated cube") {
    DelzantPolytope tc = shapes::truncated_cube();
    std::set<std::size_t> folds{0, 1};

    SUBCASE("degree 1: cokernel has rank 2") {
        GradedMap phi = phi_tilde(tc, folds, 1);
        CHECK(phi.matrix.rows() == 4);
        CHECK(phi.matrix.cols() == 2);
        AbelianGroup coker = cokernel_structure(phi.matrix);
        CHECK(coker.free_rank == 2);
        CHECK(coker.invariant_factors.empty());
        CHECK(integer_kernel(phi.matrix).cols() == 0);
    }
    SUBCASE("degree 3: kernel generated by the difference of the two top classes") {
        GradedMap phi = phi_tilde(tc, folds, 3);
        CHECK(phi.matrix.rows() == 1);
        CHECK(phi.matrix.cols() == 2);  // H^4 of CP^2 and of S^2 x S^2
        IntMatrix ker = integer_kernel(phi.matrix);
        REQUIRE(ker.cols() == 1);
        CHECK(abs(ker.at(0, 0)) == 1);
        CHECK(abs(ker.at(1, 0)) == 1);
    }
}

TEST_CASE("complement cohomology tables") {
    SUBCASE("truncated cube with both folds") {
        ComplementCohomology c = complement_cohomology(shapes::truncated_cube(), {0, 1});
        CHECK(free_ranks(c) == std::vector<std::size_t>{1, 0, 2, 0, 1, 1, 0});
        for (const AbelianGroup& g : c.groups) CHECK(g.invariant_factors.empty());
        CHECK_FALSE(c.prismatic);
    }
    SUBCASE("square with both vertical facets is prismatic") {
        ComplementCohomology c = complement_cohomology(shapes::unit_square(), {0, 2});
        CHECK(free_ranks(c) == std::vector<std::size_t>{1, 1, 1, 1, 0});
        CHECK(c.prismatic);
    }
    SUBCASE("triangle with one fold looks like C^2") {
        ComplementCohomology c = complement_cohomology(shapes::unit_triangle(), {2});
        CHECK(free_ranks(c) == std::vector<std::size_t>{1, 0, 0, 0, 0});
        CHECK_FALSE(c.prismatic);
    }
    SUBCASE("intersecting folds are rejected") {
        CHECK_THROWS_AS(complement_cohomology(shapes::unit_square(), {0, 1}), CohomologyError);
        CHECK_THROWS_AS(complement_cohomology(shapes::unit_square(), {}), CohomologyError);
    }
}

TEST_CASE("complement Euler characteristic") {
    CHECK(complement_euler(shapes::unit_triangle(), {2}) == 1);
    CHECK(complement_euler(shapes::truncated_cube(), {0, 1}) == 3);
    // matches the alternating rank sum of the groups
    ComplementCohomology c = complement_cohomology(shapes::truncated_cube(), {0, 1});
    Int alt(0);
    for (std::size_t j = 0; j < c.groups.size(); ++j)
        alt += (j % 2 ? -Int(c.groups[j].free_rank) : Int(c.groups[j].free_rank));
    CHECK(alt == 3);
    // with every facet folded, chi counts interior vertices only
    CHECK(complement_euler(shapes::unit_square(), {0, 2}) == 0);
}

TEST_CASE("fold components of the truncated cube") {
    DelzantPolytope tc = shapes::truncated_cube();
    SUBCASE("cut facet carries the 5-sphere") {
        FoldComponentInvariants f = fold_component_invariants(tc, 0);
        CHECK(f.betti == std::vector<std::size_t>{1, 0, 0, 0, 0, 1});
        REQUIRE(f.euler_magnitude.has_value());
        CHECK(*f.euler_magnitude == 1);
    }
    SUBCASE("far square facet carries S2 x S2 x S1") {
        FoldComponentInvariants f = fold_component_invariants(tc, 1);
        CHECK(f.betti == std::vector<std::size_t>{1, 1, 2, 2, 1, 1});
        bool zero = true;
        for (const Int& x : f.euler_class) zero = zero && x == 0;
        CHECK(zero);
    }
}

TEST_CASE("dimension-4 fold classification") {
    FoldComponentInvariants sq = fold_component_invariants(shapes::unit_square(), 0);
    CHECK(sq.dim4_type == Dim4FoldType::S1xS2);
    CHECK(sq.betti == std::vector<std::size_t>{1, 1, 1, 1});

    FoldComponentInvariants tri = fold_component_invariants(shapes::unit_triangle(), 2);
    CHECK(tri.dim4_type == Dim4FoldType::S3);
    CHECK(tri.betti == std::vector<std::size_t>{1, 0, 0, 1});

    for (long k : {2L, 3L, 5L}) {
        FoldComponentInvariants lens = fold_component_invariants(shapes::lens_quad(k), 0);
        CHECK(lens.dim4_type == Dim4FoldType::Lens);
        CHECK(*lens.euler_magnitude == k);
        CHECK(lens.betti == std::vector<std::size_t>{1, 0, 0, 1});
    }
}

TEST_CASE("fold component properties") {
    std::mt19937 rng(515);
    for (int iter = 0; iter < 25; ++iter) {
        DelzantPolytope p = testgen::random_smooth_polytope(rng, 2 + iter % 2, 3);
        std::uniform_int_distribution<std::size_t> pick(0, p.facet_count() - 1);
        FoldComponentInvariants f = fold_component_invariants(p, pick(rng));
        CHECK(f.betti.front() == 1);
        CHECK(f.betti.back() == 1);
        long chi = 0;
        for (std::size_t j = 0; j < f.betti.size(); ++j)
            chi += (j % 2 ? -1 : 1) * long(f.betti[j]);
        CHECK(chi == 0);
    }
}

TEST_CASE("euler class does not depend on the dual vector") {
    // recompute the restriction with several dual vectors v, <v, u_s> = 1
    std::mt19937 rng(77);
    std::uniform_int_distribution<long> coeff(-3, 3);
    for (int iter = 0; iter < 20; ++iter) {
        DelzantPolytope p = testgen::random_smooth_polytope(rng, 3, 2);
        std::uniform_int_distribution<std::size_t> pick(0, p.facet_count() - 1);
        std::size_t s = pick(rng);
        FoldComponentInvariants ref = fold_component_invariants(p, s);

        FacetSubpolytope sub = facet_subpolytope(p, s);
        GradedBasis deg1 = graded_basis(sub.polytope, 1);
        std::vector<Int> v = solve_dual_one(p.facet(s).normal);
        // shift v by a lattice vector orthogonal to the fold normal
        IntMatrix u_row(1, p.dim());
        for (std::size_t j = 0; j < p.dim(); ++j) u_row.at(0, j) = p.facet(s).normal[j];
        IntMatrix ker = integer_kernel(u_row);
        for (std::size_t c = 0; c < ker.cols(); ++c) {
            Int f = coeff(rng);
            for (std::size_t j = 0; j < p.dim(); ++j) v[j] += f * ker.at(j, c);
        }
        std::vector<Int> e_monomial(deg1.monomials.size(), Int(0));
        for (std::size_t f = 0; f < sub.parent_facet.size(); ++f) {
            Int c(0);
            for (std::size_t t = 0; t < p.dim(); ++t)
                c += v[t] * p.facet(sub.parent_facet[f]).normal[t];
            if (c == 0) continue;
            std::vector<unsigned> exps(sub.polytope.facet_count(), 0);
            exps[f] = 1;
            e_monomial[deg1.monomial_index(exps)] -= c;
        }
        std::vector<Int> e(deg1.rank, Int(0));
        for (std::size_t r = 0; r < deg1.rank; ++r)
            for (std::size_t m = 0; m < e_monomial.size(); ++m)
                e[r] += deg1.projection.at(r, m) * e_monomial[m];
        CHECK(e == ref.euler_class);
    }
}

TEST_CASE("segment folds") {
    // 2-dimensional origami: the fold over an endpoint of a segment is a circle
    FoldComponentInvariants f = fold_component_invariants(shapes::segment01(), 0);
    CHECK(f.betti == std::vector<std::size_t>{1, 1});
    ComplementCohomology c = complement_cohomology(shapes::segment01(), {0, 1});
    CHECK(free_ranks(c) == std::vector<std::size_t>{1, 1, 0});
    CHECK(c.prismatic);
}
