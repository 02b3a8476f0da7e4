#include "doctest.h"

#include <random>

#include "origami/lattice.hpp"

using namespace origami;

namespace {

IntMatrix rows(std::vector<std::vector<long>> r) {
    std::vector<std::vector<Int>> conv;
    for (auto& row : r) conv.emplace_back(row.begin(), row.end());
    return IntMatrix::from_rows(conv);
}

void check_snf_contract(const IntMatrix& m) {
    SmithDecomposition s = smith_normal_form(m);
    Int du = determinant(s.u), dv = determinant(s.v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    CHECK(s.u * m * s.v == s.d);
    Int prev(0);
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) {
        const Int& d = s.d.at(i, i);
        CHECK(d >= 0);
        if (prev != 0) CHECK((d == 0 || d % prev == 0));
        if (prev == 0 && i > 0) CHECK(d == 0);
        prev = d;
        for (std::size_t j = 0; j < s.d.cols(); ++j)
            if (j != i) CHECK(s.d.at(i, j) == 0);
    }
}

}  // namespace

TEST_CASE("smith normal form of diag(2,3)") {
    IntMatrix m = rows({{2, 0}, {0, 3}});
    SmithDecomposition s = smith_normal_form(m);
    CHECK(s.d.at(0, 0) == 1);
    CHECK(s.d.at(1, 1) == 6);
    CHECK(s.u * m * s.v == s.d);
    check_snf_contract(m);
}

TEST_CASE("smith normal form of identity") {
    IntMatrix m = IntMatrix::identity(3);
    SmithDecomposition s = smith_normal_form(m);
    CHECK(s.d == IntMatrix::identity(3));
}

TEST_CASE("smith normal form of a 2x3 matrix") {
    // Elementary reduction by hand: gcd of all entries is 2, then the
    // remaining 1x2 block [[18, 24]] has gcd 6; invariants (2, 6).
    IntMatrix m = rows({{2, 4, 4}, {-6, 6, 12}});
    SmithDecomposition s = smith_normal_form(m);
    CHECK(s.d.at(0, 0) == 2);
    CHECK(s.d.at(1, 1) == 6);
    CHECK(s.d.at(0, 2) == 0);
    CHECK(s.d.at(1, 2) == 0);
    check_snf_contract(m);
}

TEST_CASE("smith normal form of empty matrices") {
    check_snf_contract(IntMatrix(0, 0));
    check_snf_contract(IntMatrix(0, 3));
    check_snf_contract(IntMatrix(3, 0));
}

TEST_CASE("cokernel structures") {
    SUBCASE("unimodular full-rank span is trivial") {
        AbelianGroup g = cokernel_structure(IntMatrix::identity(2));
        CHECK(g.is_trivial());
    }
    SUBCASE("rank-deficient span leaves a free factor") {
        IntMatrix m = rows({{0, 0}, {1, -1}});
        AbelianGroup g = cokernel_structure(m);
        CHECK(g.free_rank == 1);
        CHECK(g.invariant_factors.empty());
    }
    SUBCASE("columns (0,1),(k,-1) give Z/k") {
        for (long k = 2; k <= 5; ++k) {
            IntMatrix m = rows({{0, k}, {1, -1}});
            AbelianGroup g = cokernel_structure(m);
            CHECK(g.free_rank == 0);
            REQUIRE(g.invariant_factors.size() == 1);
            CHECK(g.invariant_factors[0] == k);
        }
    }
    SUBCASE("empty generator matrix leaves everything") {
        AbelianGroup g = cokernel_structure(IntMatrix(3, 0));
        CHECK(g.free_rank == 3);
    }
}

TEST_CASE("cokernel invariant under column permutation and unimodular right factor") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> entry(-9, 9);
    for (int iter = 0; iter < 50; ++iter) {
        IntMatrix m(3, 4);
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 4; ++c) m.at(r, c) = entry(rng);
        AbelianGroup g = cokernel_structure(m);

        IntMatrix perm(4, 4);
        std::vector<std::size_t> p{0, 1, 2, 3};
        std::shuffle(p.begin(), p.end(), rng);
        for (std::size_t i = 0; i < 4; ++i) perm.at(p[i], i) = 1;
        CHECK(cokernel_structure(m * perm) == g);

        IntMatrix shear = IntMatrix::identity(4);
        shear.at(0, 2) = entry(rng);
        shear.at(3, 1) = entry(rng);
        CHECK(cokernel_structure(m * shear) == g);
    }
}

TEST_CASE("integer kernels") {
    SUBCASE("one relation") {
        IntMatrix k = integer_kernel(rows({{1, 1}}));
        REQUIRE(k.cols() == 1);
        CHECK(((k.at(0, 0) == 1 && k.at(1, 0) == -1) || (k.at(0, 0) == -1 && k.at(1, 0) == 1)));
    }
    SUBCASE("identity has empty kernel") {
        CHECK(integer_kernel(IntMatrix::identity(4)).cols() == 0);
    }
    SUBCASE("zero columns survive") {
        IntMatrix k = integer_kernel(IntMatrix(2, 3));
        CHECK(k.cols() == 3);
    }
}

TEST_CASE("rational ranks") {
    CHECK(rational_rank(rows({{2, 0}, {0, 3}})) == 2);
    CHECK(rational_rank(IntMatrix(3, 3)) == 0);
    CHECK(rational_rank(rows({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("randomized lattice properties") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long> entry(-50, 50);
    std::uniform_int_distribution<std::size_t> dim(1, 6), dim2(1, 8);
    for (int iter = 0; iter < 300; ++iter) {
        IntMatrix m(dim(rng), dim2(rng));
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = entry(rng);
        check_snf_contract(m);
        std::size_t rank = rational_rank(m);
        SmithDecomposition s = smith_normal_form(m);
        std::size_t snf_rank = 0;
        for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
            if (s.d.at(i, i) != 0) ++snf_rank;
        CHECK(rank == snf_rank);
        IntMatrix k = integer_kernel(m);
        CHECK(k.cols() == m.cols() - rank);
        CHECK((m * k).is_zero());
    }
}

TEST_CASE("solve_dual_one finds a dual vector") {
    std::vector<Int> v{Int(6), Int(10), Int(15)};
    std::vector<Int> x = solve_dual_one(v);
    Int dot(0);
    for (std::size_t i = 0; i < 3; ++i) dot += v[i] * x[i];
    CHECK(dot == 1);
    CHECK_THROWS(solve_dual_one({Int(2), Int(4)}));
}

TEST_CASE("unimodular inverse round trip") {
    IntMatrix m = rows({{2, 3, 1}, {1, 2, 1}, {1, 1, 1}});
    REQUIRE(determinant(m) == 1);
    CHECK(m * unimodular_inverse(m) == IntMatrix::identity(3));
}
