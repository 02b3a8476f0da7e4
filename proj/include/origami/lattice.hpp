#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace origami {

using Int = mpz_class;
using Rat = mpq_class;

/// Dense integer matrix with arbitrary-precision entries, row-major.
/// All arithmetic in this module is exact; there is no floating point
/// anywhere on these paths.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);
    static IntMatrix from_columns(const std::vector<std::vector<Int>>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Int> column(std::size_t c) const;
    std::vector<Int> row(std::size_t r) const;

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& other) const;
    bool operator==(const IntMatrix& other) const = default;

    bool is_zero() const;
    std::string to_string() const;

private:
    std::size_t rows_, cols_;
    std::vector<Int> data_;
};

/// Isomorphism type of a finitely generated abelian group:
/// Z^free_rank + Z/f1 + Z/f2 + ... with f1 | f2 | ... and every fi >= 2.
struct AbelianGroup {
    std::size_t free_rank = 0;
    std::vector<Int> invariant_factors;

    bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
    bool is_infinite_cyclic() const { return free_rank == 1 && invariant_factors.empty(); }
    bool is_finite_cyclic() const { return free_rank == 0 && invariant_factors.size() == 1; }
    bool operator==(const AbelianGroup& other) const = default;
    std::string to_string() const;
};

struct SmithDecomposition {
    IntMatrix d;  // diagonal, non-negative, d1 | d2 | ...
    IntMatrix u;  // unimodular, rows x rows
    IntMatrix v;  // unimodular, cols x cols; d = u * m * v
};

/// Smith normal form. Pivot choice is smallest absolute value, ties broken
/// by lowest (row, col), so the reduction is deterministic.
SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Structure of Z^n / (column span of generators); generators must have n rows.
AbelianGroup cokernel_structure(const IntMatrix& generators);

/// Basis of the integer kernel { x in Z^cols : m x = 0 }, one column per
/// basis vector, in column Hermite form for determinism.
IntMatrix integer_kernel(const IntMatrix& m);

/// Rank over Q, by exact fraction-free elimination.
std::size_t rational_rank(const IntMatrix& m);

Int determinant(const IntMatrix& m);

/// Exact inverse of a unimodular integer matrix.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// Some x with <x, v> = 1, for primitive v.  Throws if v is not primitive.
std::vector<Int> solve_dual_one(const std::vector<Int>& v);

Int vector_gcd(const std::vector<Int>& v);

}  // namespace origami
