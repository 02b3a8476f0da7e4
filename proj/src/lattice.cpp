#include "origami/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace origami {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    if (rows.empty()) return IntMatrix();
    IntMatrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols()) throw std::invalid_argument("ragged rows");
        for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<std::vector<Int>>& cols) {
    if (cols.empty()) return IntMatrix();
    IntMatrix m(cols[0].size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != m.rows()) throw std::invalid_argument("ragged columns");
        for (std::size_t r = 0; r < m.rows(); ++r) m.at(r, c) = cols[c][r];
    }
    return m;
}

std::vector<Int> IntMatrix::column(std::size_t c) const {
    std::vector<Int> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
    return out;
}

std::vector<Int> IntMatrix::row(std::size_t r) const {
    std::vector<Int> out(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out[c] = at(r, c);
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("dimension mismatch");
    IntMatrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(r, k);
            if (a == 0) continue;
            for (std::size_t c = 0; c < other.cols_; ++c)
                out.at(r, c) += a * other.at(k, c);
        }
    return out;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Int& x) { return x == 0; });
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? "; " : "");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << at(r, c).get_str();
    }
    os << "]";
    return os.str();
}

std::string AbelianGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank == 1) { os << "Z"; first = false; }
    else if (free_rank > 1) { os << "Z^" << free_rank; first = false; }
    for (const Int& f : invariant_factors) {
        if (!first) os << " + ";
        os << "Z/" << f.get_str();
        first = false;
    }
    return os.str();
}

namespace {

// Row/column elementary operations tracked on the transforms.
struct SnfWork {
    IntMatrix a, u, v;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
        for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
        for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
    }
    void add_row(std::size_t dst, std::size_t src, const Int& f) {  // row dst += f * row src
        if (f == 0) return;
        for (std::size_t c = 0; c < a.cols(); ++c) a.at(dst, c) += f * a.at(src, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u.at(dst, c) += f * u.at(src, c);
    }
    void add_col(std::size_t dst, std::size_t src, const Int& f) {
        if (f == 0) return;
        for (std::size_t r = 0; r < a.rows(); ++r) a.at(r, dst) += f * a.at(r, src);
        for (std::size_t r = 0; r < v.rows(); ++r) v.at(r, dst) += f * v.at(r, src);
    }
    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < a.cols(); ++c) a.at(i, c) = -a.at(i, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
    }
};

// Quotient q with a - q*b the balanced remainder, |a - q*b| <= |b| / 2.
// Keeping remainders balanced is what keeps entry sizes under control.
Int nearest_quotient(const Int& a, const Int& b) {
    Int ab = abs(b);
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), ab.get_mpz_t());
    if (2 * r > ab) q += 1;
    if (b < 0) q = -q;
    return q;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    SnfWork w{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
    const std::size_t nmin = std::min(m.rows(), m.cols());

    for (std::size_t t = 0; t < nmin; ++t) {
        bool block_zero = false;
        for (;;) {
            // Pivot: smallest nonzero |entry| in the remaining block, lowest
            // (row, col) on ties; re-selected after every reduction round.
            std::size_t pr = t, pc = t;
            Int best(0);
            for (std::size_t r = t; r < w.a.rows(); ++r)
                for (std::size_t c = t; c < w.a.cols(); ++c) {
                    const Int& x = w.a.at(r, c);
                    if (x == 0) continue;
                    Int ax = abs(x);
                    if (best == 0 || ax < best) { best = ax; pr = r; pc = c; }
                }
            if (best == 0) {
                block_zero = true;
                break;
            }
            w.swap_rows(t, pr);
            w.swap_cols(t, pc);

            // Clear the pivot column; any surviving remainder is strictly
            // smaller than the pivot, so restart with a better pivot.
            bool dirty = false;
            for (std::size_t r = t + 1; r < w.a.rows(); ++r) {
                if (w.a.at(r, t) == 0) continue;
                w.add_row(r, t, -nearest_quotient(w.a.at(r, t), w.a.at(t, t)));
                if (w.a.at(r, t) != 0) dirty = true;
            }
            if (dirty) continue;
            for (std::size_t c = t + 1; c < w.a.cols(); ++c) {
                if (w.a.at(t, c) == 0) continue;
                w.add_col(c, t, -nearest_quotient(w.a.at(t, c), w.a.at(t, t)));
                if (w.a.at(t, c) != 0) dirty = true;
            }
            if (dirty) continue;
            // Divisibility: pivot must divide every remaining entry.
            bool fixed = false;
            for (std::size_t r = t + 1; r < w.a.rows() && !fixed; ++r)
                for (std::size_t c = t + 1; c < w.a.cols() && !fixed; ++c)
                    if (w.a.at(r, c) % w.a.at(t, t) != 0) {
                        w.add_row(t, r, 1);
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (block_zero) break;
        if (w.a.at(t, t) < 0) w.negate_row(t);
    }
    return SmithDecomposition{std::move(w.a), std::move(w.u), std::move(w.v)};
}

AbelianGroup cokernel_structure(const IntMatrix& generators) {
    SmithDecomposition snf = smith_normal_form(generators);
    AbelianGroup g;
    const std::size_t nmin = std::min(generators.rows(), generators.cols());
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < nmin; ++i) {
        const Int& d = snf.d.at(i, i);
        if (d == 0) break;
        ++nonzero;
        if (d > 1) g.invariant_factors.push_back(d);
    }
    g.free_rank = generators.rows() - nonzero;
    return g;
}

namespace {

// Column-style Hermite reduction: upper-triangular echelon over Z with
// positive pivots and entries right of each pivot reduced mod the pivot.
// Operates by integer column operations only.
IntMatrix hermite_columns(IntMatrix a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t lead = 0;
    for (std::size_t r = 0; r < rows && lead < cols; ++r) {
        // gcd out row r across columns lead..end
        for (;;) {
            std::size_t best = cols;
            for (std::size_t c = lead; c < cols; ++c) {
                if (a.at(r, c) == 0) continue;
                if (best == cols || abs(a.at(r, c)) < abs(a.at(r, best))) best = c;
            }
            if (best == cols) break;
            if (best != lead)
                for (std::size_t i = 0; i < rows; ++i) std::swap(a.at(i, lead), a.at(i, best));
            bool others = false;
            for (std::size_t c = lead + 1; c < cols; ++c) {
                if (a.at(r, c) == 0) continue;
                Int q = a.at(r, c) / a.at(r, lead);
                for (std::size_t i = 0; i < rows; ++i) a.at(i, c) -= q * a.at(i, lead);
                if (a.at(r, c) != 0) others = true;
            }
            if (!others) break;
        }
        if (a.at(r, lead) == 0) continue;
        if (a.at(r, lead) < 0)
            for (std::size_t i = 0; i < rows; ++i) a.at(i, lead) = -a.at(i, lead);
        // reduce earlier columns against this pivot
        for (std::size_t c = 0; c < lead; ++c) {
            Int q = a.at(r, c) / a.at(r, lead);
            if (a.at(r, c) % a.at(r, lead) < 0) q -= 1;  // floor division
            for (std::size_t i = 0; i < rows; ++i) a.at(i, c) -= q * a.at(i, lead);
        }
        ++lead;
    }
    return a;
}

}  // namespace

IntMatrix integer_kernel(const IntMatrix& m) {
    SmithDecomposition snf = smith_normal_form(m);
    const std::size_t nmin = std::min(m.rows(), m.cols());
    std::size_t rank = 0;
    for (std::size_t i = 0; i < nmin; ++i)
        if (snf.d.at(i, i) != 0) ++rank;
    // m x = 0  <=>  d (v^-1 x) = 0  <=>  v^-1 x supported past the rank,
    // so the trailing columns of v span the kernel.
    const std::size_t k = m.cols() - rank;
    IntMatrix basis(m.cols(), k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < m.cols(); ++i)
            basis.at(i, j) = snf.v.at(i, rank + j);
    return hermite_columns(std::move(basis));
}

std::size_t rational_rank(const IntMatrix& m) {
    // Bareiss fraction-free elimination.
    IntMatrix a = m;
    const std::size_t rows = a.rows(), cols = a.cols();
    Int prev(1);
    std::size_t rank = 0, r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a.at(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(r, j), a.at(p, j));
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                a.at(i, j) = (a.at(r, c) * a.at(i, j) - a.at(i, c) * a.at(r, j)) / prev;
            a.at(i, c) = 0;
        }
        prev = a.at(r, c);
        ++r;
        ++rank;
    }
    return rank;
}

Int determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev(1);
    int sign = 1;
    for (std::size_t r = 0; r < n; ++r) {
        std::size_t p = r;
        while (p < n && a.at(p, r) == 0) ++p;
        if (p == n) return 0;
        if (p != r) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(r, j), a.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < n; ++i) {
            for (std::size_t j = r + 1; j < n; ++j)
                a.at(i, j) = (a.at(r, r) * a.at(i, j) - a.at(i, r) * a.at(r, j)) / prev;
            a.at(i, r) = 0;
        }
        prev = a.at(r, r);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
    Int det = determinant(m);
    if (det != 1 && det != -1) throw std::invalid_argument("matrix is not unimodular");
    const std::size_t n = m.rows();
    // Gauss-Jordan over Q; the result is integral because |det| = 1.
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m.at(i, j));
        a[i][n + i] = 1;
    }
    for (std::size_t r = 0; r < n; ++r) {
        std::size_t p = r;
        while (a[p][r] == 0) ++p;
        std::swap(a[r], a[p]);
        Rat inv = 1 / a[r][r];
        for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || a[i][r] == 0) continue;
            Rat f = a[i][r];
            for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[r][j];
        }
    }
    IntMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rat q = a[i][n + j];
            q.canonicalize();
            if (q.get_den() != 1) throw std::logic_error("non-integral inverse of unimodular matrix");
            out.at(i, j) = q.get_num();
        }
    return out;
}

std::vector<Int> solve_dual_one(const std::vector<Int>& v) {
    IntMatrix row(1, v.size());
    for (std::size_t i = 0; i < v.size(); ++i) row.at(0, i) = v[i];
    SmithDecomposition snf = smith_normal_form(row);
    if (v.empty() || snf.d.at(0, 0) != 1)
        throw std::invalid_argument("vector is not primitive");
    // d = u r v with d = (1, 0, ...), so r . (first column of v) = 1/u(0,0) = +-1.
    std::vector<Int> x(v.size());
    const Int& u00 = snf.u.at(0, 0);
    for (std::size_t i = 0; i < v.size(); ++i) x[i] = snf.v.at(i, 0) * u00;
    return x;
}

Int vector_gcd(const std::vector<Int>& v) {
    Int g(0);
    for (const Int& x : v) g = gcd(g, x);
    return g;
}

}  // namespace origami
