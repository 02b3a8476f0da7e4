#include "origami/cohomology.hpp"

#include <algorithm>
#include <map>

namespace origami {

namespace {

std::set<std::size_t> support(const std::vector<unsigned>& exponents) {
    std::set<std::size_t> s;
    for (std::size_t i = 0; i < exponents.size(); ++i)
        if (exponents[i] > 0) s.insert(i);
    return s;
}

void enumerate_face_monomials(const DelzantPolytope& p, std::size_t k,
                              std::vector<unsigned>& current, std::size_t from,
                              std::vector<std::vector<unsigned>>& out) {
    if (k == 0) {
        if (p.is_face(support(current))) out.push_back(current);
        return;
    }
    for (std::size_t i = from; i < p.facet_count(); ++i) {
        current[i] += 1;
        // prune: support must stay a face
        if (p.is_face(support(current)))
            enumerate_face_monomials(p, k - 1, current, i, out);
        current[i] -= 1;
    }
}

}  // namespace

std::size_t GradedBasis::monomial_index(const std::vector<unsigned>& exponents) const {
    for (std::size_t i = 0; i < monomials.size(); ++i)
        if (monomials[i] == exponents) return i;
    throw CohomologyError("monomial is not in the spanning set");
}

GradedBasis graded_basis(const DelzantPolytope& p, std::size_t k) {
    if (k > p.dim()) throw CohomologyError("degree out of range");
    GradedBasis g;
    g.degree = k;
    std::vector<unsigned> cur(p.facet_count(), 0);
    enumerate_face_monomials(p, k, cur, 0, g.monomials);

    // relations: (sum_i <e_t, u_i> y_i) * m for every coordinate direction t
    // and every degree-(k-1) face monomial m, truncated to face monomials
    std::vector<std::vector<unsigned>> lower;
    if (k > 0) {
        std::vector<unsigned> cur2(p.facet_count(), 0);
        enumerate_face_monomials(p, k - 1, cur2, 0, lower);
    }
    g.relation_matrix = IntMatrix(g.monomials.size(), lower.size() * p.dim());
    std::size_t col = 0;
    for (const auto& m : lower) {
        for (std::size_t t = 0; t < p.dim(); ++t, ++col) {
            for (std::size_t i = 0; i < p.facet_count(); ++i) {
                const Int& coeff = p.facet(i).normal[t];
                if (coeff == 0) continue;
                std::vector<unsigned> prod = m;
                prod[i] += 1;
                if (!p.is_face(support(prod))) continue;  // zero in the face ring
                g.relation_matrix.at(g.monomial_index(prod), col) += coeff;
            }
        }
    }

    SmithDecomposition snf = smith_normal_form(g.relation_matrix);
    std::size_t rel_rank = 0;
    const std::size_t nmin = std::min(g.relation_matrix.rows(), g.relation_matrix.cols());
    for (std::size_t i = 0; i < nmin; ++i) {
        if (snf.d.at(i, i) == 0) break;
        if (snf.d.at(i, i) != 1)
            throw CohomologyError("graded quotient has torsion; polytope is not Delzant?");
        ++rel_rank;
    }
    g.rank = g.monomials.size() - rel_rank;
    if (g.rank != p.h_vector()[k])
        throw CohomologyError("graded rank disagrees with the h-vector");

    // In u-coordinates the quotient keeps the rows past rel_rank; lifts are
    // the matching columns of u^-1.
    g.projection = IntMatrix(g.rank, g.monomials.size());
    for (std::size_t r = 0; r < g.rank; ++r)
        for (std::size_t c = 0; c < g.monomials.size(); ++c)
            g.projection.at(r, c) = snf.u.at(rel_rank + r, c);
    IntMatrix uinv = unimodular_inverse(snf.u);
    g.lift = IntMatrix(g.monomials.size(), g.rank);
    for (std::size_t r = 0; r < g.monomials.size(); ++r)
        for (std::size_t c = 0; c < g.rank; ++c) g.lift.at(r, c) = uinv.at(r, rel_rank + c);
    return g;
}

namespace {

// product of a monomial combination with one variable, truncated to faces,
// written in the coordinates of the target basis
void accumulate_product(const DelzantPolytope& p, const GradedBasis& target,
                        const std::vector<unsigned>& monomial, std::size_t var, const Int& coeff,
                        std::vector<Int>& out) {
    std::vector<unsigned> prod = monomial;
    prod[var] += 1;
    if (!p.is_face(support(prod))) return;
    out[target.monomial_index(prod)] += coeff;
}

std::vector<Int> matrix_column_times(const IntMatrix& m, const std::vector<Int>& x) {
    std::vector<Int> out(m.rows(), Int(0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.at(r, c) != 0 && x[c] != 0) out[r] += m.at(r, c) * x[c];
    return out;
}

}  // namespace

GradedMap multiply_by_class(const DelzantPolytope& p, const std::vector<Int>& cls, std::size_t k) {
    GradedBasis deg1 = graded_basis(p, 1);
    GradedBasis source = graded_basis(p, k);
    GradedBasis target = graded_basis(p, k + 1);
    if (cls.size() != deg1.rank) throw CohomologyError("class has wrong coordinate size");
    std::vector<Int> c_monomial = matrix_column_times(deg1.lift, cls);

    auto image_of = [&](const std::vector<Int>& source_monomial) {
        std::vector<Int> acc(target.monomials.size(), Int(0));
        for (std::size_t m = 0; m < source.monomials.size(); ++m) {
            if (source_monomial[m] == 0) continue;
            for (std::size_t v = 0; v < p.facet_count(); ++v) {
                if (c_monomial[v] == 0) continue;
                accumulate_product(p, target, source.monomials[m], v,
                                   source_monomial[m] * c_monomial[v], acc);
            }
        }
        return matrix_column_times(target.projection, acc);
    };

    GradedMap map;
    map.source_degree = k;
    map.target_degree = k + 1;
    map.matrix = IntMatrix(target.rank, source.rank);
    for (std::size_t j = 0; j < source.rank; ++j) {
        std::vector<Int> basis_j(source.rank, Int(0));
        basis_j[j] = 1;
        std::vector<Int> img = image_of(matrix_column_times(source.lift, basis_j));
        for (std::size_t r = 0; r < target.rank; ++r) map.matrix.at(r, j) = img[r];
    }
    // well-definedness: source relations must map into target relations
    for (std::size_t j = 0; j < source.relation_matrix.cols(); ++j) {
        std::vector<Int> img = image_of(source.relation_matrix.column(j));
        for (const Int& x : img)
            if (x != 0) throw CohomologyError("cup product is not well defined on the quotient");
    }
    return map;
}

GradedMap phi_tilde(const DelzantPolytope& p, const std::set<std::size_t>& fold_facets,
                    std::size_t k) {
    if (fold_facets.empty()) throw CohomologyError("empty fold set");
    if (k == 0 || k > p.dim()) throw CohomologyError("degree out of range");
    GradedBasis target = graded_basis(p, k);

    GradedMap map;
    map.source_degree = k - 1;
    map.target_degree = k;

    std::vector<std::vector<Int>> columns;  // target quotient coords
    for (std::size_t s : fold_facets) {
        if (s >= p.facet_count()) throw CohomologyError("fold facet out of range");
        FacetSubpolytope sub = facet_subpolytope(p, s);
        GradedBasis src = graded_basis(sub.polytope, k - 1);
        for (std::size_t j = 0; j < src.rank; ++j) {
            std::vector<Int> basis_j(src.rank, Int(0));
            basis_j[j] = 1;
            std::vector<Int> rep = matrix_column_times(src.lift, basis_j);
            std::vector<Int> acc(target.monomials.size(), Int(0));
            for (std::size_t m = 0; m < src.monomials.size(); ++m) {
                if (rep[m] == 0) continue;
                // substitute b_f -> y_{parent facet}, then multiply by y_s
                std::vector<unsigned> exps(p.facet_count(), 0);
                for (std::size_t f = 0; f < src.monomials[m].size(); ++f)
                    exps[sub.parent_facet[f]] += src.monomials[m][f];
                exps[s] += 1;
                if (!p.is_face(support(exps))) continue;
                acc[target.monomial_index(exps)] += rep[m];
            }
            columns.push_back(matrix_column_times(target.projection, acc));
        }
    }
    map.matrix = IntMatrix(target.rank, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (std::size_t r = 0; r < target.rank; ++r) map.matrix.at(r, c) = columns[c][r];
    return map;
}

namespace {

void check_disjoint_folds(const DelzantPolytope& p, const std::set<std::size_t>& fold_facets) {
    for (auto a = fold_facets.begin(); a != fold_facets.end(); ++a)
        for (auto b = std::next(a); b != fold_facets.end(); ++b)
            if (!p.facets_disjoint(*a, *b))
                throw CohomologyError("fold facets intersect");
}

}  // namespace

ComplementCohomology complement_cohomology(const DelzantPolytope& p,
                                           const std::set<std::size_t>& fold_facets) {
    if (fold_facets.empty()) throw CohomologyError("empty fold set");
    check_disjoint_folds(p, fold_facets);
    const std::size_t n = p.dim(), d = p.facet_count(), r = fold_facets.size();

    ComplementCohomology out;
    out.groups.assign(2 * n + 1, AbelianGroup{});
    out.groups[0].free_rank = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        GradedMap phi = phi_tilde(p, fold_facets, k);
        out.groups[2 * k - 1].free_rank = integer_kernel(phi.matrix).cols();
        out.groups[2 * k] = cokernel_structure(phi.matrix);
    }

    // prismatic <=> the non-fold facet normals leave an infinite cyclic quotient
    std::vector<std::vector<Int>> non_fold;
    for (std::size_t f = 0; f < d; ++f)
        if (!fold_facets.count(f)) non_fold.push_back(p.facet(f).normal);
    IntMatrix nf(n, non_fold.size());
    for (std::size_t c = 0; c < non_fold.size(); ++c)
        for (std::size_t row = 0; row < n; ++row) nf.at(row, c) = non_fold[c][row];
    out.prismatic = cokernel_structure(nf).is_infinite_cyclic();

    // closed forms for degrees 0, 1, 2, 2n-1, 2n
    std::map<std::size_t, std::size_t> expected;
    auto expect = [&](std::size_t deg, std::size_t value) {
        auto [it, inserted] = expected.emplace(deg, value);
        if (!inserted && it->second != value)
            throw CohomologyError("inconsistent closed-form expectations");
    };
    expect(0, 1);
    if (out.prismatic) {
        expect(1, 1);
        expect(2, d - n - 1);
        expect(2 * n - 1, 1);
    } else {
        expect(1, 0);
        expect(2, d - n - r);
        expect(2 * n - 1, r - 1);
    }
    expect(2 * n, 0);
    for (const auto& [deg, value] : expected) {
        std::size_t got = out.groups[deg].free_rank;
        if (got != value)
            throw CohomologyError("complement rank in degree " + std::to_string(deg) +
                                  " disagrees with the closed form");
    }
    return out;
}

Int complement_euler(const DelzantPolytope& p, const std::set<std::size_t>& fold_facets) {
    check_disjoint_folds(p, fold_facets);
    Int chi(p.vertices().size());
    for (std::size_t s : fold_facets) chi -= Int(p.facet_vertices(s).size());
    return chi;
}

FoldComponentInvariants fold_component_invariants(const DelzantPolytope& p, std::size_t s) {
    if (s >= p.facet_count()) throw CohomologyError("not a facet");
    const std::size_t n = p.dim();
    if (n == 1) {
        // the divisor is a point; the component is a plain circle
        FoldComponentInvariants out;
        out.euler_magnitude = 0;
        out.betti = {1, 1};
        return out;
    }
    FacetSubpolytope sub = facet_subpolytope(p, s);
    const DelzantPolytope& b = sub.polytope;

    // y_s = -sum_{i != s} <v, u_i> y_i with <v, u_s> = 1; restrict to the
    // divisor by keeping adjacent facets and dropping disjoint ones.
    std::vector<Int> v = solve_dual_one(p.facet(s).normal);
    GradedBasis deg1 = graded_basis(b, 1);
    std::vector<Int> e_monomial(deg1.monomials.size(), Int(0));
    for (std::size_t f = 0; f < sub.parent_facet.size(); ++f) {
        std::size_t i = sub.parent_facet[f];
        Int coeff(0);
        for (std::size_t t = 0; t < n; ++t) coeff += v[t] * p.facet(i).normal[t];
        if (coeff == 0) continue;
        std::vector<unsigned> exps(b.facet_count(), 0);
        exps[f] = 1;
        e_monomial[deg1.monomial_index(exps)] -= coeff;
    }

    FoldComponentInvariants out;
    out.euler_class = matrix_column_times(deg1.projection, e_monomial);
    if (deg1.rank == 1) out.euler_magnitude = abs(out.euler_class[0]);

    // circle-bundle Betti numbers from cup product with the Euler class:
    // even degrees give cokernel ranks, odd degrees kernel ranks
    std::vector<std::size_t> cup_rank(n, 0);  // rank of H^{2j} -> H^{2j+2}, j = 0..n-2
    for (std::size_t j = 0; j + 1 < n; ++j)
        cup_rank[j] = rational_rank(multiply_by_class(b, out.euler_class, j).matrix);
    const std::vector<std::size_t>& h = b.h_vector();
    out.betti.assign(2 * n, 0);
    for (std::size_t j = 0; j + 1 <= n; ++j) {
        out.betti[2 * j] = h[j] - (j == 0 ? 0 : cup_rank[j - 1]);
        out.betti[2 * j + 1] = h[j] - (j + 1 == n ? 0 : cup_rank[j]);
    }

    if (n == 2) {
        const Int& e = *out.euler_magnitude;
        out.dim4_type = e == 0   ? Dim4FoldType::S1xS2
                        : e == 1 ? Dim4FoldType::S3
                                 : Dim4FoldType::Lens;
    }
    return out;
}

std::string to_string(Dim4FoldType t) {
    switch (t) {
        case Dim4FoldType::None: return "none";
        case Dim4FoldType::S1xS2: return "S1xS2";
        case Dim4FoldType::S3: return "S3";
        case Dim4FoldType::Lens: return "Lens";
    }
    return "?";
}

}  // namespace origami
