#include "origami/polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace origami {

namespace {

Rat dot(const std::vector<Int>& a, const std::vector<Rat>& x) {
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * x[i];
    return s;
}

Int dot_int(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Exact rational feasibility of { a . x <= b } by variable elimination.
bool system_feasible(std::vector<std::pair<std::vector<Rat>, Rat>> cons, std::size_t n) {
    for (std::size_t var = 0; var < n; ++var) {
        std::size_t k = n - 1 - var;  // eliminate last variable first
        std::vector<std::pair<std::vector<Rat>, Rat>> pos, neg, zero;
        for (auto& c : cons) {
            int s = sgn(c.first[k]);
            (s > 0 ? pos : s < 0 ? neg : zero).push_back(std::move(c));
        }
        cons = std::move(zero);
        for (const auto& p : pos)
            for (const auto& q : neg) {
                // p gives x_k <= ..., q gives x_k >= ...; combine.
                std::vector<Rat> a(k, Rat(0));
                for (std::size_t i = 0; i < k; ++i)
                    a[i] = p.first[i] / p.first[k] - q.first[i] / q.first[k];
                Rat b = p.second / p.first[k] - q.second / q.first[k];
                cons.emplace_back(std::move(a), std::move(b));
            }
        std::sort(cons.begin(), cons.end());
        cons.erase(std::unique(cons.begin(), cons.end()), cons.end());
        // drop truncated coefficient tails
        for (auto& c : cons) c.first.resize(k);
    }
    for (const auto& c : cons)
        if (c.second < 0) return false;
    return true;
}

// Solve A x = b for square rational-rhs system; returns empty on singular A.
std::vector<Rat> solve_square(const std::vector<std::vector<Int>>& a_rows,
                              const std::vector<Rat>& b) {
    std::size_t n = b.size();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) m[r][c] = Rat(a_rows[r][c]);
        m[r][n] = b[r];
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return {};
        std::swap(m[col], m[piv]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat f = m[r][col] / m[col][col];
            for (std::size_t c = col; c <= n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    std::vector<Rat> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = m[i][n] / m[i][i];
        x[i].canonicalize();
    }
    return x;
}

std::size_t affine_rank(const std::vector<std::vector<Rat>>& points) {
    if (points.size() <= 1) return 0;
    std::size_t n = points[0].size();
    // clear denominators against the base point to reuse integer rank
    IntMatrix diffs(points.size() - 1, n);
    for (std::size_t i = 1; i < points.size(); ++i) {
        Int lcm(1);
        for (std::size_t j = 0; j < n; ++j) {
            Rat d = points[i][j] - points[0][j];
            lcm = lcm / gcd(lcm, d.get_den()) * d.get_den();
        }
        for (std::size_t j = 0; j < n; ++j) {
            Rat d = (points[i][j] - points[0][j]) * Rat(lcm);
            d.canonicalize();
            diffs.at(i - 1, j) = d.get_num();
        }
    }
    return rational_rank(diffs);
}

void next_subset(std::vector<std::size_t>& idx, std::size_t total, bool& done) {
    std::size_t k = idx.size();
    std::size_t i = k;
    while (i-- > 0) {
        if (idx[i] + 1 <= total - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return;
        }
    }
    done = true;
}

}  // namespace

DelzantPolytope DelzantPolytope::build(std::vector<Halfspace> halfspaces) {
    if (halfspaces.empty())
        throw PolytopeError(PolytopeErrorKind::BadInput, "no half-spaces given");
    std::size_t n = halfspaces[0].normal.size();
    if (n == 0) throw PolytopeError(PolytopeErrorKind::BadInput, "zero-dimensional ambient space");
    for (std::size_t i = 0; i < halfspaces.size(); ++i) {
        if (halfspaces[i].normal.size() != n)
            throw PolytopeError(PolytopeErrorKind::BadInput, "inconsistent normal lengths");
        if (vector_gcd(halfspaces[i].normal) != 1) {
            PolytopeError e(PolytopeErrorKind::NonPrimitiveNormal,
                            "normal " + std::to_string(i) + " is not primitive");
            e.index = i;
            throw e;
        }
        halfspaces[i].offset.canonicalize();
        for (std::size_t j = 0; j < i; ++j)
            if (halfspaces[j] == halfspaces[i]) {
                PolytopeError e(PolytopeErrorKind::RedundantHalfspace,
                                "half-space " + std::to_string(i) + " repeats " + std::to_string(j));
                e.index = i;
                throw e;
            }
    }
    std::size_t d = halfspaces.size();

    {
        std::vector<std::pair<std::vector<Rat>, Rat>> cons;
        for (const auto& h : halfspaces) {
            std::vector<Rat> a(n);
            for (std::size_t j = 0; j < n; ++j) a[j] = Rat(h.normal[j]);
            cons.emplace_back(std::move(a), h.offset);
        }
        if (!system_feasible(std::move(cons), n))
            throw PolytopeError(PolytopeErrorKind::Empty, "no point satisfies all half-spaces");
    }

    IntMatrix normal_rows(d, n);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < n; ++j) normal_rows.at(i, j) = halfspaces[i].normal[j];
    if (rational_rank(normal_rows) < n)
        throw PolytopeError(PolytopeErrorKind::Unbounded, "normals do not span; lineality ray exists");

    // Recession ray search: an unbounded direction of a pointed polyhedron is
    // tight on n-1 independent constraints of the recession cone.
    if (n == 1) {
        bool has_pos = false, has_neg = false;
        for (const auto& h : halfspaces) (h.normal[0] > 0 ? has_pos : has_neg) = true;
        if (!has_pos || !has_neg)
            throw PolytopeError(PolytopeErrorKind::Unbounded, "recession ray exists");
    } else {
        std::vector<std::size_t> idx(n - 1);
        std::iota(idx.begin(), idx.end(), std::size_t(0));
        bool done = d < n - 1;
        while (!done) {
            IntMatrix sub(n - 1, n);
            for (std::size_t r = 0; r < n - 1; ++r)
                for (std::size_t c = 0; c < n; ++c) sub.at(r, c) = halfspaces[idx[r]].normal[c];
            IntMatrix ker = integer_kernel(sub);
            if (ker.cols() == 1) {
                for (int sign : {1, -1}) {
                    bool ray = true;
                    for (std::size_t i = 0; i < d && ray; ++i) {
                        Int s = dot_int(halfspaces[i].normal, ker.column(0)) * sign;
                        if (s > 0) ray = false;
                    }
                    if (ray)
                        throw PolytopeError(PolytopeErrorKind::Unbounded, "recession ray exists");
                }
            }
            next_subset(idx, d, done);
        }
    }

    // Vertex enumeration over all n-subsets of facets.
    std::vector<std::vector<Rat>> vertices;
    std::vector<std::set<std::size_t>> vertex_facets;
    {
        std::vector<std::size_t> idx(n);
        std::iota(idx.begin(), idx.end(), std::size_t(0));
        bool done = d < n;
        while (!done) {
            std::vector<std::vector<Int>> a_rows;
            std::vector<Rat> b;
            for (std::size_t r : idx) {
                a_rows.push_back(halfspaces[r].normal);
                b.push_back(halfspaces[r].offset);
            }
            std::vector<Rat> x = solve_square(a_rows, b);
            if (!x.empty()) {
                bool feasible = true;
                std::set<std::size_t> tight;
                for (std::size_t i = 0; i < d && feasible; ++i) {
                    Rat lhs = dot(halfspaces[i].normal, x);
                    if (lhs > halfspaces[i].offset) feasible = false;
                    else if (lhs == halfspaces[i].offset) tight.insert(i);
                }
                if (feasible &&
                    std::find(vertices.begin(), vertices.end(), x) == vertices.end()) {
                    vertices.push_back(std::move(x));
                    vertex_facets.push_back(std::move(tight));
                }
            }
            next_subset(idx, d, done);
        }
    }
    if (vertices.empty())
        throw PolytopeError(PolytopeErrorKind::Empty, "no vertices");
    if (affine_rank(vertices) < n)
        throw PolytopeError(PolytopeErrorKind::NotFullDimensional,
                            "polytope spans a proper affine subspace");

    // Every listed half-space must support a facet ((n-1)-dimensional tight set).
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<std::vector<Rat>> tight;
        for (std::size_t v = 0; v < vertices.size(); ++v)
            if (vertex_facets[v].count(i)) tight.push_back(vertices[v]);
        if (tight.empty() || (n >= 2 && affine_rank(tight) < n - 1)) {
            PolytopeError e(PolytopeErrorKind::RedundantHalfspace,
                            "half-space " + std::to_string(i) + " does not support a facet");
            e.index = i;
            throw e;
        }
    }

    for (std::size_t v = 0; v < vertices.size(); ++v)
        if (vertex_facets[v].size() != n) {
            PolytopeError e(PolytopeErrorKind::NotSimple,
                            std::to_string(vertex_facets[v].size()) + " facets meet at a vertex");
            e.vertex = vertices[v];
            throw e;
        }

    for (std::size_t v = 0; v < vertices.size(); ++v) {
        IntMatrix m(n, n);
        std::size_t r = 0;
        for (std::size_t f : vertex_facets[v]) {
            for (std::size_t c = 0; c < n; ++c) m.at(r, c) = halfspaces[f].normal[c];
            ++r;
        }
        Int det = determinant(m);
        if (det < 0) det = -det;
        if (det != 1) {
            PolytopeError e(PolytopeErrorKind::NotSmooth,
                            "incident normals have |det| = " + det.get_str());
            e.vertex = vertices[v];
            e.determinant = det;
            throw e;
        }
    }

    DelzantPolytope p;
    p.dim_ = n;
    p.facets_ = std::move(halfspaces);
    p.vertices_ = std::move(vertices);
    p.vertex_facets_ = std::move(vertex_facets);
    p.facet_vertices_.assign(d, {});
    for (std::size_t v = 0; v < p.vertices_.size(); ++v)
        for (std::size_t f : p.vertex_facets_[v]) p.facet_vertices_[f].push_back(v);

    // Face lattice: each face is the intersection of the facets through any of
    // its vertices; enumerate subsets of vertex tight sets, close them up, and
    // dedupe.  codim(face) = size of its full facet set (simplicity).
    std::set<std::set<std::size_t>> face_keys;
    for (std::size_t v = 0; v < p.vertices_.size(); ++v) {
        std::vector<std::size_t> tf(p.vertex_facets_[v].begin(), p.vertex_facets_[v].end());
        for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
            std::set<std::size_t> s;
            for (std::size_t b = 0; b < n; ++b)
                if (mask & (std::size_t(1) << b)) s.insert(tf[b]);
            // close up: all facets containing every vertex of this face
            std::set<std::size_t> full;
            bool first = true;
            for (std::size_t w = 0; w < p.vertices_.size(); ++w) {
                if (!std::includes(p.vertex_facets_[w].begin(), p.vertex_facets_[w].end(),
                                   s.begin(), s.end()))
                    continue;
                if (first) {
                    full = p.vertex_facets_[w];
                    first = false;
                } else {
                    std::set<std::size_t> inter;
                    std::set_intersection(full.begin(), full.end(), p.vertex_facets_[w].begin(),
                                          p.vertex_facets_[w].end(),
                                          std::inserter(inter, inter.begin()));
                    full = std::move(inter);
                }
            }
            face_keys.insert(std::move(full));
        }
    }
    face_keys.insert(std::set<std::size_t>{});  // the polytope itself
    p.faces_by_codim_.assign(n + 1, {});
    for (const auto& key : face_keys) p.faces_by_codim_[key.size()].push_back(FaceRef{key});
    for (auto& level : p.faces_by_codim_) std::sort(level.begin(), level.end());

    p.f_vector_.assign(n, 0);
    for (std::size_t codim = 1; codim <= n; ++codim)
        p.f_vector_[n - codim] = p.faces_by_codim_[codim].size();

    // h-polynomial: sum_i f_i (t-1)^i with f_n = 1 for the polytope itself.
    std::vector<Int> h(n + 1, Int(0));
    for (std::size_t i = 0; i <= n; ++i) {
        Int fi = (i == n) ? Int(1) : Int(p.f_vector_[i]);
        // (t-1)^i expanded
        Int binom(1);
        for (std::size_t k = 0; k <= i; ++k) {
            Int term = fi * binom;
            if ((i - k) % 2 == 1) term = -term;
            h[k] += term;
            binom = binom * Int(i - k) / Int(k + 1);
        }
    }
    p.h_vector_.assign(n + 1, 0);
    Int h_sum(0);
    for (std::size_t k = 0; k <= n; ++k) {
        if (h[k] < 0 || h[k] != h[n - k])
            throw PolytopeError(PolytopeErrorKind::BadInput, "h-vector symmetry violated");
        p.h_vector_[k] = h[k].get_ui();
        h_sum += h[k];
    }
    if (h_sum != Int(p.vertices_.size()))
        throw PolytopeError(PolytopeErrorKind::BadInput, "h-vector sum differs from vertex count");
    return p;
}

DelzantPolytope DelzantPolytope::point() {
    DelzantPolytope p;
    p.dim_ = 0;
    p.vertices_.push_back({});
    p.vertex_facets_.push_back({});
    p.faces_by_codim_.push_back({FaceRef{}});
    p.h_vector_ = {1};
    return p;
}

bool DelzantPolytope::is_face(const std::set<std::size_t>& facet_indices) const {
    for (const auto& tight : vertex_facets_)
        if (std::includes(tight.begin(), tight.end(), facet_indices.begin(), facet_indices.end()))
            return true;
    return false;
}

bool DelzantPolytope::facets_adjacent(std::size_t f, std::size_t g) const {
    return f != g && is_face({f, g});
}

bool DelzantPolytope::facets_disjoint(std::size_t f, std::size_t g) const {
    return f != g && !is_face({f, g});
}

std::vector<std::size_t> DelzantPolytope::adjacent_facets(std::size_t f) const {
    std::vector<std::size_t> out;
    for (std::size_t g = 0; g < facets_.size(); ++g)
        if (facets_adjacent(f, g)) out.push_back(g);
    return out;
}

std::set<Halfspace> DelzantPolytope::local_fan_at_facet(std::size_t f) const {
    if (f >= facets_.size())
        throw PolytopeError(PolytopeErrorKind::InvalidFacet, "facet index out of range");
    std::set<Halfspace> fan{facets_[f]};
    for (std::size_t g : adjacent_facets(f)) fan.insert(facets_[g]);
    return fan;
}

FacetSubpolytope facet_subpolytope(const DelzantPolytope& p, std::size_t facet) {
    if (facet >= p.facet_count())
        throw PolytopeError(PolytopeErrorKind::InvalidFacet, "facet index out of range");
    std::size_t n = p.dim();
    IntMatrix u_row(1, n);
    for (std::size_t j = 0; j < n; ++j) u_row.at(0, j) = p.facet(facet).normal[j];
    IntMatrix basis = integer_kernel(u_row);  // n x (n-1), Hermite columns

    // deterministic origin: lexicographically smallest vertex on the facet
    const std::vector<std::size_t>& fv = p.facet_vertices(facet);
    std::vector<Rat> origin = p.vertices()[fv[0]];
    for (std::size_t v : fv)
        if (p.vertices()[v] < origin) origin = p.vertices()[v];

    FacetSubpolytope out;
    out.basis = basis;
    out.origin = origin;
    if (n == 1) {
        out.polytope = DelzantPolytope::point();
        return out;
    }
    std::vector<Halfspace> sub;
    for (std::size_t j : p.adjacent_facets(facet)) {
        std::vector<Int> nrm(n > 0 ? n - 1 : 0);
        for (std::size_t c = 0; c + 1 < n; ++c) {
            Int s(0);
            for (std::size_t r = 0; r < n; ++r) s += p.facet(j).normal[r] * basis.at(r, c);
            nrm[c] = s;
        }
        Rat off = p.facet(j).offset - dot(p.facet(j).normal, origin);
        Int g = vector_gcd(nrm);
        if (g > 1) {
            for (auto& e : nrm) e /= g;
            off /= Rat(g);
            off.canonicalize();
        }
        sub.push_back(Halfspace{std::move(nrm), std::move(off)});
        out.parent_facet.push_back(j);
    }
    out.polytope = DelzantPolytope::build(std::move(sub));
    return out;
}

}  // namespace origami
