#include "lefkit/perazzo.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <stdexcept>

namespace lefkit {

MultilinearForm simplicial_form(const SimplicialComplex& c) {
    if (!c.is_pure()) throw std::invalid_argument("simplicial_form: complex must be pure");
    MultilinearForm f;
    const auto& facets = c.facets();
    f.x_count = static_cast<int>(facets.size());
    f.u_count = c.vertex_count();
    f.degree = c.dimension() + 2;
    for (int i = 0; i < f.x_count; ++i) {
        ExponentVector e(f.x_count + f.u_count, 0);
        e[i] = 1;
        for (int v : mask_to_vertices(facets[i])) e[f.x_count + v - 1] = 1;
        f.terms[e] = 1;
    }
    return f;
}

IntegerMatrix log_matrix(const std::vector<ExponentVector>& monomials) {
    if (monomials.empty()) return IntegerMatrix(0, 0);
    const int cols = static_cast<int>(monomials.front().size());
    for (const auto& m : monomials)
        if (static_cast<int>(m.size()) != cols)
            throw std::invalid_argument("log_matrix: variable count mismatch");
    IntegerMatrix out(static_cast<int>(monomials.size()), cols);
    for (int i = 0; i < out.rows(); ++i)
        for (int j = 0; j < cols; ++j) out.at(i, j) = monomials[i][j];
    return out;
}

bool is_perazzo(const SimplicialComplex& c) {
    if (!c.is_pure()) throw std::invalid_argument("is_perazzo: complex must be pure");
    const int s = static_cast<int>(c.facets().size());
    std::vector<ExponentVector> monomials;
    for (auto f : c.facets()) {
        ExponentVector e(c.vertex_count(), 0);
        for (int v : mask_to_vertices(f)) e[v - 1] = 1;
        monomials.push_back(e);
    }
    long r = rank_exact(log_matrix(monomials)).rank;

    // the degree-d multiplication map A_1 -> A_{d+1} is the log matrix up to
    // transpose and a d! scale; the ranks must agree
    GradedMonomialAlgebra a =
        build_algebra(c, std::vector<int>(c.vertex_count(), 2));
    long r2 = rank_exact(mult_map_matrix(a, 1, c.dimension())).rank;
    if (r != r2) throw std::logic_error("is_perazzo: log-matrix cross-check failed");
    return r < s;
}

IdealizationHilbert idealization_hilbert(const SimplicialComplex& c) {
    if (!c.is_pure())
        throw std::invalid_argument("idealization_hilbert: complex must be pure");
    IdealizationHilbert out;
    out.socle_degree = c.dimension() + 2;
    std::vector<mpz_class> f = f_vector(c);
    auto dim_a = [&](int i) -> mpz_class {
        if (i < 0 || i >= static_cast<int>(f.size())) return 0;
        return f[i];
    };
    for (int i = 0; i <= out.socle_degree; ++i)
        out.h.push_back(dim_a(i) + dim_a(out.socle_degree - i));
    return out;
}

namespace {

mpz_class falling_factorial(int e, int o) {
    mpz_class r = 1;
    for (int t = 0; t < o; ++t) r *= e - t;
    return r;
}

// dimension of the span of the order-i partial derivatives of f
long catalecticant_rank(const MultilinearForm& f, int i) {
    if (f.is_zero()) return 0;
    if (i < 0 || i > f.degree) return 0;
    if (i == 0) return 1;

    // operators worth applying are the degree-i divisors of the terms
    std::set<ExponentVector> ops;
    for (const auto& [e, c] : f.terms) {
        ExponentVector o(e.size(), 0);
        std::function<void(std::size_t, int)> rec = [&](std::size_t v, int left) {
            if (v == e.size()) {
                if (left == 0) ops.insert(o);
                return;
            }
            for (int x = 0; x <= std::min(e[v], left); ++x) {
                o[v] = x;
                rec(v + 1, left - x);
            }
            o[v] = 0;
        };
        rec(0, i);
    }

    std::map<ExponentVector, int> colid;
    SparseRank sr;
    for (const auto& o : ops) {
        std::map<int, mpq_class> row;
        for (const auto& [e, c] : f.terms) {
            mpz_class scale = 1;
            bool divides = true;
            for (std::size_t v = 0; v < e.size(); ++v) {
                if (o[v] > e[v]) {
                    divides = false;
                    break;
                }
                if (o[v] > 0) scale *= falling_factorial(e[v], o[v]);
            }
            if (!divides) continue;
            ExponentVector rest(e.size());
            for (std::size_t v = 0; v < e.size(); ++v) rest[v] = e[v] - o[v];
            auto [it, fresh] = colid.emplace(rest, static_cast<int>(colid.size()));
            row[it->second] += c * mpq_class(scale);
        }
        sr.add_row(row);
    }
    return sr.rank();
}

}  // namespace

std::vector<long> apolarity_dims(const MultilinearForm& f) {
    if (f.is_zero()) throw std::invalid_argument("apolarity_dims: zero form");
    std::vector<long> h;
    for (int i = 0; i <= f.degree; ++i) h.push_back(catalecticant_rank(f, i));
    return h;
}

MultilinearForm derive_along_l(const MultilinearForm& f) {
    MultilinearForm g;
    g.x_count = f.x_count;
    g.u_count = f.u_count;
    g.degree = f.degree - 1;
    for (const auto& [e, c] : f.terms) {
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            ExponentVector sub = e;
            --sub[v];
            g.terms[sub] += c * e[v];
        }
    }
    std::erase_if(g.terms, [](const auto& kv) { return kv.second == 0; });
    return g;
}

long gorenstein_mult_rank(const MultilinearForm& f, int i) {
    if (f.is_zero()) throw std::invalid_argument("gorenstein_mult_rank: zero form");
    if (i < 0 || i >= f.degree)
        throw std::invalid_argument("gorenstein_mult_rank: degree out of range");
    MultilinearForm g = derive_along_l(f);
    if (g.is_zero()) return 0;
    return catalecticant_rank(g, i);
}

PerazzoVerdict perazzo_wlp_predicate(const Graph& g, bool cross_check) {
    PerazzoVerdict out;
    const int n = g.vertex_count();
    const int alpha = independence_number(g);
    if (3 * alpha < n + 6) return out;
    out.applicable = true;
    out.wlp_fails = true;
    out.restriction_degree = (2 * n + 4) / 3;  // ceil((2n+2)/3)

    GradedMonomialAlgebra a = whiskered_algebra(g, std::vector<int>(n, 2));
    IntegerMatrix m = mult_map_matrix(a, out.restriction_degree - 1, 1);
    out.restriction_confirmed = rank_exact(m).rank < m.rows();

    SimplicialComplex ind = independence_complex(whisker(g));
    if (cross_check && static_cast<int>(ind.facets().size()) <= 48) {
        MultilinearForm f = simplicial_form(ind);
        std::vector<long> dims = apolarity_dims(f);
        for (int i = 0; i + 1 < static_cast<int>(dims.size()); ++i) {
            long r = gorenstein_mult_rank(f, i);
            if (r < std::min(dims[i], dims[i + 1])) {
                out.cross_checked = true;
                out.deficient_degree = i;
                break;
            }
        }
    }
    return out;
}

}  // namespace lefkit
