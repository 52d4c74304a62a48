#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <vector>

#include "lefkit/graph_enum.hpp"
#include "lefkit/perazzo.hpp"

using namespace lefkit;

namespace {

std::vector<ExponentVector> monomials_of_degree(int nvars, int degree) {
    std::vector<ExponentVector> out;
    ExponentVector e(nvars, 0);
    std::function<void(int, int)> rec = [&](int v, int left) {
        if (v == nvars - 1) {
            e[v] = left;
            out.push_back(e);
            e[v] = 0;
            return;
        }
        for (int x = 0; x <= left; ++x) {
            e[v] = x;
            rec(v + 1, left - x);
        }
        e[v] = 0;
    };
    if (nvars == 0) return out;
    rec(0, degree);
    return out;
}

// independent oracle for the rank of xL : (A_F)_i -> (A_F)_{i+1}: the rank of
// the bilinear pairing (g, h) -> (L g h) applied to F, over full monomial bases
long mult_rank_oracle(const MultilinearForm& f, int i) {
    const int nv = f.variable_count();
    auto rows = monomials_of_degree(nv, i);
    auto cols = monomials_of_degree(nv, f.degree - 1 - i);
    IntegerMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            mpq_class val = 0;
            for (int v = 0; v < nv; ++v) {
                ExponentVector o(nv);
                for (int t = 0; t < nv; ++t) o[t] = rows[r][t] + cols[c][t] + (t == v);
                auto it = f.terms.find(o);
                if (it == f.terms.end()) continue;
                mpz_class fact = 1;
                for (int t = 0; t < nv; ++t)
                    for (int x = 2; x <= o[t]; ++x) fact *= x;
                val += it->second * mpq_class(fact);
            }
            mpq_class scaled = val;
            scaled.canonicalize();
            m.at(r, c) = scaled.get_num();  // entries are integral here
        }
    return rank_exact(m).rank;
}

}  // namespace

TEST_CASE("simplicial form") {
    SimplicialComplex point(1, std::vector<std::vector<int>>{{1}});
    MultilinearForm f = simplicial_form(point);
    CHECK(f.x_count == 1);
    CHECK(f.u_count == 1);
    CHECK(f.degree == 2);  // dim + 2
    CHECK(f.terms.size() == 1);
    CHECK(f.terms.begin()->first == ExponentVector{1, 1});

    SimplicialComplex wk2 = independence_complex(whisker(complete_graph(2)));
    MultilinearForm fw = simplicial_form(wk2);
    CHECK(fw.terms.size() == wk2.facets().size());
    CHECK(fw.degree == 3);
    for (const auto& [e, c] : fw.terms) CHECK(c == 1);

    CHECK_THROWS(simplicial_form(SimplicialComplex(3, std::vector<std::vector<int>>{{1, 2}, {3}})));
}

TEST_CASE("log matrix") {
    // u1u2, u2u3, u1u3: independent (rank 3)
    std::vector<ExponentVector> m1 = {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
    CHECK(rank_exact(log_matrix(m1)).rank == 3);
    // u1, u2, u1u2: dependent (rank 2 < 3)
    std::vector<ExponentVector> m2 = {{1, 0}, {0, 1}, {1, 1}};
    CHECK(rank_exact(log_matrix(m2)).rank == 2);
    // more monomials than variables: always dependent
    std::vector<ExponentVector> m3 = {{1, 0}, {0, 1}, {2, 1}};
    CHECK(rank_exact(log_matrix(m3)).rank < 3);
}

TEST_CASE("perazzo predicate") {
    CHECK_FALSE(is_perazzo(independence_complex(whisker(complete_graph(2)))));
    CHECK(is_perazzo(independence_complex(whisker(star_graph(5)))));
    CHECK(is_perazzo(independence_complex(whisker(broom_graph(3)))));
    CHECK_THROWS(is_perazzo(SimplicialComplex(3, std::vector<std::vector<int>>{{1, 2}, {3}})));
}

TEST_CASE("facet count above vertex count forces perazzo") {
    for (int n = 5; n <= 6; ++n) {
        SimplicialComplex c = independence_complex(whisker(star_graph(n)));
        CHECK(c.facets().size() > static_cast<std::size_t>(c.vertex_count()));
        CHECK(is_perazzo(c));
    }
}

TEST_CASE("idealization hilbert function") {
    SimplicialComplex wh5 = independence_complex(whisker(star_graph(5)));
    IdealizationHilbert ih = idealization_hilbert(wh5);
    CHECK(ih.socle_degree == 6);
    CHECK(ih.h.front() == 1);
    CHECK(ih.h.back() == 1);
    CHECK(ih.h[1] == 27);  // 2n + (2^{n-1}+1) for n = 5
    for (int i = 0; i <= ih.socle_degree; ++i) CHECK(ih.h[i] == ih.h[ih.socle_degree - i]);
}

TEST_CASE("apolarity dimensions") {
    MultilinearForm power;
    power.x_count = 0;
    power.u_count = 1;
    power.degree = 5;
    power.terms[{5}] = 1;
    CHECK(apolarity_dims(power) == std::vector<long>(6, 1));

    MultilinearForm xu;
    xu.x_count = 1;
    xu.u_count = 1;
    xu.degree = 2;
    xu.terms[{1, 1}] = 1;
    CHECK(apolarity_dims(xu) == std::vector<long>{1, 2, 1});

    // oracle cross-check of the idealization dimension formula
    SimplicialComplex wk2 = independence_complex(whisker(complete_graph(2)));
    MultilinearForm f = simplicial_form(wk2);
    std::vector<long> dims = apolarity_dims(f);
    IdealizationHilbert ih = idealization_hilbert(wk2);
    REQUIRE(dims.size() == ih.h.size());
    for (std::size_t i = 0; i < dims.size(); ++i) CHECK(mpz_class(dims[i]) == ih.h[i]);
}

TEST_CASE("apolarity dimensions are palindromic") {
    for (int n = 2; n <= 4; ++n)
        for (const Graph& g : all_graphs_up_to_iso(n)) {
            MultilinearForm f = simplicial_form(independence_complex(whisker(g)));
            std::vector<long> dims = apolarity_dims(f);
            for (std::size_t i = 0; i < dims.size(); ++i)
                CHECK(dims[i] == dims[dims.size() - 1 - i]);
        }
}

TEST_CASE("gorenstein multiplication rank") {
    MultilinearForm power;
    power.x_count = 0;
    power.u_count = 1;
    power.degree = 4;
    power.terms[{4}] = 1;
    for (int i = 0; i < 4; ++i) CHECK(gorenstein_mult_rank(power, i) == 1);

    // brute-force agreement on small simplicial forms
    std::vector<SimplicialComplex> cases = {
        SimplicialComplex(1, std::vector<std::vector<int>>{{1}}),
        SimplicialComplex(4, std::vector<std::vector<int>>{{1, 2}, {3, 4}}),
        independence_complex(whisker(complete_graph(2))),
    };
    for (const auto& c : cases) {
        MultilinearForm f = simplicial_form(c);
        std::vector<long> dims = apolarity_dims(f);
        for (int i = 0; i < f.degree; ++i) {
            long r = gorenstein_mult_rank(f, i);
            CHECK(r == mult_rank_oracle(f, i));
            CHECK(r <= std::min(dims[i], dims[i + 1]));
        }
    }
}

TEST_CASE("perazzo wlp predicate") {
    PerazzoVerdict star = perazzo_wlp_predicate(star_graph(5));
    CHECK(star.applicable);
    CHECK(star.wlp_fails);
    CHECK(star.restriction_confirmed);
    CHECK(star.cross_checked);
    CHECK(star.deficient_degree >= 0);

    PerazzoVerdict broom = perazzo_wlp_predicate(broom_graph(3));
    CHECK(broom.applicable);
    CHECK(broom.wlp_fails);
    CHECK(broom.restriction_confirmed);

    PerazzoVerdict k4 = perazzo_wlp_predicate(complete_graph(4));
    CHECK_FALSE(k4.applicable);
    CHECK_FALSE(k4.wlp_fails);
}
