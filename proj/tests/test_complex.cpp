#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <set>

#include "lefkit/complex.hpp"
#include "lefkit/graph.hpp"
#include "lefkit/graph_enum.hpp"

using namespace lefkit;

TEST_CASE("construction invariants") {
    CHECK_THROWS(SimplicialComplex(3, std::vector<std::vector<int>>{{1, 2}, {1}}));
    CHECK_THROWS(SimplicialComplex(2, std::vector<std::vector<int>>{{1, 3}}));
    SimplicialComplex empty(0, std::vector<std::uint64_t>{});
    CHECK(empty.dimension() == -1);
    CHECK(f_vector(empty) == std::vector<mpz_class>{1});
}

TEST_CASE("independence complex") {
    SimplicialComplex k2 = independence_complex(complete_graph(2));
    CHECK(k2.facets() == std::vector<std::uint64_t>{0b01, 0b10});

    SimplicialComplex wk2 = independence_complex(whisker(complete_graph(2)));
    std::set<std::uint64_t> facets(wk2.facets().begin(), wk2.facets().end());
    CHECK(facets == std::set<std::uint64_t>{vertices_to_mask({3, 4}), vertices_to_mask({1, 4}),
                                            vertices_to_mask({2, 3})});

    for (int n = 2; n <= 4; ++n) {
        Graph g = star_graph(n);
        SimplicialComplex c = independence_complex(whisker(g));
        CHECK(c.is_pure());
        CHECK(c.dimension() == n - 1);
    }
}

TEST_CASE("purity") {
    CHECK_FALSE(SimplicialComplex(3, std::vector<std::vector<int>>{{1, 2}, {3}}).is_pure());
    CHECK(SimplicialComplex(3, std::vector<std::vector<int>>{{1, 2, 3}}).is_pure());
}

TEST_CASE("f_vector") {
    SimplicialComplex single(2, std::vector<std::vector<int>>{{1, 2}});
    CHECK(f_vector(single) == std::vector<mpz_class>{1, 2, 1});
    CHECK(single.dimension() == 1);

    SimplicialComplex wk2 = independence_complex(whisker(complete_graph(2)));
    CHECK(f_vector(wk2) == std::vector<mpz_class>{1, 4, 3});

    SimplicialComplex h4 = independence_complex(star_graph(4));
    CHECK(f_vector(h4) == std::vector<mpz_class>{1, 4, 3, 1});

    SimplicialComplex tri(3, std::vector<std::vector<int>>{{1, 2, 3}});
    CHECK(tri.dimension() == 2);
}

TEST_CASE("f-vector equals independence sequence, exhaustively to 6 vertices") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : all_graphs_up_to_iso(n)) {
            auto seq = independence_sequence(g);
            auto f = f_vector(independence_complex(g));
            CHECK(f == seq.counts);
        }
}

TEST_CASE("independence complexes are flag") {
    // every minimal nonface has size 2
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : all_graphs_up_to_iso(n)) {
            SimplicialComplex c = independence_complex(g);
            for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
                if (c.is_face(mask)) continue;
                bool proper_subsets_are_faces = true;
                for (std::uint64_t m = mask; m; m &= m - 1)
                    if (!c.is_face(mask & ~(m & -m))) proper_subsets_are_faces = false;
                if (proper_subsets_are_faces) CHECK(std::popcount(mask) == 2);
            }
        }
}

TEST_CASE("parse_complex") {
    SimplicialComplex c = parse_complex("4 2\n1 2 3\n3 4\n");
    CHECK(c.vertex_count() == 4);
    CHECK(c.facets().size() == 2);
    CHECK_FALSE(c.is_pure());
    CHECK_THROWS(parse_complex("4 3\n1 2\n"));
}
