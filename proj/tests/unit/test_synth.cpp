#include "doctest.h"
#include "prlocal/synth.hpp"
#include "test_support.hpp"

using namespace prlocal;

TEST_CASE("permutation-union graphs are d-regular in both directions") {
    for (NodeId d : {1u, 2u, 4u}) {
        DirectedGraph g = random_regular(64, d, 5);
        CHECK(g.num_edges() == 64u * d);
        CHECK(g.max_in_degree() == d);
        CHECK(g.max_out_degree() == d);
        for (NodeId v = 0; v < 64; ++v) {
            CHECK(g.out_degree(v) == d);
            CHECK(g.in_degree(v) == d);
        }
    }
}

TEST_CASE("mixed graphs respect the out-degree range") {
    DirectedGraph g = random_mixed(100, 5, 9);
    for (NodeId v = 0; v < 100; ++v) {
        CHECK(g.out_degree(v) >= 1);
        CHECK(g.out_degree(v) <= 5);
    }
}

TEST_CASE("generators are deterministic per seed") {
    DirectedGraph a = random_regular(50, 2, 42);
    DirectedGraph b = random_regular(50, 2, 42);
    DirectedGraph c = random_regular(50, 2, 43);
    CHECK(edge_list_string(a) == edge_list_string(b));
    CHECK(edge_list_string(a) != edge_list_string(c));
}
