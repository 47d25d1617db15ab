#include "doctest.h"

#include <algorithm>

#include "locdim/clique.hpp"
#include "locdim/family.hpp"

using namespace locdim;

TEST_CASE("complete, path, cycle") {
    CHECK(complete_graph(5).edge_count() == 10);
    CHECK(path_graph(1).edge_count() == 0);
    CHECK(path_graph(4).edge_count() == 3);
    CHECK(cycle_graph(5).edge_count() == 5);
    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
}

TEST_CASE("knr layout") {
    Graph k41 = knr_graph(4, 1);
    CHECK(k41.edge_count() == 5);
    std::vector<int> degrees;
    for (int v = 0; v < 4; ++v) degrees.push_back(k41.degree(v));
    std::sort(degrees.begin(), degrees.end());
    CHECK(degrees == std::vector<int>{2, 2, 3, 3});

    Graph k53 = knr_graph(5, 3);
    CHECK(k53.degree(4) == 1);  // apex keeps one edge
    CHECK_FALSE(k53.adjacent(4, 3));
    CHECK_FALSE(k53.adjacent(4, 2));
    CHECK_FALSE(k53.adjacent(4, 1));
    CHECK(k53.adjacent(4, 0));

    CHECK_THROWS_AS(knr_graph(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(knr_graph(5, 4), std::invalid_argument);
    CHECK_THROWS_AS(knr_graph(5, 0), std::invalid_argument);
}

TEST_CASE("gtw layout") {
    Graph g24 = gtw_graph(2, 4);
    CHECK(g24.n() == 7);
    CHECK(g24.edge_count() == 12);
    CHECK(clique_number(g24) == 4);

    CHECK_THROWS_AS(gtw_graph(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(gtw_graph(2, 1), std::invalid_argument);
}

TEST_CASE("gtw has t*C(omega,2) edges and is connected") {
    for (int t = 2; t <= 5; ++t)
        for (int omega = 2; omega <= 6; ++omega) {
            Graph g = gtw_graph(t, omega);
            CHECK(g.n() == t * (omega - 1) + 1);
            CHECK(g.edge_count() == t * omega * (omega - 1) / 2);
            CHECK(is_connected(g));
        }
}
