#include "doctest.h"

#include <sstream>

#include "locdim/family.hpp"
#include "locdim/graph6.hpp"
#include "locdim/sweep.hpp"

using namespace locdim;

TEST_CASE("decode short-form tokens") {
    Graph k3 = decode_graph6("Bw");
    CHECK(k3.n() == 3);
    CHECK(k3.edge_count() == 3);

    Graph k2 = decode_graph6("A_");
    CHECK(k2.n() == 2);
    CHECK(k2.adjacent(0, 1));

    Graph empty3 = decode_graph6("B?");
    CHECK(empty3.n() == 3);
    CHECK(empty3.edge_count() == 0);
}

TEST_CASE("encode short-form tokens") {
    CHECK(encode_graph6(complete_graph(3)) == "Bw");
    CHECK(encode_graph6(from_edges(2, {{0, 1}})) == "A_");
    CHECK(encode_graph6(Graph(3)) == "B?");
    // Canonical layout of the glued-triangles generator.
    CHECK(encode_graph6(gtw_graph(2, 3)) == "D{c");
}

TEST_CASE("decode errors") {
    CHECK_THROWS_AS(decode_graph6(""), Graph6Error);
    CHECK_THROWS_AS(decode_graph6("B"), Graph6Error);        // payload too short
    CHECK_THROWS_AS(decode_graph6("Bww"), Graph6Error);      // trailing bytes
    CHECK_THROWS_AS(decode_graph6("B\x20"), Graph6Error);    // byte below range
    CHECK_THROWS_AS(decode_graph6("A@"), Graph6Error);       // nonzero padding
    CHECK_THROWS_AS(decode_graph6("Bx"), Graph6Error);       // nonzero padding
    CHECK_THROWS_AS(decode_graph6("~~????"), Graph6Error);   // 8-byte order form
    CHECK_THROWS_AS(decode_graph6("~??B??"), Graph6Error);   // long form below 63
}

TEST_CASE("round trip on random graphs") {
    std::uint64_t state = 42;
    auto next = [&] {
        state += 0x9E3779B97f4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    };
    for (int n = 1; n <= 10; ++n) {
        for (int rep = 0; rep < 25; ++rep) {
            std::uint64_t bits = n > 1 ? next() % (std::uint64_t{1} << (n * (n - 1) / 2)) : 0;
            Graph g = graph_from_mask(n, bits);
            std::string token = encode_graph6(g);
            Graph back = decode_graph6(token);
            CHECK(back.n() == g.n());
            CHECK(back.edges() == g.edges());
            CHECK(encode_graph6(back) == token);
        }
    }
}

TEST_CASE("long form for orders 63 and 64") {
    for (int n : {63, 64}) {
        RandomModel model{1, n, 0.3, 7, 0};
        Graph g = random_graph(model, 0);
        std::string token = encode_graph6(g);
        CHECK(token.substr(0, 1) == "~");
        Graph back = decode_graph6(token);
        CHECK(back.n() == n);
        CHECK(back.edges() == g.edges());
        CHECK(encode_graph6(back) == token);
    }
}

TEST_CASE("decoder either rejects or round-trips arbitrary byte strings") {
    std::uint64_t state = 271828;
    auto next = [&] {
        state += 0x9E3779B97f4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    };
    int accepted = 0;
    for (int rep = 0; rep < 4000; ++rep) {
        std::string token;
        int len = 1 + static_cast<int>(next() % 12);
        for (int i = 0; i < len; ++i)
            token.push_back(static_cast<char>(32 + next() % 96));
        try {
            Graph g = decode_graph6(token);
            CHECK(encode_graph6(g) == token);
            ++accepted;
        } catch (const Graph6Error&) {
        }
    }
    CHECK(accepted > 0);  // some random strings are valid tokens
}

TEST_CASE("corpus reader skips header and blank lines") {
    std::istringstream in(">>graph6<<\nBw\n\nA_\r\n");
    auto lines = read_graph6_lines(in);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0].line_number == 2);
    CHECK(lines[0].token == "Bw");
    CHECK(lines[1].line_number == 4);
    CHECK(lines[1].token == "A_");

    std::istringstream joined(">>graph6<<Bw\n");
    auto joined_lines = read_graph6_lines(joined);
    REQUIRE(joined_lines.size() == 1);
    CHECK(joined_lines[0].token == "Bw");

    CHECK_THROWS(read_graph6_file("/nonexistent/file.g6"));
}
