#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace locdim {

// Graphs are simple and undirected, vertices are dense ids 0..n-1.
// Everything downstream iterates vertex sets in ascending id order, so
// all "choose the first ..." steps are deterministic.
//
// Adjacency is kept as one 64-bit neighbour mask per vertex, which caps
// the supported order at 64 vertices (desk scale; graph6 corpora used
// here stay below 63 anyway).

inline constexpr int kMaxVertices = 64;

inline std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

inline std::uint64_t all_vertices_mask(int n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

int popcount64(std::uint64_t x);
int lowest_bit(std::uint64_t x);  // index of least significant set bit; x != 0

// Set of vertex ids backed by a bitmask. Iteration is ascending.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<int> vs) {
        for (int v : vs) add(v);
    }

    static VertexSet full(int n) { return VertexSet(all_vertices_mask(n)); }

    bool contains(int v) const { return (bits_ >> v) & 1; }
    void add(int v) { bits_ |= bit(v); }
    void remove(int v) { bits_ &= ~bit(v); }
    int size() const { return popcount64(bits_); }
    bool empty() const { return bits_ == 0; }
    std::uint64_t bits() const { return bits_; }

    VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    VertexSet minus(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    bool operator==(const VertexSet&) const = default;

    bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

    std::vector<int> to_vector() const;

    class iterator {
    public:
        explicit iterator(std::uint64_t rest) : rest_(rest) {}
        int operator*() const { return lowest_bit(rest_); }
        iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

    private:
        std::uint64_t rest_;
    };
    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

private:
    std::uint64_t bits_ = 0;
};

using Edge = std::pair<int, int>;

class Graph {
public:
    // n isolated vertices.
    explicit Graph(int n);

    int n() const { return n_; }
    int edge_count() const;

    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1; }
    std::uint64_t neighbours(int v) const { return adj_[v]; }
    int degree(int v) const { return popcount64(adj_[v]); }

    std::vector<Edge> edges() const;  // (u, v) with u < v, sorted

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("vertex id " + std::to_string(v) +
                                        " out of range for n=" + std::to_string(n_));
    }

private:
    friend Graph from_edges(int n, const std::vector<Edge>& edges);
    friend class GraphBuilder;

    void add_edge(int u, int v) {
        adj_[u] |= bit(v);
        adj_[v] |= bit(u);
    }

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

// Construction helper for decoders/generators; keeps Graph immutable for users.
class GraphBuilder {
public:
    explicit GraphBuilder(int n) : g_(n) {}
    void add_edge(int u, int v) { g_.add_edge(u, v); }
    Graph take() { return std::move(g_); }

private:
    Graph g_;
};

Graph from_edges(int n, const std::vector<Edge>& edges);

// BFS distances from v; nullopt marks vertices unreachable from v.
std::vector<std::optional<int>> distances_from(const Graph& g, int v);

// All-pairs BFS distances; requires a connected graph.
std::vector<std::vector<int>> all_pairs_distances(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertex_map;  // new id -> old id, ascending
};

InducedSubgraph induced(const Graph& g, VertexSet w);

std::vector<Edge> edges_between(const Graph& g, VertexSet a, VertexSet b);

bool is_connected(const Graph& g);

// Mask of vertices reachable from v.
std::uint64_t reachable_from(const Graph& g, int v);

// True iff the induced subgraph on {x, y1, y2} has exactly two edges.
bool is_p3(const Graph& g, int x, int y1, int y2);

bool is_bipartite(const Graph& g);

}  // namespace locdim
