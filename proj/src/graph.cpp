#include "locdim/graph.hpp"

#include <algorithm>
#include <bit>

namespace locdim {

int popcount64(std::uint64_t x) { return std::popcount(x); }

int lowest_bit(std::uint64_t x) { return std::countr_zero(x); }

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    out.reserve(size());
    for (int v : *this) out.push_back(v);
    return out;
}

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("graph order must be in [1, " +
                                    std::to_string(kMaxVertices) + "], got " +
                                    std::to_string(n));
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u) {
        std::uint64_t higher = adj_[u] & ~(all_vertices_mask(u + 1));
        while (higher) {
            int v = lowest_bit(higher);
            higher &= higher - 1;
            out.emplace_back(u, v);
        }
    }
    return out;
}

Graph from_edges(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        g.check_vertex(u);
        g.check_vertex(v);
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        g.add_edge(u, v);  // duplicates collapse in the bitmask
    }
    return g;
}

std::vector<std::optional<int>> distances_from(const Graph& g, int v) {
    g.check_vertex(v);
    std::vector<std::optional<int>> dist(static_cast<std::size_t>(g.n()));
    std::uint64_t seen = bit(v);
    std::uint64_t frontier = bit(v);
    int d = 0;
    while (frontier) {
        std::uint64_t rest = frontier;
        while (rest) {
            dist[static_cast<std::size_t>(lowest_bit(rest))] = d;
            rest &= rest - 1;
        }
        std::uint64_t next = 0;
        rest = frontier;
        while (rest) {
            next |= g.neighbours(lowest_bit(rest));
            rest &= rest - 1;
        }
        frontier = next & ~seen;
        seen |= next;
        ++d;
    }
    return dist;
}

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
    if (!is_connected(g))
        throw std::invalid_argument("all_pairs_distances requires a connected graph");
    std::vector<std::vector<int>> d(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) {
        auto row = distances_from(g, v);
        d[static_cast<std::size_t>(v)].reserve(row.size());
        for (auto& x : row) d[static_cast<std::size_t>(v)].push_back(*x);
    }
    return d;
}

InducedSubgraph induced(const Graph& g, VertexSet w) {
    if (!w.subset_of(VertexSet::full(g.n())))
        throw std::invalid_argument("induced: set contains out-of-range vertex");
    if (w.empty()) throw std::invalid_argument("induced: empty vertex set");
    std::vector<int> map = w.to_vector();
    std::vector<int> rev(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < map.size(); ++i) rev[static_cast<std::size_t>(map[i])] = static_cast<int>(i);
    GraphBuilder b(static_cast<int>(map.size()));
    for (std::size_t i = 0; i < map.size(); ++i) {
        std::uint64_t nb = g.neighbours(map[i]) & w.bits();
        while (nb) {
            int u = lowest_bit(nb);
            nb &= nb - 1;
            if (u > map[i]) b.add_edge(static_cast<int>(i), rev[static_cast<std::size_t>(u)]);
        }
    }
    return InducedSubgraph{b.take(), std::move(map)};
}

std::vector<Edge> edges_between(const Graph& g, VertexSet a, VertexSet b) {
    if (!(a & b).empty())
        throw std::invalid_argument("edges_between: sets must be disjoint");
    if (!a.subset_of(VertexSet::full(g.n())) || !b.subset_of(VertexSet::full(g.n())))
        throw std::invalid_argument("edges_between: set contains out-of-range vertex");
    std::vector<Edge> out;
    for (int u : a) {
        std::uint64_t nb = g.neighbours(u) & b.bits();
        while (nb) {
            out.emplace_back(u, lowest_bit(nb));
            nb &= nb - 1;
        }
    }
    return out;
}

std::uint64_t reachable_from(const Graph& g, int v) {
    std::uint64_t seen = bit(v);
    std::uint64_t frontier = bit(v);
    while (frontier) {
        std::uint64_t next = 0;
        while (frontier) {
            next |= g.neighbours(lowest_bit(frontier));
            frontier &= frontier - 1;
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen;
}

bool is_connected(const Graph& g) {
    return reachable_from(g, 0) == all_vertices_mask(g.n());
}

bool is_p3(const Graph& g, int x, int y1, int y2) {
    g.check_vertex(x);
    g.check_vertex(y1);
    g.check_vertex(y2);
    if (x == y1 || x == y2 || y1 == y2)
        throw std::invalid_argument("is_p3: vertices must be distinct");
    int edges = static_cast<int>(g.adjacent(x, y1)) + static_cast<int>(g.adjacent(x, y2)) +
                static_cast<int>(g.adjacent(y1, y2));
    return edges == 2;
}

bool is_bipartite(const Graph& g) {
    std::vector<int> colour(static_cast<std::size_t>(g.n()), -1);
    for (int s = 0; s < g.n(); ++s) {
        if (colour[static_cast<std::size_t>(s)] != -1) continue;
        colour[static_cast<std::size_t>(s)] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            std::uint64_t nb = g.neighbours(u);
            while (nb) {
                int v = lowest_bit(nb);
                nb &= nb - 1;
                if (colour[static_cast<std::size_t>(v)] == -1) {
                    colour[static_cast<std::size_t>(v)] = 1 - colour[static_cast<std::size_t>(u)];
                    stack.push_back(v);
                } else if (colour[static_cast<std::size_t>(v)] == colour[static_cast<std::size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace locdim
