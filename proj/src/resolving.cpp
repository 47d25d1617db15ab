#include "locdim/resolving.hpp"

#include <array>
#include <memory>

namespace locdim {

const char* variant_name(Variant v) {
    switch (v) {
        case Variant::metric: return "metric";
        case Variant::local_metric: return "local-metric";
        case Variant::adjacency: return "adjacency";
        case Variant::local_adjacency: return "local-adjacency";
    }
    return "?";
}

bool is_distance_variant(Variant v) {
    return v == Variant::metric || v == Variant::local_metric;
}

namespace {

bool local_only(Variant v) {
    return v == Variant::local_metric || v == Variant::local_adjacency;
}

std::vector<Edge> relevant_pairs(const Graph& g, Variant variant) {
    std::vector<Edge> pairs;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!local_only(variant) || g.adjacent(u, v)) pairs.emplace_back(u, v);
    return pairs;
}

}  // namespace

bool is_resolving(const Graph& g, VertexSet s, Variant variant) {
    if (!s.subset_of(VertexSet::full(g.n())))
        throw std::invalid_argument("is_resolving: set contains out-of-range vertex");
    std::vector<std::vector<int>> dist;
    if (is_distance_variant(variant)) {
        if (!is_connected(g))
            throw std::invalid_argument("is_resolving: distance variants need a connected graph");
        dist = all_pairs_distances(g);
    }
    for (int u = 0; u < g.n(); ++u) {
        if (s.contains(u)) continue;
        for (int v = u + 1; v < g.n(); ++v) {
            if (s.contains(v)) continue;
            if (local_only(variant) && !g.adjacent(u, v)) continue;
            bool distinguished = false;
            for (int w : s) {
                if (is_distance_variant(variant)
                        ? dist[static_cast<std::size_t>(w)][static_cast<std::size_t>(u)] !=
                              dist[static_cast<std::size_t>(w)][static_cast<std::size_t>(v)]
                        : g.adjacent(w, u) != g.adjacent(w, v)) {
                    distinguished = true;
                    break;
                }
            }
            if (!distinguished) return false;
        }
    }
    return true;
}

namespace {

// Increasing-cardinality subset search over pair-coverage masks, W machine
// words per vertex. A vertex covers a pair if it distinguishes it or is one
// of its ends (pairs are only quantified over the complement of the set).
// Vertices are tried in ascending order, so the first hit at the minimum
// cardinality is the lexicographically least optimal set.
template <int W>
struct CoverSearch {
    using Mask = std::array<std::uint64_t, W>;

    int n = 0;
    int k = 0;
    Mask full{};
    std::array<Mask, kMaxVertices> mask{};
    std::array<Mask, kMaxVertices + 1> suffix{};
    std::array<int, kMaxVertices> chosen{};

    bool dfs(int pos, int picked, const Mask& covered) {
        if (picked == k) {
            for (int w = 0; w < W; ++w)
                if (covered[w] != full[w]) return false;
            return true;
        }
        for (int v = pos; v <= n - (k - picked); ++v) {
            bool reachable = true;
            for (int w = 0; w < W; ++w)
                if ((covered[w] | suffix[static_cast<std::size_t>(v)][w]) != full[w]) {
                    reachable = false;
                    break;
                }
            if (!reachable) break;  // suffix unions only shrink further right
            Mask next = covered;
            for (int w = 0; w < W; ++w) next[w] |= mask[static_cast<std::size_t>(v)][w];
            chosen[static_cast<std::size_t>(picked)] = v;
            if (dfs(v + 1, picked + 1, next)) return true;
        }
        return false;
    }
};

template <int W>
DimWitness run_cover_search(const Graph& g, const std::vector<Edge>& pairs,
                            const std::vector<std::vector<int>>& dist, bool by_distance) {
    auto search = std::make_unique<CoverSearch<W>>();
    search->n = g.n();
    int pair_count = static_cast<int>(pairs.size());
    for (int p = 0; p < pair_count; ++p)
        search->full[static_cast<std::size_t>(p / 64)] |= std::uint64_t{1} << (p % 64);
    for (int w = 0; w < g.n(); ++w) {
        auto& m = search->mask[static_cast<std::size_t>(w)];
        for (int p = 0; p < pair_count; ++p) {
            auto [u, v] = pairs[static_cast<std::size_t>(p)];
            bool covers;
            if (w == u || w == v)
                covers = true;
            else if (by_distance)
                covers = dist[static_cast<std::size_t>(w)][static_cast<std::size_t>(u)] !=
                         dist[static_cast<std::size_t>(w)][static_cast<std::size_t>(v)];
            else
                covers = g.adjacent(w, u) != g.adjacent(w, v);
            if (covers) m[static_cast<std::size_t>(p / 64)] |= std::uint64_t{1} << (p % 64);
        }
    }
    for (int v = g.n() - 1; v >= 0; --v)
        for (int w = 0; w < W; ++w)
            search->suffix[static_cast<std::size_t>(v)][w] =
                search->suffix[static_cast<std::size_t>(v) + 1][w] | search->mask[static_cast<std::size_t>(v)][w];

    for (int k = 0; k <= g.n(); ++k) {
        search->k = k;
        typename CoverSearch<W>::Mask empty{};
        if (search->dfs(0, 0, empty)) {
            VertexSet s;
            for (int i = 0; i < k; ++i) s.add(search->chosen[static_cast<std::size_t>(i)]);
            return DimWitness{k, s};
        }
    }
    // Unreachable: S = V(G) leaves no pairs to distinguish.
    throw std::logic_error("min_resolving_set: search exhausted");
}

}  // namespace

DimWitness min_resolving_set(const Graph& g, Variant variant) {
    if (g.n() < 2) throw std::invalid_argument("min_resolving_set: need n >= 2");
    std::vector<std::vector<int>> dist;
    if (is_distance_variant(variant)) {
        if (!is_connected(g))
            throw std::invalid_argument("min_resolving_set: distance variants need a connected graph");
        dist = all_pairs_distances(g);
    }
    auto pairs = relevant_pairs(g, variant);
    bool by_distance = is_distance_variant(variant);
    if (pairs.size() <= 64) return run_cover_search<1>(g, pairs, dist, by_distance);
    if (pairs.size() <= 512) return run_cover_search<8>(g, pairs, dist, by_distance);
    return run_cover_search<(kMaxVertices * (kMaxVertices - 1) / 2 + 63) / 64>(g, pairs, dist,
                                                                               by_distance);
}

}  // namespace locdim
