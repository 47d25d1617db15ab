#pragma once

#include <optional>
#include <vector>

#include "locdim/graph.hpp"

namespace locdim {

// Exact clique number. Branch and bound over neighbour-mask intersections
// with a greedy-colouring upper bound; instant at the orders handled here.
int clique_number(const Graph& g);

// Lazily enumerates the k-cliques of g exactly once each, in lexicographic
// order of the sorted vertex tuple. Restricting to an alive-mask lets the
// packing layer search shrinking remainders without rebuilding subgraphs.
class CliqueStream {
public:
    CliqueStream(const Graph& g, int k);
    CliqueStream(const Graph& g, int k, std::uint64_t alive);

    std::optional<VertexSet> next();

private:
    struct Frame {
        std::uint64_t rest;  // candidates not yet tried at this depth
    };

    const Graph& g_;
    int k_;
    std::vector<int> chosen_;
    std::vector<Frame> stack_;
};

std::vector<VertexSet> cliques_of_size(const Graph& g, int k);

}  // namespace locdim
