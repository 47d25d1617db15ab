#pragma once

#include <optional>
#include <string>
#include <vector>

#include "locdim/graph.hpp"

namespace locdim {

// Layered pattern packing: layer i in [omega-1] extracts induced copies of
// K_{omega+1} minus i edges at a common apex, layers omega..2*omega-1 extract
// complete graphs K_{2*omega-i} down to single vertices. Extraction is greedy
// (inclusion-maximal per layer) and deterministic: lexicographically first
// clique, then smallest external apex.

struct PatternCopy {
    int layer;
    // labels[l-1] is the vertex carrying label l. For layer i <= omega-1 the
    // labels follow the degree rule: labels 1..omega-i have full degree
    // inside the copy, labels omega-i+1..omega miss only the apex, and the
    // apex itself is label omega+1. Clique layers label ascending by id.
    std::vector<int> labels;

    VertexSet vertex_set() const {
        VertexSet s;
        for (int v : labels) s.add(v);
        return s;
    }
    int apex() const { return labels.back(); }
};

struct Decomposition {
    int omega = 0;
    int n = 0;
    std::vector<std::vector<PatternCopy>> layers;  // layers[i-1] holds K_i(G)
    // alive_at[i] is the vertex mask when layer i+1 starts; alive_at[0] is
    // the full vertex set and the final entry is empty.
    std::vector<std::uint64_t> alive_at;

    const std::vector<PatternCopy>& layer(int i) const {
        return layers[static_cast<std::size_t>(i - 1)];
    }
};

std::optional<PatternCopy> find_pattern_copy(const Graph& h, int omega, int layer);
std::optional<PatternCopy> find_pattern_copy(const Graph& g, std::uint64_t alive, int omega,
                                             int layer);

// Requires omega == clique_number(g), g connected, n >= omega+1, omega >= 3.
Decomposition pack_all(const Graph& g, int omega);

// Exhaustive variant for small orders (n <= 8): per layer, a true maximum
// disjoint family, lexicographically least among the maximum ones. Slow;
// used to probe how the greedy packing differs from maximum packings.
Decomposition pack_all_exhaustive(const Graph& g, int omega);

// True iff the copy's labels match the degree rule for its layer.
bool copy_labels_valid(const Graph& g, const PatternCopy& copy, int omega);

struct PropertyResult {
    bool holds = true;
    std::string counterexample;  // empty when the property holds
};

struct PropertiesReport {
    // Indices 0..4 are the five structural facts the construction relies on:
    // (0) no outside vertex completes omega vertices of a layer-1 copy to a
    //     clique of size omega+1;
    // (1) for layers 2..omega-1, neither endpoint of the excluded pair forms
    //     a K_omega with the retained clique labels and a remainder vertex;
    // (2) no vertex of an equal-or-later tail copy completes a clique-layer
    //     copy to the next larger complete graph;
    // (3) K_omega copies have no edges to other tail-layer copies;
    // (4) every crossing edge from a layer-[1..omega-1] copy into a K_omega
    //     copy extends to an induced P_3 inside that copy.
    PropertyResult results[5];

    bool all_hold() const {
        for (const auto& r : results)
            if (!r.holds) return false;
        return true;
    }
};

PropertiesReport check_properties(const Graph& g, const Decomposition& d);

// Partition, residue emptiness and label soundness; throws std::logic_error
// with a description on the first violation. Used by tests and the sweep.
void validate_decomposition(const Graph& g, const Decomposition& d);

std::string decomposition_to_json(const Decomposition& d);

}  // namespace locdim
