#pragma once

#include <string>
#include <vector>

#include "locdim/graph.hpp"

namespace locdim {

// The four resolving-set variants. A vertex w distinguishes a pair (u, v)
// either by distance (d(u,w) != d(v,w)) or by adjacency (w adjacent to
// exactly one of u, v); the local variants only constrain adjacent pairs.
// Pairs are always drawn from the complement of the candidate set, exactly
// as the definitions quantify them.
enum class Variant { metric, local_metric, adjacency, local_adjacency };

const char* variant_name(Variant v);

bool is_distance_variant(Variant v);

bool is_resolving(const Graph& g, VertexSet s, Variant variant);

struct DimWitness {
    int size;
    VertexSet set;  // lexicographically least optimal set
};

// Smallest resolving set of the given variant, by increasing-cardinality
// subset search over per-vertex distinguished-pair bitmasks.
DimWitness min_resolving_set(const Graph& g, Variant variant);

}  // namespace locdim
