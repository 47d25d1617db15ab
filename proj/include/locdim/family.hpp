#pragma once

#include "locdim/graph.hpp"

namespace locdim {

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

// K_n minus r edges incident to a common apex. Canonical layout: the apex is
// vertex n-1 and the removed partners are vertices n-2, n-3, ..., n-1-r, so
// tests can reference vertices by id. Requires n >= 4 and 1 <= r <= n-2.
Graph knr_graph(int n, int r);

// t copies of K_omega glued at one identified vertex, which is vertex 0.
// Copy j (0-based) occupies {0} and vertices 1+j(omega-1) .. (j+1)(omega-1).
// Order is t(omega-1)+1. Requires t >= 2 and omega >= 2.
Graph gtw_graph(int t, int omega);

}  // namespace locdim
