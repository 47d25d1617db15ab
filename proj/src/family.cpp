#include "locdim/family.hpp"

namespace locdim {

Graph complete_graph(int n) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    return b.take();
}

Graph path_graph(int n) {
    GraphBuilder b(n);
    for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
    return b.take();
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
    GraphBuilder b(n);
    for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
    b.add_edge(n - 1, 0);
    return b.take();
}

Graph knr_graph(int n, int r) {
    if (n < 4) throw std::invalid_argument("knr_graph: need n >= 4");
    if (r < 1 || r > n - 2)
        throw std::invalid_argument("knr_graph: need 1 <= r <= n-2");
    GraphBuilder b(n);
    int apex = n - 1;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (v == apex && u >= n - 1 - r) continue;
            b.add_edge(u, v);
        }
    return b.take();
}

Graph gtw_graph(int t, int omega) {
    if (t < 2) throw std::invalid_argument("gtw_graph: need t >= 2");
    if (omega < 2) throw std::invalid_argument("gtw_graph: need omega >= 2");
    int n = t * (omega - 1) + 1;
    GraphBuilder b(n);
    for (int copy = 0; copy < t; ++copy) {
        int base = 1 + copy * (omega - 1);
        for (int a = 0; a < omega - 1; ++a) {
            b.add_edge(0, base + a);
            for (int c = a + 1; c < omega - 1; ++c) b.add_edge(base + a, base + c);
        }
    }
    return b.take();
}

}  // namespace locdim
