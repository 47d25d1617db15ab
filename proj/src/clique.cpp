#include "locdim/clique.hpp"

namespace locdim {

namespace {

void expand(const Graph& g, std::uint64_t cand, int size, int& best) {
    if (cand == 0) {
        if (size > best) best = size;
        return;
    }
    // Greedy colouring; the colour of a vertex bounds the clique extending it.
    int order[kMaxVertices];
    int colour_of[kMaxVertices];
    int count = 0;
    std::uint64_t uncoloured = cand;
    int colour = 0;
    while (uncoloured) {
        ++colour;
        std::uint64_t avail = uncoloured;
        while (avail) {
            int v = lowest_bit(avail);
            avail &= ~(g.neighbours(v) | bit(v));
            uncoloured &= ~bit(v);
            order[count] = v;
            colour_of[count] = colour;
            ++count;
        }
    }
    for (int i = count - 1; i >= 0; --i) {
        if (size + colour_of[i] <= best) return;
        int v = order[i];
        expand(g, cand & g.neighbours(v), size + 1, best);
        cand &= ~bit(v);
    }
}

}  // namespace

int clique_number(const Graph& g) {
    int best = 0;
    expand(g, all_vertices_mask(g.n()), 0, best);
    return best;
}

CliqueStream::CliqueStream(const Graph& g, int k)
    : CliqueStream(g, k, all_vertices_mask(g.n())) {}

CliqueStream::CliqueStream(const Graph& g, int k, std::uint64_t alive) : g_(g), k_(k) {
    if (k < 1 || k > g.n())
        throw std::invalid_argument("cliques_of_size: need 1 <= k <= n");
    stack_.push_back(Frame{alive});
}

std::optional<VertexSet> CliqueStream::next() {
    while (!stack_.empty()) {
        Frame& f = stack_.back();
        if (f.rest == 0 ||
            static_cast<int>(chosen_.size()) + popcount64(f.rest) < k_) {
            stack_.pop_back();
            if (!chosen_.empty()) chosen_.pop_back();
            continue;
        }
        int v = lowest_bit(f.rest);
        f.rest &= f.rest - 1;
        if (static_cast<int>(chosen_.size()) + 1 == k_) {
            VertexSet out;
            for (int u : chosen_) out.add(u);
            out.add(v);
            return out;
        }
        std::uint64_t child = f.rest & g_.neighbours(v);
        chosen_.push_back(v);
        stack_.push_back(Frame{child});
    }
    return std::nullopt;
}

std::vector<VertexSet> cliques_of_size(const Graph& g, int k) {
    std::vector<VertexSet> out;
    CliqueStream stream(g, k);
    while (auto c = stream.next()) out.push_back(*c);
    return out;
}

}  // namespace locdim
