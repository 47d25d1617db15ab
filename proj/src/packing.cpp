#include "locdim/packing.hpp"

#include <algorithm>

#include "locdim/clique.hpp"
#include "json.hpp"

namespace locdim {

namespace {

bool is_clique_mask(const Graph& g, std::uint64_t mask) {
    std::uint64_t rest = mask;
    while (rest) {
        int v = lowest_bit(rest);
        rest &= rest - 1;
        if ((g.neighbours(v) & mask) != (mask & ~bit(v))) return false;
    }
    return true;
}

PatternCopy label_pattern_copy(const Graph& g, VertexSet clique, int apex, int omega, int layer) {
    PatternCopy copy;
    copy.layer = layer;
    copy.labels.reserve(static_cast<std::size_t>(omega) + 1);
    std::uint64_t apex_adjacent = clique.bits() & g.neighbours(apex);
    std::uint64_t apex_missing = clique.bits() & ~g.neighbours(apex);
    for (VertexSet part : {VertexSet(apex_adjacent), VertexSet(apex_missing)})
        for (int v : part) copy.labels.push_back(v);
    copy.labels.push_back(apex);
    return copy;
}

}  // namespace

std::optional<PatternCopy> find_pattern_copy(const Graph& g, std::uint64_t alive, int omega,
                                             int layer) {
    if (layer < 1 || layer > 2 * omega - 1)
        throw std::invalid_argument("find_pattern_copy: layer out of range");
    if (layer <= omega - 1) {
        // omega-clique plus an external vertex adjacent to exactly omega-layer
        // of it; the remainder has no K_{omega+1}, so this induces the pattern.
        CliqueStream stream(g, omega, alive);
        while (auto q = stream.next()) {
            std::uint64_t outside = alive & ~q->bits();
            while (outside) {
                int v = lowest_bit(outside);
                outside &= outside - 1;
                if (popcount64(g.neighbours(v) & q->bits()) == omega - layer)
                    return label_pattern_copy(g, *q, v, omega, layer);
            }
        }
        return std::nullopt;
    }
    int size = 2 * omega - layer;
    if (popcount64(alive) < size) return std::nullopt;
    CliqueStream stream(g, size, alive);
    if (auto q = stream.next()) {
        PatternCopy copy;
        copy.layer = layer;
        copy.labels = q->to_vector();
        return copy;
    }
    return std::nullopt;
}

std::optional<PatternCopy> find_pattern_copy(const Graph& h, int omega, int layer) {
    return find_pattern_copy(h, all_vertices_mask(h.n()), omega, layer);
}

namespace {

void check_pack_preconditions(const Graph& g, int omega) {
    if (omega < 3) throw std::invalid_argument("pack_all: need omega >= 3");
    if (g.n() < omega + 1) throw std::invalid_argument("pack_all: need n >= omega+1");
    if (!is_connected(g)) throw std::invalid_argument("pack_all: graph must be connected");
    if (clique_number(g) != omega)
        throw std::invalid_argument("pack_all: omega does not match the clique number");
}

}  // namespace

Decomposition pack_all(const Graph& g, int omega) {
    check_pack_preconditions(g, omega);
    Decomposition d;
    d.omega = omega;
    d.n = g.n();
    std::uint64_t alive = all_vertices_mask(g.n());
    d.alive_at.push_back(alive);
    for (int layer = 1; layer <= 2 * omega - 1; ++layer) {
        std::vector<PatternCopy> copies;
        if (layer == 2 * omega - 1) {
            VertexSet rest(alive);
            for (int v : rest) copies.push_back(PatternCopy{layer, {v}});
            alive = 0;
        } else {
            while (auto copy = find_pattern_copy(g, alive, omega, layer)) {
                alive &= ~copy->vertex_set().bits();
                copies.push_back(std::move(*copy));
            }
        }
        d.layers.push_back(std::move(copies));
        d.alive_at.push_back(alive);
    }
    return d;
}

Decomposition pack_all_exhaustive(const Graph& g, int omega) {
    check_pack_preconditions(g, omega);
    if (g.n() > 8) throw std::invalid_argument("pack_all_exhaustive: limited to n <= 8");
    Decomposition d;
    d.omega = omega;
    d.n = g.n();
    std::uint64_t alive = all_vertices_mask(g.n());
    d.alive_at.push_back(alive);
    for (int layer = 1; layer <= 2 * omega - 1; ++layer) {
        if (layer == 2 * omega - 1) {
            std::vector<PatternCopy> singles;
            for (int v : VertexSet(alive)) singles.push_back(PatternCopy{layer, {v}});
            alive = 0;
            d.layers.push_back(std::move(singles));
            d.alive_at.push_back(alive);
            continue;
        }
        std::vector<PatternCopy> all_copies;
        if (layer <= omega - 1) {
            CliqueStream stream(g, omega, alive);
            while (auto q = stream.next()) {
                std::uint64_t outside = alive & ~q->bits();
                while (outside) {
                    int v = lowest_bit(outside);
                    outside &= outside - 1;
                    if (popcount64(g.neighbours(v) & q->bits()) == omega - layer)
                        all_copies.push_back(label_pattern_copy(g, *q, v, omega, layer));
                }
            }
        } else {
            int size = 2 * omega - layer;
            if (popcount64(alive) >= size) {
                CliqueStream stream(g, size, alive);
                while (auto q = stream.next()) {
                    PatternCopy copy;
                    copy.layer = layer;
                    copy.labels = q->to_vector();
                    all_copies.push_back(std::move(copy));
                }
            }
        }
        // Maximum disjoint subfamily; among those, the lexicographically
        // least by greedy inclusion with a feasibility probe.
        auto max_disjoint = [&](auto&& self, std::size_t from, std::uint64_t used) -> int {
            int best = 0;
            for (std::size_t c = from; c < all_copies.size(); ++c) {
                std::uint64_t bits = all_copies[c].vertex_set().bits();
                if (bits & used) continue;
                int got = 1 + self(self, c + 1, used | bits);
                if (got > best) best = got;
            }
            return best;
        };
        int target = max_disjoint(max_disjoint, 0, 0);
        std::vector<PatternCopy> chosen;
        std::uint64_t used = 0;
        std::size_t from = 0;
        while (static_cast<int>(chosen.size()) < target) {
            for (std::size_t c = from; c < all_copies.size(); ++c) {
                std::uint64_t bits = all_copies[c].vertex_set().bits();
                if (bits & used) continue;
                int rest = max_disjoint(max_disjoint, c + 1, used | bits);
                if (static_cast<int>(chosen.size()) + 1 + rest >= target) {
                    chosen.push_back(all_copies[c]);
                    used |= bits;
                    from = c + 1;
                    break;
                }
            }
        }
        alive &= ~used;
        d.layers.push_back(std::move(chosen));
        d.alive_at.push_back(alive);
    }
    return d;
}

bool copy_labels_valid(const Graph& g, const PatternCopy& copy, int omega) {
    std::uint64_t mask = copy.vertex_set().bits();
    if (copy.vertex_set().size() != static_cast<int>(copy.labels.size())) return false;
    if (copy.layer <= omega - 1) {
        if (static_cast<int>(copy.labels.size()) != omega + 1) return false;
        for (int l = 1; l <= omega + 1; ++l) {
            int v = copy.labels[static_cast<std::size_t>(l - 1)];
            int deg = popcount64(g.neighbours(v) & mask);
            int want = l <= omega - copy.layer ? omega
                       : l == omega + 1        ? omega - copy.layer
                                               : omega - 1;
            if (deg != want) return false;
        }
        return true;
    }
    if (static_cast<int>(copy.labels.size()) != 2 * omega - copy.layer) return false;
    return is_clique_mask(g, mask);
}

PropertiesReport check_properties(const Graph& g, const Decomposition& d) {
    PropertiesReport report;
    int omega = d.omega;
    auto fail = [&](int idx, std::string text) {
        if (report.results[idx].holds) {
            report.results[idx].holds = false;
            report.results[idx].counterexample = std::move(text);
        }
    };

    // (I) no v outside a layer-1 copy completes omega of its vertices to
    // a clique on omega+1 vertices.
    for (const auto& x : d.layer(1)) {
        std::uint64_t vx = x.vertex_set().bits();
        for (int v = 0; v < g.n(); ++v) {
            if (vx & bit(v)) continue;
            for (int drop : x.labels) {
                std::uint64_t w = (vx & ~bit(drop)) | bit(v);
                if (is_clique_mask(g, w))
                    fail(0, "layer-1 copy + vertex " + std::to_string(v) + " forms K_{omega+1}");
            }
        }
    }

    // (II) for layers 2..omega-1: retained clique labels plus either excluded
    // label plus any remainder vertex never induce K_omega.
    for (int gamma = 2; gamma <= omega - 1; ++gamma) {
        std::uint64_t remainder = d.alive_at[static_cast<std::size_t>(gamma - 1)];
        for (const auto& x : d.layer(gamma)) {
            std::uint64_t retained = 0;
            for (int l = 1; l <= omega; ++l)
                if (l != omega - gamma && l != omega - gamma + 1)
                    retained |= bit(x.labels[static_cast<std::size_t>(l - 1)]);
            for (int j : {omega - gamma, omega - gamma + 1}) {
                std::uint64_t base = retained | bit(x.labels[static_cast<std::size_t>(j - 1)]);
                std::uint64_t candidates = remainder & ~x.vertex_set().bits();
                while (candidates) {
                    int v = lowest_bit(candidates);
                    candidates &= candidates - 1;
                    if (is_clique_mask(g, base | bit(v)))
                        fail(1, "layer " + std::to_string(gamma) + " copy, j=" + std::to_string(j) +
                                    ", v=" + std::to_string(v) + " induces K_omega");
                }
            }
        }
    }

    // (III) no vertex of an equal-or-later tail copy completes a clique-layer
    // copy to the next larger complete graph.
    for (int gamma = omega + 1; gamma <= 2 * omega - 1; ++gamma) {
        for (const auto& x : d.layer(gamma)) {
            std::uint64_t vx = x.vertex_set().bits();
            for (int upsilon = gamma; upsilon <= 2 * omega - 1; ++upsilon) {
                for (const auto& y : d.layer(upsilon)) {
                    if (y.vertex_set().bits() == vx && y.layer == x.layer) continue;
                    for (int v : y.labels)
                        if (!(vx & bit(v)) && is_clique_mask(g, vx | bit(v)))
                            fail(2, "layer " + std::to_string(gamma) + " copy + vertex " +
                                        std::to_string(v) + " forms a larger clique");
                }
            }
        }
    }

    // (IV) K_omega copies have no edges into any other tail-layer copy.
    for (const auto& x : d.layer(omega)) {
        std::uint64_t vx = x.vertex_set().bits();
        for (int gamma = omega; gamma <= 2 * omega - 1; ++gamma) {
            for (const auto& y : d.layer(gamma)) {
                std::uint64_t vy = y.vertex_set().bits();
                if (vy == vx && y.layer == x.layer) continue;
                for (int u : x.labels)
                    if (g.neighbours(u) & vy)
                        fail(3, "edge between K_omega copy and layer " + std::to_string(gamma) +
                                    " copy at vertex " + std::to_string(u));
            }
        }
    }

    // (V) every crossing edge from an early-layer copy into a K_omega copy
    // extends to an induced P_3 inside that copy.
    for (int gamma = 1; gamma <= omega - 1; ++gamma) {
        for (const auto& x : d.layer(gamma)) {
            for (const auto& y : d.layer(omega)) {
                std::uint64_t vy = y.vertex_set().bits();
                for (int u : x.labels) {
                    std::uint64_t hit = g.neighbours(u) & vy;
                    std::uint64_t rest = hit;
                    while (rest) {
                        int yv = lowest_bit(rest);
                        rest &= rest - 1;
                        bool found = false;
                        for (int yw : y.labels)
                            if (yw != yv && g.adjacent(u, yv) != g.adjacent(u, yw)) {
                                found = true;
                                break;
                            }
                        if (!found)
                            fail(4, "no induced P_3 through vertices " + std::to_string(u) + "," +
                                        std::to_string(yv));
                    }
                }
            }
        }
    }
    return report;
}

void validate_decomposition(const Graph& g, const Decomposition& d) {
    std::uint64_t seen = 0;
    for (const auto& layer : d.layers) {
        for (const auto& copy : layer) {
            std::uint64_t bits = copy.vertex_set().bits();
            if (bits & seen) throw std::logic_error("decomposition: copies overlap");
            seen |= bits;
            if (!copy_labels_valid(g, copy, d.omega))
                throw std::logic_error("decomposition: labels violate the degree rule in layer " +
                                       std::to_string(copy.layer));
        }
    }
    if (seen != all_vertices_mask(g.n()))
        throw std::logic_error("decomposition: copies do not partition the vertex set");
    for (int layer = 1; layer <= 2 * d.omega - 2; ++layer) {
        if (find_pattern_copy(g, d.alive_at[static_cast<std::size_t>(layer)], d.omega, layer))
            throw std::logic_error("decomposition: residue still contains a layer " +
                                   std::to_string(layer) + " pattern");
    }
}

std::string decomposition_to_json(const Decomposition& d) {
    nlohmann::ordered_json j;
    j["omega"] = d.omega;
    j["n"] = d.n;
    j["layers"] = nlohmann::ordered_json::array();
    for (const auto& layer : d.layers) {
        nlohmann::ordered_json copies = nlohmann::ordered_json::array();
        for (const auto& copy : layer) copies.push_back(copy.labels);
        j["layers"].push_back(std::move(copies));
    }
    return j.dump();
}

}  // namespace locdim
