#include "locdim/construct.hpp"

#include <algorithm>
#include <functional>

#include "locdim/clique.hpp"
#include "locdim/graph6.hpp"
#include "locdim/resolving.hpp"
#include "json.hpp"

namespace locdim {

namespace {

std::uint64_t copy_bits(const PatternCopy& c) { return c.vertex_set().bits(); }

bool has_edge_between(const Graph& g, std::uint64_t a, std::uint64_t b) {
    std::uint64_t rest = a;
    while (rest) {
        int v = lowest_bit(rest);
        rest &= rest - 1;
        if (g.neighbours(v) & b) return true;
    }
    return false;
}

bool mask_connected(const Graph& g, std::uint64_t mask) {
    if (!mask) return true;
    std::uint64_t seen = bit(lowest_bit(mask));
    std::uint64_t frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        while (frontier) {
            next |= g.neighbours(lowest_bit(frontier));
            frontier &= frontier - 1;
        }
        frontier = next & mask & ~seen;
        seen |= frontier;
    }
    return seen == mask;
}

// Pairs (y1, y2) of Y with x adjacent to exactly one: the kept pair of an
// induced P_3 anchored at x. Ascending lexicographic, so "first" is fixed.
std::vector<std::pair<int, int>> anchored_pairs(const Graph& g, int x, const PatternCopy& y) {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < y.labels.size(); ++i)
        for (std::size_t j = i + 1; j < y.labels.size(); ++j) {
            int y1 = y.labels[i];
            int y2 = y.labels[j];
            if (g.adjacent(y1, y2) && g.adjacent(x, y1) != g.adjacent(x, y2))
                out.emplace_back(y1, y2);
        }
    return out;
}

void append_added(ChoiceStep& step, std::uint64_t add) { step.added = VertexSet(add).to_vector(); }

struct Engine {
    const Graph& g;
    const Decomposition& d;
    int omega;
    std::vector<std::pair<int, int>> steps;  // (gamma, 0-based copy index)
    std::function<bool(ConstructionState&)> finish;
    ConstructionState result;

    const PatternCopy& ycopy(int idx) const {
        return d.layer(omega)[static_cast<std::size_t>(idx)];
    }

    int xv(const PatternCopy& x, int label) const {
        return x.labels[static_cast<std::size_t>(label - 1)];
    }

    std::vector<int> tau_of(const PatternCopy& x, const std::vector<int>& y) const {
        std::vector<int> out;
        std::uint64_t xb = copy_bits(x);
        for (int idx : y)
            if (has_edge_between(g, xb, copy_bits(ycopy(idx)))) out.push_back(idx);
        return out;
    }

    static void consume(ConstructionState& st, const std::vector<int>& t) {
        std::erase_if(st.y, [&](int idx) { return std::find(t.begin(), t.end(), idx) != t.end(); });
    }

    bool accept(ConstructionState& st) {
        if (!finish(st)) return false;
        result = st;
        return true;
    }

    bool dfs(std::size_t si, ConstructionState state) {
        if (si == steps.size()) return accept(state);
        auto [gamma, ci] = steps[si];
        const PatternCopy& x = d.layer(gamma)[static_cast<std::size_t>(ci)];
        std::uint64_t xb = copy_bits(x);
        std::vector<int> t = tau_of(x, state.y);

        ChoiceStep rec;
        rec.process = gamma;
        rec.copy_index = ci + 1;

        if (t.empty()) {
            // Drop the missing-edge endpoints (process 1) or the adjacent
            // full/apexless pair the apex separates (later processes).
            int e1 = gamma == 1 ? omega : omega - gamma;
            rec.branch = "tau0";
            rec.excluded_labels = {e1, e1 + 1};
            std::uint64_t add = xb & ~bit(xv(x, e1)) & ~bit(xv(x, e1 + 1));
            ConstructionState ns = state;
            ns.s = ns.s | VertexSet(add);
            append_added(rec, add);
            ns.log.steps.push_back(std::move(rec));
            return dfs(si + 1, std::move(ns));
        }

        if (t.size() == 1) {
            const PatternCopy& y = ycopy(t[0]);
            std::uint64_t yb = copy_bits(y);
            rec.branch = "tau1";
            auto attempt = [&](int excluded, int anchor, std::pair<int, int> pair) {
                ConstructionState ns = state;
                std::uint64_t add =
                    (xb & ~bit(xv(x, excluded))) | (yb & ~bit(pair.first) & ~bit(pair.second));
                ns.s = ns.s | VertexSet(add);
                consume(ns, t);
                ChoiceStep r = rec;
                r.excluded_labels = {excluded};
                r.anchors = {anchor};
                r.consumed = {ConsumedCopy{t[0] + 1, anchor, pair}};
                append_added(r, add);
                ns.log.steps.push_back(std::move(r));
                return dfs(si + 1, std::move(ns));
            };
            if (gamma == 1) {
                for (int l1 = 1; l1 <= omega + 1; ++l1) {
                    auto pairs = anchored_pairs(g, xv(x, l1), y);
                    if (pairs.empty()) continue;
                    for (int l2 = 1; l2 <= omega + 1; ++l2) {
                        if (l2 == l1) continue;
                        for (auto pair : pairs)
                            if (attempt(l2, l1, pair)) return true;
                    }
                }
            } else {
                for (int l1 = 1; l1 <= omega; ++l1) {
                    if (!has_edge_between(g, xb & ~bit(xv(x, l1)), yb)) continue;
                    for (int l2 = 1; l2 <= omega + 1; ++l2) {
                        if (l2 == l1) continue;
                        for (auto pair : anchored_pairs(g, xv(x, l2), y))
                            if (attempt(l1, l2, pair)) return true;
                    }
                }
            }
            return false;
        }

        if (t.size() == 2) {
            const PatternCopy& y1 = ycopy(t[0]);
            const PatternCopy& y2 = ycopy(t[1]);
            std::uint64_t yb1 = copy_bits(y1);
            std::uint64_t yb2 = copy_bits(y2);
            rec.branch = "tau2";
            auto attempt = [&](int excluded, int a1, std::pair<int, int> p1, int a2,
                              std::pair<int, int> p2) {
                ConstructionState ns = state;
                std::uint64_t add = (xb & ~bit(xv(x, excluded))) |
                                    (yb1 & ~bit(p1.first) & ~bit(p1.second)) |
                                    (yb2 & ~bit(p2.first) & ~bit(p2.second));
                ns.s = ns.s | VertexSet(add);
                consume(ns, t);
                ChoiceStep r = rec;
                r.excluded_labels = {excluded};
                r.anchors = {a1, a2};
                r.consumed = {ConsumedCopy{t[0] + 1, a1, p1}, ConsumedCopy{t[1] + 1, a2, p2}};
                append_added(r, add);
                ns.log.steps.push_back(std::move(r));
                return dfs(si + 1, std::move(ns));
            };
            for (int l = 1; l <= (gamma == 1 ? omega + 1 : omega); ++l) {
                std::uint64_t remaining = xb & ~bit(xv(x, l));
                if (gamma == 1) {
                    if (!mask_connected(g, remaining | yb1 | yb2)) continue;
                } else {
                    if (!has_edge_between(g, remaining, yb1) ||
                        !has_edge_between(g, remaining, yb2))
                        continue;
                }
                for (int z1 = 1; z1 <= omega + 1; ++z1) {
                    if (z1 == l) continue;
                    auto pairs1 = anchored_pairs(g, xv(x, z1), y1);
                    for (auto p1 : pairs1)
                        for (int z2 = 1; z2 <= omega + 1; ++z2) {
                            if (z2 == l) continue;
                            for (auto p2 : anchored_pairs(g, xv(x, z2), y2))
                                if (attempt(l, z1, p1, z2, p2)) return true;
                        }
                }
            }
            return false;
        }

        // |tau| >= 3: all of X enters S; each touched Y keeps one anchored pair.
        rec.branch = "tau3plus";
        int zmax = gamma == 1 ? omega + 1 : omega;
        std::vector<ConsumedCopy> picks;
        std::function<bool(std::size_t)> pick_for = [&](std::size_t j) -> bool {
            if (j == t.size()) {
                ConstructionState ns = state;
                std::uint64_t add = xb;
                for (const auto& p : picks)
                    add |= copy_bits(ycopy(p.y_index - 1)) & ~bit(p.kept_pair.first) &
                           ~bit(p.kept_pair.second);
                ns.s = ns.s | VertexSet(add);
                consume(ns, t);
                ChoiceStep r = rec;
                r.consumed = picks;
                append_added(r, add);
                ns.log.steps.push_back(std::move(r));
                return dfs(si + 1, std::move(ns));
            }
            const PatternCopy& y = ycopy(t[j]);
            for (int z = 1; z <= zmax; ++z)
                for (auto pair : anchored_pairs(g, xv(x, z), y)) {
                    picks.push_back(ConsumedCopy{t[j] + 1, z, pair});
                    if (pick_for(j + 1)) return true;
                    picks.pop_back();
                }
            return false;
        };
        return pick_for(0);
    }
};

void apply_clique_tail(const Decomposition& d, ConstructionState& state) {
    int omega = d.omega;
    for (int gamma = omega; gamma <= 2 * omega - 3; ++gamma) {
        int layer = gamma + 1;
        const auto& copies = d.layer(layer);
        for (std::size_t ci = 0; ci < copies.size(); ++ci) {
            const PatternCopy& x = copies[ci];
            std::uint64_t add = copy_bits(x) & ~bit(x.labels[0]);
            state.s = state.s | VertexSet(add);
            ChoiceStep rec;
            rec.process = gamma;
            rec.branch = "clique";
            rec.layer = layer;
            rec.copy_index = static_cast<int>(ci) + 1;
            rec.excluded_labels = {1};
            append_added(rec, add);
            state.log.steps.push_back(std::move(rec));
        }
    }
    ChoiceStep rec;
    rec.process = 2 * omega - 3;
    rec.branch = "singletons";
    std::uint64_t add = 0;
    for (const auto& single : d.layer(2 * omega - 1)) add |= copy_bits(single);
    state.s = state.s | VertexSet(add);
    append_added(rec, add);
    state.log.steps.push_back(std::move(rec));
}

std::vector<std::pair<int, int>> layer_steps(const Decomposition& d, int from, int to) {
    std::vector<std::pair<int, int>> steps;
    for (int gamma = from; gamma <= to; ++gamma)
        for (std::size_t ci = 0; ci < d.layer(gamma).size(); ++ci)
            steps.emplace_back(gamma, static_cast<int>(ci));
    return steps;
}

void run_single_layer(const Graph& g, const Decomposition& d, ConstructionState& state,
                      int gamma) {
    Engine e{g, d, d.omega, layer_steps(d, gamma, gamma), [](ConstructionState&) { return true; },
             {}};
    if (!e.dfs(0, state))
        throw NoAdmissibleChoice("process " + std::to_string(gamma) +
                                 ": no admissible choice for some copy; graph6=" +
                                 encode_graph6(g));
    state = std::move(e.result);
}

}  // namespace

std::vector<PatternCopy> tau(const Graph& g, int omega, const PatternCopy& x,
                             const std::vector<PatternCopy>& ys) {
    if (x.layer < 1 || x.layer > omega - 1)
        throw std::invalid_argument("tau: X must come from layers 1..omega-1");
    std::vector<PatternCopy> out;
    std::uint64_t xb = copy_bits(x);
    for (const auto& y : ys) {
        if (y.layer != omega)
            throw std::invalid_argument("tau: every Y must be a K_omega copy");
        if (has_edge_between(g, xb, copy_bits(y))) out.push_back(y);
    }
    return out;
}

ConstructionState fresh_state(const Decomposition& d) {
    ConstructionState state;
    state.y.resize(d.layer(d.omega).size());
    for (std::size_t i = 0; i < state.y.size(); ++i) state.y[i] = static_cast<int>(i);
    return state;
}

void run_process_1(const Graph& g, const Decomposition& d, ConstructionState& state) {
    run_single_layer(g, d, state, 1);
}

void run_process_gamma(const Graph& g, const Decomposition& d, ConstructionState& state,
                       int gamma) {
    if (gamma < 2 || gamma > d.omega - 1)
        throw std::invalid_argument("run_process_gamma: gamma must be in [2, omega-1]");
    run_single_layer(g, d, state, gamma);
}

void run_clique_processes(const Graph&, const Decomposition& d, ConstructionState& state) {
    apply_clique_tail(d, state);
}

Construction construct_lars(const Graph& g, ConstructMode mode) {
    int omega = clique_number(g);
    return construct_lars(g, pack_all(g, omega), mode);
}

Construction construct_lars(const Graph& g, const Decomposition& d, ConstructMode mode) {
    if (d.n != g.n())
        throw std::invalid_argument("construct_lars: decomposition does not match the graph");
    int omega = d.omega;
    bool y_exhausted = false;
    long long rejected = 0;
    Engine e{g, d, omega, layer_steps(d, 1, omega - 1),
             [&](ConstructionState& st) {
                 y_exhausted = st.y.empty();
                 apply_clique_tail(d, st);
                 if (is_resolving(g, st.s, Variant::local_adjacency)) return true;
                 ++rejected;
                 return false;
             },
             {}};
    if (!e.dfs(0, fresh_state(d)))
        throw NoAdmissibleChoice(
            "construct_lars: no admissible choice assignment yields a valid set; graph6=" +
            encode_graph6(g) + " omega=" + std::to_string(omega) +
            " decomposition=" + decomposition_to_json(d));

    Construction out;
    out.omega = omega;
    out.bound_value = (omega - 2) * g.n() / (omega - 1);
    out.size_guaranteed = omega >= 4;
    out.y_exhausted = y_exhausted;
    out.backtracks = rejected;
    out.set = e.result.s;
    out.log = std::move(e.result.log);

    if (mode == ConstructMode::pruned) {
        std::vector<int> removed;
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v : out.set.to_vector()) {
                VertexSet candidate = out.set;
                candidate.remove(v);
                if (is_resolving(g, candidate, Variant::local_adjacency)) {
                    out.set = candidate;
                    removed.push_back(v);
                    changed = true;
                }
            }
        }
        ChoiceStep rec;
        rec.branch = "prune";
        rec.removed = std::move(removed);
        rec.added = out.set.to_vector();
        out.log.steps.push_back(std::move(rec));
    }

    out.overshoot = out.set.size() > out.bound_value;
    return out;
}

std::string choice_log_to_json(const ChoiceLog& log) {
    nlohmann::ordered_json steps = nlohmann::ordered_json::array();
    for (const auto& s : log.steps) {
        nlohmann::ordered_json j;
        j["process"] = s.process;
        j["branch"] = s.branch;
        j["copy"] = s.copy_index;
        j["layer"] = s.layer;
        j["excluded_labels"] = s.excluded_labels;
        j["anchors"] = s.anchors;
        nlohmann::ordered_json consumed = nlohmann::ordered_json::array();
        for (const auto& c : s.consumed) {
            nlohmann::ordered_json jc;
            jc["y"] = c.y_index;
            jc["anchor"] = c.anchor_label;
            jc["kept"] = {c.kept_pair.first, c.kept_pair.second};
            consumed.push_back(std::move(jc));
        }
        j["consumed"] = std::move(consumed);
        j["added"] = s.added;
        j["removed"] = s.removed;
        steps.push_back(std::move(j));
    }
    return steps.dump();
}

CountingReport counting_checks(int omega, int t_max) {
    if (omega <= 3) throw std::invalid_argument("counting_checks: need omega >= 4");
    if (t_max < 0) throw std::invalid_argument("counting_checks: need t_max >= 0");
    CountingReport report;
    report.omega = omega;
    report.all_ok = true;
    Rational ratio(omega - 2, omega - 1);
    for (int t = 0; t <= t_max; ++t) {
        CountingCheck check;
        check.t = t;
        check.xi = ratio * Rational(static_cast<long long>(omega) * (t + 1) + 1);
        switch (t) {
            case 0:
                check.case_bound = Rational(omega - 1);
                check.case_name = "t=0";
                break;
            case 1:
                check.case_bound = Rational(2 * omega - 2);
                check.case_name = "t=1";
                break;
            case 2:
                check.case_bound = Rational(3 * omega - 4);
                check.case_name = "t=2";
                break;
            default:
                check.case_bound = Rational(static_cast<long long>(omega) * (t + 1) - 2 * t + 1);
                check.case_name = "general";
                break;
        }
        check.ok = check.xi >= check.case_bound;
        check.tight = check.xi == check.case_bound;
        report.all_ok = report.all_ok && check.ok;
        report.cases.push_back(check);
    }
    for (int r = 2; r <= omega - 1; ++r) {
        RInequalityCheck check;
        check.r = r;
        check.lhs = ratio * Rational(r);
        check.rhs = r - 1;
        check.ok = check.lhs >= Rational(check.rhs);
        report.all_ok = report.all_ok && check.ok;
        report.r_checks.push_back(check);
    }
    return report;
}

}  // namespace locdim
