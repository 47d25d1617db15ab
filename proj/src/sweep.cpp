#include "locdim/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <thread>

#include "locdim/clique.hpp"
#include "locdim/construct.hpp"
#include "locdim/graph6.hpp"
#include "locdim/packing.hpp"
#include "locdim/resolving.hpp"

namespace locdim {

DimensionReport evaluate_graph(const Graph& g, std::string id, const EvalOptions& opt) {
    auto start = std::chrono::steady_clock::now();
    DimensionReport r;
    r.id = std::move(id);
    r.n = g.n();
    r.omega = clique_number(g);

    bool eligible = is_connected(g) && r.omega >= 3 && r.omega >= opt.min_omega &&
                    g.n() >= r.omega + 1;
    r.checks.emplace_back("eligible", eligible ? Verdict::pass : Verdict::skip);
    if (!eligible) {
        r.checks.emplace_back("clique_bound", Verdict::skip);
        return r;
    }

    r.bound_value = dim_bound(g.n(), r.omega);
    if (opt.exact_dims) {
        r.dim_al = min_resolving_set(g, Variant::local_adjacency).size;
        r.dim_l = min_resolving_set(g, Variant::local_metric).size;
        if (*r.dim_al > *r.bound_value)
            r.checks.emplace_back("clique_bound", Verdict::fail);
        else
            r.checks.emplace_back("clique_bound", *r.dim_al == *r.bound_value ? Verdict::equality
                                                                          : Verdict::pass);
        r.checks.emplace_back("chain_local", *r.dim_l <= *r.dim_al ? Verdict::pass : Verdict::fail);

        if (opt.all_dims) {
            r.dim = min_resolving_set(g, Variant::metric).size;
            r.dim_a = min_resolving_set(g, Variant::adjacency).size;
            r.checks.emplace_back("chain_dim", *r.dim_l <= *r.dim ? Verdict::pass : Verdict::fail);
            r.checks.emplace_back("chain_adim",
                                  *r.dim_al <= *r.dim_a ? Verdict::pass : Verdict::fail);
            r.checks.emplace_back("chain_dim_adim",
                                  *r.dim <= *r.dim_a ? Verdict::pass : Verdict::fail);
        }

        if (opt.known_results)
            for (auto& check : known_results_check(g, r.omega, *r.dim_l, *r.dim_al))
                r.checks.push_back(std::move(check));
    } else {
        r.checks.emplace_back("clique_bound", Verdict::skip);
    }

    if (opt.packing || opt.construct) {
        Decomposition d = pack_all(g, r.omega);
        if (opt.packing) {
            try {
                validate_decomposition(g, d);
                r.checks.emplace_back("packing_valid", Verdict::pass);
            } catch (const std::logic_error&) {
                r.checks.emplace_back("packing_valid", Verdict::fail);
            }
            PropertiesReport props = check_properties(g, d);
            for (int p = 0; p < 5; ++p)
                r.checks.emplace_back("property_" + std::to_string(p + 1),
                                      props.results[p].holds ? Verdict::pass : Verdict::fail);
        }
        if (opt.construct) {
            for (auto mode : {ConstructMode::faithful, ConstructMode::pruned}) {
                const char* name =
                    mode == ConstructMode::faithful ? "construct_faithful" : "construct_pruned";
                const char* bound_name = mode == ConstructMode::faithful
                                             ? "faithful_within_bound"
                                             : "pruned_within_bound";
                try {
                    Construction c = construct_lars(g, d, mode);
                    bool valid = is_resolving(g, c.set, Variant::local_adjacency);
                    if (mode == ConstructMode::faithful && c.backtracks > 0)
                        r.checks.emplace_back("construct_backtracked", Verdict::flagged);
                    (mode == ConstructMode::faithful ? r.s_faithful : r.s_pruned) = c.set.size();
                    r.checks.emplace_back(name, valid ? Verdict::pass : Verdict::fail);
                    if (!c.size_guaranteed)
                        r.checks.emplace_back(bound_name, Verdict::skip);
                    else
                        r.checks.emplace_back(bound_name, c.set.size() <= c.bound_value
                                                              ? Verdict::pass
                                                              : Verdict::flagged);
                    if (mode == ConstructMode::faithful)
                        r.checks.emplace_back("y_exhausted",
                                              c.y_exhausted ? Verdict::pass
                                              : r.omega >= 4 ? Verdict::fail
                                                             : Verdict::flagged);
                } catch (const NoAdmissibleChoice&) {
                    r.checks.emplace_back(name, Verdict::fail);
                    r.checks.emplace_back(bound_name, Verdict::skip);
                }
            }
        }
    }

    if (opt.timing)
        r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
                   .count();
    return r;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    GraphBuilder b(n);
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if ((mask >> k) & 1) b.add_edge(i, j);
    return b.take();
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97f4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

Graph random_graph(const RandomModel& model, long long index) {
    if (model.n < 1 || model.n > kMaxVertices)
        throw std::invalid_argument("random_graph: n out of range");
    if (model.edge_probability < 0.0 || model.edge_probability > 1.0)
        throw std::invalid_argument("random_graph: p must be in [0, 1]");
    if (model.plant_omega > model.n)
        throw std::invalid_argument("random_graph: planted clique larger than n");
    std::uint64_t state = model.seed ^ (0x9E3779B97f4A7C15ULL * static_cast<std::uint64_t>(index + 1));
    // 53-bit threshold comparison keeps the stream identical everywhere.
    auto threshold =
        static_cast<std::uint64_t>(model.edge_probability * 9007199254740992.0);  // 2^53
    GraphBuilder b(model.n);
    for (int j = 1; j < model.n; ++j)
        for (int i = 0; i < j; ++i) {
            bool planted = model.plant_omega > 0 && j < model.plant_omega;
            if (planted || (splitmix64(state) >> 11) < threshold) b.add_edge(i, j);
        }
    return b.take();
}

int default_jobs() {
    if (const char* env = std::getenv("LOCDIM_JOBS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

namespace {

struct Task {
    Graph graph;
    std::string id;
};

struct ChunkOutcome {
    long long chunk = 0;
    SweepResult partial;
};

void accumulate(SweepResult& into, const DimensionReport& r, const SweepConfig& cfg,
                std::atomic<bool>& stop) {
    ++into.enumerated;
    ++into.enumerated_by_n[r.n];
    if (r.check("eligible") == Verdict::skip) {
        ++into.skipped;
        if (cfg.collect_rows) into.rows.push_back(r);
        return;
    }
    ++into.eligible;
    for (const auto& [name, verdict] : r.checks)
        if (verdict == Verdict::fail) ++into.failures_by_check[name];
    bool provable_bad =
        r.check("clique_bound") == Verdict::fail || r.check("chain_local") == Verdict::fail;
    if (provable_bad) {
        ++into.bound_violations;
        into.failure_witnesses.push_back(report_to_json(r));
        into.halted = true;
        stop.store(true);
    } else if (r.any_failure()) {
        ++into.check_failures;
        into.failure_witnesses.push_back(report_to_json(r));
    }
    if (r.check("clique_bound") == Verdict::equality) ++into.equality_count;
    if (r.check("faithful_within_bound") == Verdict::flagged) ++into.faithful_overshoot;
    if (r.check("pruned_within_bound") == Verdict::flagged) {
        ++into.pruned_overshoot;
        into.overshoot_witnesses.push_back(report_to_json(r));
    }
    if (r.check("construct_backtracked") == Verdict::flagged) ++into.construct_backtracks;
    if (cfg.collect_rows) into.rows.push_back(r);
}

void merge(SweepResult& into, SweepResult&& part) {
    into.enumerated += part.enumerated;
    for (auto [n, c] : part.enumerated_by_n) into.enumerated_by_n[n] += c;
    into.eligible += part.eligible;
    into.skipped += part.skipped;
    into.parse_failures += part.parse_failures;
    into.check_failures += part.check_failures;
    into.bound_violations += part.bound_violations;
    into.equality_count += part.equality_count;
    into.faithful_overshoot += part.faithful_overshoot;
    into.pruned_overshoot += part.pruned_overshoot;
    into.construct_backtracks += part.construct_backtracks;
    into.halted = into.halted || part.halted;
    for (auto [name, c] : part.failures_by_check) into.failures_by_check[name] += c;
    for (auto& e : part.parse_errors) into.parse_errors.push_back(std::move(e));
    for (auto& w : part.failure_witnesses) into.failure_witnesses.push_back(std::move(w));
    for (auto& w : part.overshoot_witnesses) into.overshoot_witnesses.push_back(std::move(w));
    for (auto& row : part.rows) into.rows.push_back(std::move(row));
}

}  // namespace

SweepResult run_sweep(const SweepConfig& cfg) {
    // Chunk layout. The builtin source iterates (n, mask) lazily; the other
    // sources materialize their task lists up front.
    struct ChunkRef {
        int n = 0;
        std::uint64_t begin = 0;
        std::uint64_t end = 0;
    };
    std::vector<ChunkRef> chunks;
    std::vector<Task> tasks;  // file / random sources
    SweepResult result;

    if (cfg.source == SweepConfig::Source::builtin) {
        if (cfg.builtin_max_n < 1 || cfg.builtin_max_n > 7)
            throw std::invalid_argument("run_sweep: builtin exhaustive source is limited to n <= 7");
        const std::uint64_t chunk_size = 1 << 13;
        for (int n = 1; n <= cfg.builtin_max_n; ++n) {
            std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
            for (std::uint64_t b = 0; b < total; b += chunk_size)
                chunks.push_back(ChunkRef{n, b, std::min(b + chunk_size, total)});
        }
    } else {
        if (cfg.source == SweepConfig::Source::file) {
            auto lines = read_graph6_file(cfg.path);
            if (lines.empty())
                throw std::invalid_argument("run_sweep: corpus contains no graphs: " + cfg.path);
            for (const auto& line : lines) {
                try {
                    Graph g = decode_graph6(line.token);
                    tasks.push_back(Task{std::move(g), line.token});
                } catch (const Graph6Error& e) {
                    ++result.parse_failures;
                    result.parse_errors.push_back("line " + std::to_string(line.line_number) +
                                                  ": " + e.what());
                }
            }
        } else {
            if (cfg.random.count < 1)
                throw std::invalid_argument("run_sweep: random source needs count >= 1");
            result.random_source = true;
            result.random = cfg.random;
            for (long long i = 0; i < cfg.random.count; ++i) {
                Graph g = random_graph(cfg.random, i);
                std::string id = encode_graph6(g);
                tasks.push_back(Task{std::move(g), std::move(id)});
            }
        }
        const std::uint64_t chunk_size = 32;
        for (std::uint64_t b = 0; b < tasks.size(); b += chunk_size)
            chunks.push_back(ChunkRef{0, b, std::min<std::uint64_t>(b + chunk_size, tasks.size())});
    }

    int jobs = cfg.jobs > 0 ? cfg.jobs : default_jobs();
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(chunks.size())));

    std::atomic<std::size_t> next_chunk{0};
    std::atomic<bool> stop{false};
    std::vector<std::vector<ChunkOutcome>> outcomes(static_cast<std::size_t>(jobs));

    auto worker = [&](int wid) {
        for (;;) {
            if (stop.load()) break;
            std::size_t c = next_chunk.fetch_add(1);
            if (c >= chunks.size()) break;
            const ChunkRef& ref = chunks[c];
            ChunkOutcome outcome;
            outcome.chunk = static_cast<long long>(c);
            for (std::uint64_t i = ref.begin; i < ref.end; ++i) {
                if (cfg.source == SweepConfig::Source::builtin) {
                    Graph g = graph_from_mask(ref.n, i);
                    DimensionReport r = evaluate_graph(g, "", cfg.eval);
                    // The token is only needed for rows and witnesses.
                    if (cfg.collect_rows || r.any_failure() || r.any_flagged())
                        r.id = encode_graph6(g);
                    accumulate(outcome.partial, r, cfg, stop);
                } else {
                    const Task& task = tasks[static_cast<std::size_t>(i)];
                    DimensionReport r = evaluate_graph(task.graph, task.id, cfg.eval);
                    accumulate(outcome.partial, r, cfg, stop);
                }
                if (stop.load() && outcome.partial.halted) break;
            }
            outcomes[static_cast<std::size_t>(wid)].push_back(std::move(outcome));
            if (stop.load()) break;
        }
    };

    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
        for (auto& t : pool) t.join();
    }

    std::vector<ChunkOutcome> ordered;
    for (auto& list : outcomes)
        for (auto& o : list) ordered.push_back(std::move(o));
    std::sort(ordered.begin(), ordered.end(),
              [](const ChunkOutcome& a, const ChunkOutcome& b) { return a.chunk < b.chunk; });
    for (auto& o : ordered) merge(result, std::move(o.partial));
    return result;
}

}  // namespace locdim
