#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "locdim/graph.hpp"
#include "locdim/verify.hpp"

namespace locdim {

// Which checks a sweep (or a single evaluation) runs per eligible graph.
// Eligible means connected, omega >= min_omega and n >= omega+1; everything
// else is counted and reported as skipped.
struct EvalOptions {
    bool exact_dims = true;      // dim_l / dim_al and the bound check
    bool all_dims = true;        // dim and dim_a on top of dim_l / dim_al
    bool known_results = true;
    bool packing = true;         // decomposition validity + structural facts
    bool construct = true;       // both modes, validity re-verified
    bool timing = false;         // real ms; sweeps keep 0 for reproducibility
    int min_omega = 3;
};

DimensionReport evaluate_graph(const Graph& g, std::string id, const EvalOptions& opt);

struct RandomModel {
    long long count = 0;
    int n = 0;
    double edge_probability = 0.5;
    std::uint64_t seed = 0;
    int plant_omega = 0;  // 0 = no planted clique
};

// Deterministic per-index Erdos-Renyi graph, optionally with the first
// plant_omega vertices completed into a clique.
Graph random_graph(const RandomModel& model, long long index);

struct SweepConfig {
    enum class Source { builtin, file, random };
    Source source = Source::builtin;
    int builtin_max_n = 7;  // hard-capped at 7
    std::string path;
    RandomModel random;
    int jobs = 0;  // 0: LOCDIM_JOBS env var, else hardware concurrency
    EvalOptions eval;
    bool collect_rows = false;
};

struct SweepResult {
    long long enumerated = 0;
    std::map<int, long long> enumerated_by_n;
    long long eligible = 0;
    long long skipped = 0;
    long long parse_failures = 0;
    long long check_failures = 0;       // failed verdicts other than the bound/chain
    long long bound_violations = 0;   // dim_al > bound or dim_l > dim_al
    long long equality_count = 0;
    long long faithful_overshoot = 0;   // omega >= 4 only
    long long pruned_overshoot = 0;
    long long construct_backtracks = 0; // verification-rejected assignments
    bool halted = false;                // a bound violation stops the sweep
    bool random_source = false;
    RandomModel random;                 // echoed so reports pin the seed
    std::map<std::string, long long> failures_by_check;
    std::vector<std::string> parse_errors;
    std::vector<std::string> failure_witnesses;   // JSON reports of failures
    std::vector<std::string> overshoot_witnesses; // pruned-mode flagged graphs
    std::vector<DimensionReport> rows;            // input order, when collected
};

SweepResult run_sweep(const SweepConfig& cfg);

int default_jobs();

// Labeled-graph enumeration used by the builtin source: bit k of mask is the
// edge with index k in the order (0,1),(0,2),(1,2),(0,3),...
Graph graph_from_mask(int n, std::uint64_t mask);

}  // namespace locdim
