#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "locdim/packing.hpp"
#include "locdim/rational.hpp"

namespace locdim {

// Builds a local adjacency resolving set by walking the packed layers:
// every copy of layers 1..omega-1 donates all but one or two vertices and
// consumes the K_omega copies it touches, then the small clique layers
// donate all but their first vertex and the leftover singletons join
// wholesale. Choice points are resolved smallest-index-first; the final
// resolving-set verification backtracks across admissible choices, so a
// returned set is always valid.

struct NoAdmissibleChoice : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConsumedCopy {
    int y_index;                    // 1-based position in K_omega(G)
    int anchor_label;               // label in X anchoring the kept pair; 0 if none
    std::pair<int, int> kept_pair;  // the two vertices of Y left out of S
};

struct ChoiceStep {
    int process = 0;                 // gamma, or 0 for tail steps
    std::string branch;              // tau0 | tau1 | tau2 | tau3plus | clique | singletons | prune
    int copy_index = 0;              // 1-based within its layer
    int layer = 0;                   // set for clique steps
    std::vector<int> excluded_labels;  // labels of X left out of S
    std::vector<int> anchors;          // anchor labels for tau1/tau2 branches
    std::vector<ConsumedCopy> consumed;
    std::vector<int> added;            // vertices that entered S at this step
    std::vector<int> removed;          // prune step only
};

struct ChoiceLog {
    std::vector<ChoiceStep> steps;
};

std::string choice_log_to_json(const ChoiceLog& log);

struct ConstructionState {
    VertexSet s;
    std::vector<int> y;  // remaining K_omega copies, 0-based indices into the layer
    ChoiceLog log;
};

ConstructionState fresh_state(const Decomposition& d);

// Members of ys with at least one edge into x, in ys order.
std::vector<PatternCopy> tau(const Graph& g, int omega, const PatternCopy& x,
                             const std::vector<PatternCopy>& ys);

// Single-pass process runs with smallest-index-first choices; these throw
// NoAdmissibleChoice if some copy has no admissible selection at all.
void run_process_1(const Graph& g, const Decomposition& d, ConstructionState& state);
void run_process_gamma(const Graph& g, const Decomposition& d, ConstructionState& state, int gamma);
void run_clique_processes(const Graph& g, const Decomposition& d, ConstructionState& state);

enum class ConstructMode { faithful, pruned };

struct Construction {
    VertexSet set;
    ChoiceLog log;
    int omega = 0;
    int bound_value = 0;
    bool size_guaranteed = false;  // false for omega == 3 inputs
    bool y_exhausted = false;
    bool overshoot = false;       // |set| > bound_value
    long long backtracks = 0;     // candidate assignments rejected by verification
};

Construction construct_lars(const Graph& g, ConstructMode mode);
Construction construct_lars(const Graph& g, const Decomposition& d, ConstructMode mode);

// Exact-rational checks behind the size argument: the per-copy budget
// xi_t = ((omega-2)/(omega-1)) * (omega*(t+1) + 1) against its piecewise
// lower bound, and ((omega-2)/(omega-1)) * r >= r - 1 for 2 <= r <= omega-1.
struct CountingCheck {
    int t;
    Rational xi;
    Rational case_bound;
    std::string case_name;
    bool ok;
    bool tight;
};

struct RInequalityCheck {
    int r;
    Rational lhs;
    long long rhs;
    bool ok;
};

struct CountingReport {
    int omega;
    std::vector<CountingCheck> cases;
    std::vector<RInequalityCheck> r_checks;
    bool all_ok;
};

CountingReport counting_checks(int omega, int t_max);

}  // namespace locdim
