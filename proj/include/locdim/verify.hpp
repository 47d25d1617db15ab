#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "locdim/graph.hpp"

namespace locdim {

// floor(((omega-2)/(omega-1)) * n) in integer arithmetic.
// Requires omega >= 3 and n >= omega+1, the hypothesis of the bound.
long long dim_bound(long long n, long long omega);

enum class Verdict {
    pass,
    fail,
    skip,      // hypothesis not met
    equality,  // bound attained (bound check only)
    flagged,   // reportable but non-fatal (construction overshoot)
};

const char* verdict_name(Verdict v);

struct BoundVerdict {
    Verdict verdict = Verdict::skip;
    std::optional<int> dim_l;
    std::optional<int> dim_al;
    std::optional<long long> bound_value;
};

// Connected + omega >= 3 + n >= omega+1: exact dim_al against the bound,
// plus dim_l <= dim_al. Inapplicable inputs yield a skip, never an error.
BoundVerdict bound_check(const Graph& g);

using CheckList = std::vector<std::pair<std::string, Verdict>>;

// Every classical statement whose hypothesis g satisfies, both directions
// for the iff ones. Requires g connected.
CheckList known_results_check(const Graph& g);
CheckList known_results_check(const Graph& g, int omega, int dim_l, int dim_al);

struct DimensionReport {
    std::string id;  // graph6 token
    int n = 0;
    int omega = 0;
    std::optional<long long> bound_value;
    std::optional<int> dim;
    std::optional<int> dim_l;
    std::optional<int> dim_a;
    std::optional<int> dim_al;
    std::optional<int> s_faithful;
    std::optional<int> s_pruned;
    CheckList checks;
    long long ms = 0;

    Verdict check(const std::string& name) const;
    bool any_failure() const;
    bool any_flagged() const;
};

std::string report_to_json(const DimensionReport& r);
std::string reports_to_json(const std::vector<DimensionReport>& rs);
std::string report_csv_header();
std::string report_to_csv_row(const DimensionReport& r);

}  // namespace locdim
