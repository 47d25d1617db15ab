#include "locdim/verify.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include "locdim/clique.hpp"
#include "locdim/resolving.hpp"
#include "json.hpp"

namespace locdim {

long long dim_bound(long long n, long long omega) {
    if (omega < 3) throw std::invalid_argument("dim_bound: need omega >= 3");
    if (n < omega + 1) throw std::invalid_argument("dim_bound: need n >= omega+1");
    return (omega - 2) * n / (omega - 1);
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::skip: return "skip";
        case Verdict::equality: return "equality";
        case Verdict::flagged: return "flagged";
    }
    return "?";
}

BoundVerdict bound_check(const Graph& g) {
    BoundVerdict out;
    if (!is_connected(g)) return out;
    int omega = clique_number(g);
    if (omega < 3 || g.n() < omega + 1) return out;
    out.bound_value = dim_bound(g.n(), omega);
    out.dim_al = min_resolving_set(g, Variant::local_adjacency).size;
    out.dim_l = min_resolving_set(g, Variant::local_metric).size;
    if (*out.dim_al > *out.bound_value || *out.dim_l > *out.dim_al)
        out.verdict = Verdict::fail;
    else
        out.verdict = *out.dim_al == *out.bound_value ? Verdict::equality : Verdict::pass;
    return out;
}

namespace {

bool is_complete(const Graph& g) { return g.edge_count() == g.n() * (g.n() - 1) / 2; }

int ceil_log2(int x) {
    int k = 0;
    while ((1 << k) < x) ++k;
    return k;
}

Verdict iff_verdict(bool lhs, bool rhs) { return lhs == rhs ? Verdict::pass : Verdict::fail; }

Verdict cond_verdict(bool hypothesis, bool conclusion) {
    if (!hypothesis) return Verdict::skip;
    return conclusion ? Verdict::pass : Verdict::fail;
}

}  // namespace

CheckList known_results_check(const Graph& g, int omega, int dim_l, int dim_al) {
    int n = g.n();
    CheckList out;
    bool complete = is_complete(g);

    out.emplace_back("local_nminus1_iff_complete", iff_verdict(dim_l == n - 1, complete));
    out.emplace_back("local_nminus2_iff_omega_nminus1", iff_verdict(dim_l == n - 2, omega == n - 1));
    out.emplace_back("local_one_iff_bipartite", iff_verdict(dim_l == 1, is_bipartite(g)));

    long long pow_term =
        n - omega < 62 ? static_cast<long long>(n) - (1LL << (n - omega)) : LLONG_MIN / 2;
    long long lower = std::max<long long>(ceil_log2(omega), pow_term);
    out.emplace_back("local_log_lower", cond_verdict(true, dim_l >= lower));

    out.emplace_back("two_fifths_triangle_free",
                     cond_verdict(omega == 2 && n >= 3, 5LL * dim_l <= 2LL * n));

    // dim_l <= ((omega-1)/omega) n, equality only for the complete graph.
    bool ratio_ok = static_cast<long long>(omega) * dim_l <= static_cast<long long>(omega - 1) * n;
    bool equality_only_complete =
        static_cast<long long>(omega) * dim_l != static_cast<long long>(omega - 1) * n || complete;
    out.emplace_back("ratio_bound", cond_verdict(true, ratio_ok && equality_only_complete));

    out.emplace_back("interval_omega_minus_2",
                     cond_verdict(omega == n - 2, n - 4 <= dim_l && dim_l <= n - 3));
    out.emplace_back("interval_omega_minus_3",
                     cond_verdict(omega == n - 3, n - 8 <= dim_l && dim_l <= n - 3));

    out.emplace_back("half_bound", cond_verdict(omega == 3 && n >= 4, dim_l <= n / 2));
    out.emplace_back("half_bound_adjacency",
                     cond_verdict(omega == 3 && n >= 4, dim_al <= n / 2));
    out.emplace_back("two_thirds_bound",
                     cond_verdict(omega == 4 && n >= 5, dim_l <= 2 * n / 3));
    return out;
}

CheckList known_results_check(const Graph& g) {
    if (!is_connected(g))
        throw std::invalid_argument("known_results_check: graph must be connected");
    int omega = clique_number(g);
    int dim_l = g.n() >= 2 ? min_resolving_set(g, Variant::local_metric).size : 0;
    int dim_al = g.n() >= 2 ? min_resolving_set(g, Variant::local_adjacency).size : 0;
    return known_results_check(g, omega, dim_l, dim_al);
}

Verdict DimensionReport::check(const std::string& name) const {
    for (const auto& [k, v] : checks)
        if (k == name) return v;
    return Verdict::skip;
}

bool DimensionReport::any_failure() const {
    for (const auto& [k, v] : checks)
        if (v == Verdict::fail) return true;
    return false;
}

bool DimensionReport::any_flagged() const {
    for (const auto& [k, v] : checks)
        if (v == Verdict::flagged) return true;
    return false;
}

namespace {

nlohmann::ordered_json report_json(const DimensionReport& r) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["n"] = r.n;
    j["omega"] = r.omega;
    auto opt = [](auto& field) -> nlohmann::ordered_json {
        if (field) return *field;
        return nullptr;
    };
    j["bound"] = opt(r.bound_value);
    j["dim"] = opt(r.dim);
    j["dim_l"] = opt(r.dim_l);
    j["dim_a"] = opt(r.dim_a);
    j["dim_al"] = opt(r.dim_al);
    j["s_faithful"] = opt(r.s_faithful);
    j["s_pruned"] = opt(r.s_pruned);
    nlohmann::ordered_json checks = nlohmann::ordered_json::object();
    for (const auto& [name, verdict] : r.checks) checks[name] = verdict_name(verdict);
    j["checks"] = std::move(checks);
    j["ms"] = r.ms;
    return j;
}

template <typename T>
void csv_opt(std::ostringstream& os, const std::optional<T>& v) {
    if (v) os << *v;
}

}  // namespace

std::string report_to_json(const DimensionReport& r) { return report_json(r).dump(); }

std::string reports_to_json(const std::vector<DimensionReport>& rs) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rs) arr.push_back(report_json(r));
    return arr.dump(2);
}

std::string report_csv_header() {
    return "id,n,omega,bound,dim,dim_l,dim_a,dim_al,s_faithful,s_pruned,checks,ms";
}

std::string report_to_csv_row(const DimensionReport& r) {
    std::ostringstream os;
    os << r.id << ',' << r.n << ',' << r.omega << ',';
    csv_opt(os, r.bound_value);
    os << ',';
    csv_opt(os, r.dim);
    os << ',';
    csv_opt(os, r.dim_l);
    os << ',';
    csv_opt(os, r.dim_a);
    os << ',';
    csv_opt(os, r.dim_al);
    os << ',';
    csv_opt(os, r.s_faithful);
    os << ',';
    csv_opt(os, r.s_pruned);
    os << ',';
    bool first = true;
    for (const auto& [name, verdict] : r.checks) {
        if (!first) os << ';';
        first = false;
        os << name << '=' << verdict_name(verdict);
    }
    os << ',' << r.ms;
    return os.str();
}

}  // namespace locdim
