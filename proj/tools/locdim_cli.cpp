#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "locdim/clique.hpp"
#include "locdim/construct.hpp"
#include "locdim/family.hpp"
#include "locdim/graph6.hpp"
#include "locdim/packing.hpp"
#include "locdim/resolving.hpp"
#include "locdim/sweep.hpp"
#include "locdim/verify.hpp"

namespace {

using namespace locdim;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::vector<std::pair<std::string, Graph>> load_corpus(const std::string& path) {
    auto lines = read_graph6_file(path);
    if (lines.empty()) throw std::invalid_argument("corpus contains no graphs: " + path);
    std::vector<std::pair<std::string, Graph>> graphs;
    for (const auto& line : lines) {
        try {
            graphs.emplace_back(line.token, decode_graph6(line.token));
        } catch (const Graph6Error& e) {
            std::cerr << path << ":" << line.line_number << ": " << e.what() << "\n";
        }
    }
    if (graphs.empty()) throw std::invalid_argument("no decodable graphs in: " + path);
    return graphs;
}

Variant parse_variant(const std::string& name) {
    if (name == "metric") return Variant::metric;
    if (name == "local" || name == "local-metric") return Variant::local_metric;
    if (name == "adj" || name == "adjacency") return Variant::adjacency;
    if (name == "local-adj" || name == "local-adjacency") return Variant::local_adjacency;
    throw std::invalid_argument("unknown variant: " + name);
}

int cmd_gen(const std::string& family, int t, int omega, int n, int r) {
    Graph g = [&] {
        if (family == "gtw") return gtw_graph(t, omega);
        if (family == "knr") return knr_graph(n, r);
        if (family == "complete") return complete_graph(n);
        if (family == "path") return path_graph(n);
        if (family == "cycle") return cycle_graph(n);
        throw std::invalid_argument("unknown family: " + family);
    }();
    std::cout << encode_graph6(g) << "\n";
    return kExitOk;
}

int cmd_dims(const std::string& path, const std::string& variants_csv,
             const std::string& format, const std::string& out_path) {
    if (format != "json" && format != "csv")
        throw std::invalid_argument("unknown format: " + format);
    std::vector<Variant> variants;
    std::stringstream ss(variants_csv);
    std::string item;
    while (std::getline(ss, item, ',') )
        if (!item.empty()) variants.push_back(parse_variant(item));
    if (variants.empty()) throw std::invalid_argument("no variants requested");

    auto graphs = load_corpus(path);
    std::vector<DimensionReport> reports;
    for (const auto& [token, g] : graphs) {
        auto start = std::chrono::steady_clock::now();
        DimensionReport r;
        r.id = token;
        r.n = g.n();
        r.omega = clique_number(g);
        for (Variant v : variants) {
            if (is_distance_variant(v) && !is_connected(g)) {
                std::cerr << token << ": " << variant_name(v)
                          << " needs a connected graph, field left empty\n";
                continue;
            }
            int size = min_resolving_set(g, v).size;
            switch (v) {
                case Variant::metric: r.dim = size; break;
                case Variant::local_metric: r.dim_l = size; break;
                case Variant::adjacency: r.dim_a = size; break;
                case Variant::local_adjacency: r.dim_al = size; break;
            }
        }
        if (is_connected(g) && r.omega >= 3 && g.n() >= r.omega + 1)
            r.bound_value = dim_bound(g.n(), r.omega);
        r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
                   .count();
        reports.push_back(std::move(r));
    }
    std::ostringstream body;
    if (format == "csv") {
        body << report_csv_header() << "\n";
        for (const auto& r : reports) body << report_to_csv_row(r) << "\n";
    } else {
        body << reports_to_json(reports) << "\n";
    }
    if (out_path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
        out << body.str();
    }
    return kExitOk;
}

int cmd_construct(const std::string& path, const std::string& mode_name, bool trace) {
    if (mode_name != "faithful" && mode_name != "pruned")
        throw std::invalid_argument("unknown mode: " + mode_name);
    ConstructMode mode =
        mode_name == "pruned" ? ConstructMode::pruned : ConstructMode::faithful;
    auto graphs = load_corpus(path);
    int exit_code = kExitOk;
    for (const auto& [token, g] : graphs) {
        try {
            Construction c = construct_lars(g, mode);
            bool valid = is_resolving(g, c.set, Variant::local_adjacency);
            std::cout << token << " |S|=" << c.set.size() << " bound=" << c.bound_value
                      << " valid=" << (valid ? "yes" : "no")
                      << (c.size_guaranteed ? "" : " (no size guarantee: omega=3)")
                      << (c.overshoot ? " overshoot" : "") << " S={";
            bool first = true;
            for (int v : c.set) {
                if (!first) std::cout << ',';
                first = false;
                std::cout << v;
            }
            std::cout << "}\n";
            if (trace) std::cout << choice_log_to_json(c.log) << "\n";
            if (!valid) exit_code = kExitCheckFailed;
        } catch (const NoAdmissibleChoice& e) {
            std::cerr << token << ": " << e.what() << "\n";
            exit_code = kExitCheckFailed;
        } catch (const std::invalid_argument& e) {
            std::cout << token << " skipped: " << e.what() << "\n";
        }
    }
    return exit_code;
}

int cmd_verify(const std::string& path, const std::string& format) {
    if (format != "json" && format != "csv")
        throw std::invalid_argument("unknown format: " + format);
    auto graphs = load_corpus(path);
    EvalOptions opt;
    opt.timing = true;
    std::vector<DimensionReport> reports;
    bool failed = false;
    for (const auto& [token, g] : graphs) {
        DimensionReport r = evaluate_graph(g, token, opt);
        failed = failed || r.any_failure();
        reports.push_back(std::move(r));
    }
    if (format == "csv") {
        std::cout << report_csv_header() << "\n";
        for (const auto& r : reports) std::cout << report_to_csv_row(r) << "\n";
    } else {
        std::cout << reports_to_json(reports) << "\n";
    }
    if (failed) {
        for (const auto& r : reports)
            if (r.any_failure()) std::cerr << "failed: " << report_to_json(r) << "\n";
        return kExitCheckFailed;
    }
    return kExitOk;
}

int cmd_sweep(const SweepConfig& cfg, const std::string& report_path) {
    SweepConfig run_cfg = cfg;
    run_cfg.collect_rows = !report_path.empty();
    SweepResult result = run_sweep(run_cfg);

    for (const auto& e : result.parse_errors) std::cerr << "parse error: " << e << "\n";

    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) throw std::invalid_argument("cannot open report file: " + report_path);
        if (report_path.size() >= 5 &&
            report_path.compare(report_path.size() - 5, 5, ".json") == 0) {
            out << reports_to_json(result.rows) << "\n";
        } else {
            out << report_csv_header() << "\n";
            for (const auto& r : result.rows) out << report_to_csv_row(r) << "\n";
        }
    }

    if (result.random_source)
        std::cout << "random model: count=" << result.random.count << " n=" << result.random.n
                  << " p=" << result.random.edge_probability << " seed=" << result.random.seed
                  << " plant-omega=" << result.random.plant_omega << "\n";
    std::cout << "graphs enumerated: " << result.enumerated << "\n";
    for (auto [n, count] : result.enumerated_by_n)
        std::cout << "  n=" << n << ": " << count << "\n";
    std::cout << "eligible (connected, omega>=3, n>=omega+1): " << result.eligible << "\n"
              << "skipped: " << result.skipped << "\n"
              << "parse failures: " << result.parse_failures << "\n"
              << "bound violations: " << result.bound_violations << "\n"
              << "other check failures: " << result.check_failures << "\n"
              << "equality cases: " << result.equality_count << "\n"
              << "faithful overshoots (omega>=4): " << result.faithful_overshoot << "\n"
              << "pruned overshoots (omega>=4): " << result.pruned_overshoot << "\n"
              << "graphs needing construction backtracking: " << result.construct_backtracks
              << "\n";
    if (result.halted) std::cout << "sweep halted on a bound violation\n";
    for (const auto& w : result.failure_witnesses) std::cerr << "witness: " << w << "\n";

    return result.bound_violations + result.check_failures > 0 ? kExitCheckFailed : kExitOk;
}

int cmd_counting(int omega, int t_max) {
    CountingReport report = counting_checks(omega, t_max);
    std::cout << "omega=" << report.omega << "\n";
    for (const auto& c : report.cases)
        std::cout << "t=" << c.t << " xi=" << c.xi.str() << " case(" << c.case_name
                  << ")=" << c.case_bound.str() << " " << (c.ok ? "ok" : "VIOLATED")
                  << (c.tight ? " (tight)" : "") << "\n";
    for (const auto& c : report.r_checks)
        std::cout << "r=" << c.r << " lhs=" << c.lhs.str() << " rhs=" << c.rhs << " "
                  << (c.ok ? "ok" : "VIOLATED") << "\n";
    return report.all_ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"metric-dimension toolkit: exact solvers, pattern packing, set construction "
                 "and corpus verification"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "emit a generated graph as graph6");
    std::string gen_family;
    int gen_t = 2, gen_omega = 3, gen_n = 4, gen_r = 1;
    gen->add_option("--family", gen_family, "gtw | knr | complete | path | cycle")->required();
    gen->add_option("--t", gen_t, "copies (gtw)");
    gen->add_option("--omega", gen_omega, "clique size (gtw)");
    gen->add_option("--n", gen_n, "order (knr/complete/path/cycle)");
    gen->add_option("--r", gen_r, "removed edges (knr)");

    // dims
    auto* dims = app.add_subcommand("dims", "exact dimensions for a graph6 corpus");
    std::string dims_in, dims_variants = "local,local-adj", dims_format = "json", dims_out;
    dims->add_option("--in", dims_in, "graph6 file, one token per line")->required();
    dims->add_option("--variants", dims_variants, "comma list: metric,local,adj,local-adj");
    dims->add_option("--format", dims_format, "json | csv");
    dims->add_option("--out", dims_out, "output file (default stdout)");

    // construct
    auto* construct = app.add_subcommand("construct", "build local adjacency resolving sets");
    std::string cons_in, cons_mode = "faithful";
    bool cons_trace = false;
    construct->add_option("--in", cons_in, "graph6 file")->required();
    construct->add_option("--mode", cons_mode, "faithful | pruned");
    construct->add_flag("--trace", cons_trace, "print the choice log as JSON");

    // verify
    auto* verify = app.add_subcommand("verify", "bound and known-results checks per graph");
    std::string ver_in, ver_format = "json";
    verify->add_option("--in", ver_in, "graph6 file")->required();
    verify->add_option("--format", ver_format, "json | csv");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "batch verification with aggregate report");
    int sweep_builtin_n = 0, sweep_jobs = 0;
    std::string sweep_in, sweep_report;
    long long rnd_count = 0;
    int rnd_n = 0, rnd_plant = 0;
    double rnd_p = 0.5;
    std::uint64_t rnd_seed = 0;
    bool rnd_seed_set = false;
    sweep->add_option("--builtin-n", sweep_builtin_n, "exhaustive labeled graphs up to n (<=7)");
    sweep->add_option("--in", sweep_in, "graph6 corpus file");
    sweep->add_option("--jobs", sweep_jobs, "worker count (default: LOCDIM_JOBS or cores)");
    sweep->add_option("--report", sweep_report, "write per-graph rows (.csv or .json)");
    sweep->add_option("--random-count", rnd_count, "random model: number of graphs");
    sweep->add_option("--random-n", rnd_n, "random model: order");
    sweep->add_option("--random-p", rnd_p, "random model: edge probability");
    sweep->add_option("--seed", rnd_seed, "random model: seed (required with --random-count)")
        ->each([&](const std::string&) { rnd_seed_set = true; });
    sweep->add_option("--plant-omega", rnd_plant, "random model: planted clique size");

    // counting
    auto* counting = app.add_subcommand("counting", "exact-rational counting checks");
    int cnt_omega = 4, cnt_tmax = 10;
    counting->add_option("--omega", cnt_omega, "clique number (>= 4)")->required();
    counting->add_option("--tmax", cnt_tmax, "largest t");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_family, gen_t, gen_omega, gen_n, gen_r);
        if (dims->parsed()) return cmd_dims(dims_in, dims_variants, dims_format, dims_out);
        if (construct->parsed()) return cmd_construct(cons_in, cons_mode, cons_trace);
        if (verify->parsed()) return cmd_verify(ver_in, ver_format);
        if (sweep->parsed()) {
            SweepConfig cfg;
            cfg.jobs = sweep_jobs;
            int sources = (!sweep_in.empty()) + (rnd_count > 0) + (sweep_builtin_n > 0);
            if (sources > 1)
                throw std::invalid_argument(
                    "sweep takes exactly one of --builtin-n, --in or --random-count");
            if (!sweep_in.empty()) {
                cfg.source = SweepConfig::Source::file;
                cfg.path = sweep_in;
            } else if (rnd_count > 0) {
                if (!rnd_seed_set)
                    throw std::invalid_argument("--seed is required with --random-count");
                cfg.source = SweepConfig::Source::random;
                cfg.random = RandomModel{rnd_count, rnd_n, rnd_p, rnd_seed, rnd_plant};
                if (rnd_n > 16) {
                    // Exact dimensions blow up past desk scale; keep the
                    // construction-validity checks only.
                    cfg.eval.exact_dims = false;
                    cfg.eval.all_dims = false;
                    cfg.eval.known_results = false;
                }
            } else if (sweep_builtin_n > 0) {
                cfg.source = SweepConfig::Source::builtin;
                cfg.builtin_max_n = sweep_builtin_n;
            } else {
                throw std::invalid_argument(
                    "sweep needs one of --builtin-n, --in or --random-count");
            }
            return cmd_sweep(cfg, sweep_report);
        }
        if (counting->parsed()) return cmd_counting(cnt_omega, cnt_tmax);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
