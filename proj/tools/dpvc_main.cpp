#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "dpvc/oracle.hpp"
#include "dpvc/rule_io.hpp"
#include "dpvc/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitCapExceeded = 3;
constexpr int kExitVerificationFailure = 4;

int run_generate(int d, double beta, const std::string& out_path, const std::string& stats_path,
                 int max_pattern_size, double time_limit) {
    dpvc::GenerationCaps caps;
    caps.max_pattern_size = max_pattern_size;
    caps.time_limit_seconds = time_limit;
    dpvc::GenerationResult result = dpvc::generate_rule_list(d, beta, caps);
    if (result.status != dpvc::GenerationStatus::complete) {
        std::cerr << (result.status == dpvc::GenerationStatus::pattern_cap_exceeded
                          ? "pattern-size cap exceeded"
                          : "time limit exceeded")
                  << " before the bad list emptied; psi so far " << result.list.psi()
                  << ", surviving bad graphs (" << result.surviving_bad.size() << "):\n";
        for (const dpvc::SmallGraph& g : result.surviving_bad) {
            std::cerr << "  n=" << g.vertex_count() << " edges:";
            for (auto [u, v] : g.edges()) std::cerr << ' ' << u << '-' << v;
            std::cerr << "\n";
        }
        return kExitCapExceeded;
    }
    dpvc::write_rule_file(out_path, result.list);
    dpvc::append_stats_row(stats_path, d, beta, static_cast<int>(result.list.rules.size()),
                           result.stats.wall_seconds);
    std::cout << "generated " << result.list.rules.size() << " rules (psi "
              << result.list.psi() << ", " << result.stats.handled_count << " handled) in "
              << dpvc::format_double(result.stats.wall_seconds) << " s\n";
    return kExitOk;
}

int run_solve(const std::string& rules_path, const std::string& graph_path, int k,
              bool certificate, int expected_d) {
    dpvc::RuleList rules = dpvc::read_rule_file(rules_path);
    if (expected_d != 0 && rules.d != expected_d) {
        std::cerr << "rule file was generated for d=" << rules.d << ", not d=" << expected_d
                  << "\n";
        return kExitInvalidInput;
    }
    dpvc::HostGraph graph = dpvc::read_graph_file(graph_path);
    dpvc::SolveResult result =
        dpvc::solve(dpvc::Instance{std::move(graph), k}, rules.d, rules, certificate);
    if (result.yes) {
        std::cout << "YES\n";
        if (result.certificate) {
            std::cout << "certificate";
            for (int v : *result.certificate) std::cout << ' ' << v;
            std::cout << "\n";
        }
    } else {
        std::cout << "NO\n";
    }
    return kExitOk;
}

int run_verify(const std::string& rules_path, int trials, std::uint64_t seed) {
    dpvc::RuleList rules = dpvc::read_rule_file(rules_path);
    bool failed = false;
    for (std::size_t i = 0; i < rules.rules.size(); ++i) {
        dpvc::oracle::VerificationReport report =
            dpvc::oracle::verify_rule_correctness(rules.rules[i], rules.d, trials, seed + i);
        std::cout << "rule " << i << ": " << report.to_text();
        failed = failed || !report.ok();
    }
    dpvc::oracle::VerificationReport exhaustive = dpvc::oracle::verify_exhaustive(rules, rules.d);
    std::cout << "exhaustiveness: " << exhaustive.to_text();
    failed = failed || !exhaustive.ok();
    return failed ? kExitVerificationFailure : kExitOk;
}

int run_stats(const std::string& stats_path) {
    std::ifstream in(stats_path);
    if (!in) {
        std::cerr << "no stats file at " << stats_path << "\n";
        return kExitInvalidInput;
    }
    std::cout << in.rdbuf();
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Branching-rule generator, solver and verifier for d-path vertex cover"};
    app.require_subcommand(1);

    int d = 0;
    double beta = 0.0;
    std::string out_path, rules_path, graph_path;
    std::string stats_path = "stats.csv";
    int max_pattern_size = 13;
    double time_limit = 0.0;
    int k = 0;
    bool certificate = false;
    int expected_d = 0;
    int trials = 100;
    std::uint64_t seed = 1;

    CLI::App* generate = app.add_subcommand("generate", "Generate an exhaustive rule list");
    generate->add_option("--d", d, "Path length in vertices")->required();
    generate->add_option("--beta", beta, "Target branching factor")->required();
    generate->add_option("--out", out_path, "Output rule file")->required();
    generate->add_option("--stats", stats_path, "Stats CSV path");
    generate->add_option("--max-pattern-size", max_pattern_size, "Pattern size cap");
    generate->add_option("--time-limit", time_limit, "Wall-clock limit in seconds (0 = none)");

    CLI::App* solve = app.add_subcommand("solve", "Decide an instance with a rule list");
    solve->add_option("--rules", rules_path, "Rule file")->required();
    solve->add_option("--graph", graph_path, "Graph file")->required();
    solve->add_option("--k", k, "Deletion budget")->required();
    solve->add_flag("--certificate", certificate, "Print a deletion set on YES");
    solve->add_option("--d", expected_d, "Refuse rule files generated for another d");

    CLI::App* verify = app.add_subcommand("verify", "Check rule correctness and exhaustiveness");
    verify->add_option("--rules", rules_path, "Rule file")->required();
    verify->add_option("--trials", trials, "Applying hosts per rule");
    verify->add_option("--seed", seed, "Base RNG seed");

    CLI::App* stats = app.add_subcommand("stats", "Print the stats CSV");
    stats->add_option("--stats", stats_path, "Stats CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        if (generate->parsed()) {
            if (d < 2 || beta < 1.0) {
                std::cerr << "invalid input: need d >= 2 and beta >= 1\n";
                return kExitInvalidInput;
            }
            return run_generate(d, beta, out_path, stats_path, max_pattern_size, time_limit);
        }
        if (solve->parsed()) return run_solve(rules_path, graph_path, k, certificate, expected_d);
        if (verify->parsed()) {
            if (trials < 1) {
                std::cerr << "invalid input: trials must be positive\n";
                return kExitInvalidInput;
            }
            return run_verify(rules_path, trials, seed);
        }
        return run_stats(stats_path);
    } catch (const dpvc::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const dpvc::ExhaustivenessViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
}
