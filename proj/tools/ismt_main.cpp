// ismt -- command line front end: instance checking, solving, exact
// brute force, instance generation and a benchmark harness.
//
// Exit codes: 0 success, 1 validation/parse failure, 2 infeasible instance,
// 3 oracle or terminal cap exceeded.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ismt/errors.hpp"
#include "ismt/generator.hpp"
#include "ismt/oracle.hpp"
#include "ismt/report.hpp"
#include "ismt/solver.hpp"
#include "ismt/stp.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitCapExceeded = 3;

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    const auto d = std::chrono::steady_clock::now() - start;
    return std::chrono::duration<double, std::milli>(d).count();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ismt::Error("cannot write file: " + path);
    out << text;
}

ismt::SteinerKind parse_sub(const std::string& name) {
    if (name == "mst") return ismt::SteinerKind::TerminalMst;
    if (name == "dw") return ismt::SteinerKind::ExactDw;
    throw ismt::Error("unknown subroutine '" + name + "' (use mst or dw)");
}

void print_warnings(const ismt::ParsedStp& parsed) {
    for (const auto& w : parsed.warnings) std::cerr << "warning: " << w << "\n";
}

int classify(const std::exception& e) {
    if (dynamic_cast<const ismt::InfeasibleInstance*>(&e)) return kExitInfeasible;
    if (dynamic_cast<const ismt::EmptyTerminalSet*>(&e)) return kExitInfeasible;
    if (dynamic_cast<const ismt::InstanceTooLarge*>(&e)) return kExitCapExceeded;
    if (dynamic_cast<const ismt::TerminalCapExceeded*>(&e)) return kExitCapExceeded;
    return kExitInvalid;
}

struct CheckArgs {
    std::string path;
    double tol = 1e-9;
    bool metricize = false;
};

int run_check(const CheckArgs& args) {
    const auto parsed = ismt::parse_stp_file(args.path);
    print_warnings(parsed);
    if (args.metricize) {
        const ismt::Instance inst = ismt::instance_from_parsed(parsed, true, args.tol);
        fs::path out(args.path);
        out.replace_extension(".metric.stp");
        write_text_file(out.string(), ismt::write_stp(inst));
        std::cout << "metric instance written to " << out.string() << "\n";
        return kExitOk;
    }
    if (!ismt::is_complete(parsed.graph)) {
        std::cout << "graph is not complete; rerun with --metricize\n";
        return kExitInvalid;
    }
    ismt::MetricGraph g(parsed.graph.n);
    for (const auto& e : parsed.graph.edges) g.set_weight(e.u, e.v, e.weight);
    const auto violations = ismt::validate_metric(g, args.tol);
    for (const auto& v : violations) std::cout << v.describe() << "\n";
    if (!violations.empty()) {
        std::cout << violations.size() << " violation(s)\n";
        return kExitInvalid;
    }
    std::cout << "ok: metric instance with " << parsed.graph.n << " vertices, "
              << parsed.terminals.size() << " terminal(s)\n";
    return kExitOk;
}

struct SolveArgs {
    std::string path;
    std::string sub = "dw";
    std::string out;
    bool traces = false;
    bool metricize = false;
    bool exact = false;
    int max_n = ismt::kDefaultOracleMaxN;
    int jobs = 1;
};

int run_solve(const SolveArgs& args) {
    const auto start = std::chrono::steady_clock::now();
    const auto parsed = ismt::parse_stp_file(args.path);
    print_warnings(parsed);
    const ismt::Instance inst = ismt::instance_from_parsed(parsed, args.metricize);
    const ismt::SteinerKind kind = parse_sub(args.sub);
    ismt::SolveOptions options;
    options.keep_traces = args.traces;
    options.jobs = args.jobs;
    const ismt::Solution sol = ismt::solve(inst, kind, options);
    std::optional<double> exact_weight;
    if (args.exact)
        exact_weight = ismt::exact_ismt_bruteforce(inst, args.max_n).optimum_weight;
    const std::string report = ismt::write_report(inst, sol, exact_weight, elapsed_ms(start));
    if (args.out.empty())
        std::cout << report;
    else
        write_text_file(args.out, report);
    return kExitOk;
}

struct ExactArgs {
    std::string path;
    std::string out;
    bool metricize = false;
    int max_n = ismt::kDefaultOracleMaxN;
};

int run_exact(const ExactArgs& args) {
    const auto start = std::chrono::steady_clock::now();
    const auto parsed = ismt::parse_stp_file(args.path);
    print_warnings(parsed);
    const ismt::Instance inst = ismt::instance_from_parsed(parsed, args.metricize);
    if (args.max_n > 10)
        std::cerr << "warning: --max-n " << args.max_n
                  << " can enumerate a very large number of trees\n";
    const ismt::OracleResult result = ismt::exact_ismt_bruteforce(inst, args.max_n);
    const std::string report = ismt::write_exact_report(inst, result, elapsed_ms(start));
    if (args.out.empty())
        std::cout << report;
    else
        write_text_file(args.out, report);
    return kExitOk;
}

struct GenArgs {
    std::string kind = "euclidean";
    int n = 0;
    int k = 0;
    std::uint64_t seed = 0;
    std::string out;
};

int run_gen(const GenArgs& args) {
    const auto kind = ismt::parse_gen_kind(args.kind);
    if (!kind) throw ismt::SpecInvalid("unknown generator kind '" + args.kind + "'");
    const ismt::Instance inst = ismt::generate({*kind, args.n, args.k, args.seed});
    const std::string text = ismt::write_stp(inst);
    if (args.out.empty())
        std::cout << text;
    else
        write_text_file(args.out, text);
    return kExitOk;
}

struct BenchArgs {
    std::string dir;
    std::string sub = "both";
    bool exact = false;
    bool metricize = false;
    int max_n = ismt::kDefaultOracleMaxN;
    std::string out;
};

std::string csv_field(const std::string& value) {
    std::string cleaned = value;
    std::replace(cleaned.begin(), cleaned.end(), ',', ';');
    std::replace(cleaned.begin(), cleaned.end(), '\n', ' ');
    return cleaned;
}

int run_bench(const BenchArgs& args) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(args.dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".stp")
            files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());

    std::vector<ismt::SteinerKind> kinds;
    if (args.sub == "both")
        kinds = {ismt::SteinerKind::TerminalMst, ismt::SteinerKind::ExactDw};
    else
        kinds = {parse_sub(args.sub)};

    std::ostringstream csv;
    csv << "instance,n,k,subroutine,alg_weight,exact_weight,ratio,pairs_evaluated,runtime_ms,"
           "error\n";
    double max_ratio = 0.0;
    double ratio_sum = 0.0;
    std::size_t ratio_count = 0;
    std::size_t rows = 0;

    for (const auto& file : files) {
        std::string name = file.stem().string();
        ismt::Instance inst;
        bool loaded = false;
        std::string load_error;
        try {
            const auto parsed = ismt::parse_stp_file(file.string());
            inst = ismt::instance_from_parsed(parsed, args.metricize);
            if (!inst.name.empty()) name = inst.name;
            loaded = true;
        } catch (const std::exception& e) {
            load_error = e.what();
        }
        if (!loaded) {
            csv << csv_field(name) << ",,,,,,,,," << csv_field(load_error) << "\n";
            ++rows;
            continue;
        }

        std::optional<double> exact_weight;
        if (args.exact && inst.graph.size() <= args.max_n) {
            try {
                exact_weight = ismt::exact_ismt_bruteforce(inst, args.max_n).optimum_weight;
            } catch (const std::exception&) {
                // leave the column empty; per-subroutine errors still surface below
            }
        }

        for (const ismt::SteinerKind kind : kinds) {
            const auto start = std::chrono::steady_clock::now();
            csv << csv_field(name) << "," << inst.graph.size() << "," << inst.terminals.size()
                << "," << ismt::steiner_name(kind) << ",";
            try {
                const ismt::Solution sol = ismt::solve(inst, kind);
                csv << ismt::format_weight(sol.weight) << ",";
                if (exact_weight) {
                    const double ratio = sol.weight / *exact_weight;
                    csv << ismt::format_weight(*exact_weight) << ","
                        << ismt::format_weight(ratio) << ",";
                    max_ratio = std::max(max_ratio, ratio);
                    ratio_sum += ratio;
                    ++ratio_count;
                } else {
                    csv << ",,";
                }
                csv << sol.pairs_evaluated << "," << ismt::format_weight(elapsed_ms(start))
                    << ",\n";
            } catch (const std::exception& e) {
                csv << ",,,," << ismt::format_weight(elapsed_ms(start)) << ","
                    << csv_field(e.what()) << "\n";
            }
            ++rows;
        }
    }

    if (args.out.empty())
        std::cout << csv.str();
    else
        write_text_file(args.out, csv.str());
    std::cerr << "bench: " << files.size() << " file(s), " << rows << " row(s)";
    if (ratio_count > 0)
        std::cerr << ", max ratio " << ismt::format_weight(max_ratio) << ", mean ratio "
                  << ismt::format_weight(ratio_sum / static_cast<double>(ratio_count));
    std::cerr << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"internal Steiner tree toolkit"};
    app.require_subcommand(1);

    CheckArgs check_args;
    auto* check = app.add_subcommand("check", "validate an STP instance as a metric graph");
    check->add_option("path", check_args.path, "STP file")->required();
    check->add_option("--tol", check_args.tol, "relative triangle tolerance");
    check->add_flag("--metricize", check_args.metricize,
                    "apply the metric closure and write <name>.metric.stp");

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "approximate the internal Steiner minimum tree");
    solve->add_option("path", solve_args.path, "STP file")->required();
    solve->add_option("--sub", solve_args.sub, "Steiner subroutine: mst or dw")
        ->check(CLI::IsMember({"mst", "dw"}));
    solve->add_option("--out", solve_args.out, "write the JSON report here instead of stdout");
    solve->add_flag("--traces", solve_args.traces, "include per-pair traces in the report");
    solve->add_flag("--metricize", solve_args.metricize, "metricize non-metric input first");
    solve->add_flag("--exact", solve_args.exact, "also run the exact oracle and report the ratio");
    solve->add_option("--max-n", solve_args.max_n, "oracle size cap for --exact");
    solve->add_option("--jobs", solve_args.jobs, "worker threads for the pair loop")
        ->check(CLI::PositiveNumber);

    ExactArgs exact_args;
    auto* exact = app.add_subcommand("exact", "exact brute-force optimum (small instances)");
    exact->add_option("path", exact_args.path, "STP file")->required();
    exact->add_option("--out", exact_args.out, "write the JSON report here instead of stdout");
    exact->add_flag("--metricize", exact_args.metricize, "metricize non-metric input first");
    exact->add_option("--max-n", exact_args.max_n, "vertex count cap");

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "generate a deterministic instance");
    gen->add_option("--kind", gen_args.kind, "euclidean, random or onetwo")
        ->check(CLI::IsMember({"euclidean", "random", "onetwo"}));
    gen->add_option("--n", gen_args.n, "vertex count")->required();
    gen->add_option("--k", gen_args.k, "terminal count")->required();
    gen->add_option("--seed", gen_args.seed, "64-bit seed");
    gen->add_option("--out", gen_args.out, "output STP file (stdout when omitted)");

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "solve every .stp file in a directory");
    bench->add_option("--dir", bench_args.dir, "directory of STP files")->required();
    bench->add_option("--sub", bench_args.sub, "mst, dw or both")
        ->check(CLI::IsMember({"mst", "dw", "both"}));
    bench->add_flag("--exact", bench_args.exact, "add oracle ratios where the instance is small");
    bench->add_flag("--metricize", bench_args.metricize, "metricize non-metric inputs");
    bench->add_option("--max-n", bench_args.max_n, "oracle size cap for --exact");
    bench->add_option("--out", bench_args.out, "CSV output file (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (check->parsed()) return run_check(check_args);
        if (solve->parsed()) return run_solve(solve_args);
        if (exact->parsed()) return run_exact(exact_args);
        if (gen->parsed()) return run_gen(gen_args);
        if (bench->parsed()) return run_bench(bench_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return classify(e);
    }
    return kExitInvalid;
}
