// Command-line front end. run_cli() is the whole program minus main(), so
// tests can drive it with in-memory streams.
//
// Exit codes: 0 success / verdict true, 1 usage or malformed input,
// 2 domain rejection (not realizable, failed check, oracle says no),
// 3 resource limit, 4 internal verifier failure.
#ifndef TRIMULTI_CLI_HPP
#define TRIMULTI_CLI_HPP

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "trimulti/bench.hpp"
#include "trimulti/construct.hpp"
#include "trimulti/document.hpp"
#include "trimulti/generate.hpp"
#include "trimulti/oracle.hpp"

namespace trimulti {

namespace cli_detail {

inline int exit_code_for(errc code) {
    switch (code) {
        case errc::parse_error:
        case errc::empty_input:
        case errc::negative_entry:
        case errc::overflow:
        case errc::empty_benchmark:
            return 1;
        case errc::zero_degree_present:
        case errc::vertex_out_of_range:
        case errc::shared_vertex_count_not_one:
        case errc::precondition_violated:
        case errc::not_realizable:
            return 2;
        case errc::limit_exceeded:
        case errc::retry_budget_exceeded:
            return 3;
        case errc::internal_verifier:
            return 4;
    }
    return 4;
}

inline const char* error_name(errc code) {
    switch (code) {
        case errc::parse_error: return "ParseError";
        case errc::empty_input: return "EmptyInput";
        case errc::negative_entry: return "NegativeEntry";
        case errc::overflow: return "Overflow";
        case errc::zero_degree_present: return "ZeroDegreePresent";
        case errc::vertex_out_of_range: return "VertexOutOfRange";
        case errc::shared_vertex_count_not_one: return "SharedVertexCountNotOne";
        case errc::precondition_violated: return "PreconditionViolated";
        case errc::not_realizable: return "NotRealizable";
        case errc::internal_verifier: return "Internal";
        case errc::limit_exceeded: return "LimitExceeded";
        case errc::retry_budget_exceeded: return "RetryBudgetExceeded";
        case errc::empty_benchmark: return "EmptyBenchmark";
    }
    return "Internal";
}

inline std::vector<std::int64_t> parse_degree_list(const std::string& text) {
    std::vector<std::int64_t> values;
    std::size_t i = 0;
    const auto is_separator = [](char c) {
        return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r';
    };
    while (i < text.size()) {
        while (i < text.size() && is_separator(text[i])) ++i;
        if (i >= text.size()) break;
        std::int64_t value = 0;
        const auto first = text.data() + i;
        const auto last = text.data() + text.size();
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || (ptr != last && !is_separator(*ptr)))
            throw Error(errc::parse_error, "not an integer sequence: '" + text + "'");
        values.push_back(value);
        i = static_cast<std::size_t>(ptr - text.data());
    }
    if (values.empty()) throw Error(errc::parse_error, "empty degree sequence");
    return values;
}

// A sequence argument is either the comma-separated list itself or a path
// to a file holding one.
inline std::vector<std::int64_t> resolve_sequence_input(const std::string& input) {
    try {
        return parse_degree_list(input);
    } catch (const Error&) {
        std::ifstream file(input);
        if (!file) throw Error(errc::parse_error, "input is neither an integer list nor a readable file: '" + input + "'");
        std::stringstream buffer;
        buffer << file.rdbuf();
        return parse_degree_list(buffer.str());
    }
}

// First failed condition in report order; used for the machine-readable
// rejection diagnostics.
inline const char* failure_reason(const ValidationReport& report) {
    if (!report.ordering_ok) return "ordering";
    if (!report.min_degree_ok) return "min_degree";
    if (!report.parity_ok) return "parity";
    if (!report.d1_bound_ok) return "d1_bound";
    if (report.erdos_gallai_ok && !*report.erdos_gallai_ok) return "erdos_gallai";
    return "none";
}

inline void emit_error(std::ostream& err, const char* name, const std::string& message) {
    nlohmann::json j;
    j["error"] = name;
    j["message"] = message;
    err << j.dump() << "\n";
}

inline std::int64_t env_int64(const char* name, std::int64_t fallback) {
    const char* value = std::getenv(name);
    if (value == nullptr || *value == '\0') return fallback;
    std::int64_t parsed = 0;
    const auto [ptr, ec] = std::from_chars(value, value + std::string_view(value).size(), parsed);
    if (ec != std::errc{} || *ptr != '\0') return fallback;
    return parsed;
}

struct RealizeOptions {
    std::string input;
    std::string format = "json";
    bool sorted_labels = false;
    bool batch = false;
};

inline int run_realize_once(const std::vector<std::int64_t>& raw, const RealizeOptions& options,
                            std::ostream& out, bool compact) {
    DegreeSequence seq = canonicalize(raw);
    Realization realization = realize(seq);
    RealizationDocument doc = make_document(seq, realization, options.sorted_labels);
    if (options.format == "dot")
        out << to_dot(doc);
    else if (options.format == "tsv")
        out << to_tsv(doc);
    else if (compact) {
        // Batch mode keeps one document per line.
        const std::string pretty = to_json(doc);
        out << nlohmann::json::parse(pretty).dump() << "\n";
    } else
        out << to_json(doc);
    return 0;
}

inline int run_realize(const RealizeOptions& options, std::ostream& out, std::ostream& err) {
    if (options.batch) {
        if (options.format != "json") {
            emit_error(err, "ParseError", "batch mode only supports --format json");
            return 1;
        }
        std::ifstream file(options.input);
        if (!file) {
            emit_error(err, "ParseError", "cannot open batch file: " + options.input);
            return 1;
        }
        int worst = 0;
        std::string line;
        std::int64_t line_number = 0;
        while (std::getline(file, line)) {
            ++line_number;
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            try {
                run_realize_once(parse_degree_list(line), options, out, /*compact=*/true);
            } catch (const NotRealizableError& e) {
                nlohmann::json j;
                j["error"] = "NotRealizable";
                j["line"] = line_number;
                j["reason"] = failure_reason(e.report());
                err << j.dump() << "\n";
                worst = std::max(worst, 2);
            } catch (const Error& e) {
                nlohmann::json j;
                j["error"] = error_name(e.code());
                j["line"] = line_number;
                j["message"] = e.what();
                err << j.dump() << "\n";
                worst = std::max(worst, exit_code_for(e.code()));
            }
        }
        return worst;
    }
    return run_realize_once(resolve_sequence_input(options.input), options, out, /*compact=*/false);
}

}  // namespace cli_detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"triangular multigraph degree sequence toolkit"};
    app.require_subcommand(1);

    cli_detail::RealizeOptions realize_options;
    auto* realize_cmd = app.add_subcommand(
        "realize", "construct a triangular multigraph with the given degree sequence");
    realize_cmd->add_option("sequence", realize_options.input,
                            "degree sequence (comma separated) or a file path")
        ->required();
    realize_cmd->add_option("--format", realize_options.format, "output format")
        ->check(CLI::IsMember({"json", "dot", "tsv"}))
        ->capture_default_str();
    realize_cmd->add_flag("--sorted", realize_options.sorted_labels,
                          "emit vertices in descending-degree order instead of input order");
    realize_cmd->add_flag("--batch", realize_options.batch,
                          "treat the argument as a file with one sequence per line");

    std::string check_input;
    bool check_erdos_gallai_flag = false;
    auto* check_cmd = app.add_subcommand("check", "test sequence-level conditions");
    check_cmd->add_option("sequence", check_input, "degree sequence (comma separated) or a file path")
        ->required();
    check_cmd->add_flag("--erdos-gallai", check_erdos_gallai_flag,
                        "run the Erdos-Gallai graphicality test instead of the triangular conditions");

    std::string oracle_input;
    std::int64_t census_n = 0;
    std::int64_t max_n_flag = 0;
    std::int64_t max_sum_flag = 0;
    std::int64_t deadline_ms = 0;
    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive search for realizations at small n");
    auto* oracle_seq_opt =
        oracle_cmd->add_option("sequence", oracle_input, "degree sequence (comma separated) or a file path");
    auto* census_opt = oracle_cmd->add_option(
        "--census", census_n, "report (3,...,3) realizability for 3 <= n <= N as CSV");
    oracle_cmd->add_option("--max-n", max_n_flag, "override the oracle vertex limit");
    oracle_cmd->add_option("--max-sum", max_sum_flag, "override the oracle degree-sum limit");
    oracle_cmd->add_option("--deadline-ms", deadline_ms, "abort the search after this many milliseconds");
    oracle_seq_opt->excludes(census_opt);

    std::uint64_t gen_seed = 1;
    std::int64_t gen_n_min = 3, gen_n_max = 12, gen_deg_min = 4, gen_deg_max = 12;
    auto* gen_cmd = app.add_subcommand("gen", "generate a random valid degree sequence");
    gen_cmd->add_option("--seed", gen_seed, "")->capture_default_str();
    gen_cmd->add_option("--n-min", gen_n_min, "")->capture_default_str();
    gen_cmd->add_option("--n-max", gen_n_max, "")->capture_default_str();
    gen_cmd->add_option("--deg-min", gen_deg_min, "")->capture_default_str();
    gen_cmd->add_option("--deg-max", gen_deg_max, "")->capture_default_str();

    std::int64_t bench_n = 0;
    std::int64_t bench_trials = 3;
    std::uint64_t bench_seed = 1;
    auto* bench_cmd = app.add_subcommand("bench", "time realize() on generated sequences");
    bench_cmd->add_option("--n", bench_n, "sequence length")->required();
    bench_cmd->add_option("--trials", bench_trials, "")->capture_default_str();
    bench_cmd->add_option("--seed", bench_seed, "")->capture_default_str();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }

    try {
        if (realize_cmd->parsed()) {
            try {
                return cli_detail::run_realize(realize_options, out, err);
            } catch (const NotRealizableError& e) {
                nlohmann::json j;
                j["error"] = "NotRealizable";
                j["reason"] = cli_detail::failure_reason(e.report());
                j["report"] = nlohmann::json::parse(to_json(e.report()));
                err << j.dump() << "\n";
                return 2;
            }
        }

        if (check_cmd->parsed()) {
            DegreeSequence seq = canonicalize(cli_detail::resolve_sequence_input(check_input));
            const ValidationReport report =
                check_erdos_gallai_flag ? check_erdos_gallai(seq) : check_triangular_conditions(seq);
            out << to_json(report);
            const bool ok = check_erdos_gallai_flag ? report.erdos_gallai_ok.value_or(false)
                                                    : report.triangular_conditions_ok();
            if (!ok) {
                nlohmann::json j;
                j["error"] = "CheckFailed";
                j["reason"] = check_erdos_gallai_flag
                                  ? (report.failing_k == 0 ? "parity" : "erdos_gallai")
                                  : cli_detail::failure_reason(report);
                if (report.failing_k) j["failing_k"] = *report.failing_k;
                err << j.dump() << "\n";
                return 2;
            }
            return 0;
        }

        if (oracle_cmd->parsed()) {
            OracleLimits limits;
            limits.max_n = cli_detail::env_int64("TRIMULTI_ORACLE_MAX_N", limits.max_n);
            limits.max_degree_sum = cli_detail::env_int64("TRIMULTI_ORACLE_MAX_SUM", limits.max_degree_sum);
            if (max_n_flag > 0) limits.max_n = max_n_flag;
            if (max_sum_flag > 0) limits.max_degree_sum = max_sum_flag;
            if (deadline_ms > 0)
                limits.deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(deadline_ms);
            if (*census_opt) {
                out << to_csv(proposition_census(census_n, limits));
                return 0;
            }
            if (oracle_input.empty()) {
                err << "oracle: need a sequence or --census N\n";
                return 1;
            }
            const OracleResult result =
                exists_triangular_realization(cli_detail::resolve_sequence_input(oracle_input), limits);
            out << to_json(result);
            return result.exists ? 0 : 2;
        }

        if (gen_cmd->parsed()) {
            const DegreeSequence seq =
                generate_valid_sequence(gen_seed, gen_n_min, gen_n_max, gen_deg_min, gen_deg_max);
            const auto& d = seq.degrees();
            for (std::size_t i = 0; i < d.size(); ++i) out << (i ? "," : "") << d[i];
            out << "\n";
            return 0;
        }

        if (bench_cmd->parsed()) {
            const BenchReport report = bench_realize(bench_n, bench_trials, bench_seed);
            out << "n=" << report.n << "\n"
                << "trials=" << report.trials << "\n"
                << "median_seconds=" << report.median_seconds << "\n"
                << "total_seconds=" << report.total_seconds << "\n"
                << "edges_max=" << report.max_edge_count << "\n"
                << "edges_per_second=" << report.edges_per_second << "\n";
            return 0;
        }
    } catch (const Error& e) {
        cli_detail::emit_error(err, cli_detail::error_name(e.code()), e.what());
        return cli_detail::exit_code_for(e.code());
    }
    return 1;
}

}  // namespace trimulti

#endif
