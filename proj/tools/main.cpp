#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "figure.hpp"
#include "record.hpp"

namespace {

using namespace polyquant;
using namespace polyquant::cli;

OracleConfig oracle_config_from_env() {
    OracleConfig config;
    if (const char* seed = std::getenv("POLYQUANT_SEED"))
        config.seed = std::strtoull(seed, nullptr, 10);
    return config;
}

/// Writes to the given path, or to stdout for an empty path or "-".
bool write_output(const std::string& path, const std::string& payload) {
    if (path.empty() || path == "-") {
        std::cout << payload;
        return true;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << payload;
    return static_cast<bool>(out);
}

std::pair<int, int> parse_range(const std::string& text) {
    auto sep = text.find("..");
    if (sep == std::string::npos)
        throw std::invalid_argument("--n-range: expected the form A..B");
    int lo = 0;
    int hi = 0;
    try {
        lo = std::stoi(text.substr(0, sep));
        hi = std::stoi(text.substr(sep + 2));
    } catch (const std::exception&) {
        throw std::invalid_argument("--n-range: expected integers in A..B");
    }
    if (hi < lo) throw std::invalid_argument("--n-range: range is empty");
    return {lo, hi};
}

int run(int argc, char** argv) {
    CLI::App app{"Conditional quantizers for the uniform measure on a regular k-gon boundary"};
    app.require_subcommand(1);

    int k = 6;
    int n = 6;
    std::string constraint_text = "none";
    std::string format = "json";
    std::string out_path;
    std::string range_text;
    long long n_max = 600;
    bool do_verify = false;

    auto add_common = [&](CLI::App* cmd, bool with_n) {
        cmd->add_option("--k", k, "number of polygon sides (k >= 3)")->required();
        if (with_n) cmd->add_option("--n", n, "number of quantizer points")->required();
        cmd->add_option("--constraint", constraint_text,
                        "none|circumcircle|incircle|diag-short|diag-long")
            ->default_val("none");
        cmd->add_option("--out", out_path, "output file (default: stdout)");
    };

    CLI::App* solve = app.add_subcommand("solve", "compute one optimal set and its error");
    add_common(solve, true);
    solve->add_option("--format", format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->default_val("json");
    solve->add_flag("--verify", do_verify, "attach a brute-force oracle verdict");

    CLI::App* table = app.add_subcommand("table", "CSV table of (n, V_n) over a range");
    add_common(table, false);
    table->add_option("--n-range", range_text, "inclusive range, e.g. 6..12")->required();

    CLI::App* figure = app.add_subcommand("figure", "render an optimal set as SVG");
    add_common(figure, true);

    CLI::App* dimension = app.add_subcommand("dimension", "decay-rate and coefficient report");
    dimension->add_option("--k", k, "number of polygon sides (k >= 3)")->required();
    dimension->add_option("--n-max", n_max, "largest n in the sweep")->default_val(600);
    dimension->add_option("--out", out_path, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // prints help, exit 0
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    Constraint constraint = constraint_from_name(constraint_text);

    if (solve->parsed()) {
        ResultRecord record = solve_record(k, n, constraint);
        if (do_verify) attach_verdict(record, oracle_config_from_env());
        std::string payload =
            (format == "json") ? to_json(record) + "\n" : to_csv(record);
        if (!write_output(out_path, payload)) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return 1;
        }
        if (do_verify && !record.verdict->passed) {
            std::cerr << "oracle verdict failed: delta=" << record.verdict->value_delta
                      << " displacement=" << record.verdict->max_site_displacement << "\n";
            return 1;
        }
        return 0;
    }

    if (table->parsed()) {
        auto [lo, hi] = parse_range(range_text);
        std::ostringstream csv;
        csv << "n,V_n\n";
        double previous = 0.0;
        bool first = true;
        for (int row_n = lo; row_n <= hi; ++row_n) {
            ResultRecord record = solve_record(k, row_n, constraint);
            csv << row_n << "," << format_double(record.v_n) << "\n";
            double comparable = comparable_value(record);
            if (!first && comparable >= previous) {
                std::cerr << "error: V_n failed to decrease at n=" << row_n << "\n";
                return 1;
            }
            previous = comparable;
            first = false;
        }
        if (!write_output(out_path, csv.str())) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return 1;
        }
        return 0;
    }

    if (figure->parsed()) {
        ResultRecord record = solve_record(k, n, constraint);
        if (!write_output(out_path, render_svg(record))) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return 1;
        }
        return 0;
    }

    if (dimension->parsed()) {
        DimensionReport report = dimension_and_coefficient(k, n_max);
        std::ostringstream json;
        json << "{\"schema\": 1, \"kind\": \"dimension\", \"k\": " << k << ", \"n_max\": " << n_max
             << ", \"dimension_estimate\": " << format_double(report.dimension_estimate)
             << ", \"log_ratio_at_n_max\": " << format_double(report.log_ratio_at_n_max)
             << ", \"coefficient_estimate\": " << format_double(report.coefficient_estimate)
             << ", \"coefficient_closed_form\": " << format_double(report.coefficient_closed_form)
             << ", \"v_infinity\": " << format_double(report.v_infinity) << ", \"samples\": [";
        for (std::size_t i = 0; i < report.samples.size(); ++i) {
            if (i) json << ", ";
            json << "[" << report.samples[i].first << ", "
                 << format_double(report.samples[i].second) << "]";
        }
        json << "]}\n";
        if (!write_output(out_path, json.str())) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return 1;
        }
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const polyquant::SolverFailure& e) {
        std::cerr << "solver failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
