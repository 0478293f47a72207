#include "fermat/commands.hpp"
#include "fermat/cusps.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <utility>

namespace {

using fermat::cli::RunConfig;

int emit_report(const fermat::cli::RunResult& result, const RunConfig& config) {
    const std::string text = fermat::cli::dump_report(result.report);
    if (config.out.empty() || config.out == "-") {
        std::cout << text;
    } else {
        std::ofstream out(config.out, std::ios::trunc);
        out << text;
        if (!out) {
            std::cerr << "error: cannot write " << config.out << "\n";
            return fermat::cli::exit_invalid_input;
        }
    }
    if (config.verbosity > 0)
        std::cerr << (result.cache_hit ? "cache hit\n" : "computed fresh\n");
    return result.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verifier for torsion-cycle constructions on Fermat "
                 "varieties"};
    app.require_subcommand(1);

    RunConfig config;
    int d_value = 0;
    int n_value = 0;
    int p_value = 0;
    int q_value = 0;
    int g_value = 0;
    std::pair<int, int> d_range_value{0, 0};

    auto add_common_flags = [&](CLI::App* cmd) {
        cmd->add_option("--out", config.out,
                        "write the report here ('-' = stdout)");
        cmd->add_option("--cache-dir", config.cache_dir,
                        "directory for cached reports (empty disables caching)");
        cmd->add_option("--max-enum", config.max_enum,
                        "largest character enumeration allowed")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--jobs", config.jobs, "worker threads for grids")
            ->check(CLI::PositiveNumber);
        cmd->add_flag("-v,--verbose", config.verbosity, "chatter on stderr");
    };
    auto add_subcommand = [&](const std::string& name, const std::string& help) {
        CLI::App* cmd = app.add_subcommand(name, help);
        add_common_flags(cmd);
        return cmd;
    };

    {
        CLI::App* cmd = add_subcommand(
            "decompose", "character decomposition and Hodge histogram");
        cmd->add_option("--d", d_value, "Fermat degree d");
        cmd->add_option("--n", n_value, "ambient Fermat dimension n");
    }
    {
        CLI::App* cmd = add_subcommand(
            "split-check", "verify the localization splitting on a grid");
        cmd->add_option("--d", d_value, "single Fermat degree");
        cmd->add_option("--d-range", d_range_value,
                        "inclusive degree range: --d-range LO HI");
        cmd->add_option("--n", n_value, "ambient Fermat dimension n");
        cmd->add_option("--p", p_value, "codimension of the support pieces");
        cmd->add_option("--q", q_value, "level of the localization model");
    }
    {
        CLI::App* cmd = add_subcommand(
            "cusp-class-group", "cuspidal divisor class group per degree");
        cmd->add_option("--d", d_value, "single Fermat degree");
        cmd->add_option("--d-range", d_range_value,
                        "inclusive degree range: --d-range LO HI");
    }
    {
        CLI::App* cmd = add_subcommand(
            "torsion-order", "order of a degree-0 cuspidal divisor class");
        cmd->add_option("--d", d_value, "Fermat degree d");
        cmd->add_option("--divisor", config.divisor,
                        "divisor as 'axis,idx,coeff;axis,idx,coeff;...'");
    }
    {
        CLI::App* cmd = add_subcommand(
            "verify-triangle", "admissibility of every triangle precycle");
        cmd->add_option("--d", d_value, "Fermat degree d");
        cmd->add_option("--n", n_value, "ambient Fermat dimension n");
    }
    {
        CLI::App* cmd = add_subcommand(
            "modified-diagonal", "Gross-Schoen modified diagonal vanishing");
        cmd->add_option("--g", g_value, "curve genus (default: 0..5)");
    }
    add_subcommand("all-checks", "every verification suite in one report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : fermat::cli::exit_invalid_input;
    }

    CLI::App* sub = app.get_subcommands().front();
    config.command = sub->get_name();
    auto seen = [&](const char* flag) {
        const CLI::Option* option = sub->get_option_no_throw(flag);
        return option != nullptr && option->count() > 0;
    };
    if (seen("--d")) config.d = d_value;
    if (seen("--n")) config.n = n_value;
    if (seen("--p")) config.p = p_value;
    if (seen("--q")) config.q = q_value;
    if (seen("--g")) config.g = g_value;
    if (seen("--d-range")) config.d_range = d_range_value;

    try {
        return emit_report(fermat::cli::run_command(config), config);
    } catch (const fermat::infinite_quotient_error& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return fermat::cli::exit_check_failed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return fermat::cli::exit_invalid_input;
    }
}
