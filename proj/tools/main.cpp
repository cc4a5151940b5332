#include "uncert/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

using uncert::cli::Command;
using uncert::cli::RunConfig;

// Registers a flag that lands in config.params under `key` when given.
void add_param(CLI::App* cmd, RunConfig& config, const std::string& flag,
               const std::string& key, const std::string& desc) {
    auto handler = [&config, key](const std::string& value) { config.params[key] = value; };
    cmd->add_option_function<std::string>(flag, handler, desc);
}

} // namespace

int main(int argc, char** argv) {
    RunConfig config;

    CLI::App app{"Finite-dimensional uncertainty-principle checks for frame pairs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", uncert::cli::kVersion);

    std::string format = "json";
    app.add_option("--format", format, "Output format: json, csv, human")
        ->capture_default_str();
    app.add_option("--seed", config.seed, "Seed for every random draw in the run")
        ->capture_default_str();

    CLI::App* verify = app.add_subcommand("verify", "Check one inequality on one vector");
    add_param(verify, config, "--theorem", "theorem",
              "One of discup, fi, si, rt, mt, uup");
    add_param(verify, config, "--pair-f", "pair_f", "Pair spec (identity:d, dft:n, ...)");
    add_param(verify, config, "--pair-g", "pair_g", "Pair spec");
    add_param(verify, config, "--x", "x", "Vector spec (comb:n:s[:o], spike:n, ...)");
    add_param(verify, config, "--p", "p", "Exponent (number or 'inf')");
    add_param(verify, config, "--ref", "ref", "Reference norm for mt: euclidean or lp");
    add_param(verify, config, "--samples", "samples", "Sample count for mt certification");
    add_param(verify, config, "--rel-tol", "rel_tol", "Support policy relative tolerance");
    add_param(verify, config, "--abs-floor", "abs_floor", "Support policy absolute floor");

    CLI::App* garling = app.add_subcommand("garling", "Check (sum|a|)^p <= sum|a|^p on random sequences");
    add_param(garling, config, "--n", "n", "Sequence length");
    add_param(garling, config, "--p", "p", "Exponent in (0,1)");
    add_param(garling, config, "--count", "count", "Number of random sequences");

    CLI::App* cx = app.add_subcommand("counterexample",
                                      "Witness that the integral form reverses on small sets");
    add_param(cx, config, "--p", "p", "Exponent in (0,1)");
    add_param(cx, config, "--measure", "measure", "Set measure in (0,1), default 0.5");
    add_param(cx, config, "--constant", "constant", "Constant value, default 1");

    CLI::App* construct = app.add_subcommand("construct", "Build and classify a frame pair");
    add_param(construct, config, "--pair", "pair", "Pair spec");
    add_param(construct, config, "--p-list", "p_list", "Comma list of exponents to classify");
    add_param(construct, config, "--ref", "ref", "Reference norm: euclidean or lp");
    add_param(construct, config, "--samples", "samples", "Classification sample count");
    add_param(construct, config, "--out", "out", "Write the pair as hexfloat CSV");

    CLI::App* search = app.add_subcommand("search", "Minimize the support product over vectors");
    add_param(search, config, "--pair-f", "pair_f", "Pair spec");
    add_param(search, config, "--pair-g", "pair_g", "Pair spec");
    add_param(search, config, "--strategy", "strategy",
              "combs, exhaustive_supports, or random_restarts");
    add_param(search, config, "--budget", "budget", "Max candidates, default 10000");
    add_param(search, config, "--rel-tol", "rel_tol", "Support policy relative tolerance");
    add_param(search, config, "--abs-floor", "abs_floor", "Support policy absolute floor");

    CLI::App* sweep = app.add_subcommand("sweep", "Bound-vs-minimum table for identity vs DFT");
    add_param(sweep, config, "--n-list", "n_list", "Comma list of dimensions");
    add_param(sweep, config, "--p-grid", "p_grid", "Comma list of exponents in (0,1)");
    add_param(sweep, config, "--strategy", "strategy", "Search strategy, default combs");

    CLI::App* minors = app.add_subcommand("minors", "Scan square DFT minors for singularity");
    add_param(minors, config, "--n", "n", "DFT dimension");
    add_param(minors, config, "--max-size", "max_size", "Largest minor size to check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        config.output_format = uncert::cli::format_from_name(format);
        config.command = uncert::cli::command_from_name(app.get_subcommands().front()->get_name());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    return uncert::cli::run(config, std::cout, std::cerr);
}
