//---------------------------------*-C++-*-----------------------------------//
// Copyright 2026 chanrad developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tools/chanrad.cpp
//! Command-line driver: chanrad <subcommand> --config <path> [--out <prefix>]
//! [--workers N]
//---------------------------------------------------------------------------//
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "chanrad/config.hpp"
#include "chanrad/csv.hpp"
#include "chanrad/error.hpp"
#include "chanrad/pipeline.hpp"
#include "chanrad/validation.hpp"

namespace
{
//---------------------------------------------------------------------------//
enum ExitCode
{
    exit_ok = 0,
    exit_usage = 1,
    exit_physics = 2,
    exit_validation = 3,
};

struct Options
{
    std::string config_path;
    std::string prefix;
    bool has_prefix{false};
    unsigned workers{0};
};

chanrad::RunConfig load_config(Options const& opts)
{
    std::ifstream is(opts.config_path);
    if (!is)
    {
        throw chanrad::Error(chanrad::Errc::io_failure,
                             "cannot open '" + opts.config_path + "'");
    }
    std::ostringstream text;
    text << is.rdbuf();
    auto cfg = chanrad::parse_config(text.str());
    if (opts.has_prefix)
        cfg.output_prefix = opts.prefix;
    if (opts.workers > 0)
        cfg.workers = opts.workers;
    return cfg;
}

void emit(chanrad::RunConfig const& cfg, char const* name, std::string const& contents)
{
    std::string const path = cfg.output_prefix + name;
    chanrad::csv::write_atomic(path, contents);
    std::cout << "wrote " << path << '\n';
}

//---------------------------------------------------------------------------//
int run_validate()
{
    auto const results = chanrad::validation::run_all();
    bool all_passed = true;
    for (auto const& r : results)
    {
        std::printf("%2d %-32s %s %7.3fs  %s\n", r.id, r.name.c_str(),
                    r.passed ? "PASS" : "FAIL", r.seconds, r.detail.c_str());
        all_passed = all_passed && r.passed;
    }
    std::printf("%s\n", all_passed ? "all checks passed" : "validation FAILED");
    return all_passed ? exit_ok : exit_validation;
}

int run(std::string const& name, Options const& opts)
{
    using namespace chanrad;

    auto const cfg = load_config(opts);
    if (name == "validate")
        return run_validate();

    auto const cs = compute_states(cfg);
    if (name == "levels")
    {
        emit(cfg, "levels.csv", csv::levels(cs.levels));
        return exit_ok;
    }
    auto const av = compute_populations(cfg, cs);
    if (av.low_capture)
    {
        std::cerr << "warning: only " << av.captured_fraction
                  << " of the entry wave projects onto bound states\n";
    }
    if (name == "populate")
    {
        emit(cfg, "populations.csv", csv::populations(av));
        return exit_ok;
    }
    auto const lines = compute_lines(cfg, cs, av);
    if (name == "lines")
    {
        emit(cfg, "lines.csv", csv::lines(lines));
        return exit_ok;
    }
    auto const grid = compute_spectrum(cfg, cs.kin, lines, cfg.workers);
    if (name == "spectrum")
        emit(cfg, "spectrum.csv", csv::spectrum(grid));
    else
        emit(cfg, "peaks.csv", csv::peaks(grid));
    return exit_ok;
}

//---------------------------------------------------------------------------//
}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Planar channeling radiation spectra"};
    app.require_subcommand(1);

    Options opts;
    char const* const commands[][2] = {
        {"levels", "Transverse energy levels"},
        {"populate", "Entry populations of the bound levels"},
        {"lines", "Downward transition lines"},
        {"spectrum", "Incoherent and coherent intensity grids"},
        {"peaks", "Peaks of the coherent intensity in each theta row"},
        {"validate", "Run the built-in acceptance checks"},
    };
    for (auto const& [name, help] : commands)
    {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--config", opts.config_path, "Run configuration")
            ->required()
            ->check(CLI::ExistingFile);
        sub->add_option_function<std::string>(
            "--out",
            [&opts](std::string const& p) {
                opts.prefix = p;
                opts.has_prefix = true;
            },
            "Output path prefix");
        sub->add_option("--workers", opts.workers, "Worker threads")
            ->check(CLI::PositiveNumber);
    }

    try
    {
        app.parse(argc, argv);
    }
    catch (CLI::ParseError const& e)
    {
        int const status = app.exit(e);
        return status == 0 ? exit_ok : exit_usage;
    }

    std::string const name = app.get_subcommands().front()->get_name();
    try
    {
        return run(name, opts);
    }
    catch (chanrad::Error const& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return chanrad::is_config_error(e.code()) ? exit_usage : exit_physics;
    }
    catch (std::exception const& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_physics;
    }
}
