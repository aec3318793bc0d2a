//---------------------------------*-C++-*-----------------------------------//
// Copyright 2026 chanrad developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tests/acceptance.cpp
//! Acceptance criteria 1-10, one pass/fail line each.
//!
//! Usage: acceptance <path to chanrad executable> <reference config>
//---------------------------------------------------------------------------//
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include "chanrad/validation.hpp"

int main(int argc, char** argv)
{
    if (argc != 3)
    {
        std::fprintf(stderr, "usage: %s <chanrad> <config>\n", argv[0]);
        return 2;
    }

    bool all_passed = true;
    for (auto const& r : chanrad::validation::run_all())
    {
        std::printf("criterion %2d %-32s %s (%.3f s) %s\n", r.id, r.name.c_str(),
                    r.passed ? "PASS" : "FAIL", r.seconds, r.detail.c_str());
        all_passed = all_passed && r.passed;
    }

    std::string const cmd = std::string("\"") + argv[1] + "\" validate --config \""
                            + argv[2] + "\" > /dev/null 2>&1";
    int const raw = std::system(cmd.c_str());
    int const status = (raw != -1 && WIFEXITED(raw)) ? WEXITSTATUS(raw) : -1;
    bool const passed = status == 0;
    std::printf("criterion 10 %-32s %s validate exit status %d\n",
                "validate subcommand", passed ? "PASS" : "FAIL", status);
    all_passed = all_passed && passed;

    std::fflush(stdout);
    return all_passed ? EXIT_SUCCESS : EXIT_FAILURE;
}
