//---------------------------------*-C++-*-----------------------------------//
// Copyright 2026 chanrad developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tests/test_oracle.cpp
//! Sanity checks of the reference implementations themselves.
//---------------------------------------------------------------------------//
#include <cmath>

#include <gtest/gtest.h>

#include "chanrad/oracle.hpp"
#include "chanrad/validation.hpp"

using namespace chanrad;

TEST(Oracle, hermite_functions)
{
    double const pi4 = std::pow(constants::pi, 0.25);
    EXPECT_NEAR(oracle::hermite_function(0, 0), 1 / pi4, 1e-15);
    EXPECT_NEAR(oracle::hermite_function(1, 0.5), std::sqrt(2.0) * 0.5 * std::exp(-0.125) / pi4,
                1e-15);
    EXPECT_NEAR(oracle::hermite_function(2, 1.0),
                (4 - 2) * std::exp(-0.5) / std::sqrt(8 * std::sqrt(constants::pi)), 1e-15);
    EXPECT_EQ(oracle::hermite_function(3, 0), 0);
}

TEST(Oracle, hermite_orthonormal)
{
    double const h = 0.01;
    for (int m = 0; m < 12; m += 3)
    {
        for (int n = 0; n < 12; ++n)
        {
            double sum = 0;
            for (double xi = -12; xi <= 12; xi += h)
                sum += oracle::hermite_function(m, xi) * oracle::hermite_function(n, xi);
            EXPECT_NEAR(sum * h, m == n ? 1 : 0, 1e-10);
        }
    }
}

TEST(Oracle, compensated_sum)
{
    oracle::CompensatedSum<double> s;
    s.add(1e16);
    for (int i = 0; i < 1000; ++i)
        s.add(1.0);
    s.add(-1e16);
    EXPECT_EQ(s.value(), 1000);
}

TEST(Oracle, brute_force_single_line)
{
    BeamCrystalConfig beam;
    beam.total_energy = 1e9;
    beam.dp = 1.92;
    beam.U0 = 23;
    beam.crystal_length = 2e5;
    auto const kin = make_kinematics(beam);
    TransitionLine line;
    line.delta_eps = kin.omega_osc;
    line.amplitude = {0.6, 0.8};
    line.interaction_time = interaction_time(beam);
    double const w = doppler_exact(kin.omega_osc, kin, 0);
    std::vector<TransitionLine> lines{line};
    auto const r = oracle::brute_force(lines, kin.gamma, 0, w, Kernel::unit);
    double const T = line.interaction_time;
    EXPECT_NEAR(r.incoherent / (T * T), 1, 1e-9);
    EXPECT_NEAR(r.coherent / (T * T), 1, 1e-9);
}

TEST(Oracle, poschl_teller_closed_form)
{
    // Depth-scaled ladder for a = 0.067 A, m_eff = 1 GeV
    auto const lv = validation::poschl_teller_levels(23, 0.067, 1e9);
    ASSERT_EQ(lv.size(), 7u);
    double const expected[] = {2.948936214599629, 8.413104732083784,  13.00986542613773,
                               16.73921829676147, 19.60116334395501, 21.59570056771833,
                               22.72282996805146};
    for (std::size_t n = 0; n < 7; ++n)
        EXPECT_NEAR(lv[n], expected[n], 1e-11);
}
