//---------------------------------*-C++-*-----------------------------------//
// Copyright 2026 chanrad developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tests/test_entry_populations.cpp
//---------------------------------------------------------------------------//
#include <cmath>

#include <gtest/gtest.h>

#include "chanrad/oracle.hpp"
#include "chanrad/pipeline.hpp"
#include "test_support.hpp"

using namespace chanrad;
using test::reference_beam;

namespace
{
struct Channel
{
    BeamCrystalConfig beam;
    Kinematics kin;
    LevelSet levels;
    std::vector<Wavefunction> states;

    explicit Channel(std::size_t points = 4001)
        : beam(reference_beam())
        , kin(make_kinematics(beam))
        , levels(harmonic_levels(kin, beam.U0))
        , states(harmonic_wavefunctions(
              levels.n_max(), kin,
              harmonic_grid(beam, kin, levels.n_max(), points, 0)))
    {
    }

    AmplitudeVector at(double theta_in, double phase = 0) const
    {
        auto b = beam;
        b.theta_in = theta_in;
        return entry_amplitudes(b, levels, states, phase);
    }
};

Channel const& channel()
{
    static Channel const c;
    return c;
}

double psi_c()
{
    return acceptance_angle(reference_beam());
}
}  // namespace

TEST(EntryAmplitudes, normal_incidence_parity)
{
    auto const av = channel().at(0);
    ASSERT_EQ(av.amplitudes.size(), 52u);
    double total = 0;
    for (std::size_t n = 0; n < av.amplitudes.size(); ++n)
    {
        total += std::norm(av.amplitudes[n]);
        if (n % 2)
            EXPECT_LT(std::abs(av.amplitudes[n]), 1e-12) << n;
        if (n > 0)
            EXPECT_LT(std::abs(av.amplitudes[n]), std::abs(av.amplitudes[0]));
    }
    EXPECT_NEAR(total, 1, 1e-12);
}

TEST(EntryAmplitudes, captured_fraction_regression)
{
    auto const av = channel().at(0);
    EXPECT_GT(captured_fraction(av), 0.9);
    EXPECT_LE(captured_fraction(av), 1);
    EXPECT_NEAR(captured_fraction(av), 0.980202425797, 1e-9);
    EXPECT_FALSE(av.low_capture);

    auto const steep = channel().at(0.9 * psi_c());
    EXPECT_LE(captured_fraction(steep), captured_fraction(av));
    EXPECT_NEAR(captured_fraction(steep), 0.408098230567, 1e-9);
    EXPECT_TRUE(steep.low_capture);

    AmplitudeVector single;
    single.amplitudes = {complex{1, 0}};
    EXPECT_EQ(captured_fraction(single), 1);
}

TEST(EntryAmplitudes, momentum_space_oracle)
{
    // Below level ~20 the window tails are negligible, so the windowed
    // quadrature matches the infinite-window closed form
    auto const& ch = channel();
    double const x1 = oscillator_length(ch.kin);
    for (double frac : {0.0, 0.25, 0.5})
    {
        double const theta = frac * psi_c();
        auto const av = ch.at(theta);
        double const k = ch.beam.total_energy * theta / constants::hbar_c;
        double const scale = std::sqrt(av.captured_fraction);
        for (std::size_t n = 0; n < 20; ++n)
        {
            auto const expected = oracle::harmonic_overlap(int(n), k, x1, ch.beam.dp);
            auto const raw = av.amplitudes[n] * scale;
            EXPECT_LT(std::abs(raw - expected), 1e-6 * std::abs(expected) + 1e-14)
                << n << " at " << frac;
        }
    }
}

TEST(EntryAmplitudes, phase_covariance)
{
    auto const a = channel().at(0.5 * psi_c());
    for (double phi : {0.3, 1.7, -2.9})
    {
        auto const b = channel().at(0.5 * psi_c(), phi);
        EXPECT_NEAR(a.captured_fraction, b.captured_fraction, 1e-15);
        for (std::size_t n = 0; n < a.amplitudes.size(); ++n)
        {
            auto const expected = a.amplitudes[n] * std::polar(1.0, phi);
            EXPECT_LT(std::abs(b.amplitudes[n] - expected), 1e-15);
            EXPECT_NEAR(std::abs(b.amplitudes[n]), std::abs(a.amplitudes[n]), 1e-15);
        }
    }
}

TEST(EntryAmplitudes, quadrature_convergence)
{
    Channel const fine(8001);
    for (double frac : {0.0, 0.5, 0.9})
    {
        auto const a = channel().at(frac * psi_c());
        auto const b = fine.at(frac * psi_c());
        for (std::size_t n = 0; n < a.amplitudes.size(); ++n)
        {
            EXPECT_LT(std::abs(std::abs(a.amplitudes[n]) - std::abs(b.amplitudes[n])),
                      1e-8)
                << n;
        }
    }
}

TEST(EntryAmplitudes, continuity)
{
    // Changes in |c_n| are small and shrink linearly with the step
    auto worst_change = [](double theta, double delta) {
        auto const a = channel().at(theta);
        auto const b = channel().at(theta + delta);
        double worst = 0;
        for (std::size_t n = 0; n < a.amplitudes.size(); ++n)
        {
            worst = std::max(
                worst, std::abs(std::abs(a.amplitudes[n]) - std::abs(b.amplitudes[n])));
        }
        return worst;
    };
    double const delta = psi_c() / 1e4;
    for (double frac : {0.0, 0.3, 0.7})
    {
        double const full = worst_change(frac * psi_c(), delta);
        double const half = worst_change(frac * psi_c(), delta / 2);
        EXPECT_LT(full, 5e-3) << frac;
        EXPECT_GT(full / half, 1.8) << frac;
        EXPECT_LT(full / half, 2.2) << frac;
    }
}

TEST(EntryAmplitudes, mean_energy)
{
    auto const& ch = channel();
    auto const av = ch.at(0.5 * psi_c());
    EXPECT_NEAR(mean_level_energy(av, ch.levels), 11.436039683527, 1e-8);
    // Bound projection drops leakage, so it stays below the incident estimate
    double const incident = ch.beam.total_energy * av.theta_in * av.theta_in / 2
                            + ch.beam.U0 / 3;
    EXPECT_LT(mean_level_energy(av, ch.levels), incident);
}

TEST(EntryAmplitudes, errors)
{
    auto const& ch = channel();
    try
    {
        ch.at(psi_c());
        FAIL();
    }
    catch (Error const& e)
    {
        EXPECT_EQ(e.code(), Errc::above_barrier);
    }
    std::vector<Wavefunction> few(ch.states.begin(), ch.states.begin() + 3);
    EXPECT_THROW(entry_amplitudes(ch.beam, ch.levels, few), Error);
}

TEST(EntryAmplitudes, window_nodes)
{
    GridSpec const g = aligned_grid(1.92, 100, 1.5);
    auto const [first, last] = window_nodes(g, 0.96);
    EXPECT_NEAR(g.x(first), -0.96, 1e-14);
    EXPECT_NEAR(g.x(last), 0.96, 1e-14);
    EXPECT_EQ(last - first, 200u);
}
