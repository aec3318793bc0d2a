//---------------------------------*-C++-*-----------------------------------//
// Copyright 2026 chanrad developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tests/test_spectrum.cpp
//---------------------------------------------------------------------------//
#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "chanrad/oracle.hpp"
#include "chanrad/pipeline.hpp"
#include "test_support.hpp"

using namespace chanrad;
using test::rel_diff;
using test::reference_beam;

namespace
{
Kinematics const& kin()
{
    static Kinematics const k = make_kinematics(reference_beam());
    return k;
}

double crossing_time()
{
    return interaction_time(reference_beam());
}

TransitionLine make_line(double delta_eps, complex amp)
{
    TransitionLine l;
    l.n_initial = 1;
    l.delta_eps = delta_eps;
    l.amplitude = amp;
    l.interaction_time = crossing_time();
    return l;
}

std::vector<TransitionLine> reference_lines(double theta_in)
{
    RunConfig cfg;
    cfg.beam = reference_beam(theta_in);
    cfg.grid_half_width = cfg.beam.dp / 2;
    auto const cs = compute_states(cfg);
    auto const av = compute_populations(cfg, cs);
    return compute_lines(cfg, cs, av);
}
}  // namespace

TEST(Profile, limits)
{
    double const T = crossing_time();
    EXPECT_EQ(amplitude_profile(0, T), complex(T, 0));
    EXPECT_LT(std::abs(amplitude_profile(2 * constants::pi / T, T)), 1e-9 * T);
    for (double d : {1e-3, 0.05, 0.7})
    {
        // Closed form of the integral from 0 to T of exp(i d t)
        complex const ref = (std::polar(1.0, d * T) - 1.0) / complex(0, d);
        EXPECT_LT(std::abs(amplitude_profile(d, T) - ref), 1e-12 * T);
    }
}

TEST(Profile, oscillation_count)
{
    // Fractional line width 2 pi / (T Omega) is the inverse oscillation count
    double const n_osc = crossing_time() * kin().omega_osc / (2 * constants::pi);
    EXPECT_NEAR(n_osc, 7.1, 0.05);
    EXPECT_LT(rel_diff(n_osc, test::ref_oscillations), 1e-13);
    // First zero of the profile, in photon energy, sits 1/N of the line away
    double const denom = doppler_denominator(kin(), 0);
    double const w_line = doppler_exact(kin().omega_osc, kin(), 0);
    double const w_zero = (kin().omega_osc + 2 * constants::pi / crossing_time()) / denom;
    EXPECT_NEAR((w_zero - w_line) / w_line, 1 / n_osc, 1e-12);
    EXPECT_LT(std::abs(amplitude_profile(
                  line_detuning(kin().omega_osc, w_zero, denom), crossing_time())),
              1e-9 * crossing_time());
}

TEST(BuildLines, harmonic)
{
    auto const lines = reference_lines(acceptance_angle(reference_beam()) / 2);
    ASSERT_EQ(lines.size(), 51u);
    for (std::size_t i = 0; i < lines.size(); ++i)
    {
        EXPECT_EQ(lines[i].n_initial, i + 1);
        EXPECT_EQ(lines[i].n_final, i);
        EXPECT_EQ(lines[i].delta_eps, kin().omega_osc);
    }
}

TEST(BuildLines, single_populated_level)
{
    auto const k = kin();
    auto const levels = harmonic_levels(k, 23);
    AmplitudeVector av;
    av.amplitudes.assign(levels.size(), complex{0});
    av.amplitudes[3] = 1;
    auto const lines = build_lines(av, levels, harmonic_dipole_matrix(levels.size(), k),
                                   reference_beam());
    std::size_t nonzero = 0;
    for (auto const& l : lines)
    {
        if (std::abs(l.amplitude) > 0)
        {
            ++nonzero;
            EXPECT_EQ(l.n_initial, 3u);
            EXPECT_EQ(l.n_final, 2u);
        }
    }
    EXPECT_EQ(nonzero, 1u);
}

TEST(BuildLines, poschl_teller_distinct_gaps)
{
    RunConfig cfg;
    cfg.beam = reference_beam(acceptance_angle(reference_beam()) / 2);
    cfg.potential = PotentialKind::poschl_teller;
    cfg.pt_width = 0.067;
    cfg.grid_half_width = 0.96;
    auto const cs = compute_states(cfg);
    auto const lines = compute_lines(cfg, cs, compute_populations(cfg, cs));
    ASSERT_FALSE(lines.empty());
    std::vector<double> gaps;
    for (auto const& l : lines)
    {
        EXPECT_EQ((l.n_initial - l.n_final) % 2, 1u);
        gaps.push_back(l.delta_eps);
    }
    std::sort(gaps.begin(), gaps.end());
    for (std::size_t i = 1; i < gaps.size(); ++i)
        EXPECT_GT(gaps[i] - gaps[i - 1], 1e-3);
}

TEST(Intensity, empty_and_single)
{
    std::vector<TransitionLine> none;
    EXPECT_EQ(intensity_incoherent(none, kin(), 0, 3e6), 0);
    EXPECT_EQ(intensity_coherent(none, kin(), 0, 3e6), 0);

    complex const amp{0.3, -0.4};
    std::vector<TransitionLine> one{make_line(kin().omega_osc, amp)};
    for (double theta : {0.0, 0.5 / kin().gamma})
    {
        double const w = doppler_exact(kin().omega_osc, kin(), theta);
        double const T = crossing_time();
        double const expected = std::norm(amp) * T * T * w * w;
        EXPECT_LT(rel_diff(intensity_incoherent(one, kin(), theta, w), expected), 1e-9);
        EXPECT_LT(rel_diff(intensity_incoherent(one, kin(), theta, w, Kernel::unit),
                           std::norm(amp) * T * T),
                  1e-9);
    }
}

TEST(Intensity, co_located_lines)
{
    double const w = doppler_exact(kin().omega_osc, kin(), 0);
    for (std::size_t n : {2u, 5u, 52u})
    {
        std::vector<TransitionLine> lines(n, make_line(kin().omega_osc, 0.3));
        double const inc = intensity_incoherent(lines, kin(), 0, w);
        double const coh = intensity_coherent(lines, kin(), 0, w);
        EXPECT_NEAR(intensity_ratio(coh, inc), double(n), 1e-12 * double(n));
    }
}

TEST(Intensity, ratio_convention)
{
    EXPECT_EQ(intensity_ratio(0, 0), 1);
    EXPECT_EQ(intensity_ratio(2, 1), 2);
    EXPECT_EQ(intensity_ratio(0, 1), 0);
}

TEST(Intensity, cauchy_schwarz)
{
    auto const lines = reference_lines(acceptance_angle(reference_beam()) / 2);
    double const n = double(lines.size());
    for (int i = 0; i < 300; ++i)
    {
        double const theta = test::uniform(0, 2 / kin().gamma);
        double const w = test::uniform(0.5e6, 6e6);
        auto const cell = evaluate_cell(lines, kin(), theta, w, Kernel::omega2);
        EXPECT_LE(cell.coherent, n * cell.incoherent * (1 + 1e-12));
    }
}

TEST(Intensity, doppler_consistency)
{
    std::vector<TransitionLine> one{make_line(kin().omega_osc, 1)};
    for (double theta : {0.0, 1 / kin().gamma, 2 / kin().gamma})
    {
        double const centre = doppler_exact(kin().omega_osc, kin(), theta);
        // The omega^2 weight pulls the maximum up by ~0.6% of the line, inside
        // one bin of the reference 128-point axis but not of a 401-point one
        for (auto [kernel, count] : {std::pair{Kernel::unit, 401}, {Kernel::omega2, 128}})
        {
            auto const axis = linear_axis(0.25 * centre, 1.75 * centre, count);
            std::vector<double> slice;
            for (double w : axis)
                slice.push_back(intensity_incoherent(one, kin(), theta, w, kernel));
            auto const peaks = find_peaks(slice, axis);
            ASSERT_FALSE(peaks.empty());
            EXPECT_LE(std::abs(peaks.front().omega - centre), axis[1] - axis[0])
                << theta << " " << count;
            // Side lobes are reported too, lower than the main one
            EXPECT_GT(peaks.size(), 1u);
            EXPECT_LT(peaks[1].height, peaks[0].height);
        }
    }
}

TEST(Grid, single_cell_matches_scalar)
{
    auto const lines = reference_lines(acceptance_angle(reference_beam()) / 2);
    double const theta = 0.3 / kin().gamma;
    double const w = 3.1e6;
    auto const grid = build_spectrum_grid(lines, kin(), {theta}, {w});
    EXPECT_EQ(grid.incoherent[0], intensity_incoherent(lines, kin(), theta, w));
    EXPECT_EQ(grid.coherent[0], intensity_coherent(lines, kin(), theta, w));
    EXPECT_EQ(grid.ratio[0], intensity_ratio(grid.coherent[0], grid.incoherent[0]));
}

TEST(Grid, zero_lines)
{
    std::vector<TransitionLine> lines(3, make_line(kin().omega_osc, 0));
    auto const grid = build_spectrum_grid(lines, kin(), linear_axis(0, 1e-3, 4),
                                          linear_axis(1e6, 5e6, 7));
    for (std::size_t i = 0; i < grid.ratio.size(); ++i)
    {
        EXPECT_EQ(grid.incoherent[i], 0);
        EXPECT_EQ(grid.coherent[i], 0);
        EXPECT_EQ(grid.ratio[i], 1);
    }
}

TEST(Grid, axis_empty)
{
    std::vector<TransitionLine> lines;
    try
    {
        build_spectrum_grid(lines, kin(), {}, {1.0});
        FAIL();
    }
    catch (Error const& e)
    {
        EXPECT_EQ(e.code(), Errc::axis_empty);
    }
    EXPECT_THROW(build_spectrum_grid(lines, kin(), {1.0}, {}), Error);
}

TEST(Grid, workers_do_not_change_output)
{
    auto const lines = reference_lines(acceptance_angle(reference_beam()) / 2);
    auto const theta = linear_axis(0, 2 / kin().gamma, 37);
    auto const omega = linear_axis(1e6, 6e6, 101);
    auto const one = build_spectrum_grid(lines, kin(), theta, omega, Kernel::omega2, 1);
    for (unsigned w : {2u, 3u, 8u, 64u})
    {
        auto const many = build_spectrum_grid(lines, kin(), theta, omega, Kernel::omega2, w);
        EXPECT_EQ(one.incoherent, many.incoherent);
        EXPECT_EQ(one.coherent, many.coherent);
        EXPECT_EQ(one.ratio, many.ratio);
    }
}

TEST(Grid, brute_force_spot_check)
{
    auto const lines = reference_lines(acceptance_angle(reference_beam()) / 2);
    for (int i = 0; i < 200; ++i)
    {
        double const theta = test::uniform(0, 2 / kin().gamma);
        double const w = test::uniform(0.5e6, 6e6);
        auto const cell = evaluate_cell(lines, kin(), theta, w, Kernel::omega2);
        auto const ref = oracle::brute_force(lines, kin().gamma, theta, w, Kernel::omega2);
        EXPECT_LT(rel_diff(cell.incoherent, ref.incoherent), 1e-10);
        EXPECT_LT(rel_diff(cell.coherent, ref.coherent), 1e-10);
    }
}

TEST(Peaks, edge_cases)
{
    std::vector<double> mono{1, 2, 3, 4, 5};
    EXPECT_TRUE(find_peaks(mono).empty());
    std::vector<double> flat{1, 1, 1, 1};
    EXPECT_TRUE(find_peaks(flat).empty());
    std::vector<double> two{1, 3, 1, 5, 2};
    auto const p = find_peaks(two);
    ASSERT_EQ(p.size(), 2u);
    EXPECT_EQ(p[0].index, 3u);
    EXPECT_EQ(p[1].index, 1u);
    std::vector<double> plateau{0, 2, 2, 2, 1};
    auto const q = find_peaks(plateau);
    ASSERT_EQ(q.size(), 1u);
    EXPECT_EQ(q[0].index, 1u);
    std::vector<double> shelf{0, 2, 2, 3, 1};
    auto const s = find_peaks(shelf);
    ASSERT_EQ(s.size(), 1u);
    EXPECT_EQ(s[0].index, 3u);
    std::vector<double> ends{5, 1, 5};
    EXPECT_TRUE(find_peaks(ends).empty());
}

TEST(Summary, single_line)
{
    std::vector<TransitionLine> one{make_line(kin().omega_osc, {0.2, 0.1})};
    auto const grid = build_spectrum_grid(one, kin(), linear_axis(0, 2 / kin().gamma, 8),
                                          linear_axis(1e6, 6e6, 64));
    auto const s = interference_summary(grid);
    EXPECT_NEAR(s.max_ratio, 1, 1e-12);
    EXPECT_NEAR(s.min_ratio, 1, 1e-12);
    EXPECT_NEAR(s.integrated_rel_diff, 0, 1e-12);
}

TEST(Summary, two_co_located)
{
    std::vector<TransitionLine> two(2, make_line(kin().omega_osc, 0.5));
    double const w = doppler_exact(kin().omega_osc, kin(), 0);
    auto const grid = build_spectrum_grid(two, kin(), {0.0}, {0.9 * w, w, 1.1 * w});
    auto const s = interference_summary(grid);
    EXPECT_NEAR(s.max_ratio, 2, 1e-12);
    EXPECT_NEAR(grid.ratio[1], 2, 1e-12);
}
