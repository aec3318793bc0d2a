//---------------------------------*-C++-*-----------------------------------//
// Copyright 2026 chanrad developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file chanrad/pipeline.hpp
//! Glue from a RunConfig to levels, populations, lines and spectra.
//---------------------------------------------------------------------------//
#pragma once

#include <cmath>
#include <vector>

#include "config.hpp"
#include "entry_populations.hpp"
#include "potential.hpp"
#include "spectrum.hpp"
#include "transverse_states.hpp"

namespace chanrad
{
//---------------------------------------------------------------------------//
struct ChannelStates
{
    Kinematics kin;
    LevelSet levels;
    std::vector<Wavefunction> states;
};

/*!
 * Grid for the analytic harmonic states: the planes are nodes, and the grid
 * extends past them far enough for the top level's tail to vanish.
 */
inline GridSpec harmonic_grid(BeamCrystalConfig const& beam,
                              Kinematics const& kin,
                              std::size_t n_top,
                              std::size_t points_across_channel,
                              double min_half_width)
{
    std::size_t const intervals = std::max<std::size_t>(1, (points_across_channel - 1) / 2);
    double const x1 = oscillator_length(kin);
    // 5 x1/sqrt(2) past the turning point plus enough Airy-tail decay
    double const needed = harmonic_turning_point(n_top, kin) + 8 * x1;
    return aligned_grid(beam.dp, intervals, std::max(needed, min_half_width));
}

inline PotentialModel make_potential(RunConfig const& cfg)
{
    switch (cfg.potential)
    {
        case PotentialKind::harmonic:
            return HarmonicWell{cfg.beam.U0, cfg.beam.dp};
        case PotentialKind::poschl_teller:
            return PoschlTellerWell{cfg.beam.U0, cfg.pt_width};
        case PotentialKind::tabulated:
            return read_tabulated_potential(cfg.potential_file);
    }
    return HarmonicWell{cfg.beam.U0, cfg.beam.dp};
}

//! Kinematics, bound levels and eigenfunctions for a run.
inline ChannelStates compute_states(RunConfig const& cfg)
{
    ChannelStates result;
    result.kin = make_kinematics(cfg.beam);
    if (cfg.potential == PotentialKind::harmonic)
    {
        result.levels = harmonic_levels(result.kin, cfg.beam.U0);
        auto const grid = harmonic_grid(cfg.beam, result.kin, result.levels.n_max(),
                                        cfg.grid_points, cfg.grid_half_width);
        result.states = harmonic_wavefunctions(result.levels.n_max(), result.kin, grid);
    }
    else
    {
        auto [levels, states] = solve_bound_states(
            make_potential(cfg), result.kin,
            GridSpec{cfg.grid_half_width, cfg.grid_points});
        result.levels = std::move(levels);
        result.states = std::move(states);
    }
    return result;
}

inline AmplitudeVector compute_populations(RunConfig const& cfg, ChannelStates const& cs)
{
    return entry_amplitudes(cfg.beam, cs.levels, cs.states);
}

inline std::vector<TransitionLine> compute_lines(RunConfig const& cfg,
                                                 ChannelStates const& cs,
                                                 AmplitudeVector const& av)
{
    return build_lines(av, cs.levels, dipole_matrix(cs.states), cfg.beam);
}

inline SpectrumGrid compute_spectrum(RunConfig const& cfg,
                                     Kinematics const& kin,
                                     std::span<TransitionLine const> lines,
                                     unsigned workers)
{
    return build_spectrum_grid(lines, kin,
                               linear_axis(cfg.theta.min, cfg.theta.max, cfg.theta.count),
                               linear_axis(cfg.omega.min, cfg.omega.max, cfg.omega.count),
                               cfg.kernel, workers);
}

//---------------------------------------------------------------------------//
}  // namespace chanrad
