//---------------------------------*-C++-*-----------------------------------//
// Copyright 2026 chanrad developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file chanrad/entry_populations.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include "error.hpp"
#include "grid.hpp"
#include "kinematics.hpp"
#include "transverse_states.hpp"
#include "units.hpp"

namespace chanrad
{
using complex = std::complex<double>;

//---------------------------------------------------------------------------//
/*!
 * Complex level amplitudes at the crystal entrance, renormalized onto the
 * bound subspace.
 */
struct AmplitudeVector
{
    std::vector<complex> amplitudes;  //!< Index-aligned with LevelSet
    double captured_fraction{1};      //!< Bound weight before renormalizing
    double theta_in{0};               //!< [rad]
    bool low_capture{false};          //!< captured_fraction < 0.9
};

//! Bound-subspace weight of the incident state before renormalization.
inline double captured_fraction(AmplitudeVector const& av)
{
    return av.captured_fraction;
}

//! Index range [first, last] of grid nodes inside [-half, half].
inline std::pair<std::size_t, std::size_t>
window_nodes(GridSpec const& grid, double half)
{
    double const slack = 1e-9 * grid.step();
    std::size_t first = 0;
    while (first < grid.points && grid.x(first) < -half - slack)
        ++first;
    std::size_t last = grid.points - 1;
    while (last > first && grid.x(last) > half + slack)
        --last;
    return {first, last};
}

//---------------------------------------------------------------------------//
/*!
 * Project the incident transverse plane wave onto the channel eigenstates.
 *
 * The raw overlap over one channel period is
 * \f[
 *   \hat c_n = d_p^{-1/2} \int_{-d_p/2}^{d_p/2} \psi_n(x)\,
 *              e^{i p_x x / \hbar c}\,dx, \qquad p_x = E \theta_{in},
 * \f]
 * evaluated with composite Simpson quadrature on the wavefunction grid. The
 * optional \c phase multiplies the plane wave by a global \f$ e^{i\phi} \f$.
 */
inline AmplitudeVector entry_amplitudes(BeamCrystalConfig const& cfg,
                                        LevelSet const& levels,
                                        std::span<Wavefunction const> states,
                                        double phase = 0)
{
    require_channeled(cfg);
    if (states.size() < levels.size())
    {
        throw Error(Errc::grid_mismatch,
                    "need a wavefunction for each of the "
                        + std::to_string(levels.size()) + " bound levels");
    }

    double const k = cfg.total_energy * cfg.theta_in / constants::hbar_c;
    complex const global = std::polar(1.0, phase);
    double const inv_sqrt_dp = 1 / std::sqrt(cfg.dp);

    AmplitudeVector result;
    result.theta_in = cfg.theta_in;
    result.amplitudes.resize(levels.size());

    std::vector<complex> integrand;
    std::vector<complex> plane_wave;
    GridSpec const* cached_grid = nullptr;
    std::pair<std::size_t, std::size_t> win{0, 0};
    for (std::size_t n = 0; n < levels.size(); ++n)
    {
        auto const& wf = states[n];
        if (cached_grid == nullptr || !(*cached_grid == wf.grid))
        {
            cached_grid = &wf.grid;
            win = window_nodes(wf.grid, cfg.dp / 2);
            plane_wave.resize(win.second - win.first + 1);
            for (std::size_t i = win.first; i <= win.second; ++i)
                plane_wave[i - win.first] = std::polar(1.0, k * wf.grid.x(i));
        }
        integrand.resize(plane_wave.size());
        for (std::size_t i = 0; i < integrand.size(); ++i)
            integrand[i] = wf.values[win.first + i] * plane_wave[i];
        result.amplitudes[n]
            = global * inv_sqrt_dp
              * simpson(std::span<complex const>(integrand), wf.grid.step());
    }

    double weight = 0;
    for (auto const& c : result.amplitudes)
        weight += std::norm(c);
    result.captured_fraction = weight;
    result.low_capture = weight < 0.9;
    if (weight > 0)
    {
        double const scale = 1 / std::sqrt(weight);
        for (auto& c : result.amplitudes)
            c *= scale;
    }
    return result;
}

//---------------------------------------------------------------------------//
//! Populations |c_n|^2 weighted mean level energy [eV].
inline double mean_level_energy(AmplitudeVector const& av, LevelSet const& levels)
{
    double result = 0;
    for (std::size_t n = 0; n < av.amplitudes.size(); ++n)
        result += std::norm(av.amplitudes[n]) * levels.levels[n];
    return result;
}

//---------------------------------------------------------------------------//
}  // namespace chanrad
