//---------------------------------*-C++-*-----------------------------------//
// Copyright 2026 chanrad developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file chanrad/spectrum.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <thread>
#include <tuple>
#include <vector>

#include "entry_populations.hpp"
#include "error.hpp"
#include "kinematics.hpp"
#include "transverse_states.hpp"
#include "units.hpp"

namespace chanrad
{
//---------------------------------------------------------------------------//
/*!
 * One radiative channel n_initial -> n_final.
 *
 * The amplitude is the product of the entry amplitude of the upper level and
 * the coordinate matrix element between the two levels.
 */
struct TransitionLine
{
    std::size_t n_initial{0};
    std::size_t n_final{0};
    double delta_eps{0};         //!< Level gap [eV]
    complex amplitude{0};        //!< [arb * A]
    double interaction_time{0};  //!< Crystal traversal time [1/eV]
};

//! Crystal traversal time L / (hbar c) for beta ~ 1 [1/eV].
inline double interaction_time(BeamCrystalConfig const& cfg)
{
    return cfg.crystal_length / constants::hbar_c;
}

//---------------------------------------------------------------------------//
/*!
 * Collect every downward transition whose matrix element is nonzero.
 *
 * Elements smaller than 1e-9 of the largest one are treated as zero
 * (parity-forbidden pairs come out at rounding level). Lines are ordered by
 * (n_initial, n_final).
 */
inline std::vector<TransitionLine> build_lines(AmplitudeVector const& av,
                                               LevelSet const& levels,
                                               DipoleMatrix const& matels,
                                               BeamCrystalConfig const& cfg)
{
    std::size_t const count
        = std::min({av.amplitudes.size(), levels.size(), matels.size()});
    double const threshold = 1e-9 * matels.max_abs();
    double const time = interaction_time(cfg);

    std::vector<TransitionLine> result;
    for (std::size_t hi = 1; hi < count; ++hi)
    {
        for (std::size_t lo = 0; lo < hi; ++lo)
        {
            double const m = matels(lo, hi);
            if (!(std::abs(m) > threshold))
                continue;
            TransitionLine line;
            line.n_initial = hi;
            line.n_final = lo;
            line.delta_eps = levels.gap(hi, lo);
            line.amplitude = av.amplitudes[hi] * m;
            line.interaction_time = time;
            result.push_back(line);
        }
    }
    return result;
}

//---------------------------------------------------------------------------//
/*!
 * Finite-time emission amplitude
 * \f[
 *   a(\Delta, T) = \int_0^T e^{i\Delta t} dt
 *               = e^{i\Delta T/2}\, \frac{2\sin(\Delta T/2)}{\Delta}.
 * \f]
 */
inline complex amplitude_profile(double detuning, double time)
{
    double const half = detuning * time / 2;
    double const envelope = (half == 0) ? time : time * std::sin(half) / half;
    return std::polar(1.0, half) * envelope;
}

//---------------------------------------------------------------------------//
//! Angular-spectral weight applied to both summation rules.
enum class Kernel
{
    unit,
    omega2,
};

inline double kernel_weight(Kernel kernel, double omega, double /* theta */)
{
    return kernel == Kernel::omega2 ? omega * omega : 1.0;
}

/*!
 * Detuning of a line from photon energy \c omega at angle theta, in the
 * particle's time variable: (omega - omega_line(theta)) (1 - beta cos theta).
 *
 * With this argument the line width is a fixed fraction 2 pi / (T delta_eps)
 * of the line energy at every angle.
 */
inline double line_detuning(double delta_eps, double omega, double denominator)
{
    return omega * denominator - delta_eps;
}

//! Incoherent and coherent intensity at one (theta, omega) cell.
struct CellIntensity
{
    double incoherent{0};
    double coherent{0};
};

inline CellIntensity evaluate_cell(std::span<TransitionLine const> lines,
                                   Kinematics const& kin,
                                   double theta,
                                   double omega,
                                   Kernel kernel)
{
    double const denom = doppler_denominator(kin, theta);
    double incoherent = 0;
    complex coherent{0};
    for (auto const& line : lines)
    {
        complex const term
            = line.amplitude
              * amplitude_profile(line_detuning(line.delta_eps, omega, denom),
                                  line.interaction_time);
        incoherent += std::norm(term);
        coherent += term;
    }
    double const k = kernel_weight(kernel, omega, theta);
    return {incoherent * k, std::norm(coherent) * k};
}

//! Sum of |c_n M|^2 |a|^2 over lines, times the kernel.
inline double intensity_incoherent(std::span<TransitionLine const> lines,
                                   Kinematics const& kin,
                                   double theta,
                                   double omega,
                                   Kernel kernel = Kernel::omega2)
{
    return evaluate_cell(lines, kin, theta, omega, kernel).incoherent;
}

//! |sum of c_n M a|^2 over lines, times the kernel.
inline double intensity_coherent(std::span<TransitionLine const> lines,
                                 Kinematics const& kin,
                                 double theta,
                                 double omega,
                                 Kernel kernel = Kernel::omega2)
{
    return evaluate_cell(lines, kin, theta, omega, kernel).coherent;
}

//! Coherent / incoherent ratio with 0/0 -> 1.
inline double intensity_ratio(double coherent, double incoherent)
{
    constexpr double tiny = 1e-300;
    if (coherent < tiny && incoherent < tiny)
        return 1;
    return coherent / incoherent;
}

//---------------------------------------------------------------------------//
/*!
 * Both intensity fields and their ratio on a (theta, omega) lattice.
 *
 * Matrices are stored row-major with one row per theta value.
 */
struct SpectrumGrid
{
    std::vector<double> theta_axis;  //!< [rad]
    std::vector<double> omega_axis;  //!< [eV]
    std::vector<double> incoherent;  //!< [arb]
    std::vector<double> coherent;    //!< [arb]
    std::vector<double> ratio;

    std::size_t index(std::size_t itheta, std::size_t iomega) const
    {
        return itheta * omega_axis.size() + iomega;
    }
    std::span<double const> incoherent_row(std::size_t itheta) const
    {
        return {incoherent.data() + itheta * omega_axis.size(), omega_axis.size()};
    }
    std::span<double const> coherent_row(std::size_t itheta) const
    {
        return {coherent.data() + itheta * omega_axis.size(), omega_axis.size()};
    }
};

//! Evenly spaced axis; a single point sits at \c lo.
inline std::vector<double> linear_axis(double lo, double hi, std::size_t count)
{
    std::vector<double> result(count);
    for (std::size_t i = 0; i < count; ++i)
    {
        result[i] = (count == 1) ? lo
                                 : lo + (hi - lo) * double(i) / double(count - 1);
    }
    return result;
}

/*!
 * Evaluate both summation rules on every cell.
 *
 * Theta rows are distributed over \c workers threads; every cell is computed
 * by the same sequential line loop, so the output does not depend on the
 * worker count.
 */
inline SpectrumGrid build_spectrum_grid(std::span<TransitionLine const> lines,
                                        Kinematics const& kin,
                                        std::vector<double> theta_axis,
                                        std::vector<double> omega_axis,
                                        Kernel kernel = Kernel::omega2,
                                        unsigned workers = 1)
{
    if (theta_axis.empty() || omega_axis.empty())
        throw Error(Errc::axis_empty, "spectrum axes must be nonempty");

    SpectrumGrid grid;
    grid.theta_axis = std::move(theta_axis);
    grid.omega_axis = std::move(omega_axis);
    std::size_t const cells = grid.theta_axis.size() * grid.omega_axis.size();
    grid.incoherent.resize(cells);
    grid.coherent.resize(cells);
    grid.ratio.resize(cells);

    auto fill_rows = [&](std::size_t first, std::size_t stride) {
        for (std::size_t it = first; it < grid.theta_axis.size(); it += stride)
        {
            for (std::size_t iw = 0; iw < grid.omega_axis.size(); ++iw)
            {
                auto const cell = evaluate_cell(lines, kin, grid.theta_axis[it],
                                                grid.omega_axis[iw], kernel);
                auto const idx = grid.index(it, iw);
                grid.incoherent[idx] = cell.incoherent;
                grid.coherent[idx] = cell.coherent;
                grid.ratio[idx] = intensity_ratio(cell.coherent, cell.incoherent);
            }
        }
    };

    workers = std::max(1u, std::min<unsigned>(workers, grid.theta_axis.size()));
    if (workers == 1)
    {
        fill_rows(0, 1);
    }
    else
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(fill_rows, w, workers);
    }
    return grid;
}

//---------------------------------------------------------------------------//
// DIAGNOSTICS
//---------------------------------------------------------------------------//
struct Peak
{
    std::size_t index{0};
    double omega{0};
    double height{0};
};

/*!
 * Strict local maxima of a sampled slice, highest first.
 *
 * A flat top counts when both of its outer neighbors are lower; it is
 * reported at its leftmost cell. Endpoints are never peaks.
 */
inline std::vector<Peak>
find_peaks(std::span<double const> slice, std::span<double const> omega_axis = {})
{
    std::vector<Peak> result;
    std::size_t const n = slice.size();
    std::size_t i = 1;
    while (i + 1 < n)
    {
        if (!(slice[i] > slice[i - 1]))
        {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j + 1 < n && slice[j + 1] == slice[i])
            ++j;
        if (j + 1 < n && slice[j + 1] < slice[i])
        {
            Peak p;
            p.index = i;
            p.omega = omega_axis.empty() ? double(i) : omega_axis[i];
            p.height = slice[i];
            result.push_back(p);
        }
        i = j + 1;
    }
    std::stable_sort(result.begin(), result.end(), [](Peak const& a, Peak const& b) {
        return a.height > b.height;
    });
    return result;
}

struct InterferenceSummary
{
    double max_ratio{1};
    double min_ratio{1};
    double integrated_coh{0};
    double integrated_inc{0};
    double integrated_rel_diff{0};  //!< |coh - inc| / inc
};

//! Ratio extrema and omega-integrated intensities summed over theta rows.
inline InterferenceSummary interference_summary(SpectrumGrid const& grid)
{
    InterferenceSummary result;
    auto [lo, hi] = std::minmax_element(grid.ratio.begin(), grid.ratio.end());
    result.min_ratio = *lo;
    result.max_ratio = *hi;

    auto const& w = grid.omega_axis;
    for (std::size_t it = 0; it < grid.theta_axis.size(); ++it)
    {
        auto inc = grid.incoherent_row(it);
        auto coh = grid.coherent_row(it);
        for (std::size_t iw = 0; iw + 1 < w.size(); ++iw)
        {
            double const dw = w[iw + 1] - w[iw];
            result.integrated_inc += 0.5 * dw * (inc[iw] + inc[iw + 1]);
            result.integrated_coh += 0.5 * dw * (coh[iw] + coh[iw + 1]);
        }
    }
    result.integrated_rel_diff
        = result.integrated_inc > 0
              ? std::abs(result.integrated_coh - result.integrated_inc)
                    / result.integrated_inc
              : 0.0;
    return result;
}

//---------------------------------------------------------------------------//
}  // namespace chanrad
