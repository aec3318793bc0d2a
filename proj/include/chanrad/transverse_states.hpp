//---------------------------------*-C++-*-----------------------------------//
// Copyright 2026 chanrad developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file chanrad/transverse_states.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "error.hpp"
#include "grid.hpp"
#include "kinematics.hpp"
#include "potential.hpp"
#include "tridiagonal.hpp"
#include "units.hpp"

namespace chanrad
{
//---------------------------------------------------------------------------//
enum class LevelModel
{
    harmonic,  //!< Closed-form equidistant ladder
    numeric,   //!< Finite-difference eigenvalues
};

//---------------------------------------------------------------------------//
/*!
 * Ordered transverse energy levels measured from the well bottom.
 */
struct LevelSet
{
    LevelModel model{LevelModel::harmonic};
    double omega_osc{0};       //!< [eV], harmonic model only
    double effective_mass{0};  //!< [eV]
    double well_depth{0};      //!< [eV]
    std::vector<double> levels;  //!< [eV], strictly increasing

    std::size_t size() const { return levels.size(); }
    std::size_t n_max() const { return levels.size() - 1; }

    //! Energy released in the transition hi -> lo [eV]
    double gap(std::size_t hi, std::size_t lo) const
    {
        if (model == LevelModel::harmonic)
            return double(hi - lo) * omega_osc;
        return levels[hi] - levels[lo];
    }
};

//---------------------------------------------------------------------------//
/*!
 * Real transverse eigenfunction sampled on a uniform grid [A^-1/2].
 *
 * The outermost lobe (largest x) is positive, which fixes the sign of every
 * matrix element.
 */
struct Wavefunction
{
    GridSpec grid;
    std::vector<double> values;
    std::size_t level_index{0};

    double norm() const
    {
        std::vector<double> sq(values.size());
        std::transform(values.begin(), values.end(), sq.begin(),
                       [](double v) { return v * v; });
        return trapezoid(std::span<double const>(sq), grid.step());
    }
};

//---------------------------------------------------------------------------//
// HARMONIC LADDER
//---------------------------------------------------------------------------//
//! Oscillator length hbar c / sqrt(m_eff Omega) [A].
inline double oscillator_length(Kinematics const& kin)
{
    return constants::hbar_c / std::sqrt(kin.effective_mass * kin.omega_osc);
}

//! Classical turning point of harmonic level n [A].
inline double harmonic_turning_point(std::size_t n, Kinematics const& kin)
{
    return oscillator_length(kin) * std::sqrt(2.0 * double(n) + 1);
}

/*!
 * Equidistant ladder Omega (n + 1/2) for all levels below the well depth.
 */
inline LevelSet harmonic_levels(Kinematics const& kin, double U0)
{
    double const omega = kin.omega_osc;
    if (!(omega > 0) || !(U0 > omega / 2))
    {
        throw Error(Errc::empty_well,
                    "well depth " + std::to_string(U0)
                        + " eV binds no level of spacing "
                        + std::to_string(omega) + " eV");
    }
    auto n_max = static_cast<std::size_t>(std::floor(U0 / omega - 0.5));
    // Levels must stay strictly below the rim
    while (n_max > 0 && omega * (double(n_max) + 0.5) >= U0)
        --n_max;

    LevelSet result;
    result.model = LevelModel::harmonic;
    result.omega_osc = omega;
    result.effective_mass = kin.effective_mass;
    result.well_depth = U0;
    result.levels.resize(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n)
        result.levels[n] = omega * (double(n) + 0.5);
    return result;
}

namespace detail
{
//! Require the outermost samples to be negligible relative to the peak.
inline void check_tails(Wavefunction const& wf, double rel_tol)
{
    double peak = 0;
    for (double v : wf.values)
        peak = std::max(peak, std::abs(v));
    double const tail
        = std::max(std::abs(wf.values.front()), std::abs(wf.values.back()));
    if (!(tail <= rel_tol * peak))
    {
        throw Error(Errc::grid_too_narrow,
                    "level " + std::to_string(wf.level_index)
                        + " has boundary tail " + std::to_string(tail / peak)
                        + " of its peak");
    }
}

inline void normalize(Wavefunction& wf)
{
    double const scale = 1 / std::sqrt(wf.norm());
    for (auto& v : wf.values)
        v *= scale;
}
}  // namespace detail

//---------------------------------------------------------------------------//
/*!
 * Harmonic eigenfunctions 0..n_top on a grid via the normalized Hermite
 * recurrence
 * \f[
 *   \psi_n = \sqrt{2/n}\,\xi\,\psi_{n-1} - \sqrt{(n-1)/n}\,\psi_{n-2},
 *   \quad \xi = x / x_1 .
 * \f]
 */
inline std::vector<Wavefunction>
harmonic_wavefunctions(std::size_t n_top, Kinematics const& kin, GridSpec const& grid)
{
    validate_grid(grid);
    double const x1 = oscillator_length(kin);
    double const needed = harmonic_turning_point(n_top, kin)
                          + 5 * x1 / std::sqrt(2.0);
    if (grid.half_width < needed)
    {
        throw Error(Errc::grid_too_narrow,
                    "grid half-width " + std::to_string(grid.half_width)
                        + " A is below the required "
                        + std::to_string(needed) + " A for level "
                        + std::to_string(n_top));
    }

    std::vector<Wavefunction> result(n_top + 1);
    for (std::size_t n = 0; n <= n_top; ++n)
    {
        result[n].grid = grid;
        result[n].level_index = n;
        result[n].values.resize(grid.points);
    }

    double const norm0 = 1 / std::sqrt(x1 * std::sqrt(constants::pi));
    for (std::size_t i = 0; i < grid.points; ++i)
    {
        double const xi = grid.x(i) / x1;
        double prev = 0;
        double cur = norm0 * std::exp(-xi * xi / 2);
        result[0].values[i] = cur;
        for (std::size_t n = 1; n <= n_top; ++n)
        {
            double const next = std::sqrt(2.0 / double(n)) * xi * cur
                                - std::sqrt(double(n - 1) / double(n)) * prev;
            prev = cur;
            cur = next;
            result[n].values[i] = cur;
        }
    }

    for (auto& wf : result)
    {
        detail::check_tails(wf, 1e-8);
        detail::normalize(wf);
    }
    return result;
}

//! Single harmonic eigenfunction of level n.
inline Wavefunction
harmonic_wavefunction(std::size_t n, Kinematics const& kin, GridSpec const& grid)
{
    auto all = harmonic_wavefunctions(n, kin, grid);
    return std::move(all.back());
}

//---------------------------------------------------------------------------//
// GENERAL WELLS
//---------------------------------------------------------------------------//
//! Flip the sign so the outermost lobe is positive.
inline void apply_sign_convention(Wavefunction& wf)
{
    double peak = 0;
    for (double v : wf.values)
        peak = std::max(peak, std::abs(v));
    for (std::size_t i = wf.values.size(); i-- > 0;)
    {
        if (std::abs(wf.values[i]) > 1e-6 * peak)
        {
            if (wf.values[i] < 0)
            {
                for (auto& v : wf.values)
                    v = -v;
            }
            return;
        }
    }
}

/*!
 * Bound states of an arbitrary well from the three-point discretization of
 * \f$ -(\hbar c)^2/(2 m_{eff}) \psi'' + U \psi = \varepsilon \psi \f$
 * with Dirichlet boundaries at the grid ends.
 *
 * Every eigenpair with energy below the smaller boundary value of U is
 * returned.
 */
inline std::pair<LevelSet, std::vector<Wavefunction>>
solve_bound_states(PotentialModel const& pot, Kinematics const& kin, GridSpec const& grid)
{
    validate_grid(grid);
    if (grid.points < 2000)
    {
        throw Error(Errc::grid_too_narrow,
                    "eigensolver needs at least 2000 grid points");
    }
    std::size_t const interior = grid.points - 2;
    double const h = grid.step();
    double const kinetic = constants::hbar_c * constants::hbar_c
                           / (2 * kin.effective_mass * h * h);

    SymTridiagonal ham;
    ham.diag.resize(interior);
    ham.off.assign(interior - 1, -kinetic);
    for (std::size_t i = 0; i < interior; ++i)
        ham.diag[i] = 2 * kinetic + evaluate(pot, grid.x(i + 1));

    double const rim = std::min(evaluate(pot, grid.x(0)),
                                evaluate(pot, grid.x(grid.points - 1)));
    auto eig = lowest_eigenpairs(ham, rim, interior);
    if (eig.values.empty())
    {
        throw Error(Errc::no_bound_states,
                    "no eigenvalue lies below the boundary potential "
                        + std::to_string(rim) + " eV");
    }

    LevelSet levels;
    levels.model = LevelModel::numeric;
    levels.effective_mass = kin.effective_mass;
    levels.well_depth = rim;
    levels.levels = eig.values;

    std::vector<Wavefunction> states(eig.values.size());
    double const scale = 1 / std::sqrt(h);
    for (std::size_t n = 0; n < states.size(); ++n)
    {
        auto& wf = states[n];
        wf.grid = grid;
        wf.level_index = n;
        wf.values.assign(grid.points, 0.0);
        for (std::size_t i = 0; i < interior; ++i)
            wf.values[i + 1] = eig.vectors[n][i] * scale;
        apply_sign_convention(wf);
    }
    return {std::move(levels), std::move(states)};
}

//---------------------------------------------------------------------------//
// MATRIX ELEMENTS
//---------------------------------------------------------------------------//
//! Coordinate matrix element <a|x|b> by the trapezoid rule [A].
inline double dipole_matrix_element(Wavefunction const& a, Wavefunction const& b)
{
    if (!(a.grid == b.grid) || a.values.size() != b.values.size())
    {
        throw Error(Errc::grid_mismatch,
                    "wavefunctions of levels " + std::to_string(a.level_index)
                        + " and " + std::to_string(b.level_index)
                        + " live on different grids");
    }
    std::vector<double> integrand(a.values.size());
    for (std::size_t i = 0; i < integrand.size(); ++i)
        integrand[i] = a.values[i] * a.grid.x(i) * b.values[i];
    return trapezoid(std::span<double const>(integrand), a.grid.step());
}

//---------------------------------------------------------------------------//
/*!
 * Dense symmetric table of <m|x|n>.
 */
class DipoleMatrix
{
  public:
    DipoleMatrix() = default;
    explicit DipoleMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

    std::size_t size() const { return n_; }
    double operator()(std::size_t m, std::size_t n) const
    {
        return data_[m * n_ + n];
    }
    void set(std::size_t m, std::size_t n, double value)
    {
        data_[m * n_ + n] = value;
        data_[n * n_ + m] = value;
    }
    double max_abs() const
    {
        double result = 0;
        for (double v : data_)
            result = std::max(result, std::abs(v));
        return result;
    }

  private:
    std::size_t n_{0};
    std::vector<double> data_;
};

//! All pairwise matrix elements by quadrature.
inline DipoleMatrix dipole_matrix(std::span<Wavefunction const> states)
{
    DipoleMatrix result(states.size());
    for (std::size_t m = 0; m < states.size(); ++m)
    {
        for (std::size_t n = m; n < states.size(); ++n)
            result.set(m, n, dipole_matrix_element(states[m], states[n]));
    }
    return result;
}

//! Closed-form harmonic elements: <n-1|x|n> = sqrt(n) x1 / sqrt(2).
inline DipoleMatrix harmonic_dipole_matrix(std::size_t count, Kinematics const& kin)
{
    DipoleMatrix result(count);
    double const scale = oscillator_length(kin) / std::sqrt(2.0);
    for (std::size_t n = 1; n < count; ++n)
        result.set(n - 1, n, std::sqrt(double(n)) * scale);
    return result;
}

//---------------------------------------------------------------------------//
}  // namespace chanrad
