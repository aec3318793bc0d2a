//---------------------------------*-C++-*-----------------------------------//
// Copyright 2026 chanrad developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file chanrad/kinematics.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <cmath>
#include <string>

#include "error.hpp"
#include "units.hpp"

namespace chanrad
{
//---------------------------------------------------------------------------//
//! Charge sign of the channeled particle.
enum class Species
{
    positron = +1,
    electron = -1,
};

//---------------------------------------------------------------------------//
/*!
 * Beam and planar channel parameters.
 *
 * The channel is the gap between two neighboring planes a distance \c dp
 * apart, forming a transverse well of depth \c U0.
 */
struct BeamCrystalConfig
{
    Species species{Species::positron};
    double total_energy{0};                       //!< [eV]
    double rest_mass{constants::electron_mass};  //!< [eV]
    double dp{0};                                 //!< Interplanar distance [A]
    double U0{0};                                 //!< Well depth [eV]
    double crystal_length{0};                     //!< [A]
    double theta_in{0};                           //!< Incidence angle [rad]
};

//---------------------------------------------------------------------------//
/*!
 * Relativistic factors and the transverse oscillation frequency.
 */
struct Kinematics
{
    double gamma{1};           //!< E / m
    double beta{0};            //!< p_parallel / E
    double omega_osc{0};       //!< Channel oscillation frequency [eV]
    double effective_mass{0};  //!< Transverse inertia gamma * m [eV]

    //! 1 - beta, free of cancellation for gamma >> 1
    double one_minus_beta() const
    {
        return 1 / (gamma * gamma * (1 + beta));
    }
};

//---------------------------------------------------------------------------//
//! Critical angle sqrt(2 U0 / E) for planar channeling.
inline double acceptance_angle(BeamCrystalConfig const& cfg)
{
    return std::sqrt(2 * cfg.U0 / cfg.total_energy);
}

//---------------------------------------------------------------------------//
//! Reject configurations whose geometry or energy is unphysical.
inline void validate_geometry(BeamCrystalConfig const& cfg)
{
    if (!(cfg.rest_mass > 0) || !(cfg.total_energy > cfg.rest_mass))
    {
        throw Error(Errc::non_relativistic,
                    "total energy must exceed the rest mass (gamma > 1)");
    }
    if (!(cfg.dp > 0) || !(cfg.U0 > 0) || !(cfg.crystal_length > 0))
    {
        throw Error(Errc::empty_channel,
                    "dp, U0 and crystal length must all be positive");
    }
}

//---------------------------------------------------------------------------//
/*!
 * Compute gamma, beta, the oscillation frequency and the effective mass.
 *
 * The frequency of a harmonic well reaching \c U0 at the planes is
 * \f$ \Omega = \hbar c \, (2/d_p) \sqrt{2 U_0 / E} \f$.
 */
inline Kinematics make_kinematics(BeamCrystalConfig const& cfg)
{
    validate_geometry(cfg);

    Kinematics result;
    result.gamma = cfg.total_energy / cfg.rest_mass;
    double const g = result.gamma;
    result.beta = std::sqrt((g - 1) * (g + 1)) / g;
    result.omega_osc = constants::hbar_c * (2 / cfg.dp)
                       * std::sqrt(2 * cfg.U0 / cfg.total_energy);
    result.effective_mass = g * cfg.rest_mass;
    return result;
}

//---------------------------------------------------------------------------//
//! Doppler denominator 1 - beta cos(theta), evaluated without cancellation.
inline double doppler_denominator(Kinematics const& kin, double theta)
{
    double const s = std::sin(theta / 2);
    return kin.one_minus_beta() + 2 * kin.beta * s * s;
}

//---------------------------------------------------------------------------//
/*!
 * Lab-frame photon energy for a transverse level gap at emission angle theta.
 *
 * Uses the exact beta; no small-angle expansion.
 */
inline double doppler_exact(double delta_eps, Kinematics const& kin, double theta)
{
    return delta_eps / doppler_denominator(kin, theta);
}

//---------------------------------------------------------------------------//
/*!
 * Forward-cone approximation for a transition skipping \c delta_n levels of an
 * equidistant ladder:
 * \f[
 *   \omega = 2\gamma^2 \Delta n \, \Omega / (1 + \theta^2 \gamma^2).
 * \f]
 */
inline double doppler_forward(int delta_n, Kinematics const& kin, double theta)
{
    double const g2 = kin.gamma * kin.gamma;
    return 2 * g2 * delta_n * kin.omega_osc / (1 + theta * theta * g2);
}

//---------------------------------------------------------------------------//
//! Throw AboveBarrier unless |theta_in| is inside the acceptance angle.
inline void require_channeled(BeamCrystalConfig const& cfg)
{
    double const psi_c = acceptance_angle(cfg);
    if (!(std::abs(cfg.theta_in) < psi_c))
    {
        throw Error(Errc::above_barrier,
                    "|theta_in| = " + std::to_string(std::abs(cfg.theta_in))
                        + " rad is not below the acceptance angle "
                        + std::to_string(psi_c) + " rad");
    }
}

//---------------------------------------------------------------------------//
}  // namespace chanrad
