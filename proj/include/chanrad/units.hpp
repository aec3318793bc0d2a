//---------------------------------*-C++-*-----------------------------------//
// Copyright 2026 chanrad developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file chanrad/units.hpp
//! Energies are in eV, lengths in angstrom, angles in radians.
//---------------------------------------------------------------------------//
#pragma once

#include <numbers>

namespace chanrad
{
namespace constants
{
//! Reduced Planck constant times c [eV * angstrom]
inline constexpr double hbar_c = 1973.269804;
//! Electron (positron) rest energy [eV]
inline constexpr double electron_mass = 510998.95;
inline constexpr double pi = std::numbers::pi;
}  // namespace constants
}  // namespace chanrad
