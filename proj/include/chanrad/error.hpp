//---------------------------------*-C++-*-----------------------------------//
// Copyright 2026 chanrad developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file chanrad/error.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <stdexcept>
#include <string>

namespace chanrad
{
//---------------------------------------------------------------------------//
//! Failure categories raised by the library.
enum class Errc
{
    non_relativistic,
    empty_channel,
    above_barrier,
    empty_well,
    grid_too_narrow,
    grid_mismatch,
    no_bound_states,
    convergence_failure,
    bad_potential,
    axis_empty,
    unknown_key,
    missing_key,
    bad_value,
    io_failure,
};

//! Stable name of an error category (used in CLI diagnostics).
inline char const* to_cstring(Errc code)
{
    switch (code)
    {
        case Errc::non_relativistic: return "NonRelativistic";
        case Errc::empty_channel: return "EmptyChannel";
        case Errc::above_barrier: return "AboveBarrier";
        case Errc::empty_well: return "EmptyWell";
        case Errc::grid_too_narrow: return "GridTooNarrow";
        case Errc::grid_mismatch: return "GridMismatch";
        case Errc::no_bound_states: return "NoBoundStates";
        case Errc::convergence_failure: return "ConvergenceFailure";
        case Errc::bad_potential: return "BadPotential";
        case Errc::axis_empty: return "AxisEmpty";
        case Errc::unknown_key: return "UnknownKey";
        case Errc::missing_key: return "MissingKey";
        case Errc::bad_value: return "BadValue";
        case Errc::io_failure: return "IoFailure";
    }
    return "Unknown";
}

//! True for errors that come from configuration or I/O rather than physics.
inline bool is_config_error(Errc code)
{
    return code == Errc::unknown_key || code == Errc::missing_key
           || code == Errc::bad_value || code == Errc::io_failure;
}

//---------------------------------------------------------------------------//
/*!
 * Exception carrying an error category and a human-readable message.
 */
class Error : public std::runtime_error
{
  public:
    Error(Errc code, std::string const& what)
        : std::runtime_error(std::string(to_cstring(code)) + ": " + what)
        , code_(code)
    {
    }

    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

//---------------------------------------------------------------------------//
}  // namespace chanrad
