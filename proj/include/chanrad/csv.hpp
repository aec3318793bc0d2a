//---------------------------------*-C++-*-----------------------------------//
// Copyright 2026 chanrad developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file chanrad/csv.hpp
//! CSV emission for levels, populations, lines, spectra and peaks.
//---------------------------------------------------------------------------//
#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <span>
#include <string>
#include <vector>

#include "entry_populations.hpp"
#include "error.hpp"
#include "spectrum.hpp"
#include "transverse_states.hpp"

namespace chanrad
{
namespace csv
{
//---------------------------------------------------------------------------//
inline constexpr char units_line[]
    = "# units: energies eV, angles rad, lengths angstrom; intensities in "
      "arbitrary units\n";

//! Shortest text that round-trips a double exactly (17 significant digits).
inline void put(std::string& out, double value)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    out += buf;
}

inline void put(std::string& out, std::size_t value)
{
    out += std::to_string(value);
}

template<class T, class... Rest>
void row(std::string& out, T first, Rest... rest)
{
    put(out, first);
    ((out += ',', put(out, rest)), ...);
    out += '\n';
}

inline std::string header(char const* columns)
{
    return std::string("# ") + columns + "\n" + units_line;
}

//---------------------------------------------------------------------------//
inline std::string levels(LevelSet const& lv)
{
    std::string out = header("n,energy_eV");
    for (std::size_t n = 0; n < lv.size(); ++n)
        row(out, n, lv.levels[n]);
    return out;
}

inline std::string populations(AmplitudeVector const& av)
{
    std::string out = header("n,re_c,im_c,abs2_c");
    for (std::size_t n = 0; n < av.amplitudes.size(); ++n)
    {
        auto const& c = av.amplitudes[n];
        row(out, n, c.real(), c.imag(), std::norm(c));
    }
    return out;
}

inline std::string lines(std::span<TransitionLine const> lines)
{
    std::string out = header("n_initial,n_final,delta_eps_eV,re_amp,im_amp");
    for (auto const& l : lines)
    {
        row(out, l.n_initial, l.n_final, l.delta_eps, l.amplitude.real(),
            l.amplitude.imag());
    }
    return out;
}

inline std::string spectrum(SpectrumGrid const& grid)
{
    std::string out
        = header("theta_rad,omega_eV,I_incoherent_arb,I_coherent_arb,ratio");
    out.reserve(out.size() + grid.ratio.size() * 100);
    for (std::size_t it = 0; it < grid.theta_axis.size(); ++it)
    {
        for (std::size_t iw = 0; iw < grid.omega_axis.size(); ++iw)
        {
            auto const idx = grid.index(it, iw);
            row(out, grid.theta_axis[it], grid.omega_axis[iw],
                grid.incoherent[idx], grid.coherent[idx], grid.ratio[idx]);
        }
    }
    return out;
}

//! Peaks of the coherent intensity in each theta row, ranked from 1.
inline std::string peaks(SpectrumGrid const& grid)
{
    std::string out = header("theta_rad,omega_eV,height_arb,rank");
    for (std::size_t it = 0; it < grid.theta_axis.size(); ++it)
    {
        auto found = find_peaks(grid.coherent_row(it), grid.omega_axis);
        for (std::size_t r = 0; r < found.size(); ++r)
        {
            row(out, grid.theta_axis[it], found[r].omega, found[r].height,
                r + 1);
        }
    }
    return out;
}

//---------------------------------------------------------------------------//
/*!
 * Write to a sibling temporary file and rename it into place, so a failed
 * run never leaves a truncated file behind.
 */
inline void write_atomic(std::filesystem::path const& path, std::string const& contents)
{
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os)
            throw Error(Errc::io_failure, "cannot open '" + tmp.string() + "'");
        os.write(contents.data(), std::streamsize(contents.size()));
        os.flush();
        if (!os)
        {
            std::error_code ignored;
            std::filesystem::remove(tmp, ignored);
            throw Error(Errc::io_failure, "cannot write '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec)
    {
        std::error_code ignored;
        std::filesystem::remove(tmp, ignored);
        throw Error(Errc::io_failure,
                    "cannot rename to '" + path.string() + "': " + ec.message());
    }
}

//---------------------------------------------------------------------------//
}  // namespace csv
}  // namespace chanrad
