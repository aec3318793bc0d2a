//---------------------------------*-C++-*-----------------------------------//
// Copyright 2026 chanrad developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file chanrad/potential.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "error.hpp"

namespace chanrad
{
//---------------------------------------------------------------------------//
//! Parabolic well U0 (2x/dp)^2 that reaches U0 on the planes.
struct HarmonicWell
{
    double U0{0};
    double dp{0};

    double operator()(double x) const
    {
        double const u = 2 * x / dp;
        return U0 * u * u;
    }
};

//! Poschl-Teller well -U0 sech^2(x/a), shifted so the bottom sits at zero.
struct PoschlTellerWell
{
    double U0{0};
    double a{0};

    double operator()(double x) const
    {
        double const t = std::tanh(x / a);
        return U0 * t * t;
    }
};

//---------------------------------------------------------------------------//
/*!
 * Piecewise-linear potential from (x, U) samples with strictly increasing x.
 */
class TabulatedWell
{
  public:
    TabulatedWell(std::vector<double> x, std::vector<double> u)
        : x_(std::move(x)), u_(std::move(u))
    {
        if (x_.size() < 2 || x_.size() != u_.size())
        {
            throw Error(Errc::bad_potential,
                        "tabulated potential needs at least two (x, U) rows");
        }
        for (std::size_t i = 1; i < x_.size(); ++i)
        {
            if (!(x_[i] > x_[i - 1]))
            {
                throw Error(Errc::bad_potential,
                            "tabulated x values must be strictly increasing");
            }
        }
    }

    double x_min() const { return x_.front(); }
    double x_max() const { return x_.back(); }
    std::vector<double> const& x() const { return x_; }
    std::vector<double> const& u() const { return u_; }

    double operator()(double x) const
    {
        if (x < x_.front() || x > x_.back())
        {
            throw Error(Errc::bad_potential,
                        "x = " + std::to_string(x)
                            + " A is outside the tabulated range");
        }
        auto iter = std::upper_bound(x_.begin(), x_.end(), x);
        std::size_t i = (iter == x_.end()) ? x_.size() - 1
                                           : std::size_t(iter - x_.begin());
        if (i == 0)
            i = 1;
        double const frac = (x - x_[i - 1]) / (x_[i] - x_[i - 1]);
        return u_[i - 1] + frac * (u_[i] - u_[i - 1]);
    }

  private:
    std::vector<double> x_;
    std::vector<double> u_;
};

//---------------------------------------------------------------------------//
using PotentialModel = std::variant<HarmonicWell, PoschlTellerWell, TabulatedWell>;

//! Evaluate U(x) [eV].
inline double evaluate(PotentialModel const& pot, double x)
{
    return std::visit([x](auto const& p) { return p(x); }, pot);
}

//---------------------------------------------------------------------------//
/*!
 * Read a two-column (x [A], U [eV]) table. Blank lines and lines starting
 * with '#' are skipped.
 */
inline TabulatedWell read_tabulated_potential(std::istream& is)
{
    std::vector<double> xs, us;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line))
    {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream row(line);
        double x{}, u{};
        if (!(row >> x >> u))
        {
            throw Error(Errc::bad_potential,
                        "cannot parse line " + std::to_string(lineno)
                            + " of tabulated potential");
        }
        xs.push_back(x);
        us.push_back(u);
    }
    return TabulatedWell(std::move(xs), std::move(us));
}

inline TabulatedWell read_tabulated_potential(std::string const& path)
{
    std::ifstream is(path);
    if (!is)
        throw Error(Errc::io_failure, "cannot open '" + path + "'");
    return read_tabulated_potential(is);
}

//---------------------------------------------------------------------------//
}  // namespace chanrad
