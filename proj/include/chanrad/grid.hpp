//---------------------------------*-C++-*-----------------------------------//
// Copyright 2026 chanrad developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file chanrad/grid.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "error.hpp"

namespace chanrad
{
//---------------------------------------------------------------------------//
/*!
 * Symmetric uniform grid on [-half_width, half_width], endpoints included.
 */
struct GridSpec
{
    double half_width{0};  //!< [A]
    std::size_t points{0};  //!< Node count including both endpoints

    double step() const { return 2 * half_width / double(points - 1); }
    double x(std::size_t i) const
    {
        // Mirror the upper half so x(i) == -x(points - 1 - i) bitwise
        std::size_t const mirror = points - 1 - i;
        if (mirror < i)
            return -this->x(mirror);
        return -half_width + double(i) * this->step();
    }
    std::vector<double> nodes() const
    {
        std::vector<double> result(points);
        for (std::size_t i = 0; i < points; ++i)
            result[i] = this->x(i);
        return result;
    }

    friend bool operator==(GridSpec const&, GridSpec const&) = default;
};

//! Throw unless the grid has at least three nodes and positive width.
inline void validate_grid(GridSpec const& grid)
{
    if (grid.points < 3 || !(grid.half_width > 0))
    {
        throw Error(Errc::grid_too_narrow,
                    "grid needs at least 3 nodes and a positive width");
    }
}

/*!
 * Grid whose step divides the channel half-width exactly, so the planes at
 * +-dp/2 are nodes, extended outward to cover at least \c min_half_width.
 */
inline GridSpec
aligned_grid(double dp, std::size_t intervals_per_half_channel, double min_half_width)
{
    double const h = (dp / 2) / double(intervals_per_half_channel);
    auto half_count = intervals_per_half_channel;
    if (min_half_width > dp / 2)
    {
        half_count = static_cast<std::size_t>(std::ceil(min_half_width / h));
    }
    return GridSpec{double(half_count) * h, 2 * half_count + 1};
}

//---------------------------------------------------------------------------//
// QUADRATURE
//---------------------------------------------------------------------------//
//! Composite trapezoid rule on uniformly spaced samples.
template<class T>
T trapezoid(std::span<T const> f, double h)
{
    if (f.size() < 2)
        return T{};
    T sum = (f.front() + f.back()) / 2.0;
    for (std::size_t i = 1; i + 1 < f.size(); ++i)
        sum += f[i];
    return sum * h;
}

/*!
 * Composite Simpson rule on uniformly spaced samples.
 *
 * An odd number of intervals is closed with the 3/8 rule on the last three.
 */
template<class T>
T simpson(std::span<T const> f, double h)
{
    std::size_t const intervals = f.size() ? f.size() - 1 : 0;
    if (intervals < 2)
        return trapezoid(f, h);

    std::size_t const even = (intervals % 2 == 0) ? intervals : intervals - 3;
    T sum{};
    if (even > 0)
    {
        T odd_sum{};
        T even_sum{};
        for (std::size_t i = 1; i < even; i += 2)
            odd_sum += f[i];
        for (std::size_t i = 2; i < even; i += 2)
            even_sum += f[i];
        sum = (f[0] + f[even] + 4.0 * odd_sum + 2.0 * even_sum) * (h / 3);
    }
    if (even != intervals)
    {
        std::size_t const i = even;
        sum += (f[i] + 3.0 * f[i + 1] + 3.0 * f[i + 2] + f[i + 3]) * (3 * h / 8);
    }
    return sum;
}

//---------------------------------------------------------------------------//
}  // namespace chanrad
