//---------------------------------*-C++-*-----------------------------------//
// Copyright 2026 chanrad developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file chanrad/tridiagonal.hpp
//! Lowest eigenpairs of a real symmetric tridiagonal matrix.
//---------------------------------------------------------------------------//
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <random>
#include <span>
#include <vector>

#include "error.hpp"

namespace chanrad
{
//---------------------------------------------------------------------------//
/*!
 * Symmetric tridiagonal matrix: \c diag has n entries, \c off has n - 1
 * (element (i, i+1) == element (i+1, i) == off[i]).
 */
struct SymTridiagonal
{
    std::vector<double> diag;
    std::vector<double> off;

    std::size_t size() const { return diag.size(); }

    //! Max-row-sum norm
    double norm() const
    {
        double result = 0;
        for (std::size_t i = 0; i < diag.size(); ++i)
        {
            double row = std::abs(diag[i]);
            if (i > 0)
                row += std::abs(off[i - 1]);
            if (i + 1 < diag.size())
                row += std::abs(off[i]);
            result = std::max(result, row);
        }
        return result;
    }

    //! Gershgorin lower and upper bounds on the spectrum
    std::pair<double, double> gershgorin() const
    {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (std::size_t i = 0; i < diag.size(); ++i)
        {
            double radius = 0;
            if (i > 0)
                radius += std::abs(off[i - 1]);
            if (i + 1 < diag.size())
                radius += std::abs(off[i]);
            lo = std::min(lo, diag[i] - radius);
            hi = std::max(hi, diag[i] + radius);
        }
        return {lo, hi};
    }
};

namespace detail
{
//---------------------------------------------------------------------------//
/*!
 * Number of eigenvalues strictly less than \c lambda (Sturm sequence).
 */
inline std::size_t
sturm_count(SymTridiagonal const& t, double lambda, double pivmin)
{
    std::size_t count = 0;
    double q = t.diag[0] - lambda;
    if (std::abs(q) < pivmin)
        q = -pivmin;
    if (q < 0)
        ++count;
    for (std::size_t i = 1; i < t.size(); ++i)
    {
        q = t.diag[i] - lambda - t.off[i - 1] * t.off[i - 1] / q;
        if (std::abs(q) < pivmin)
            q = -pivmin;
        if (q < 0)
            ++count;
    }
    return count;
}

//---------------------------------------------------------------------------//
/*!
 * LU factorization with partial pivoting of (T - shift I), stored as in the
 * LAPACK gttrf layout: U has diagonal \c d and superdiagonals \c du, \c du2.
 */
struct ShiftedLU
{
    std::vector<double> dl, d, du, du2;
    std::vector<char> swapped;

    ShiftedLU(SymTridiagonal const& t, double shift, double pivmin)
        : dl(t.off), d(t.diag), du(t.off), du2(t.size(), 0.0),
          swapped(t.size(), 0)
    {
        std::size_t const n = t.size();
        for (auto& v : d)
            v -= shift;
        for (std::size_t i = 0; i + 1 < n; ++i)
        {
            if (std::abs(d[i]) >= std::abs(dl[i]))
            {
                if (std::abs(d[i]) < pivmin)
                    d[i] = pivmin;
                double const fact = dl[i] / d[i];
                dl[i] = fact;
                d[i + 1] -= fact * du[i];
            }
            else
            {
                double const fact = d[i] / dl[i];
                d[i] = dl[i];
                dl[i] = fact;
                double const temp = du[i];
                du[i] = d[i + 1];
                d[i + 1] = temp - fact * d[i + 1];
                if (i + 2 < n)
                {
                    du2[i] = du[i + 1];
                    du[i + 1] = -fact * du[i + 1];
                }
                swapped[i] = 1;
            }
        }
        if (std::abs(d[n - 1]) < pivmin)
            d[n - 1] = pivmin;
    }

    //! Overwrite b with the solution of (T - shift I) x = b
    void solve(std::span<double> b) const
    {
        std::size_t const n = d.size();
        for (std::size_t i = 0; i + 1 < n; ++i)
        {
            if (!swapped[i])
            {
                b[i + 1] -= dl[i] * b[i];
            }
            else
            {
                double const temp = b[i];
                b[i] = b[i + 1];
                b[i + 1] = temp - dl[i] * b[i];
            }
        }
        b[n - 1] /= d[n - 1];
        if (n > 1)
            b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
        for (std::size_t i = (n > 2 ? n - 2 : 0); i-- > 0;)
        {
            b[i] = (b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2]) / d[i];
        }
    }
};

inline double norm2(std::span<double const> v)
{
    double s = 0;
    for (double x : v)
        s += x * x;
    return std::sqrt(s);
}
}  // namespace detail

//---------------------------------------------------------------------------//
/*!
 * Eigenvalues below a bound (ascending) and their unit eigenvectors.
 */
struct TridiagonalEigen
{
    std::vector<double> values;
    std::vector<std::vector<double>> vectors;
};

//---------------------------------------------------------------------------//
/*!
 * Compute all eigenpairs of \c t with eigenvalue strictly below \c upper.
 *
 * Eigenvalues come from Sturm-sequence bisection to full precision;
 * eigenvectors from inverse iteration with a pivoted LU solve,
 * orthogonalized against previously accepted vectors.
 */
inline TridiagonalEigen
lowest_eigenpairs(SymTridiagonal const& t, double upper, std::size_t max_count)
{
    std::size_t const n = t.size();
    TridiagonalEigen result;
    if (n == 0)
        return result;

    double const tnorm = t.norm();
    double const eps = std::numeric_limits<double>::epsilon();
    double const pivmin = std::numeric_limits<double>::min() / eps
                          * std::max(1.0, tnorm * tnorm);

    auto [glo, ghi] = t.gershgorin();
    std::size_t const count
        = std::min(max_count, detail::sturm_count(t, upper, pivmin));

    for (std::size_t k = 0; k < count; ++k)
    {
        // Find lambda_k: smallest x with sturm_count(x) > k
        double lo = glo;
        double hi = std::min(ghi, upper);
        int iter = 0;
        while (hi - lo
               > 2 * eps * std::max(std::abs(lo), std::abs(hi)) + eps * tnorm + pivmin)
        {
            double const mid = lo + (hi - lo) / 2;
            if (mid <= lo || mid >= hi)
                break;
            if (detail::sturm_count(t, mid, pivmin) > k)
                hi = mid;
            else
                lo = mid;
            if (++iter > 400)
            {
                throw Error(Errc::convergence_failure,
                            "bisection did not converge for eigenvalue "
                                + std::to_string(k));
            }
        }
        result.values.push_back(lo + (hi - lo) / 2);
    }

    std::mt19937_64 rng(0x5eed1234u);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    std::vector<double> residual(n);

    for (std::size_t k = 0; k < count; ++k)
    {
        double const lambda = result.values[k];
        detail::ShiftedLU lu(t, lambda, eps * tnorm);

        std::vector<double> v(n);
        for (auto& x : v)
            x = unif(rng);

        bool converged = false;
        for (int iter = 0; iter < 10 && !converged; ++iter)
        {
            lu.solve(v);
            for (auto const& prev : result.vectors)
            {
                double const dot
                    = std::inner_product(prev.begin(), prev.end(), v.begin(), 0.0);
                for (std::size_t i = 0; i < n; ++i)
                    v[i] -= dot * prev[i];
            }
            double const nrm = detail::norm2(v);
            if (!(nrm > 0) || !std::isfinite(nrm))
                break;
            for (auto& x : v)
                x /= nrm;

            if (iter < 1)
                continue;
            for (std::size_t i = 0; i < n; ++i)
            {
                double r = (t.diag[i] - lambda) * v[i];
                if (i > 0)
                    r += t.off[i - 1] * v[i - 1];
                if (i + 1 < n)
                    r += t.off[i] * v[i + 1];
                residual[i] = r;
            }
            converged = detail::norm2(residual) <= 1e-10 * tnorm;
        }
        if (!converged)
        {
            throw Error(Errc::convergence_failure,
                        "inverse iteration failed for eigenvalue "
                            + std::to_string(k));
        }
        result.vectors.push_back(std::move(v));
    }
    return result;
}

//---------------------------------------------------------------------------//
}  // namespace chanrad
