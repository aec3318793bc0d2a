//---------------------------------*-C++-*-----------------------------------//
// Copyright 2026 chanrad developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file chanrad/oracle.hpp
//! Independent reference evaluations used by the validation suite.
//!
//! Nothing here calls into the production evaluation paths it checks: the
//! Hermite functions use the unnormalized polynomial recurrence, and the
//! intensity sums use a different Doppler route, a different line-profile
//! formula, reversed line order, compensated summation and extended
//! precision.
//---------------------------------------------------------------------------//
#pragma once

#include <cmath>
#include <complex>
#include <span>

#include "spectrum.hpp"
#include "units.hpp"

namespace chanrad
{
namespace oracle
{
//---------------------------------------------------------------------------//
//! Oscillation frequency by a different arithmetic route [eV].
inline double omega_osc(double energy, double dp, double U0)
{
    long double const hc = constants::hbar_c;
    long double const w2 = 8.0L * U0 * hc * hc / ((long double)energy * dp * dp);
    return double(std::sqrt(w2));
}

/*!
 * Normalized Hermite function h_n(xi) = H_n(xi) e^{-xi^2/2} /
 * sqrt(2^n n! sqrt(pi)) from the physicists' polynomial recurrence.
 */
inline double hermite_function(int n, double xi)
{
    double hm1 = 0;
    double h = 1;
    for (int k = 0; k < n; ++k)
    {
        double const next = 2 * xi * h - 2 * k * hm1;
        hm1 = h;
        h = next;
    }
    double const log_norm = 0.5
                            * (n * std::log(2.0) + std::lgamma(n + 1.0)
                               + 0.5 * std::log(constants::pi));
    double const sign = h < 0 ? -1 : 1;
    if (h == 0)
        return 0;
    return sign * std::exp(std::log(std::abs(h)) - xi * xi / 2 - log_norm);
}

/*!
 * Infinite-window plane-wave overlap of harmonic level n:
 * d_p^{-1/2} * sqrt(2 pi x1) * i^n * h_n(k x1).
 */
inline std::complex<double> harmonic_overlap(int n, double k, double x1, double dp)
{
    static std::complex<double> const phases[4]
        = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    double const mag = std::sqrt(2 * constants::pi * x1 / dp)
                       * hermite_function(n, k * x1);
    return phases[n % 4] * mag;
}

//---------------------------------------------------------------------------//
//! Neumaier-compensated accumulator.
template<class T>
class CompensatedSum
{
  public:
    void add(T v)
    {
        T const t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }
    T value() const { return sum_ + comp_; }

  private:
    T sum_{0};
    T comp_{0};
};

struct Intensities
{
    double incoherent{0};
    double coherent{0};
};

/*!
 * Brute-force evaluation of both summation rules at one cell.
 *
 * Works in extended precision. The Doppler factor is (1/gamma^2 + beta^2
 * sin^2 theta) / (1 + beta cos theta), the line center is computed
 * explicitly, and the profile is summed from its real and imaginary parts
 * sin(DT)/D and 2 sin^2(DT/2)/D.
 */
inline Intensities brute_force(std::span<TransitionLine const> lines,
                               double gamma,
                               double theta,
                               double omega,
                               Kernel kernel)
{
    using real = long double;
    real const g = gamma;
    real const beta = std::sqrt(1 - 1 / (g * g));
    real const s = std::sin(real(theta));
    real const c = std::cos(real(theta));
    real const denom = (1 / (g * g) + beta * beta * s * s) / (1 + beta * c);
    real const w = omega;

    CompensatedSum<real> incoherent, re, im;
    for (auto iter = lines.rbegin(); iter != lines.rend(); ++iter)
    {
        real const center = iter->delta_eps / denom;
        real const detuning = (w - center) * denom;
        real const t = iter->interaction_time;
        real pre = t, pim = 0;
        if (detuning != 0)
        {
            real const half = std::sin(detuning * t / 2);
            pre = std::sin(detuning * t) / detuning;
            pim = 2 * half * half / detuning;
        }
        real const ar = iter->amplitude.real();
        real const ai = iter->amplitude.imag();
        real const tr = ar * pre - ai * pim;
        real const ti = ar * pim + ai * pre;
        incoherent.add(tr * tr);
        incoherent.add(ti * ti);
        re.add(tr);
        im.add(ti);
    }
    real const k = (kernel == Kernel::omega2) ? w * w : 1.0L;
    real const r = re.value();
    real const i = im.value();
    return {double(incoherent.value() * k), double((r * r + i * i) * k)};
}

//---------------------------------------------------------------------------//
}  // namespace oracle
}  // namespace chanrad
