//---------------------------------*-C++-*-----------------------------------//
// Copyright 2026 chanrad developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file chanrad/validation.hpp
//! Acceptance checks shared by the `validate` subcommand and the test suite.
//---------------------------------------------------------------------------//
#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "csv.hpp"
#include "oracle.hpp"
#include "pipeline.hpp"

namespace chanrad
{
namespace validation
{
//---------------------------------------------------------------------------//
struct CheckResult
{
    int id{0};
    std::string name;
    bool passed{false};
    std::string detail;
    double seconds{0};
};

//---------------------------------------------------------------------------//
// REFERENCE SETUPS
//---------------------------------------------------------------------------//
//! 1 GeV positrons, dp = 1.92 A, U0 = 23 eV, 20 um crystal, theta_in = psi_c/2.
inline RunConfig reference_config()
{
    RunConfig cfg;
    cfg.beam.species = Species::positron;
    cfg.beam.total_energy = 1e9;
    cfg.beam.dp = 1.92;
    cfg.beam.U0 = 23;
    cfg.beam.crystal_length = 2e5;
    cfg.beam.theta_in = acceptance_angle(cfg.beam) / 2;
    cfg.grid_half_width = cfg.beam.dp / 2;

    auto const kin = make_kinematics(cfg.beam);
    double const w0 = 2 * kin.gamma * kin.gamma * kin.omega_osc;
    cfg.theta = {0, 2 / kin.gamma, 64};
    cfg.omega = {0.25 * w0, 1.75 * w0, 128};
    return cfg;
}

/*!
 * Same beam and crystal with a Poschl-Teller well of width 0.067 A: seven
 * bound levels whose gaps differ by ~0.87 eV, far more than the 0.062 eV
 * line width of a 20 um crystal.
 */
inline RunConfig poschl_teller_config()
{
    RunConfig cfg = reference_config();
    cfg.potential = PotentialKind::poschl_teller;
    cfg.pt_width = 0.067;
    auto const kin = make_kinematics(cfg.beam);
    double const g2 = kin.gamma * kin.gamma;
    cfg.omega = {0.02 * 2 * g2 * cfg.beam.U0, 1.0 * 2 * g2 * cfg.beam.U0, 2048};
    return cfg;
}

//! Closed-form Poschl-Teller levels measured from the well bottom [eV].
inline std::vector<double>
poschl_teller_levels(double U0, double a, double effective_mass)
{
    double const hc2 = constants::hbar_c * constants::hbar_c;
    double const unit = hc2 / (2 * effective_mass * a * a);
    double const s
        = (-1 + std::sqrt(1 + 8 * effective_mass * U0 * a * a / hc2)) / 2;
    std::vector<double> result;
    for (int n = 0; n < s; ++n)
        result.push_back(U0 - unit * (s - n) * (s - n));
    return result;
}

//! Largest |a - b| / max(|a|, |b|) over paired samples (0/0 counts as 0).
inline double max_rel_diff(std::span<double const> a, std::span<double const> b)
{
    double result = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
    {
        double const scale = std::max(std::abs(a[i]), std::abs(b[i]));
        if (scale > 0)
            result = std::max(result, std::abs(a[i] - b[i]) / scale);
    }
    return result;
}

//! Fraction of a level's peak amplitude remaining on the planes.
inline double plane_tail(Wavefunction const& wf, double dp)
{
    auto [first, last] = window_nodes(wf.grid, dp / 2);
    double peak = 0;
    for (double v : wf.values)
        peak = std::max(peak, std::abs(v));
    return std::max(std::abs(wf.values[first]), std::abs(wf.values[last])) / peak;
}

namespace detail
{
inline std::string fmt(double v)
{
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

struct Timer
{
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double elapsed() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

inline std::vector<TransitionLine> reference_lines(RunConfig const& cfg,
                                                   ChannelStates& cs_out)
{
    cs_out = compute_states(cfg);
    auto av = compute_populations(cfg, cs_out);
    return compute_lines(cfg, cs_out, av);
}

//! Brute-force comparison of both fields over a grid.
inline double brute_force_deviation(SpectrumGrid const& grid,
                                    std::span<TransitionLine const> lines,
                                    Kinematics const& kin,
                                    Kernel kernel)
{
    double worst = 0;
    for (std::size_t it = 0; it < grid.theta_axis.size(); ++it)
    {
        for (std::size_t iw = 0; iw < grid.omega_axis.size(); ++iw)
        {
            auto const ref = oracle::brute_force(lines, kin.gamma, grid.theta_axis[it],
                                                 grid.omega_axis[iw], kernel);
            auto const idx = grid.index(it, iw);
            double const a[] = {grid.incoherent[idx], grid.coherent[idx]};
            double const b[] = {ref.incoherent, ref.coherent};
            worst = std::max(worst, max_rel_diff(a, b));
        }
    }
    return worst;
}
}  // namespace detail

//---------------------------------------------------------------------------//
// CRITERIA
//---------------------------------------------------------------------------//
//! 1: exact vs forward Doppler at theta = 0 agree to 1/gamma^2.
inline CheckResult check_kinematics()
{
    detail::Timer timer;
    CheckResult r{1, "kinematics consistency", true, {}, 0};
    for (double gamma : {100.0, 1956.95, 1e4})
    {
        BeamCrystalConfig beam;
        beam.total_energy = gamma * beam.rest_mass;
        beam.dp = 1.92;
        beam.U0 = 23;
        beam.crystal_length = 2e5;
        auto const kin = make_kinematics(beam);
        double const dev = std::abs(doppler_exact(kin.omega_osc, kin, 0)
                                        / doppler_forward(1, kin, 0)
                                    - 1);
        double const bound = 1 / (kin.gamma * kin.gamma);
        r.passed = r.passed && dev < bound;
        r.detail += "gamma=" + detail::fmt(gamma) + ": " + detail::fmt(dev) + " < "
                    + detail::fmt(bound) + "; ";
    }
    r.seconds = timer.elapsed();
    r.passed = r.passed && r.seconds < 1;
    return r;
}

//! 2: reference Omega and the number of bound harmonic levels.
inline CheckResult check_harmonic_ladder()
{
    detail::Timer timer;
    CheckResult r{2, "harmonic ladder", false, {}, 0};
    auto const cfg = reference_config();
    auto const kin = make_kinematics(cfg.beam);
    auto const lv = harmonic_levels(kin, cfg.beam.U0);
    double const expected = oracle::omega_osc(cfg.beam.total_energy, cfg.beam.dp,
                                              cfg.beam.U0);
    double const dev = std::abs(kin.omega_osc / expected - 1);
    // Quoted to four significant digits
    bool const rounds = std::round(kin.omega_osc * 1e4) == 4409;
    r.passed = dev < 1e-4 && rounds && lv.n_max() == 51;
    r.detail = "Omega=" + detail::fmt(kin.omega_osc) + " eV (oracle rel dev "
               + detail::fmt(dev) + "), n_max=" + std::to_string(lv.n_max());
    r.seconds = timer.elapsed();
    return r;
}

//! 3: finite-difference levels vs closed forms, with h^2 convergence.
inline CheckResult check_eigensolver()
{
    detail::Timer timer;
    CheckResult r{3, "eigensolver vs analytic", true, {}, 0};
    auto const cfg = reference_config();
    auto const kin = make_kinematics(cfg.beam);
    double const half = cfg.beam.dp / 2;

    auto harmonic_error = [&](std::size_t points) {
        auto [lv, wf] = solve_bound_states(HarmonicWell{cfg.beam.U0, cfg.beam.dp},
                                           kin, GridSpec{half, points});
        double err = 0;
        for (std::size_t n = 0; n < 20; ++n)
            err = std::max(err, std::abs(lv.levels[n] / (kin.omega_osc * (n + 0.5)) - 1));
        return err;
    };
    double const a = 0.067;
    auto const exact_pt = poschl_teller_levels(cfg.beam.U0, a, kin.effective_mass);
    auto pt_error = [&](std::size_t points) {
        auto [lv, wf] = solve_bound_states(PoschlTellerWell{cfg.beam.U0, a}, kin,
                                           GridSpec{half, points});
        if (lv.size() != exact_pt.size())
            return 1.0;
        double err = 0;
        for (std::size_t n = 0; n < lv.size(); ++n)
            err = std::max(err, std::abs(lv.levels[n] / exact_pt[n] - 1));
        return err;
    };

    // 4000 nodes -> 3999 intervals; halving h gives 7999 nodes
    double const h1 = harmonic_error(4000);
    double const h2 = harmonic_error(7999);
    double const p1 = pt_error(4000);
    double const p2 = pt_error(7999);
    double const hr = h1 / h2;
    double const pr = p1 / p2;
    r.passed = h1 < 1e-4 && p1 < 1e-4 && hr >= 3.5 && hr <= 4.5 && pr >= 3.5
               && pr <= 4.5;
    r.seconds = timer.elapsed();
    r.passed = r.passed && r.seconds < 10;
    r.detail = "harmonic err " + detail::fmt(h1) + " (ratio " + detail::fmt(hr)
               + "), Poschl-Teller err " + detail::fmt(p1) + " over "
               + std::to_string(exact_pt.size()) + " levels (ratio "
               + detail::fmt(pr) + ")";
    return r;
}

//! 4: parity selection, odd populations at normal incidence, sqrt(n) scaling.
inline CheckResult check_selection_rules()
{
    detail::Timer timer;
    CheckResult r{4, "selection rules and parity", true, {}, 0};
    auto cfg = reference_config();
    cfg.beam.theta_in = 0;
    auto const cs = compute_states(cfg);
    double const x1 = oscillator_length(cs.kin);

    auto pt_cfg = poschl_teller_config();
    pt_cfg.beam.theta_in = 0;
    auto const pt = compute_states(pt_cfg);

    double worst_parity = 0;
    for (auto const* set : {&cs, &pt})
    {
        auto const m = dipole_matrix(set->states);
        for (std::size_t i = 0; i < m.size(); ++i)
        {
            for (std::size_t j = i; j < m.size(); ++j)
            {
                if ((i + j) % 2 == 0)
                    worst_parity = std::max(worst_parity, std::abs(m(i, j)));
            }
        }
    }

    double worst_odd = 0;
    for (auto const* set : {&cs, &pt})
    {
        auto const av = entry_amplitudes(cfg.beam, set->levels, set->states);
        for (std::size_t n = 1; n < av.amplitudes.size(); n += 2)
            worst_odd = std::max(worst_odd, std::abs(av.amplitudes[n]));
    }

    auto const m = dipole_matrix(cs.states);
    double worst_sqrt = 0;
    for (std::size_t n = 1; n < m.size(); ++n)
    {
        worst_sqrt = std::max(worst_sqrt,
                              std::abs(m(n - 1, n) / m(0, 1) - std::sqrt(double(n))));
    }

    r.passed = worst_parity < 1e-10 * x1 && worst_odd < 1e-12 && worst_sqrt < 1e-6;
    r.detail = "max equal-parity |<m|x|n>|/x1=" + detail::fmt(worst_parity / x1)
               + ", max |c_odd|=" + detail::fmt(worst_odd)
               + ", max sqrt(n) deviation=" + detail::fmt(worst_sqrt);
    r.seconds = timer.elapsed();
    return r;
}

//! 5: quadrature overlaps vs the momentum-space oscillator form.
inline CheckResult check_entry_amplitudes()
{
    detail::Timer timer;
    CheckResult r{5, "entry-amplitude oracle", true, {}, 0};
    auto cfg = reference_config();
    auto const cs = compute_states(cfg);
    double const x1 = oscillator_length(cs.kin);
    double const psi_c = acceptance_angle(cfg.beam);

    double worst = 0;
    double worst_norm = 0;
    std::size_t compared = 0;
    for (double frac : {0.0, 0.25, 0.5})
    {
        cfg.beam.theta_in = frac * psi_c;
        auto const av = compute_populations(cfg, cs);
        double const raw_scale = std::sqrt(av.captured_fraction);
        double const k = cfg.beam.total_energy * cfg.beam.theta_in / constants::hbar_c;

        double total = 0;
        for (std::size_t n = 0; n < av.amplitudes.size(); ++n)
        {
            total += std::norm(av.amplitudes[n]);
            if (plane_tail(cs.states[n], cfg.beam.dp) >= 1e-8)
                continue;
            auto const raw = av.amplitudes[n] * raw_scale;
            auto const ref = oracle::harmonic_overlap(int(n), k, x1, cfg.beam.dp);
            double const dev = std::abs(ref) > 0 ? std::abs(raw - ref) / std::abs(ref)
                                                 : std::abs(raw) / 1e-12 * 1e-6;
            worst = std::max(worst, dev);
            ++compared;
        }
        worst_norm = std::max(worst_norm, std::abs(total - 1));
    }
    r.passed = worst < 1e-6 && worst_norm < 1e-12 && compared > 0;
    r.detail = std::to_string(compared) + " overlaps, max rel dev "
               + detail::fmt(worst) + ", max |sum|c|^2 - 1| "
               + detail::fmt(worst_norm);
    r.seconds = timer.elapsed();
    return r;
}

//! 6: coherence identities (single line, N co-located lines, phase, kernel).
inline CheckResult check_coherence_identities()
{
    detail::Timer timer;
    CheckResult r{6, "coherence identities", true, {}, 0};
    auto const cfg = reference_config();
    ChannelStates cs;
    auto const lines = detail::reference_lines(cfg, cs);
    auto const& kin = cs.kin;
    auto const theta = linear_axis(cfg.theta.min, cfg.theta.max, 16);
    auto const omega = linear_axis(cfg.omega.min, cfg.omega.max, 64);

    // Single line
    std::vector<TransitionLine> single{lines[10]};
    auto const g1 = build_spectrum_grid(single, kin, theta, omega);
    double const single_dev = max_rel_diff(g1.coherent, g1.incoherent);

    // N co-located equal real amplitudes at the line center
    double worst_n = 0;
    double const center = doppler_exact(kin.omega_osc, kin, 0);
    for (std::size_t count : {2, 5, 52})
    {
        TransitionLine proto;
        proto.delta_eps = kin.omega_osc;
        proto.amplitude = 0.3;
        proto.interaction_time = interaction_time(cfg.beam);
        std::vector<TransitionLine> same(count, proto);
        auto const cell = evaluate_cell(same, kin, 0, center, Kernel::omega2);
        worst_n = std::max(worst_n,
                           std::abs(cell.coherent / cell.incoherent / double(count) - 1));
    }

    // Global phase on the entry amplitudes
    auto const av = compute_populations(cfg, cs);
    auto const shifted = entry_amplitudes(cfg.beam, cs.levels, cs.states, 0.7);
    auto const matels = dipole_matrix(cs.states);
    auto const lines_a = build_lines(av, cs.levels, matels, cfg.beam);
    auto const lines_b = build_lines(shifted, cs.levels, matels, cfg.beam);
    auto const ga = build_spectrum_grid(lines_a, kin, theta, omega);
    auto const gb = build_spectrum_grid(lines_b, kin, theta, omega);
    double const phase_dev = std::max(max_rel_diff(ga.coherent, gb.coherent),
                                      max_rel_diff(ga.incoherent, gb.incoherent));

    // Kernel cancels in the ratio
    auto const gu = build_spectrum_grid(lines, kin, theta, omega, Kernel::unit);
    auto const gw = build_spectrum_grid(lines, kin, theta, omega, Kernel::omega2);
    double const kernel_dev = max_rel_diff(gu.ratio, gw.ratio);

    r.passed = single_dev < 1e-12 && worst_n < 1e-12 && phase_dev < 1e-12
               && kernel_dev < 1e-12;
    r.detail = "single-line " + detail::fmt(single_dev) + ", N-line "
               + detail::fmt(worst_n) + ", phase " + detail::fmt(phase_dev)
               + ", kernel " + detail::fmt(kernel_dev);
    r.seconds = timer.elapsed();
    return r;
}

//! 7: both fields vs the brute-force second implementation on 64x64 grids.
inline CheckResult check_brute_force()
{
    detail::Timer timer;
    CheckResult r{7, "brute-force equivalence", true, {}, 0};
    double worst = 0;
    for (auto const& cfg : {reference_config(), poschl_teller_config()})
    {
        ChannelStates cs;
        auto const lines = detail::reference_lines(cfg, cs);
        auto const grid = build_spectrum_grid(
            lines, cs.kin, linear_axis(cfg.theta.min, cfg.theta.max, 64),
            linear_axis(cfg.omega.min, cfg.omega.max, 64));
        worst = std::max(worst,
                         detail::brute_force_deviation(grid, lines, cs.kin, Kernel::omega2));
    }
    r.seconds = timer.elapsed();
    r.passed = worst < 1e-10 && r.seconds < 5;
    r.detail = "max rel dev " + detail::fmt(worst) + " (harmonic and Poschl-Teller)";
    return r;
}

//! Integrated |coh - inc| / inc of the Poschl-Teller reference grid. The
//! brute-force oracle gives 5.343923616e-3; frozen rounded up at 3 digits.
//! The equidistant positron reference gives 0.93 on its grid.
inline constexpr double poschl_teller_rel_diff_bound = 5.35e-3;

//! 8: qualitative claims: interference structure for the equidistant ladder,
//! none for the anharmonic well.
inline CheckResult check_interference_claims()
{
    detail::Timer timer;
    CheckResult r{8, "qualitative interference claims", true, {}, 0};

    // (a) positron, equidistant ladder
    auto const cfg = reference_config();
    ChannelStates cs;
    auto const lines = detail::reference_lines(cfg, cs);
    auto const grid = compute_spectrum(cfg, cs.kin, lines, 1);
    auto const summary = interference_summary(grid);
    bool const varies = summary.max_ratio - summary.min_ratio > 1e-9 * summary.max_ratio;
    auto const peaks = find_peaks(grid.coherent_row(0), grid.omega_axis);
    double const expected = doppler_exact(cs.kin.omega_osc, cs.kin, 0);
    double const bin = grid.omega_axis[1] - grid.omega_axis[0];
    bool const peak_ok = !peaks.empty() && std::abs(peaks.front().omega - expected) <= bin;
    bool const a_ok = varies && summary.max_ratio > 1 && peak_ok;

    // (b) Poschl-Teller, well separated lines
    auto const pt_cfg = poschl_teller_config();
    ChannelStates pt;
    auto const pt_lines = detail::reference_lines(pt_cfg, pt);
    std::vector<double> gaps;
    for (auto const& l : pt_lines)
    {
        if (std::abs(l.amplitude) > 0)
            gaps.push_back(l.delta_eps);
    }
    std::sort(gaps.begin(), gaps.end());
    double min_sep = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < gaps.size(); ++i)
        min_sep = std::min(min_sep, gaps[i] - gaps[i - 1]);
    double const width = 2 * constants::pi / interaction_time(pt_cfg.beam);
    auto const pt_grid = compute_spectrum(pt_cfg, pt.kin, pt_lines, 1);
    auto const pt_summary = interference_summary(pt_grid);
    bool const b_ok = min_sep > 5 * width
                      && pt_summary.integrated_rel_diff < poschl_teller_rel_diff_bound;

    r.passed = a_ok && b_ok;
    r.detail = "(a) ratio in [" + detail::fmt(summary.min_ratio) + ", "
               + detail::fmt(summary.max_ratio) + "]"
               + (varies ? "" : " (uniform)") + ", coherent peak "
               + (peaks.empty() ? std::string("none")
                                : detail::fmt(peaks.front().omega))
               + " eV vs " + detail::fmt(expected) + " eV (bin "
               + detail::fmt(bin) + ") -> " + (a_ok ? "pass" : "FAIL")
               + "; (b) min line separation " + detail::fmt(min_sep / width)
               + " widths, integrated rel diff "
               + detail::fmt(pt_summary.integrated_rel_diff) + " -> "
               + (b_ok ? "pass" : "FAIL");
    r.seconds = timer.elapsed();
    return r;
}

//! 9: a 200x400 spectrum CSV is byte-identical for 1 and 8 workers.
inline CheckResult check_determinism()
{
    detail::Timer timer;
    CheckResult r{9, "determinism", false, {}, 0};
    auto cfg = reference_config();
    cfg.theta.count = 200;
    cfg.omega.count = 400;
    ChannelStates cs;
    auto const lines = detail::reference_lines(cfg, cs);
    auto const serial = csv::spectrum(compute_spectrum(cfg, cs.kin, lines, 1));
    auto const parallel = csv::spectrum(compute_spectrum(cfg, cs.kin, lines, 8));
    r.seconds = timer.elapsed();
    r.passed = serial == parallel && r.seconds < 5;
    r.detail = std::to_string(serial.size()) + " bytes, "
               + (serial == parallel ? "identical" : "DIFFERENT");
    return r;
}

//---------------------------------------------------------------------------//
inline std::vector<std::function<CheckResult()>> all_checks()
{
    return {check_kinematics,      check_harmonic_ladder,      check_eigensolver,
            check_selection_rules, check_entry_amplitudes,     check_coherence_identities,
            check_brute_force,     check_interference_claims,         check_determinism};
}

//! Run one check, converting an escaping exception into a failure.
inline CheckResult run_guarded(std::function<CheckResult()> const& check, int id)
{
    try
    {
        return check();
    }
    catch (std::exception const& e)
    {
        return CheckResult{id, "exception", false, e.what(), 0};
    }
}

inline std::vector<CheckResult> run_all()
{
    std::vector<CheckResult> result;
    int id = 1;
    for (auto const& check : all_checks())
        result.push_back(run_guarded(check, id++));
    return result;
}

//---------------------------------------------------------------------------//
}  // namespace validation
}  // namespace chanrad
