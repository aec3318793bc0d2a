//---------------------------------*-C++-*-----------------------------------//
// Copyright 2026 chanrad developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file chanrad/config.hpp
//! Flat "key = value" run configuration (a TOML subset).
//---------------------------------------------------------------------------//
#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "error.hpp"
#include "kinematics.hpp"
#include "spectrum.hpp"

namespace chanrad
{
//---------------------------------------------------------------------------//
enum class PotentialKind
{
    harmonic,
    poschl_teller,
    tabulated,
};

struct AxisSpec
{
    double min{0};
    double max{0};
    std::size_t count{1};

    friend bool operator==(AxisSpec const&, AxisSpec const&) = default;
};

//---------------------------------------------------------------------------//
/*!
 * Everything needed to run a subcommand, with every default made explicit.
 */
struct RunConfig
{
    BeamCrystalConfig beam;
    PotentialKind potential{PotentialKind::harmonic};
    double pt_width{0};          //!< Poschl-Teller width a [A]
    std::string potential_file;  //!< Two-column table for tabulated wells
    std::size_t grid_points{4001};
    double grid_half_width{0};  //!< [A]; defaults to dp / 2
    AxisSpec theta;              //!< [rad]
    AxisSpec omega;              //!< [eV]
    Kernel kernel{Kernel::omega2};
    std::string profile{"sinc"};
    std::string output_prefix;
    unsigned workers{1};

    friend bool operator==(RunConfig const& a, RunConfig const& b)
    {
        auto const& x = a.beam;
        auto const& y = b.beam;
        return x.species == y.species && x.total_energy == y.total_energy
               && x.rest_mass == y.rest_mass && x.dp == y.dp && x.U0 == y.U0
               && x.crystal_length == y.crystal_length
               && x.theta_in == y.theta_in && a.potential == b.potential
               && a.pt_width == b.pt_width
               && a.potential_file == b.potential_file
               && a.grid_points == b.grid_points
               && a.grid_half_width == b.grid_half_width
               && a.theta == b.theta && a.omega == b.omega
               && a.kernel == b.kernel && a.profile == b.profile
               && a.output_prefix == b.output_prefix
               && a.workers == b.workers;
    }
};

namespace detail
{
//---------------------------------------------------------------------------//
struct RawValue
{
    std::string text;
    bool quoted{false};
};

inline std::string trim(std::string const& s)
{
    auto const first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos)
        return {};
    auto const last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

//! Split "key = value # comment" respecting quotes.
inline std::map<std::string, RawValue> tokenize(std::string const& text)
{
    std::map<std::string, RawValue> result;
    std::istringstream is(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line))
    {
        ++lineno;
        auto const where = " (line " + std::to_string(lineno) + ")";
        auto const eq = line.find('=');
        auto const hash = line.find('#');
        if (eq == std::string::npos || (hash != std::string::npos && hash < eq))
        {
            if (!trim(line.substr(0, hash)).empty())
                throw Error(Errc::bad_value, "expected 'key = value'" + where);
            continue;
        }
        std::string key = trim(line.substr(0, eq));
        std::string rest = trim(line.substr(eq + 1));
        RawValue value;
        if (!rest.empty() && rest.front() == '"')
        {
            value.quoted = true;
            std::size_t i = 1;
            for (; i < rest.size() && rest[i] != '"'; ++i)
            {
                if (rest[i] == '\\' && i + 1 < rest.size())
                    ++i;
                value.text.push_back(rest[i]);
            }
            if (i >= rest.size())
                throw Error(Errc::bad_value, key + ": unterminated string" + where);
            auto const tail = trim(rest.substr(i + 1));
            if (!tail.empty() && tail.front() != '#')
                throw Error(Errc::bad_value, key + ": trailing characters" + where);
        }
        else
        {
            value.text = trim(rest.substr(0, rest.find('#')));
        }
        if (key.empty())
            throw Error(Errc::bad_value, "empty key" + where);
        if (!result.emplace(key, value).second)
            throw Error(Errc::bad_value, key + ": duplicate key" + where);
    }
    return result;
}

inline std::string format_double(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string quote(std::string const& s)
{
    std::string result = "\"";
    for (char c : s)
    {
        if (c == '"' || c == '\\')
            result.push_back('\\');
        result.push_back(c);
    }
    result.push_back('"');
    return result;
}
}  // namespace detail

//---------------------------------------------------------------------------//
/*!
 * Parse and validate a configuration. Unknown keys are rejected; every
 * default is written into the returned value.
 */
inline RunConfig parse_config(std::string const& text)
{
    static std::set<std::string> const known = {
        "species",        "energy_eV",      "rest_mass_eV",   "dp_A",
        "U0_eV",          "length_A",       "theta_in_rad",   "potential",
        "pt_width_A",     "potential_file", "grid_points",    "grid_half_width_A",
        "theta_min_rad",  "theta_max_rad",  "theta_count",    "omega_min_eV",
        "omega_max_eV",   "omega_count",    "kernel",         "profile",
        "output_prefix",  "workers",
    };

    auto raw = detail::tokenize(text);
    for (auto const& [key, value] : raw)
    {
        if (!known.count(key))
            throw Error(Errc::unknown_key, key);
    }

    auto find = [&raw](char const* key) -> detail::RawValue const* {
        auto iter = raw.find(key);
        return iter == raw.end() ? nullptr : &iter->second;
    };
    auto get_number = [&](char const* key, std::optional<double> fallback) {
        auto const* v = find(key);
        if (!v)
        {
            if (!fallback)
                throw Error(Errc::missing_key, key);
            return *fallback;
        }
        double out{};
        auto const& s = v->text;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        if (v->quoted || ec != std::errc{} || ptr != s.data() + s.size()
            || !std::isfinite(out))
        {
            throw Error(Errc::bad_value,
                        std::string(key) + ": '" + s + "' is not a finite number");
        }
        return out;
    };
    auto get_count = [&](char const* key, std::optional<double> fallback) {
        double const v = get_number(key, fallback);
        if (!(v >= 1) || v != std::floor(v) || v > 1e9)
        {
            throw Error(Errc::bad_value,
                        std::string(key) + ": must be a positive integer");
        }
        return static_cast<std::size_t>(v);
    };
    auto get_string = [&](char const* key, std::optional<std::string> fallback) {
        auto const* v = find(key);
        if (!v)
        {
            if (!fallback)
                throw Error(Errc::missing_key, key);
            return *fallback;
        }
        if (!v->quoted)
        {
            throw Error(Errc::bad_value,
                        std::string(key) + ": strings must be double-quoted");
        }
        return v->text;
    };

    RunConfig cfg;
    auto species = get_string("species", "positron");
    if (species == "positron")
        cfg.beam.species = Species::positron;
    else if (species == "electron")
        cfg.beam.species = Species::electron;
    else
        throw Error(Errc::bad_value, "species: expected \"positron\" or \"electron\"");

    cfg.beam.total_energy = get_number("energy_eV", std::nullopt);
    cfg.beam.rest_mass = get_number("rest_mass_eV", constants::electron_mass);
    cfg.beam.dp = get_number("dp_A", std::nullopt);
    cfg.beam.U0 = get_number("U0_eV", std::nullopt);
    cfg.beam.crystal_length = get_number("length_A", std::nullopt);
    cfg.beam.theta_in = get_number("theta_in_rad", std::nullopt);

    auto potential = get_string("potential", "harmonic");
    if (potential == "harmonic")
        cfg.potential = PotentialKind::harmonic;
    else if (potential == "poschl_teller")
        cfg.potential = PotentialKind::poschl_teller;
    else if (potential == "tabulated")
        cfg.potential = PotentialKind::tabulated;
    else
        throw Error(Errc::bad_value,
                    "potential: expected \"harmonic\", \"poschl_teller\" or "
                    "\"tabulated\"");

    if (cfg.potential == PotentialKind::poschl_teller)
    {
        cfg.pt_width = get_number("pt_width_A", std::nullopt);
        if (!(cfg.pt_width > 0))
            throw Error(Errc::bad_value, "pt_width_A: must be positive");
    }
    else if (find("pt_width_A"))
    {
        throw Error(Errc::bad_value, "pt_width_A: only valid with potential = \"poschl_teller\"");
    }
    if (cfg.potential == PotentialKind::tabulated)
    {
        cfg.potential_file = get_string("potential_file", std::nullopt);
    }
    else if (find("potential_file"))
    {
        throw Error(Errc::bad_value, "potential_file: only valid with potential = \"tabulated\"");
    }

    cfg.grid_points = get_count("grid_points", 4001.0);
    if (cfg.grid_points < 3)
        throw Error(Errc::bad_value, "grid_points: need at least 3");
    cfg.grid_half_width = get_number("grid_half_width_A", cfg.beam.dp / 2);
    if (!(cfg.grid_half_width > 0))
        throw Error(Errc::bad_value, "grid_half_width_A: must be positive");

    auto read_axis = [&](char const* lo, char const* hi, char const* count) {
        AxisSpec axis;
        axis.min = get_number(lo, std::nullopt);
        axis.max = get_number(hi, std::nullopt);
        axis.count = get_count(count, std::nullopt);
        bool const ordered = axis.count == 1 ? axis.min <= axis.max
                                             : axis.min < axis.max;
        if (!ordered)
        {
            throw Error(Errc::bad_value,
                        std::string(lo) + ": must be below " + hi);
        }
        return axis;
    };
    cfg.theta = read_axis("theta_min_rad", "theta_max_rad", "theta_count");
    cfg.omega = read_axis("omega_min_eV", "omega_max_eV", "omega_count");
    if (cfg.theta.min < 0)
        throw Error(Errc::bad_value, "theta_min_rad: must be non-negative");

    auto kernel = get_string("kernel", "omega2");
    if (kernel == "omega2")
        cfg.kernel = Kernel::omega2;
    else if (kernel == "unit")
        cfg.kernel = Kernel::unit;
    else
        throw Error(Errc::bad_value, "kernel: expected \"omega2\" or \"unit\"");

    cfg.profile = get_string("profile", "sinc");
    if (cfg.profile != "sinc")
        throw Error(Errc::bad_value, "profile: only \"sinc\" is supported");

    cfg.output_prefix = get_string("output_prefix", "");
    cfg.workers = static_cast<unsigned>(get_count("workers", 1.0));
    return cfg;
}

//---------------------------------------------------------------------------//
//! Write every field, defaults included, in the syntax parse_config reads.
inline std::string serialize_config(RunConfig const& cfg)
{
    using detail::format_double;
    using detail::quote;
    std::ostringstream os;
    auto put = [&os](char const* key, std::string const& value) {
        os << key << " = " << value << '\n';
    };
    put("species", quote(cfg.beam.species == Species::positron ? "positron" : "electron"));
    put("energy_eV", format_double(cfg.beam.total_energy));
    put("rest_mass_eV", format_double(cfg.beam.rest_mass));
    put("dp_A", format_double(cfg.beam.dp));
    put("U0_eV", format_double(cfg.beam.U0));
    put("length_A", format_double(cfg.beam.crystal_length));
    put("theta_in_rad", format_double(cfg.beam.theta_in));
    switch (cfg.potential)
    {
        case PotentialKind::harmonic:
            put("potential", quote("harmonic"));
            break;
        case PotentialKind::poschl_teller:
            put("potential", quote("poschl_teller"));
            put("pt_width_A", format_double(cfg.pt_width));
            break;
        case PotentialKind::tabulated:
            put("potential", quote("tabulated"));
            put("potential_file", quote(cfg.potential_file));
            break;
    }
    put("grid_points", std::to_string(cfg.grid_points));
    put("grid_half_width_A", format_double(cfg.grid_half_width));
    put("theta_min_rad", format_double(cfg.theta.min));
    put("theta_max_rad", format_double(cfg.theta.max));
    put("theta_count", std::to_string(cfg.theta.count));
    put("omega_min_eV", format_double(cfg.omega.min));
    put("omega_max_eV", format_double(cfg.omega.max));
    put("omega_count", std::to_string(cfg.omega.count));
    put("kernel", quote(cfg.kernel == Kernel::omega2 ? "omega2" : "unit"));
    put("profile", quote(cfg.profile));
    put("output_prefix", quote(cfg.output_prefix));
    put("workers", std::to_string(cfg.workers));
    return os.str();
}

//---------------------------------------------------------------------------//
}  // namespace chanrad
