#pragma once

/**
 * @file io.hpp
 * @brief JSON documents for solutions and potentials, CSV number formatting.
 *
 * Solution document:
 *   { "scenario": "free", "m": 1, "theta": [4], "theta0": 0,
 *     "k0": [4], "k1": [4], "phi0": 0,
 *     "variant": "...", "potential": {...}, "effective": [...],   (gauge only)
 *     "massive_light_cone": false }
 * Complex numbers are [re, im] pairs.
 */

#include <array>
#include <charconv>
#include <complex>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "qkg/freewave.hpp"
#include "qkg/gauge.hpp"
#include "qkg/gauge_potential.hpp"
#include "qkg/minkowski.hpp"

namespace qkg {

using json = nlohmann::json;

/// Thrown for malformed or incomplete documents.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Shortest round-trip decimal form; identical bits give identical text.
inline std::string format_number(double v) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc{}) throw std::runtime_error("format_number: conversion failed");
    return std::string(buf.data(), end);
}

inline void write_csv_row(std::ostream& os, std::span<const double> values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) os << ',';
        os << format_number(values[i]);
    }
    os << '\n';
}

namespace io_detail {
inline const json& require(const json& j, std::string_view key) {
    auto it = j.find(key);
    if (it == j.end()) throw ConfigError("missing field '" + std::string(key) + "'");
    return *it;
}

inline double number(const json& j, std::string_view what) {
    if (!j.is_number()) throw ConfigError("field '" + std::string(what) + "' must be a number");
    return j.get<double>();
}

inline std::complex<double> complex_from(const json& j, std::string_view what) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return {j[0].get<double>(), j[1].get<double>()};
    }
    throw ConfigError("field '" + std::string(what) + "' must be a number or [re, im]");
}
}  // namespace io_detail

inline double get_number(const json& j, std::string_view key) {
    return io_detail::number(io_detail::require(j, key), key);
}

inline double get_number_or(const json& j, std::string_view key, double fallback) {
    auto it = j.find(key);
    return it == j.end() ? fallback : io_detail::number(*it, key);
}

template <std::size_t N>
std::array<double, N> get_reals(const json& j, std::string_view key) {
    const json& v = io_detail::require(j, key);
    if (!v.is_array() || v.size() != N) {
        throw ConfigError("field '" + std::string(key) + "' must be an array of " + std::to_string(N) + " numbers");
    }
    std::array<double, N> out{};
    for (std::size_t i = 0; i < N; ++i) out[i] = io_detail::number(v[i], key);
    return out;
}

inline FourVector get_four_vector(const json& j, std::string_view key) {
    return FourVector{get_reals<4>(j, key)};
}

inline ComplexFourVector get_complex_four_vector(const json& j, std::string_view key) {
    const json& v = io_detail::require(j, key);
    if (!v.is_array() || v.size() != 4) {
        throw ConfigError("field '" + std::string(key) + "' must be an array of 4 complex entries");
    }
    ComplexFourVector out;
    for (std::size_t i = 0; i < 4; ++i) out[i] = io_detail::complex_from(v[i], key);
    return out;
}

inline json to_json_value(const FourVector& v) { return json::array({v[0], v[1], v[2], v[3]}); }

inline json to_json_value(const ComplexFourVector& v) {
    json out = json::array();
    for (const auto& c : v.c) out.push_back(json::array({c.real(), c.imag()}));
    return out;
}

inline json to_json_value(const GaugePotential& A) {
    json out{{"a", to_json_value(A.a)}, {"b", to_json_value(A.b)}};
    if (A.oscillation) {
        out["oscillation"] = {{"beta", to_json_value(A.oscillation->beta)},
                              {"kref", to_json_value(A.oscillation->kref)}};
    }
    return out;
}

inline GaugePotential potential_from_json(const json& j) {
    GaugePotential A;
    if (j.contains("a")) A.a = get_four_vector(j, "a");
    if (j.contains("b")) A.b = get_complex_four_vector(j, "b");
    if (j.contains("oscillation")) {
        const json& o = j["oscillation"];
        A.oscillation = Oscillation{get_four_vector(o, "beta"), get_four_vector(o, "kref")};
    }
    return A;
}

inline json to_json_value(const PlaneWaveSolution& s) {
    return json{{"m", s.mass},
                {"theta", to_json_value(s.phase.theta)},
                {"theta0", s.phase.theta0},
                {"k0", to_json_value(s.k[0])},
                {"k1", to_json_value(s.k[1])},
                {"phi0", s.phi0}};
}

inline PlaneWaveSolution solution_from_json(const json& j) {
    PlaneWaveSolution s;
    s.mass = get_number(j, "m");
    s.phase.theta = get_four_vector(j, "theta");
    s.phase.theta0 = get_number(j, "theta0");
    s.k[0] = get_four_vector(j, "k0");
    s.k[1] = get_four_vector(j, "k1");
    s.phi0 = get_number(j, "phi0");
    return s;
}

inline Scenario scenario_from_string(std::string_view name) {
    if (name == "free") return Scenario::free;
    if (name == "electric") return Scenario::electric;
    if (name == "constant_quaternionic") return Scenario::constant_quaternionic;
    if (name == "oscillating") return Scenario::oscillating;
    throw ConfigError("unknown scenario '" + std::string(name) + "'");
}

inline QuaternionicVariant variant_from_string(std::string_view name) {
    if (name == "simple") return QuaternionicVariant::simple;
    if (name == "conjugate_pair") return QuaternionicVariant::conjugate_pair;
    if (name == "temporal") return QuaternionicVariant::temporal;
    throw ConfigError("unknown variant '" + std::string(name) + "'");
}

inline json to_json_value(const GaugeSolution& gs) {
    json out = to_json_value(gs.sol);
    out["scenario"] = to_string(gs.scenario);
    if (gs.variant) out["variant"] = to_string(*gs.variant);
    if (gs.scenario != Scenario::free) out["potential"] = to_json_value(gs.potential);
    if (gs.effective) {
        out["effective"] = json::array({to_json_value((*gs.effective)[0]), to_json_value((*gs.effective)[1])});
    }
    out["massive_light_cone"] = gs.massive_light_cone;
    return out;
}

inline GaugeSolution gauge_solution_from_json(const json& j) {
    GaugeSolution gs;
    gs.scenario = scenario_from_string(io_detail::require(j, "scenario").get<std::string>());
    gs.sol = solution_from_json(j);
    if (j.contains("variant")) gs.variant = variant_from_string(j["variant"].get<std::string>());
    if (j.contains("potential")) gs.potential = potential_from_json(j["potential"]);
    if (j.contains("effective")) {
        const json& e = j["effective"];
        if (!e.is_array() || e.size() != 2) throw ConfigError("field 'effective' must hold two vectors");
        std::array<ComplexFourVector, 2> eff;
        for (std::size_t a = 0; a < 2; ++a) {
            json wrap{{"v", e[a]}};
            eff[a] = get_complex_four_vector(wrap, "v");
        }
        gs.effective = eff;
    }
    gs.massive_light_cone = j.value("massive_light_cone", false);
    return gs;
}

}  // namespace qkg
