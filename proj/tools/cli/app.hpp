#pragma once

// Command-line front end: qkg <solve|current|scatter|verify|lightcone> --config FILE [options]
//
// Exit status: 0 when every requested invariant passes, 1 on a constraint
// incompatibility or failed invariant, 2 on invalid configuration.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qkg/qkg.hpp"

namespace qkg::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_config = 2;

struct Options {
    std::string config;
    std::string out;
    std::string summary;
    double h = 0.05;
    std::uint64_t seed = 0;
    double tol = constraint_tol;
    bool unnormalized = false;
};

/// Deterministic uniform doubles in [lo, hi) independent of the standard
/// library's distribution implementations.
class Uniform {
public:
    explicit Uniform(std::uint64_t seed) : gen_(seed) {}
    double operator()(double lo, double hi) {
        const double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

private:
    std::mt19937_64 gen_;
};

inline json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
}

inline EnergySign sign_from(const json& j, std::string_view key) {
    const double v = get_number_or(j, key, 1.0);
    if (v == 1.0) return EnergySign::positive;
    if (v == -1.0) return EnergySign::negative;
    throw ConfigError("field '" + std::string(key) + "' must be +1 or -1");
}

inline LinearPhase phase_from(const json& j) {
    LinearPhase p;
    if (j.contains("theta")) p.theta = get_four_vector(j, "theta");
    p.theta0 = get_number_or(j, "theta0", 0.0);
    return p;
}

inline void validate_mass(double m) {
    if (!(m >= 0)) throw ConfigError("field 'm' must be >= 0");
}

/// Build a solution from a scenario config (has "kind") or read a solution
/// document (has "scenario").
inline GaugeSolution solution_from(const json& doc) {
    if (doc.contains("scenario")) return gauge_solution_from_json(doc);
    if (!doc.contains("kind")) throw ConfigError("config needs a 'kind' or a 'scenario' field");
    const std::string kind = doc["kind"].get<std::string>();
    if (kind == "verify") {
        if (!doc.contains("target")) throw ConfigError("verify config needs a 'target' document");
        return solution_from(doc["target"]);
    }
    const double m = get_number(doc, "m");
    validate_mass(m);
    const LinearPhase phase = phase_from(doc);

    if (kind == "free" || kind == "electric" || kind == "constant_quaternionic") {
        const Spatial k0 = get_reals<3>(doc, "k0_spatial");
        const Spatial k1 = doc.contains("k1_spatial") ? get_reals<3>(doc, "k1_spatial") : k0;
        const auto s0 = sign_from(doc, "sign0");
        const auto s1 = sign_from(doc, "sign1");
        const double phi0 = get_number_or(doc, "phi0", 0.0);
        if (kind == "free") {
            GaugeSolution gs;
            gs.sol = build_solution(m, phase, k0, k1, s0, s1, phi0);
            return gs;
        }
        if (kind == "electric") return solve_electric(m, get_number(doc, "a0"), phase, k0, k1, s0, s1, phi0);
        if (!doc.contains("variant")) throw ConfigError("missing field 'variant'");
        const auto variant = variant_from_string(doc["variant"].get<std::string>());
        return solve_constant_quaternionic(m, get_complex_four_vector(doc, "b"), phase, variant, k0, k1, s0, s1,
                                           phi0);
    }
    if (kind == "oscillating") {
        const Spatial k = doc.contains("k_spatial") ? get_reals<3>(doc, "k_spatial") : get_reals<3>(doc, "k0_spatial");
        return solve_oscillating(m, get_four_vector(doc, "beta"), phase, k, sign_from(doc, "sign"));
    }
    throw ConfigError("unknown kind '" + kind + "'");
}

/// Primary artifact goes to --out (or `fallback`), the summary to --summary,
/// else to stdout when --out is set, else to stderr.
class Sinks {
public:
    Sinks(const Options& o, std::ostream& out, std::ostream& err) : out_(&out), err_(&err) {
        if (!o.out.empty()) {
            file_ = std::make_unique<std::ofstream>(o.out, std::ios::binary);
            if (!*file_) throw ConfigError("cannot open output '" + o.out + "'");
        }
        if (!o.summary.empty()) {
            summary_file_ = std::make_unique<std::ofstream>(o.summary, std::ios::binary);
            if (!*summary_file_) throw ConfigError("cannot open summary '" + o.summary + "'");
        }
    }
    std::ostream& artifact() { return file_ ? *file_ : *out_; }
    std::ostream& summary() {
        if (summary_file_) return *summary_file_;
        return file_ ? *out_ : *err_;
    }

private:
    std::ostream* out_;
    std::ostream* err_;
    std::unique_ptr<std::ofstream> file_;
    std::unique_ptr<std::ofstream> summary_file_;
};

inline std::vector<double> axis(const json& grid, const char* key, double lo, double hi, int n) {
    if (grid.contains(key)) {
        const auto v = get_reals<3>(grid, key);
        lo = v[0];
        hi = v[1];
        n = static_cast<int>(v[2]);
        if (n < 1) throw ConfigError(std::string("grid axis '") + key + "' needs >= 1 point");
    }
    std::vector<double> out;
    for (int i = 0; i < n; ++i) out.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1));
    return out;
}

inline FourVector current_at(const GaugeSolution& gs, const FourVector& x, Normalization n) {
    if (gs.scenario == Scenario::free) return current_free(gs.sol, x, n);
    return current_gauge(gs.sol, gs.potential, x, n);
}

inline int cmd_solve(const Options& o, const json& doc, Sinks& sinks) {
    const GaugeSolution gs = solution_from(doc);
    sinks.artifact() << to_json_value(gs).dump(2) << '\n';
    return exit_ok;
}

inline int cmd_current(const Options& o, const json& doc, Sinks& sinks) {
    const GaugeSolution gs = solution_from(doc);
    const Normalization n = o.unnormalized ? Normalization::unnormalized : Normalization::per_mass;
    if (n == Normalization::per_mass && gs.sol.mass == 0.0) throw ZeroMass();
    const json grid = doc.value("grid", json::object());
    const auto ts = axis(grid, "t", 0, 0, 1);
    const auto xs = axis(grid, "x", 0, 1, 11);
    const auto ys = axis(grid, "y", 0, 0, 1);
    const auto zs = axis(grid, "z", 0, 0, 1);
    auto& os = sinks.artifact();
    os << "t,x,y,z,J0,J1,J2,J3\n";
    for (double t : ts)
        for (double x : xs)
            for (double y : ys)
                for (double z : zs) {
                    const FourVector ev{t, x, y, z};
                    const FourVector J = current_at(gs, ev, n);
                    const double row[] = {t, x, y, z, J[0], J[1], J[2], J[3]};
                    write_csv_row(os, row);
                }
    return exit_ok;
}

inline int cmd_scatter(const Options& o, const json& doc, Sinks& sinks) {
    struct Case {
        double beta, phiT, delta;
    };
    std::vector<Case> cases;
    if (doc.contains("cases")) {
        for (const auto& c : doc["cases"]) {
            cases.push_back({get_number(c, "beta"), get_number_or(c, "phiT", 0.0), get_number_or(c, "delta", 0.0)});
        }
    }
    if (doc.contains("random")) {
        const json& r = doc["random"];
        const int count = static_cast<int>(get_number(r, "count"));
        const double lo = get_number_or(r, "beta_min", -0.99);
        const double hi = get_number_or(r, "beta_max", 5.0);
        if (count < 0 || !(hi > lo)) throw ConfigError("random sweep needs count >= 0 and beta_max > beta_min");
        Uniform u(o.seed);
        for (int i = 0; i < count; ++i) {
            const double beta = u(lo, hi);
            const double phiT = u(-std::numbers::pi, std::numbers::pi);
            const double delta = u(-std::numbers::pi, std::numbers::pi);
            cases.push_back({beta, phiT, delta});
        }
    }
    if (cases.empty()) throw ConfigError("scatter config needs 'cases' and/or 'random'");
    for (const auto& c : cases) {
        if (c.beta == -1.0) throw ConfigError("beta = -1 is a degenerate step");
    }
    auto& os = sinks.artifact();
    os << "beta,phiT,delta,Re_R,Im_R,Re_T,Im_T,refl,trans,sum\n";
    double worst = 0.0;
    for (const auto& c : cases) {
        const auto r = solve_matching(c.beta, c.phiT, c.delta);
        const double sum = r.refl_coeff + r.trans_coeff;
        worst = std::max(worst, std::abs(sum - 1.0));
        const double row[] = {c.beta, c.phiT, c.delta, r.R.real(), r.R.imag(), r.T.real(), r.T.imag(),
                              r.refl_coeff, r.trans_coeff, sum};
        write_csv_row(os, row);
    }
    const double tol = std::max(o.tol, 1e-12);
    const bool pass = worst <= tol;
    sinks.summary() << json{{"rows", cases.size()}, {"max_unitarity_residual", worst}, {"tol", tol}, {"pass", pass}}.dump()
                    << '\n';
    return pass ? exit_ok : exit_failed;
}

inline int cmd_verify(const Options& o, const json& doc, Sinks& sinks) {
    const GaugeSolution gs = solution_from(doc);
    if (!(o.h > 0)) throw ConfigError("--h must be > 0");
    std::vector<double> hs{2.0 * o.h, o.h, 0.5 * o.h};
    if (doc.contains("hs")) hs = doc["hs"].get<std::vector<double>>();
    if (hs.size() < 3) throw ConfigError("'hs' needs at least 3 spacings");
    const int points = static_cast<int>(get_number_or(doc, "points", 100));
    if (points < 1) throw ConfigError("'points' must be >= 1");

    Uniform u(o.seed);
    std::vector<FourVector> events;
    for (int i = 0; i < points; ++i) events.push_back({u(-1, 1), u(-1, 1), u(-1, 1), u(-1, 1)});

    const auto field = [&](const FourVector& x) { return evaluate(gs.sol, x); };
    std::vector<double> residuals;
    for (double h : hs) {
        std::vector<double> r;
        for (const auto& x : events) {
            r.push_back(gs.scenario == Scenario::free
                            ? fd::kg_residual(field, gs.sol.mass, x, {h})
                            : fd::gauge_kg_residual(field, gs.potential, gs.sol.mass, x, {h}));
        }
        residuals.push_back(fd::rms(r));
    }
    double analytic = 0.0;
    for (const auto& x : events) {
        const auto [r1, r2] = coupled_residuals(gs, x);
        analytic = std::max({analytic, r1, r2});
    }
    auto& os = sinks.artifact();
    os << "h,residual\n";
    for (std::size_t i = 0; i < hs.size(); ++i) {
        const double row[] = {hs[i], residuals[i]};
        write_csv_row(os, row);
    }
    fd::ConvergenceFit fit;
    bool fit_ok = true;
    try {
        fit = fd::convergence_order(hs, residuals);
    } catch (const DegenerateFit&) {
        fit_ok = false;
    }
    const bool pass = fit_ok && fit.passes() && analytic <= o.tol;
    json summary{{"order", fit.machine_precision || !fit_ok ? json(nullptr) : json(fit.order)},
                 {"machine_precision", fit.machine_precision},
                 {"analytic_residual", analytic},
                 {"pass", pass}};
    sinks.summary() << summary.dump() << '\n';
    return pass ? exit_ok : exit_failed;
}

inline int cmd_lightcone(const Options& o, const json& doc, Sinks& sinks) {
    const GaugeSolution gs = solution_from(doc);
    const auto r = is_light_cone(gs.sol, o.tol);
    json report{{"k0_null", r.k0_null},
                {"k1_null", r.k1_null},
                {"cross_null", r.cross_null},
                {"theta_sq_equals_m_sq", r.theta_sq_is_m_sq},
                {"massive_light_cone", gs.scenario == Scenario::oscillating ? gs.massive_light_cone : r.massive},
                {"k0_sq", r.k0_sq},
                {"k1_sq", r.k1_sq},
                {"k0_dot_k1", r.cross},
                {"theta_sq", r.theta_sq}};
    sinks.artifact() << report.dump(2) << '\n';
    return exit_ok;
}

/// Entry point shared by main() and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Quaternionic Klein-Gordon toolkit"};
    app.set_help_flag("--help", "Print this help message and exit");  // -h would clash with --h
    app.require_subcommand(1);
    Options o;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", o.config, "Scenario config or solution JSON")->required();
        sub->add_option("--out", o.out, "Output path for the primary artifact");
        sub->add_option("--summary", o.summary, "Output path for the JSON summary");
        sub->add_option("--h", o.h, "Base finite-difference spacing");
        sub->add_option("--seed", o.seed, "PRNG seed for sampled events and sweeps");
        sub->add_option("--tol", o.tol, "Tolerance override");
    };
    auto* solve = app.add_subcommand("solve", "Build and serialize a solution");
    auto* current = app.add_subcommand("current", "Grid CSV of the four-current");
    auto* scatter = app.add_subcommand("scatter", "Step scattering sweep CSV and unitarity report");
    auto* verify = app.add_subcommand("verify", "Finite-difference residual sweep and convergence order");
    auto* lightcone = app.add_subcommand("lightcone", "Light-cone condition report");
    for (auto* s : {solve, current, scatter, verify, lightcone}) add_common(s);
    current->add_flag("--unnormalized", o.unnormalized, "Drop the 1/m factor (required for m = 0)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_config;
    }

    try {
        const json doc = load_json(o.config);
        Sinks sinks(o, out, err);
        if (*solve) return cmd_solve(o, doc, sinks);
        if (*current) return cmd_current(o, doc, sinks);
        if (*scatter) return cmd_scatter(o, doc, sinks);
        if (*verify) return cmd_verify(o, doc, sinks);
        return cmd_lightcone(o, doc, sinks);
    } catch (const ConstraintIncompatible& e) {
        err << "error: " << e.what() << '\n';
        return exit_failed;
    } catch (const BranchViolation& e) {
        err << "error: " << e.what() << '\n';
        return exit_failed;
    } catch (const TrivialSolution& e) {
        err << "error: " << e.what() << '\n';
        return exit_failed;
    } catch (const ZeroMass& e) {
        err << "error: " << e.what() << " (pass --unnormalized)\n";
        return exit_config;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return exit_config;
    } catch (const json::exception& e) {
        err << "config error: " << e.what() << '\n';
        return exit_config;
    } catch (const std::invalid_argument& e) {
        err << "config error: " << e.what() << '\n';
        return exit_config;
    }
}

}  // namespace qkg::cli
