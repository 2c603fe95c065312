// Copyright 2026 The fluxmacro Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fluxmacro/cli.hpp"

#include <CLI11.hpp>
#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <unistd.h>

#include "fluxmacro/bcs.hpp"
#include "fluxmacro/config.hpp"
#include "fluxmacro/constants.hpp"
#include "fluxmacro/errors.hpp"
#include "fluxmacro/format.hpp"
#include "fluxmacro/hybrid.hpp"
#include "fluxmacro/instanton.hpp"
#include "fluxmacro/kernels.hpp"
#include "fluxmacro/macro.hpp"
#include "fluxmacro/metrology.hpp"
#include "fluxmacro/registry.hpp"
#include "fluxmacro/reproduce.hpp"

namespace fluxmacro::cli {

namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

struct Options {
    std::string config_path;
    std::string out_path;
    std::string format;
    double rel_tol = instanton::kDefaultRelTol;
    std::uint64_t seed = 0;

    // crb
    std::optional<double> M;
    std::optional<std::uint64_t> modes;
    // macro
    std::vector<double> z;
    bool oracle = false;
    // instanton
    std::string preset;
    std::optional<double> EJ_K, EL_K, EC_K, kappa_K;
    std::string convention;
    // hybrid-scan
    std::optional<double> NB, Rs, D;
    std::string coupling_scale;
};

void write_atomic(const fs::path& path, const std::string& text) {
    fs::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) {
            throw ConfigError("cannot open output file '" + tmp.string() + "'");
        }
        f << text;
        f.flush();
        if (!f) {
            throw ConfigError("failed writing '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp);
        throw ConfigError("cannot move output into '" + path.string() + "': " + ec.message());
    }
}

config::Json load_config(const Options& o) {
    return o.config_path.empty() ? config::Json::object() : config::load_file(o.config_path);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

bool want_csv(const Options& o, bool csv_default) {
    if (o.format.empty()) {
        return csv_default;
    }
    return o.format == "csv";
}

// 53-bit uniform in [0, 1), independent of the standard library's distributions.
double uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// ---------------------------------------------------------------- commands

int cmd_reproduce(const Options& o, std::string& text) {
    const auto rep = reproduce::run(o.rel_tol);
    text = want_csv(o, false) ? reproduce::to_csv(rep) : reproduce::to_json(rep);
    return rep.gated_pass() ? kExitOk : kExitDomain;
}

int cmd_macro(const Options& o, std::string& text) {
    macro::SuperpositionSpec sup;
    if (!o.z.empty()) {
        for (const double z : o.z) {
            sup.overlaps.emplace_back(z, 0.0);
        }
    } else {
        if (o.config_path.empty()) {
            throw ConfigError("macro needs --config with \"overlaps\" or --z");
        }
        sup = config::superposition_from(load_config(o));
    }
    const auto rep = macro::macroscopicity_closed_form(sup);
    std::optional<double> oracle;
    if (o.oracle) {
        oracle = macro::brute_force_max_variance(sup, {.starts = 16, .tol = 1e-10, .seed = o.seed})
                     .max_variance;
    }
    if (want_csv(o, false)) {
        std::ostringstream os;
        os << "M,lambda,upper_bound,normalization,mode_count" << (oracle ? ",oracle_max_variance" : "")
           << '\n'
           << fmt::shortest(rep.M) << ',' << fmt::shortest(rep.lambda) << ','
           << fmt::shortest(rep.upper_bound) << ',' << fmt::shortest(rep.normalization) << ','
           << sup.mode_count();
        if (oracle) {
            os << ',' << fmt::shortest(*oracle);
        }
        os << '\n';
        text = os.str();
    } else {
        Json j;
        j["M"] = rep.M;
        j["lambda"] = rep.lambda;
        j["upper_bound"] = rep.upper_bound;
        j["normalization"] = rep.normalization;
        j["mode_count"] = sup.mode_count();
        if (oracle) {
            j["oracle_max_variance"] = *oracle;
            j["oracle_seed"] = o.seed;
        }
        text = dump(j);
    }
    return kExitOk;
}

int cmd_instanton(const Options& o, std::string& text) {
    config::Json doc = load_config(o);
    if (!o.preset.empty()) doc["preset"] = o.preset;
    if (o.EJ_K) doc["E_J_K"] = *o.EJ_K;
    if (o.EL_K) doc["E_L_K"] = *o.EL_K;
    if (o.EC_K) doc["E_C_K"] = *o.EC_K;
    if (o.kappa_K) doc["kappa_K"] = *o.kappa_K;
    if (!o.convention.empty()) doc["convention"] = o.convention;
    if (!doc.contains("preset") && !doc.contains("E_J_K")) {
        doc["preset"] = "lukens";
    }
    const auto cfg = config::instanton_from(doc);
    const double tol = cfg.rel_tol.value_or(o.rel_tol);
    const auto r = instanton::instanton_action(cfg.params, cfg.convention, tol);
    if (want_csv(o, false)) {
        std::ostringstream os;
        os << "convention,S_over_hbar,lambda,M,well_position,barrier_height_K\n"
           << instanton::to_string(r.convention) << ',' << fmt::shortest(r.S_over_hbar) << ','
           << fmt::shortest(r.lambda) << ',' << fmt::shortest(r.M) << ','
           << (r.well_position ? fmt::shortest(*r.well_position) : "") << ','
           << (r.barrier_height ? fmt::shortest(joule_to_kelvin(*r.barrier_height)) : "")
           << '\n';
        text = os.str();
    } else {
        Json j;
        j["convention"] = std::string(instanton::to_string(r.convention));
        j["S_over_hbar"] = r.S_over_hbar;
        j["lambda"] = r.lambda;
        j["M"] = r.M;
        j["well_position"] = r.well_position ? Json(*r.well_position) : Json(nullptr);
        j["barrier_height_K"] =
            r.barrier_height ? Json(joule_to_kelvin(*r.barrier_height)) : Json(nullptr);
        j["rel_tol"] = tol;
        text = dump(j);
    }
    return kExitOk;
}

std::vector<hybrid::HybridGeometry> default_scan_grid() {
    const double d = registry::baseline_geometry().D;
    std::vector<hybrid::HybridGeometry> grid;
    for (const double nb : {0.5e6, 1e6, 2e6, 5e6}) {
        for (const double ratio : {1.0 / 3.0, 0.5, 1.0}) {
            grid.push_back({nb, ratio * d, d, registry::kAluminiumGFactor});
        }
    }
    return grid;
}

int cmd_hybrid_scan(const Options& o, std::string& text) {
    const config::Json doc = load_config(o);
    config::ScanConfig cfg{};
    if (o.config_path.empty()) {
        cfg.bare = registry::lukens();
        cfg.material = registry::aluminium();
        cfg.grid = default_scan_grid();
    } else {
        cfg = config::scan_from(doc);
    }
    if (o.NB || o.Rs || o.D) {
        const auto base = registry::baseline_geometry();
        cfg.grid = {{o.NB.value_or(base.N_B), o.Rs.value_or(base.R_S), o.D.value_or(base.D),
                     registry::kAluminiumGFactor}};
    }
    if (!o.coupling_scale.empty()) {
        if (o.coupling_scale == "quoted") {
            cfg.coupling_scale = registry::kQuotedCouplingScale;
        } else if (o.coupling_scale == "formula") {
            cfg.coupling_scale.reset();
        } else {
            try {
                std::size_t used = 0;
                cfg.coupling_scale = std::stod(o.coupling_scale, &used);
                if (used != o.coupling_scale.size()) {
                    throw std::invalid_argument("trailing characters");
                }
            } catch (const std::exception&) {
                throw ConfigError("--coupling-scale: expected 'formula', 'quoted' or a number in J");
            }
        }
    }
    const auto rows = cfg.coupling_scale
                          ? hybrid::hybrid_scan_with_scale(cfg.bare, *cfg.coupling_scale, cfg.grid,
                                                           o.rel_tol)
                          : hybrid::hybrid_scan(cfg.bare, cfg.material, cfg.grid, o.rel_tol);
    if (want_csv(o, true)) {
        text = hybrid::scan_csv(rows);
    } else {
        Json arr = Json::array();
        for (const auto& r : rows) {
            Json j;
            j["N_B"] = r.N_B;
            j["Rs_over_D"] = r.Rs_over_D;
            j["kappa_energy_K"] = joule_to_kelvin(r.kappa_energy);
            j["lambda"] = r.lambda;
            j["M"] = r.M;
            j["amplification"] = r.amplification;
            arr.push_back(std::move(j));
        }
        Json j;
        j["coupling_scale"] = cfg.coupling_scale ? Json(*cfg.coupling_scale) : Json("formula");
        j["rows"] = std::move(arr);
        text = dump(j);
    }
    return kExitOk;
}

int cmd_bcs_grid(const Options& o, std::string& text) {
    const auto cfg = config::grid_from(load_config(o));
    cfg.material.validate();
    const double gap = cfg.material.gap_Delta;
    auto eps = cfg.eps_over_Delta.values();
    auto qe = cfg.qe_over_Delta.values();
    for (auto& e : eps) e *= gap;
    for (auto& q : qe) q *= gap;
    const auto cells = bcs::fig2_surface(eps, qe, cfg.material);
    if (want_csv(o, true)) {
        text = bcs::surface_csv(cells);
    } else {
        Json arr = Json::array();
        for (const auto& c : cells) {
            Json j;
            j["eps_over_Delta"] = c.eps_over_Delta;
            j["qe_over_Delta"] = c.qe_over_Delta;
            j["c_z"] = c.coefficients ? Json(c.coefficients->c_z) : Json(nullptr);
            j["c_x"] = c.coefficients ? Json(c.coefficients->c_x) : Json(nullptr);
            j["degenerate"] = !c.coefficients.has_value();
            arr.push_back(std::move(j));
        }
        text = dump(arr);
    }
    return kExitOk;
}

int cmd_kernels_check(const Options& o, std::string& text) {
    using namespace kernels;
    const auto mat = config::material_from(load_config(o));
    mat.validate();
    const double gap = mat.gap_Delta;
    const double hbar = kSI.hbar;
    Json checks = Json::array();
    bool all = true;
    const auto record = [&](const char* name, bool pass, Json detail) {
        Json j;
        j["check"] = name;
        j["pass"] = pass;
        for (auto& [k, v] : detail.items()) {
            j[k] = v;
        }
        checks.push_back(std::move(j));
        all = all && pass;
    };

    {
        const double beta_hbar = 200.0 * hbar / gap;
        const std::size_t trunc = 100000;
        double worst = 0.0;
        for (const double e : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
            for (const double t : {-2.0, -0.5, 1.0, 3.0}) {
                const double eps = e * gap;
                const double tau = t * hbar / gap;
                const double cf = matsubara_double_sum(tau, eps, mat, Method::ClosedForm).value;
                const double ds =
                    matsubara_double_sum(tau, eps, mat, Method::DirectSum, trunc, beta_hbar).value;
                worst = std::max(worst, std::abs(ds - cf) / std::abs(cf));
            }
        }
        record("matsubara_direct_vs_closed", worst <= 1e-3,
               Json{{"points", 20}, {"beta_Delta_over_hbar", 200}, {"truncation", trunc},
                    {"max_rel_diff", worst}, {"tolerance", 1e-3}});
    }
    {
        std::mt19937_64 rng(o.seed);
        int ok = 0;
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            bcs::MaterialParams m = mat;
            m.gap_Delta = std::pow(10.0, -24.0 + 3.0 * uniform(rng));
            m.debye_energy = m.gap_Delta * std::pow(10.0, 4.0 * uniform(rng));
            if (!(m.debye_energy > m.gap_Delta)) {
                m.debye_energy = std::nextafter(m.gap_Delta, INFINITY);
            }
            const auto id = eps_integral_identities(m);
            worst = std::max(worst, std::abs(id.quadrature_value - id.closed_form) /
                                        std::abs(id.closed_form));
            ok += (id.agrees && id.positive) ? 1 : 0;
        }
        record("arctan_identity", ok == 100,
               Json{{"cases", 100}, {"agreeing", ok}, {"max_rel_diff", worst}, {"seed", o.seed}});
    }
    {
        const double ki0 = bickley_ki1(0.0);
        const double err0 = std::abs(ki0 - std::numbers::pi / 2.0);
        record("ki1_at_zero", err0 <= 1e-8, Json{{"value", ki0}, {"abs_error", err0}});
        double worst = 0.0;
        const double h = 1e-4;
        for (int i = 0; i <= 49; ++i) {
            const double x = 0.1 + 0.1 * i;
            const double d = (bickley_ki1(x + h) - bickley_ki1(x - h)) / (2.0 * h);
            worst = std::max(worst, std::abs(d + bessel_k0(x)));
        }
        record("ki1_derivative", worst <= 1e-6,
               Json{{"x_range", Json::array({0.1, 5.0})}, {"h", h}, {"max_abs_error", worst}});
        const double q = bickley_ki1(1.0);
        const double s = bickley_ki1_series(1.0);
        const double rel = std::abs(q - s) / s;
        record("ki1_dual_method", rel <= 1e-10,
               Json{{"quadrature", q}, {"series", s}, {"rel_diff", rel}});
    }
    {
        const auto lin = first_order_vanishing(gap / hbar, mat, 64, EnergyNumerator::Linear);
        record("first_order_vanishing", lin.vanishes,
               Json{{"residual", lin.residual}, {"control", lin.control}});
        const auto cub = first_order_vanishing(gap / hbar, mat, 64, EnergyNumerator::Cubic);
        record("first_order_cubic", cub.vanishes,
               Json{{"residual", cub.residual}, {"control", cub.control}});
        const auto par = parity_vanishing_check(mat, 64);
        record("parity_vanishing", par.vanishes,
               Json{{"residual", par.residual}, {"control", par.control}});
    }
    {
        double worst = 0.0;
        for (int i = 1; i <= 100; ++i) {
            const double x = 0.1 * i;
            worst = std::max(worst, std::abs(gap_equation_coupling(gap_equation_ratio(x)) - x) / x);
        }
        record("gap_equation_round_trip", worst <= 1e-12, Json{{"max_rel_error", worst}});
    }
    Json j;
    j["checks"] = std::move(checks);
    j["all_pass"] = all;
    text = dump(j);
    return all ? kExitOk : kExitDomain;
}

int cmd_crb(const Options& o, std::string& text) {
    std::optional<double> M = o.M;
    std::optional<std::uint64_t> modes = o.modes;
    if (!o.config_path.empty()) {
        const auto doc = load_config(o);
        if (!M && doc.contains("M")) {
            if (!doc["M"].is_number()) throw ConfigError("field 'M': expected a number");
            M = doc["M"].get<double>();
        }
        if (!modes && doc.contains("modes")) {
            if (!doc["modes"].is_number_integer() || doc["modes"].get<std::int64_t>() < 1) {
                throw ConfigError("field 'modes': expected a positive integer");
            }
            modes = doc["modes"].get<std::uint64_t>();
        }
    }
    if (!M || !modes) {
        throw ConfigError("crb needs --M and --modes");
    }
    const auto r = metrology::phase_crb(*M, *modes);
    const double flux = metrology::flux_crb(*M, *modes);
    if (want_csv(o, false)) {
        text = "bound_theta,bound_flux_over_Phi0,regime\n" + fmt::shortest(r.bound_theta) + ',' +
               fmt::shortest(flux) + ',' + std::string(metrology::to_string(r.regime)) + '\n';
    } else {
        Json j;
        j["M"] = *M;
        j["modes"] = *modes;
        j["bound_theta"] = r.bound_theta;
        j["bound_flux_over_Phi0"] = flux;
        j["regime"] = std::string(metrology::to_string(r.regime));
        text = dump(j);
    }
    return kExitOk;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Macroscopicity, instanton and kernel calculations for flux-qubit superpositions",
                 "fluxmacro"};
    app.require_subcommand(1, 1);
    app.option_defaults()->always_capture_default();
    app.add_option("--config", o.config_path, "JSON or TOML input file");
    app.add_option("--out", o.out_path, "Output file (written atomically); default stdout");
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--rel-tol", o.rel_tol, "Quadrature relative tolerance")
        ->check(CLI::Range(std::numeric_limits<double>::min(), 1e-2));
    app.add_option("--seed", o.seed, "Seed for randomized checks and the variance oracle");
    app.fallthrough();

    auto* reproduce = app.add_subcommand("reproduce", "Recompute the published numbers");
    auto* macro = app.add_subcommand("macro", "Macroscopicity of a two-branch superposition");
    macro->add_option("--z", o.z, "Real overlaps z_j (instead of --config)")->delimiter(',');
    macro->add_flag("--oracle", o.oracle, "Also run the brute-force variance maximizer");
    auto* inst = app.add_subcommand("instanton", "Instanton action and M for a flux qubit");
    inst->add_option("--preset", o.preset, "Built-in parameter set (lukens, wilhelm)");
    inst->add_option("--EJ", o.EJ_K, "E_J / k_B in K");
    inst->add_option("--EL", o.EL_K, "E_L / k_B in K");
    inst->add_option("--EC", o.EC_K, "E_C / k_B in K");
    inst->add_option("--kappa", o.kappa_K, "Phi0^2 K / k_B in K");
    inst->add_option("--convention", o.convention, "literal or shifted_wells");
    auto* scan = app.add_subcommand("hybrid-scan", "Renormalized M over condensate geometries");
    scan->add_option("--NB", o.NB, "Condensed atom number");
    scan->add_option("--Rs", o.Rs, "Wire radius in m");
    scan->add_option("--D", o.D, "Standoff in m");
    scan->add_option("--coupling-scale", o.coupling_scale,
                     "formula (default), quoted, or pi hbar C2 / 2^5 in J");
    auto* grid = app.add_subcommand("bcs-grid", "Maximal-variance coefficient surface");
    auto* kern = app.add_subcommand("kernels-check", "Kernel identity conformance report");
    auto* crb = app.add_subcommand("crb", "Cramer-Rao bounds for given M and mode count");
    crb->add_option("--M", o.M, "Macroscopicity");
    crb->add_option("--modes", o.modes, "|J|, also used as the mode count inside the cutoff");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitConfig;
    }

    std::string text;
    int code = kExitOk;
    try {
        if (reproduce->parsed()) code = cmd_reproduce(o, text);
        else if (macro->parsed()) code = cmd_macro(o, text);
        else if (inst->parsed()) code = cmd_instanton(o, text);
        else if (scan->parsed()) code = cmd_hybrid_scan(o, text);
        else if (grid->parsed()) code = cmd_bcs_grid(o, text);
        else if (kern->parsed()) code = cmd_kernels_check(o, text);
        else if (crb->parsed()) code = cmd_crb(o, text);
        if (o.out_path.empty()) {
            out << text;
        } else {
            write_atomic(o.out_path, text);
        }
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::domain_error& e) {
        err << "domain error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    return code;
}

} // namespace fluxmacro::cli
