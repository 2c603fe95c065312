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

#include "fluxmacro/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <toml.hpp>

#include "fluxmacro/constants.hpp"
#include "fluxmacro/errors.hpp"
#include "fluxmacro/registry.hpp"

namespace fluxmacro::config {

namespace {

[[noreturn]] void fail_field(std::string_view field, std::string_view what) {
    throw ConfigError("field '" + std::string(field) + "': " + std::string(what));
}

std::string join(std::string_view ctx, std::string_view key) {
    return ctx.empty() ? std::string(key) : std::string(ctx) + "." + std::string(key);
}

const Json* find(const Json& obj, std::string_view key) {
    if (!obj.is_object()) {
        return nullptr;
    }
    const auto it = obj.find(std::string(key));
    return it == obj.end() ? nullptr : &*it;
}

double as_number(const Json& v, std::string_view field) {
    if (!v.is_number()) {
        fail_field(field, "expected a number, got " + std::string(v.type_name()));
    }
    const double x = v.get<double>();
    if (!std::isfinite(x)) {
        fail_field(field, "must be finite");
    }
    return x;
}

std::optional<double> opt_number(const Json& obj, std::string_view key,
                                 std::string_view ctx = "") {
    const Json* v = find(obj, key);
    if (v == nullptr) {
        return std::nullopt;
    }
    return as_number(*v, join(ctx, key));
}

double req_number(const Json& obj, std::string_view key, std::string_view ctx = "") {
    const auto v = opt_number(obj, key, ctx);
    if (!v) {
        fail_field(join(ctx, key), "missing");
    }
    return *v;
}

std::vector<double> number_list(const Json& obj, std::string_view key) {
    const Json* v = find(obj, key);
    if (v == nullptr) {
        fail_field(key, "missing");
    }
    if (!v->is_array() || v->empty()) {
        fail_field(key, "expected a non-empty array of numbers");
    }
    std::vector<double> out;
    for (std::size_t i = 0; i < v->size(); ++i) {
        out.push_back(as_number((*v)[i], std::string(key) + "[" + std::to_string(i) + "]"));
    }
    return out;
}

macro::ModeCount mode_count_from(const Json& obj) {
    const Json* v = find(obj, "mode_count");
    if (v == nullptr || (v->is_string() && v->get<std::string>() == "unbounded")) {
        return macro::kUnboundedModes;
    }
    if (!v->is_number_integer() || v->get<std::int64_t>() < 1) {
        fail_field("mode_count", "expected a positive integer or \"unbounded\"");
    }
    return static_cast<std::uint64_t>(v->get<std::int64_t>());
}

// Line and column of a byte offset, 1-based.
std::pair<std::size_t, std::size_t> position(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

Json from_toml(const toml::node& node) {
    if (const auto* t = node.as_table()) {
        Json j = Json::object();
        for (const auto& [k, v] : *t) {
            j[std::string(k.str())] = from_toml(v);
        }
        return j;
    }
    if (const auto* a = node.as_array()) {
        Json j = Json::array();
        for (const auto& v : *a) {
            j.push_back(from_toml(v));
        }
        return j;
    }
    if (const auto* v = node.as_integer()) {
        return v->get();
    }
    if (const auto* v = node.as_floating_point()) {
        return v->get();
    }
    if (const auto* v = node.as_boolean()) {
        return v->get();
    }
    if (const auto* v = node.as_string()) {
        return v->get();
    }
    // Dates and times have no numeric use here; keep their TOML spelling.
    std::ostringstream os;
    node.visit([&os](const auto& n) { os << n; });
    return os.str();
}

} // namespace

Json parse_json(std::string_view text, std::string_view origin) {
    try {
        return Json::parse(text.begin(), text.end(), nullptr, true, true);
    } catch (const Json::parse_error& e) {
        const auto [line, col] = position(text, e.byte == 0 ? 0 : e.byte - 1);
        std::ostringstream os;
        os << origin << ':' << line << ':' << col << ": invalid JSON";
        throw ConfigError(os.str());
    }
}

Json parse_toml(std::string_view text, std::string_view origin) {
    try {
        const toml::table table = toml::parse(text, origin);
        return from_toml(table);
    } catch (const toml::parse_error& e) {
        std::ostringstream os;
        os << origin << ':' << e.source().begin.line << ':' << e.source().begin.column << ": "
           << e.description();
        throw ConfigError(os.str());
    }
}

Json load_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot open config file '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const std::string ext = path.extension().string();
    if (ext == ".json") {
        return parse_json(text, path.string());
    }
    if (ext == ".toml") {
        return parse_toml(text, path.string());
    }
    throw ConfigError("config file '" + path.string() +
                      "' must end in .json or .toml");
}

macro::SuperpositionSpec superposition_from(const Json& doc) {
    const Json* list = find(doc, "overlaps");
    if (list == nullptr) {
        fail_field("overlaps", "missing");
    }
    if (!list->is_array() || list->empty()) {
        fail_field("overlaps", "expected a non-empty array");
    }
    macro::SuperpositionSpec sup;
    for (std::size_t i = 0; i < list->size(); ++i) {
        const Json& z = (*list)[i];
        const std::string field = "overlaps[" + std::to_string(i) + "]";
        if (z.is_array()) {
            if (z.size() != 2) {
                fail_field(field, "expected [re, im]");
            }
            sup.overlaps.emplace_back(as_number(z[0], field + "[0]"),
                                       as_number(z[1], field + "[1]"));
        } else {
            sup.overlaps.emplace_back(as_number(z, field), 0.0);
        }
    }
    return sup;
}

InstantonConfig instanton_from(const Json& doc) {
    InstantonConfig cfg{};
    const Json* preset = find(doc, "preset");
    const bool have_preset = preset != nullptr;
    if (have_preset) {
        if (!preset->is_string()) {
            fail_field("preset", "expected a string");
        }
        cfg.params = registry::sfq_by_name(preset->get<std::string>());
    }
    const auto energy = [&](std::string_view key, double& slot) {
        const auto v = opt_number(doc, key);
        if (v) {
            slot = kelvin_to_joule(*v);
        } else if (!have_preset) {
            fail_field(key, "missing (no preset given)");
        }
    };
    energy("E_J_K", cfg.params.E_J);
    energy("E_L_K", cfg.params.E_L);
    energy("E_C_K", cfg.params.E_C);
    if (const auto k = opt_number(doc, "kappa_K")) {
        cfg.params.kappa_energy = kelvin_to_joule(*k);
    }
    if (find(doc, "mode_count") != nullptr) {
        cfg.params.mode_count = mode_count_from(doc);
    }
    if (const Json* c = find(doc, "convention")) {
        if (!c->is_string()) {
            fail_field("convention", "expected a string");
        }
        cfg.convention = instanton::parse_convention(c->get<std::string>());
    }
    cfg.rel_tol = opt_number(doc, "rel_tol");
    return cfg;
}

bcs::MaterialParams material_from(const Json& doc) {
    auto mat = registry::aluminium();
    const Json* m = find(doc, "material");
    if (m == nullptr) {
        return mat;
    }
    if (!m->is_object()) {
        fail_field("material", "expected a table");
    }
    if (auto v = opt_number(*m, "gap_J", "material")) mat.gap_Delta = *v;
    if (auto v = opt_number(*m, "fermi_energy_J", "material")) mat.fermi_energy = *v;
    if (auto v = opt_number(*m, "dos_at_fermi", "material")) mat.dos_at_fermi = *v;
    if (auto v = opt_number(*m, "debye_energy_J", "material")) mat.debye_energy = *v;
    return mat;
}

ScanConfig scan_from(const Json& doc) {
    ScanConfig cfg{};
    cfg.bare = registry::lukens();
    if (find(doc, "preset") != nullptr || find(doc, "E_J_K") != nullptr) {
        cfg.bare = instanton_from(doc).params;
    }
    cfg.material = material_from(doc);
    cfg.coupling_scale = opt_number(doc, "coupling_scale_J");
    const double g_f = opt_number(doc, "g_f").value_or(registry::kAluminiumGFactor);
    if (const Json* list = find(doc, "geometries")) {
        if (!list->is_array() || list->empty()) {
            fail_field("geometries", "expected a non-empty array of tables");
        }
        for (std::size_t i = 0; i < list->size(); ++i) {
            const std::string ctx = "geometries[" + std::to_string(i) + "]";
            const Json& g = (*list)[i];
            cfg.grid.push_back({req_number(g, "N_B", ctx), req_number(g, "R_S", ctx),
                                req_number(g, "D", ctx),
                                opt_number(g, "g_f", ctx).value_or(g_f)});
        }
    } else {
        const double d = opt_number(doc, "D").value_or(registry::baseline_geometry().D);
        for (const double nb : number_list(doc, "N_B")) {
            for (const double ratio : number_list(doc, "Rs_over_D")) {
                cfg.grid.push_back({nb, ratio * d, d, g_f});
            }
        }
    }
    return cfg;
}

std::vector<double> Axis::values() const {
    if (!(step > 0.0) || !(hi >= lo)) {
        throw ConfigError("grid axis needs step > 0 and max >= min");
    }
    const auto n = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = lo + step * static_cast<double>(i);
    }
    return out;
}

GridConfig grid_from(const Json& doc) {
    GridConfig cfg{};
    cfg.material = material_from(doc);
    const auto axis = [&](std::string_view key, Axis& a) {
        const Json* t = find(doc, key);
        if (t == nullptr) {
            return;
        }
        const std::string ctx(key);
        a = {req_number(*t, "min", ctx), req_number(*t, "max", ctx), req_number(*t, "step", ctx)};
    };
    axis("eps_over_Delta", cfg.eps_over_Delta);
    axis("qe_over_Delta", cfg.qe_over_Delta);
    return cfg;
}

} // namespace fluxmacro::config
