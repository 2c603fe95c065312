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

#include "fluxmacro/reproduce.hpp"

#include <cmath>
#include <functional>
#include <json.hpp>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "fluxmacro/constants.hpp"
#include "fluxmacro/format.hpp"
#include "fluxmacro/hybrid.hpp"
#include "fluxmacro/registry.hpp"

namespace fluxmacro::reproduce {

namespace {

struct ClaimDef {
    const char* claim;
    double published;
    double lo;
    double hi;
    bool flagged;
    const char* note;
};

ClaimDef relative(const char* claim, double published, double tol, const char* note = "") {
    return {claim, published, published * (1.0 - tol), published * (1.0 + tol), false, note};
}

ClaimDef informational(const char* claim, double published, const char* note) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    return {claim, published, -inf, inf, true, note};
}

ClaimRow evaluate(const ClaimDef& s, const std::function<double()>& compute) {
    double value = 0.0;
    try {
        value = compute();
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string(s.claim) + ": " + e.what());
    }
    ClaimRow row;
    row.claim = s.claim;
    row.published_value = s.published;
    row.computed_value = value;
    row.rel_deviation = (value - s.published) / std::abs(s.published);
    row.accept_lo = s.lo;
    row.accept_hi = s.hi;
    row.pass = value >= s.lo && value <= s.hi;
    row.flagged = s.flagged;
    row.note = s.note;
    return row;
}

} // namespace

bool Report::gated_pass() const {
    for (const auto& r : rows) {
        if (!r.flagged && !r.pass) {
            return false;
        }
    }
    return true;
}

Report run(double rel_tol) {
    const auto al = registry::aluminium();
    const auto lukens = registry::lukens();
    const auto base = registry::baseline_geometry();
    const auto extreme = registry::extreme_geometry();
    const auto m_of = [rel_tol](instanton::SfqParams p, double kappa) {
        p.kappa_energy = kappa;
        return instanton::instanton_action(p, instanton::Convention::Literal, rel_tol).M;
    };
    const double doubled = kelvin_to_joule(645.0);

    Report rep;
    auto add = [&rep](const ClaimDef& s, const std::function<double()>& f) {
        rep.rows.push_back(evaluate(s, f));
    };
    add(relative("C2_scale", 1.57e-31, 0.01, "pi hbar C2 / 2^5 in J from the coupling formula"),
        [&] { return hybrid::coupling_c2(al, registry::kAluminiumGFactor).scale; });
    add(relative("M_lukens", 481.0, 0.02), [&] { return m_of(lukens, 0.0); });
    add(relative("M_wilhelm", 227.0, 0.03), [&] { return m_of(registry::wilhelm(), 0.0); });
    add(relative("M_hybrid", 677.0, 0.02, "E_L + Phi0^2 K = 2 x 645 K"),
        [&] { return m_of(lukens, doubled); });
    add(relative("amplification", 1.41, 0.05, "M_hybrid / M_lukens"),
        [&] { return m_of(lukens, doubled) / m_of(lukens, 0.0); });
    add({"EL_renorm_K", 645.0, 500.0, 700.0, false,
         "Phi0^2 K / k_B for the baseline geometry, formula coupling scale"},
        [&] {
            return joule_to_kelvin(hybrid::inductance_renormalization(al, base).kappa_energy);
        });
    add(informational("EL_renorm_K_quoted_scale", 645.0,
                      "same geometry with the quoted 1.57e-31 J scale"),
        [&] {
            return joule_to_kelvin(
                hybrid::inductance_from_scale(registry::kQuotedCouplingScale, base)
                    .kappa_energy);
        });
    add(informational("M_extreme", 3114.0, "R_S = D, N_B = 5e6, formula coupling scale"),
        [&] {
            return m_of(lukens, hybrid::inductance_renormalization(al, extreme).kappa_energy);
        });
    add(informational("M_extreme_quoted_scale", 3114.0,
                      "R_S = D, N_B = 5e6, quoted 1.57e-31 J scale"),
        [&] {
            return m_of(lukens,
                        hybrid::inductance_from_scale(registry::kQuotedCouplingScale, extreme)
                            .kappa_energy);
        });
    add(informational("crb_ratio_extreme", 0.5, "sqrt(677 / 3114) from the published M values"),
        [] { return std::sqrt(677.0 / 3114.0); });
    return rep;
}

std::string to_json(const Report& report) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : report.rows) {
        nlohmann::ordered_json j;
        j["claim"] = r.claim;
        j["published_value"] = r.published_value;
        j["computed_value"] = r.computed_value;
        j["rel_deviation"] = r.rel_deviation;
        j["accept_lo"] = std::isfinite(r.accept_lo) ? nlohmann::ordered_json(r.accept_lo)
                                                    : nlohmann::ordered_json(nullptr);
        j["accept_hi"] = std::isfinite(r.accept_hi) ? nlohmann::ordered_json(r.accept_hi)
                                                    : nlohmann::ordered_json(nullptr);
        j["pass"] = r.pass;
        j["flagged"] = r.flagged;
        j["note"] = r.note;
        rows.push_back(std::move(j));
    }
    nlohmann::ordered_json doc;
    doc["rows"] = std::move(rows);
    doc["gated_pass"] = report.gated_pass();
    return doc.dump(2) + "\n";
}

std::string to_csv(const Report& report) {
    std::ostringstream os;
    os << "claim,published_value,computed_value,rel_deviation,accept_lo,accept_hi,pass,flagged,note\n";
    for (const auto& r : report.rows) {
        os << r.claim << ',' << fmt::shortest(r.published_value) << ','
           << fmt::shortest(r.computed_value) << ',' << fmt::shortest(r.rel_deviation) << ','
           << (std::isfinite(r.accept_lo) ? fmt::shortest(r.accept_lo) : "") << ','
           << (std::isfinite(r.accept_hi) ? fmt::shortest(r.accept_hi) : "") << ','
           << (r.pass ? 1 : 0) << ',' << (r.flagged ? 1 : 0) << ",\"" << r.note << "\"\n";
    }
    return os.str();
}

} // namespace fluxmacro::reproduce
