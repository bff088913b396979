#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "riskfuzz/error.hpp"
#include "riskfuzz/fuzzy/engine.hpp"

namespace riskfuzz::fuzzy {

namespace detail {

inline void reject_unknown_keys(const nlohmann::json& j,
                                const std::vector<std::string>& allowed,
                                const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const auto& k : allowed)
            if (it.key() == k) { ok = true; break; }
        if (!ok) throw validation_error(where + ": unknown key '" + it.key() + "'");
    }
}

inline const nlohmann::json& require(const nlohmann::json& j, const std::string& key,
                                     const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) throw validation_error(where + ": missing key '" + key + "'");
    return *it;
}

inline LinguisticVariable variable_from_json(const nlohmann::json& j, const std::string& name) {
    if (!j.is_object()) throw validation_error("config." + name + ": expected an object");
    reject_unknown_keys(j, {"terms"}, "config." + name);
    const auto& jt = require(j, "terms", "config." + name);
    if (!jt.is_array()) throw validation_error("config." + name + ".terms: expected an array");
    LinguisticVariable var;
    var.name = name;
    for (const auto& t : jt) {
        const std::string where = "config." + name + ".terms";
        if (!t.is_object()) throw validation_error(where + ": expected objects");
        reject_unknown_keys(t, {"label", "trapezoid"}, where);
        const auto& jl = require(t, "label", where);
        const auto& jz = require(t, "trapezoid", where);
        if (!jl.is_string()) throw validation_error(where + ".label: expected a string");
        if (!jz.is_array() || jz.size() != 4)
            throw validation_error(where + ".trapezoid: expected 4 numbers");
        for (const auto& v : jz)
            if (!v.is_number()) throw validation_error(where + ".trapezoid: expected 4 numbers");
        var.terms.push_back({jl.get<std::string>(),
                             TrapezoidalSet(jz[0].get<double>(), jz[1].get<double>(),
                                            jz[2].get<double>(), jz[3].get<double>())});
    }
    return var;
}

inline nlohmann::json variable_to_json(const LinguisticVariable& var) {
    nlohmann::json jt = nlohmann::json::array();
    for (const auto& t : var.terms)
        jt.push_back({{"label", t.label},
                      {"trapezoid", {t.set.a1, t.set.a2, t.set.a3, t.set.a4}}});
    return nlohmann::json{{"terms", jt}};
}

} // namespace detail

inline FisConfig config_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw validation_error("config: expected a JSON object");
    detail::reject_unknown_keys(j, {"likelihood", "impact", "risk", "rules", "defuzz_resolution"},
                                "config");
    FisConfig cfg;
    cfg.likelihood = detail::variable_from_json(detail::require(j, "likelihood", "config"), "likelihood");
    cfg.impact = detail::variable_from_json(detail::require(j, "impact", "config"), "impact");
    cfg.risk = detail::variable_from_json(detail::require(j, "risk", "config"), "risk");
    const auto& jr = detail::require(j, "rules", "config");
    if (!jr.is_array()) throw validation_error("config.rules: expected an array");
    for (const auto& r : jr) {
        if (!r.is_object()) throw validation_error("config.rules: expected objects");
        detail::reject_unknown_keys(r, {"if_likelihood", "if_impact", "then_risk"}, "config.rules");
        const auto& jl = detail::require(r, "if_likelihood", "config.rules");
        const auto& ji = detail::require(r, "if_impact", "config.rules");
        const auto& jo = detail::require(r, "then_risk", "config.rules");
        if (!jl.is_string() || !ji.is_string() || !jo.is_string())
            throw validation_error("config.rules: term references must be strings");
        cfg.rulebase.rules.push_back({cfg.likelihood.index_of(jl.get<std::string>()),
                                      cfg.impact.index_of(ji.get<std::string>()),
                                      cfg.risk.index_of(jo.get<std::string>())});
    }
    if (j.contains("defuzz_resolution")) {
        const auto& jn = j["defuzz_resolution"];
        if (!jn.is_number_integer())
            throw validation_error("config.defuzz_resolution: expected an integer");
        cfg.defuzz_resolution = jn.get<int>();
    }
    cfg.validate();
    return cfg;
}

inline nlohmann::json config_to_json(const FisConfig& cfg) {
    nlohmann::json jr = nlohmann::json::array();
    for (const auto& r : cfg.rulebase.rules)
        jr.push_back({{"if_likelihood", cfg.likelihood.terms[r.likelihood].label},
                      {"if_impact", cfg.impact.terms[r.impact].label},
                      {"then_risk", cfg.risk.terms[r.risk].label}});
    return nlohmann::json{{"likelihood", detail::variable_to_json(cfg.likelihood)},
                          {"impact", detail::variable_to_json(cfg.impact)},
                          {"risk", detail::variable_to_json(cfg.risk)},
                          {"rules", jr},
                          {"defuzz_resolution", cfg.defuzz_resolution}};
}

inline FisConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open config file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw validation_error("config " + path + ": " + e.what());
    }
    return config_from_json(j);
}

} // namespace riskfuzz::fuzzy
