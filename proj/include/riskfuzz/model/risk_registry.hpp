#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "riskfuzz/error.hpp"

namespace riskfuzz::model {

enum class RiskType { Regulatory, Technological, Market, Reputational };

inline const char* risk_type_name(RiskType t) {
    switch (t) {
        case RiskType::Regulatory: return "Regulatory";
        case RiskType::Technological: return "Technological";
        case RiskType::Market: return "Market";
        case RiskType::Reputational: return "Reputational";
    }
    return "";
}

struct RiskDescriptor {
    std::string code;
    RiskType risk_type;
    std::string name;
    std::string description;
};

// The 16 built-in climate transition risks, four per type.
inline const std::vector<RiskDescriptor>& risk_registry() {
    static const std::vector<RiskDescriptor> risks = {
        {"Rreg1", RiskType::Regulatory, "Cap and trade schemes",
         "Emission trading systems with pre-established caps in which companies trade their emissions"},
        {"Rreg2", RiskType::Regulatory, "Carbon tax increase",
         "Regulatory strategy to reduce greenhouse gas emissions from companies"},
        {"Rreg3", RiskType::Regulatory, "Climate change-related litigation",
         "Legal exposure for non-compliance with climate change-related responsibilities"},
        {"Rreg4", RiskType::Regulatory, "Obligation to report emissions",
         "Mandatory disclosure of produced greenhouse gas emissions"},
        {"RT1", RiskType::Technological, "Shift to less carbon-intensive production",
         "Use of fuels with lower greenhouse gas emission factors for thermal energy generation"},
        {"RT2", RiskType::Technological, "Progress in renewables and energy efficiency",
         "Investments in low-carbon products, processes, or services that do not meet expectations"},
        {"RT3", RiskType::Technological, "Technological change",
         "New technological advancements enabling improved outcomes in energy processes"},
        {"RT4", RiskType::Technological, "Failed investments in new technologies",
         "Low-impact technology developments rendered obsolete or uncompetitive (stranded assets)"},
        {"RM1", RiskType::Market, "Change in demand for products and services",
         "Demand shifts for products and services driven by climate change concerns"},
        {"RM2", RiskType::Market, "Raw materials and supplies",
         "Price volatility and availability changes affecting the supply of raw materials"},
        {"RM3", RiskType::Market, "Stakeholder concerns on climate change",
         "Concern among market stakeholders and affected groups, creating uncertainty"},
        {"RM4", RiskType::Market, "Poor adaptation to customer behavior",
         "Limited adaptability of business models to changing customer needs and behaviors"},
        {"Rrep1", RiskType::Reputational, "Changes in customer preferences",
         "Reputation risk from loss or change in preference for a company's products"},
        {"Rrep2", RiskType::Reputational, "Pressure from non-governmental organisations",
         "NGO pressure on actions with environmental impact, generating media attention"},
        {"Rrep3", RiskType::Reputational, "Negative news about the company",
         "Negative environmental-responsibility coverage harming shareholder value"},
        {"Rrep4", RiskType::Reputational, "Changes in market sentiment",
         "Sentiment shifts due to awareness of potential future climate risks"},
    };
    return risks;
}

inline constexpr std::size_t risk_count = 16;
inline constexpr std::size_t criteria_count = 5;

inline const std::array<std::string, criteria_count>& criteria_names() {
    static const std::array<std::string, criteria_count> names = {
        "Vulnerability", "Resilience", "Exposure", "Likelihood", "Impact"};
    return names;
}

inline std::size_t risk_index(const std::string& code) {
    const auto& reg = risk_registry();
    for (std::size_t i = 0; i < reg.size(); ++i)
        if (reg[i].code == code) return i;
    throw validation_error("unknown risk code '" + code + "'");
}

inline std::size_t criterion_index(const std::string& name) {
    const auto& names = criteria_names();
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return i;
    throw validation_error("unknown criterion '" + name + "'");
}

} // namespace riskfuzz::model
