#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "riskfuzz/error.hpp"
#include "riskfuzz/model/questionnaire.hpp"
#include "riskfuzz/model/risk_registry.hpp"

namespace riskfuzz::model {

namespace detail {

inline int label_index(const std::string& label, const std::array<std::string, 5>& labels,
                       const std::string& where) {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return static_cast<int>(i);
    throw validation_error(where + ": unknown term label '" + label + "'");
}

inline int level_index(const std::string& label, const std::string& where) {
    const auto& labels = risk_level_labels();
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return static_cast<int>(i);
    throw validation_error(where + ": unknown risk level '" + label + "'");
}

inline int rating_from_json(const nlohmann::json& j, const std::string& where) {
    if (!j.is_number_integer())
        throw validation_error(where + ": rating must be an integer");
    const int v = j.get<int>();
    if (v < 1 || v > 5)
        throw validation_error(where + ": rating " + std::to_string(v) + " outside 1..5");
    return v;
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace detail

inline Questionnaire questionnaire_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw validation_error("questionnaire: expected a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (it.key() != "experts" && it.key() != "criteria_ratings" &&
            it.key() != "risk_ratings" && it.key() != "rule_assignments")
            throw validation_error("questionnaire: unknown key '" + it.key() + "'");
    for (const char* k : {"experts", "criteria_ratings", "risk_ratings", "rule_assignments"})
        if (!j.contains(k))
            throw validation_error(std::string("questionnaire: missing key '") + k + "'");

    Questionnaire q;
    if (!j["experts"].is_array() || j["experts"].empty())
        throw validation_error("questionnaire: 'experts' must be a non-empty array");
    for (const auto& e : j["experts"]) q.experts.push_back(e.get<std::string>());

    const auto& jc = j["criteria_ratings"];
    const auto& jr = j["risk_ratings"];
    const auto& ja = j["rule_assignments"];
    for (const auto* sec : {&jc, &jr, &ja})
        if (!sec->is_object())
            throw validation_error("questionnaire: sections must map expert -> answers");
    for (const auto& section : {std::pair<const nlohmann::json*, const char*>{&jc, "criteria_ratings"},
                                {&jr, "risk_ratings"},
                                {&ja, "rule_assignments"}})
        for (auto it = section.first->begin(); it != section.first->end(); ++it) {
            bool known = false;
            for (const auto& e : q.experts)
                if (e == it.key()) known = true;
            if (!known)
                throw validation_error(std::string("questionnaire.") + section.second +
                                       ": unknown expert '" + it.key() + "'");
        }

    for (const auto& expert : q.experts) {
        // Section 1.
        if (!jc.contains(expert))
            throw validation_error("expert " + expert + ": missing criteria ratings");
        std::array<int, criteria_count> crit{};
        for (std::size_t c = 0; c < criteria_count; ++c) {
            const auto& name = criteria_names()[c];
            if (!jc[expert].contains(name))
                throw validation_error("expert " + expert + ": missing criterion " + name);
            crit[c] = detail::rating_from_json(jc[expert][name], "expert " + expert + "/" + name);
        }
        for (auto it = jc[expert].begin(); it != jc[expert].end(); ++it)
            criterion_index(it.key()); // rejects unknown criteria
        q.criteria_ratings.push_back(crit);

        // Sections 2-5.
        if (!jr.contains(expert))
            throw validation_error("expert " + expert + ": missing risk ratings");
        std::array<std::array<int, criteria_count>, risk_count> rr{};
        for (std::size_t r = 0; r < risk_count; ++r) {
            const auto& code = risk_registry()[r].code;
            if (!jr[expert].contains(code))
                throw validation_error("expert " + expert + ": missing " + code);
            for (std::size_t c = 0; c < criteria_count; ++c) {
                const auto& name = criteria_names()[c];
                if (!jr[expert][code].contains(name))
                    throw validation_error("expert " + expert + ": missing " + code + "/" + name);
                rr[r][c] = detail::rating_from_json(jr[expert][code][name],
                                                    "expert " + expert + "/" + code + "/" + name);
            }
            for (auto it = jr[expert][code].begin(); it != jr[expert][code].end(); ++it)
                criterion_index(it.key());
        }
        for (auto it = jr[expert].begin(); it != jr[expert].end(); ++it)
            risk_index(it.key()); // rejects unknown risk codes
        q.risk_ratings.push_back(rr);

        // Section 6.
        if (!ja.contains(expert))
            throw validation_error("expert " + expert + ": missing rule assignments");
        const auto& rules = ja[expert];
        if (!rules.is_array() || rules.size() != 25)
            throw validation_error("expert " + expert + ": rule assignments must list 25 cells");
        std::array<RuleAssignment, 25> ra{};
        std::size_t idx = 0;
        for (const auto& cell : rules) {
            const std::string where = "expert " + expert + " rule " + std::to_string(idx + 1);
            if (!cell.is_object() || !cell.contains("likelihood") || !cell.contains("impact") ||
                !cell.contains("level"))
                throw validation_error(where + ": expected {likelihood, impact, level}");
            for (auto it = cell.begin(); it != cell.end(); ++it)
                if (it.key() != "likelihood" && it.key() != "impact" && it.key() != "level")
                    throw validation_error(where + ": unknown key '" + it.key() + "'");
            ra[idx].likelihood = detail::label_index(cell["likelihood"].get<std::string>(),
                                                     likelihood_term_labels(), where);
            ra[idx].impact = detail::label_index(cell["impact"].get<std::string>(),
                                                 impact_term_labels(), where);
            ra[idx].level = detail::level_index(cell["level"].get<std::string>(), where);
            ++idx;
        }
        q.rule_assignments.push_back(ra);
    }
    q.validate();
    return q;
}

inline nlohmann::json questionnaire_to_json(const Questionnaire& q) {
    q.validate();
    nlohmann::json jc = nlohmann::json::object();
    nlohmann::json jr = nlohmann::json::object();
    nlohmann::json ja = nlohmann::json::object();
    for (std::size_t e = 0; e < q.experts.size(); ++e) {
        nlohmann::json crit = nlohmann::json::object();
        for (std::size_t c = 0; c < criteria_count; ++c)
            crit[criteria_names()[c]] = q.criteria_ratings[e][c];
        jc[q.experts[e]] = crit;
        nlohmann::json risks = nlohmann::json::object();
        for (std::size_t r = 0; r < risk_count; ++r) {
            nlohmann::json one = nlohmann::json::object();
            for (std::size_t c = 0; c < criteria_count; ++c)
                one[criteria_names()[c]] = q.risk_ratings[e][r][c];
            risks[risk_registry()[r].code] = one;
        }
        jr[q.experts[e]] = risks;
        nlohmann::json rules = nlohmann::json::array();
        for (const auto& ra : q.rule_assignments[e])
            rules.push_back({{"likelihood", likelihood_term_labels()[ra.likelihood]},
                             {"impact", impact_term_labels()[ra.impact]},
                             {"level", risk_level_labels()[ra.level]}});
        ja[q.experts[e]] = rules;
    }
    return nlohmann::json{{"experts", q.experts},
                          {"criteria_ratings", jc},
                          {"risk_ratings", jr},
                          {"rule_assignments", ja}};
}

// Flat CSV pair.  Ratings: expert,section,risk_code,criterion,rating with
// section 1 rows carrying an empty risk_code and sections 2-5 mapping to the
// four risk types.  Rules: expert,likelihood_term,impact_term,level.
inline std::string questionnaire_ratings_to_csv(const Questionnaire& q) {
    std::ostringstream os;
    os << "expert,section,risk_code,criterion,rating\n";
    for (std::size_t e = 0; e < q.experts.size(); ++e) {
        for (std::size_t c = 0; c < criteria_count; ++c)
            os << q.experts[e] << ",1,," << criteria_names()[c] << ","
               << q.criteria_ratings[e][c] << "\n";
        for (std::size_t r = 0; r < risk_count; ++r) {
            const int section = 2 + static_cast<int>(risk_registry()[r].risk_type);
            for (std::size_t c = 0; c < criteria_count; ++c)
                os << q.experts[e] << "," << section << "," << risk_registry()[r].code << ","
                   << criteria_names()[c] << "," << q.risk_ratings[e][r][c] << "\n";
        }
    }
    return os.str();
}

inline std::string questionnaire_rules_to_csv(const Questionnaire& q) {
    std::ostringstream os;
    os << "expert,likelihood_term,impact_term,level\n";
    for (std::size_t e = 0; e < q.experts.size(); ++e)
        for (const auto& ra : q.rule_assignments[e])
            os << q.experts[e] << "," << likelihood_term_labels()[ra.likelihood] << ","
               << impact_term_labels()[ra.impact] << "," << risk_level_labels()[ra.level] << "\n";
    return os.str();
}

inline Questionnaire questionnaire_from_csv(const std::string& ratings_csv,
                                            const std::string& rules_csv) {
    Questionnaire q;
    std::vector<std::string> order; // expert order of first appearance
    auto expert_slot = [&](const std::string& id) {
        for (std::size_t e = 0; e < order.size(); ++e)
            if (order[e] == id) return e;
        order.push_back(id);
        q.experts.push_back(id);
        q.criteria_ratings.push_back({});
        q.risk_ratings.push_back({});
        q.rule_assignments.push_back({});
        for (auto& c : q.criteria_ratings.back()) c = 0;
        for (auto& r : q.risk_ratings.back())
            for (auto& c : r) c = 0;
        return order.size() - 1;
    };

    std::istringstream in(ratings_csv);
    std::string line;
    if (!std::getline(in, line) ||
        detail::split_csv_line(line) !=
            std::vector<std::string>{"expert", "section", "risk_code", "criterion", "rating"})
        throw validation_error("ratings csv: bad header");
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto cells = detail::split_csv_line(line);
        if (cells.size() != 5)
            throw validation_error("ratings csv line " + std::to_string(lineno) +
                                   ": expected 5 columns");
        const std::size_t e = expert_slot(cells[0]);
        int rating = 0;
        try {
            rating = std::stoi(cells[4]);
        } catch (const std::exception&) {
            throw validation_error("ratings csv line " + std::to_string(lineno) +
                                   ": bad rating '" + cells[4] + "'");
        }
        if (rating < 1 || rating > 5)
            throw validation_error("expert " + cells[0] + ": rating " + cells[4] +
                                   " outside 1..5 (line " + std::to_string(lineno) + ")");
        const std::size_t c = criterion_index(cells[3]);
        if (cells[1] == "1") {
            if (!cells[2].empty())
                throw validation_error("ratings csv line " + std::to_string(lineno) +
                                       ": section 1 rows must leave risk_code empty");
            q.criteria_ratings[e][c] = rating;
        } else {
            const std::size_t r = risk_index(cells[2]);
            const int expect = 2 + static_cast<int>(risk_registry()[r].risk_type);
            if (cells[1] != std::to_string(expect))
                throw validation_error("ratings csv line " + std::to_string(lineno) + ": " +
                                       cells[2] + " belongs to section " + std::to_string(expect));
            q.risk_ratings[e][r][c] = rating;
        }
    }

    std::istringstream rin(rules_csv);
    if (!std::getline(rin, line) ||
        detail::split_csv_line(line) !=
            std::vector<std::string>{"expert", "likelihood_term", "impact_term", "level"})
        throw validation_error("rules csv: bad header");
    std::vector<std::size_t> cursor(q.experts.size(), 0);
    lineno = 1;
    while (std::getline(rin, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto cells = detail::split_csv_line(line);
        if (cells.size() != 4)
            throw validation_error("rules csv line " + std::to_string(lineno) +
                                   ": expected 4 columns");
        const std::size_t e = expert_slot(cells[0]);
        if (cursor.size() < q.experts.size()) cursor.resize(q.experts.size(), 0);
        if (cursor[e] >= 25)
            throw validation_error("expert " + cells[0] + ": more than 25 rule rows");
        RuleAssignment ra;
        const std::string where = "rules csv line " + std::to_string(lineno);
        ra.likelihood = detail::label_index(cells[1], likelihood_term_labels(), where);
        ra.impact = detail::label_index(cells[2], impact_term_labels(), where);
        ra.level = detail::level_index(cells[3], where);
        q.rule_assignments[e][cursor[e]++] = ra;
    }

    // Zero-filled cells mean the file never mentioned them.
    for (std::size_t e = 0; e < q.experts.size(); ++e) {
        for (std::size_t c = 0; c < criteria_count; ++c)
            if (q.criteria_ratings[e][c] == 0)
                throw validation_error("expert " + q.experts[e] + ": missing criterion " +
                                       criteria_names()[c]);
        for (std::size_t r = 0; r < risk_count; ++r)
            for (std::size_t c = 0; c < criteria_count; ++c)
                if (q.risk_ratings[e][r][c] == 0)
                    throw validation_error("expert " + q.experts[e] + ": missing " +
                                           risk_registry()[r].code + "/" + criteria_names()[c]);
        if (cursor[e] != 25)
            throw validation_error("expert " + q.experts[e] + ": expected 25 rule rows, got " +
                                   std::to_string(cursor[e]));
    }
    q.validate();
    return q;
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot write file: " + path);
    out << text;
    if (!out) throw io_error("write failed: " + path);
}

// JSON questionnaire for *.json; for *.csv the rules file is expected next to
// it with the extension replaced by .rules.csv.
inline Questionnaire load_questionnaire(const std::string& path) {
    if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0) {
        const std::string rules_path = path.substr(0, path.size() - 4) + ".rules.csv";
        return questionnaire_from_csv(read_text_file(path), read_text_file(rules_path));
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_text_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw validation_error("questionnaire " + path + ": " + e.what());
    }
    return questionnaire_from_json(j);
}

} // namespace riskfuzz::model
