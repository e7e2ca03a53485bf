#include "oddcrit/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <sstream>

namespace oddcrit {

double round12(double x) {
    if (!std::isfinite(x)) return x;
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.12g", x);
    return std::strtod(buffer, nullptr);
}

namespace {

nlohmann::ordered_json optional_number(const std::optional<double>& x) {
    return x ? nlohmann::ordered_json(round12(*x)) : nlohmann::ordered_json(nullptr);
}

nlohmann::ordered_json vertex_list(const std::optional<VertexSet>& s) {
    return s ? nlohmann::ordered_json(s->members) : nlohmann::ordered_json(nullptr);
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string format12(const std::optional<double>& x) {
    if (!x) return "";
    std::ostringstream out;
    out << std::setprecision(12) << *x;
    return out.str();
}

std::string witness_text(const std::optional<VertexSet>& s) {
    if (!s) return "";
    std::string out;
    for (std::size_t i = 0; i < s->members.size(); ++i) out += (i ? " " : "") + std::to_string(s->members[i]);
    return out;
}

}  // namespace

nlohmann::ordered_json to_json(const TheoremVerdict& v) {
    nlohmann::ordered_json hyp = nlohmann::ordered_json::object();
    for (const auto& h : v.hypotheses) hyp[h.name] = {{"met", h.met}, {"detail", h.detail}};
    return {
        {"theorem_id", std::string(to_string(v.theorem))},
        {"hypotheses_met", v.hypotheses_met},
        {"hypotheses", hyp},
        {"condition",
         {{"quantity", v.quantity},
          {"graph_value", optional_number(v.graph_value)},
          {"extremal_value", optional_number(v.extremal_value)},
          {"met", v.condition_met}}},
        {"conclusion", std::string(to_string(v.conclusion))},
    };
}

nlohmann::ordered_json to_json(const CriticalityVerdict& v) {
    return {
        {"critical", v.critical},
        {"witness", vertex_list(v.witness)},
        {"witness_odd_components", v.witness ? nlohmann::ordered_json(v.witness_odd_components) : nullptr},
        {"witness_bound", v.witness ? nlohmann::ordered_json(v.witness_bound) : nullptr},
        {"subsets_examined", v.subsets_examined},
        {"cross_checked", v.cross_checked},
        {"exhaustive", v.exhaustive},
    };
}

nlohmann::ordered_json to_json(const SweepRecord& r) {
    const auto verdict = to_json(r.verdict);
    return {
        {"graph_id", r.graph_id},
        {"order", r.order},
        {"theorem_id", verdict["theorem_id"]},
        {"hypotheses", verdict["hypotheses"]},
        {"hypotheses_met", verdict["hypotheses_met"]},
        {"condition", verdict["condition"]},
        {"conclusion", verdict["conclusion"]},
        {"brute_force_verdict", r.brute_force},
        {"witness", vertex_list(r.witness)},
        {"subsets_examined", r.subsets_examined},
        {"falsification", r.falsification},
        {"note", r.note},
    };
}

nlohmann::ordered_json to_json(const SweepReport& r) {
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (const auto& rec : r.records) records.push_back(to_json(rec));
    return {
        {"theorem_id", std::string(to_string(r.theorem))},
        {"parameters", {{"b", r.b}, {"k", r.k}, {"delta", r.delta}}},
        {"graphs", r.records.size()},
        {"falsifications", r.falsifications()},
        {"records", records},
    };
}

std::string to_csv(const SweepReport& r) {
    std::ostringstream out;
    out << "graph_id,theorem_id,order,hypotheses_met,quantity,graph_value,extremal_value,condition_met,conclusion,"
           "brute_force_verdict,witness,falsification\n";
    for (const auto& rec : r.records) {
        const auto& v = rec.verdict;
        out << csv_escape(rec.graph_id) << ',' << to_string(v.theorem) << ',' << rec.order << ','
            << (v.hypotheses_met ? "true" : "false") << ',' << v.quantity << ',' << format12(v.graph_value) << ','
            << format12(v.extremal_value) << ',' << (v.condition_met ? "true" : "false") << ','
            << to_string(v.conclusion) << ',' << rec.brute_force << ',' << witness_text(rec.witness) << ','
            << (rec.falsification ? "true" : "false") << '\n';
    }
    return out.str();
}

std::string to_table(const SweepReport& r) {
    std::ostringstream out;
    out << std::left << std::setw(14) << "graph" << std::setw(5) << "n" << std::setw(20) << "conclusion"
        << std::setw(14) << "brute_force" << std::setw(16) << "value" << std::setw(16) << "extremal"
        << "falsified\n";
    for (const auto& rec : r.records) {
        out << std::left << std::setw(14) << rec.graph_id << std::setw(5) << rec.order << std::setw(20)
            << to_string(rec.verdict.conclusion) << std::setw(14) << rec.brute_force << std::setw(16)
            << format12(rec.verdict.graph_value) << std::setw(16) << format12(rec.verdict.extremal_value)
            << (rec.falsification ? "YES" : "no") << '\n';
    }
    out << r.records.size() << " graphs, " << r.falsifications() << " falsifications\n";
    return out.str();
}

}  // namespace oddcrit
