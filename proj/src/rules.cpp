#include "qrw/rules.hpp"

#include <json.hpp>

#include <set>
#include <stdexcept>

namespace qrw {

std::string RuleSpec::pattern_sequence() const {
    std::string gamma;
    gamma.reserve(pattern.size());
    for (const auto& t : pattern) {
        gamma.push_back(t.alias());
    }
    return gamma;
}

std::size_t RuleSpec::pattern_qubit_count() const {
    std::uint32_t max_q = 0;
    bool any = false;
    for (const auto& t : pattern) {
        for (std::uint32_t q : t.qubits) {
            max_q = std::max(max_q, q);
            any = true;
        }
    }
    return any ? max_q + 1 : 0;
}

void RuleSpec::check() const {
    if (pattern.empty()) {
        throw std::invalid_argument("rule '" + name + "': empty pattern");
    }
    std::set<std::uint32_t> pattern_qubits;
    std::set<std::string> pattern_vars;
    for (const auto& t : pattern) {
        if (t.qubits.size() != gate_kind(t.gate).arity ||
            t.angles.size() != gate_kind(t.gate).angle_arity) {
            throw std::invalid_argument("rule '" + name + "': template arity mismatch");
        }
        for (std::uint32_t q : t.qubits) {
            pattern_qubits.insert(q);
        }
        for (const auto& a : t.angles) {
            if (a.var_terms.size() > 1) {
                throw std::invalid_argument("rule '" + name +
                                            "': pattern angle slot with more than one variable");
            }
            for (const auto& [v, coeff] : a.var_terms) {
                (void)coeff;
                pattern_vars.insert(v);
            }
        }
    }
    std::size_t k = pattern_qubit_count();
    if (pattern_qubits.size() != k) {
        throw std::invalid_argument("rule '" + name + "': non-contiguous qubit namespace");
    }
    for (const auto& t : substitution) {
        if (t.qubits.size() != gate_kind(t.gate).arity ||
            t.angles.size() != gate_kind(t.gate).angle_arity) {
            throw std::invalid_argument("rule '" + name + "': template arity mismatch");
        }
        for (std::uint32_t q : t.qubits) {
            if (q >= k) {
                throw std::invalid_argument("rule '" + name +
                                            "': substitution qubit outside pattern namespace");
            }
        }
        for (const auto& a : t.angles) {
            for (const auto& [v, coeff] : a.var_terms) {
                (void)coeff;
                if (!pattern_vars.count(v)) {
                    throw std::invalid_argument("rule '" + name +
                                                "': unbound substitution variable '" + v + "'");
                }
            }
        }
    }
}

namespace {

using nlohmann::json;

InstrTemplate template_from_json(const json& j, const std::string& rule_name) {
    if (!j.contains("gate") || !j["gate"].is_string()) {
        throw std::invalid_argument("rule '" + rule_name + "': template missing gate name");
    }
    std::string gname = j["gate"].get<std::string>();
    auto gid = gate_from_name(gname);
    if (!gid) {
        throw std::invalid_argument("rule '" + rule_name + "': unknown gate '" + gname + "'");
    }
    InstrTemplate t;
    t.gate = *gid;
    for (const auto& q : j.value("qubits", json::array())) {
        if (!q.is_number_integer() || q.get<long long>() < 0) {
            throw std::invalid_argument("rule '" + rule_name + "': bad qubit index");
        }
        t.qubits.push_back(q.get<std::uint32_t>());
    }
    for (const auto& a : j.value("angles", json::array())) {
        if (!a.is_string()) {
            throw std::invalid_argument("rule '" + rule_name + "': angles must be strings");
        }
        t.angles.push_back(AngleExpr::parse(a.get<std::string>()));
    }
    return t;
}

json template_to_json(const InstrTemplate& t) {
    json j;
    j["gate"] = std::string(gate_kind(t.gate).name);
    j["qubits"] = t.qubits;
    json angles = json::array();
    for (const auto& a : t.angles) {
        angles.push_back(a.str());
    }
    j["angles"] = angles;
    return j;
}

} // namespace

std::vector<RuleSpec> parse_rules(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed rule document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("rules") || !doc["rules"].is_array()) {
        throw std::invalid_argument("rule document must be {\"rules\": [...]}");
    }
    std::vector<RuleSpec> out;
    for (const auto& jr : doc["rules"]) {
        RuleSpec r;
        r.name = jr.value("name", "");
        if (!jr.contains("pattern") || !jr["pattern"].is_array() || !jr.contains("substitution") ||
            !jr["substitution"].is_array()) {
            throw std::invalid_argument("rule '" + r.name +
                                        "': needs pattern and substitution arrays");
        }
        for (const auto& jt : jr["pattern"]) {
            r.pattern.push_back(template_from_json(jt, r.name));
        }
        for (const auto& jt : jr["substitution"]) {
            r.substitution.push_back(template_from_json(jt, r.name));
        }
        r.check();
        out.push_back(std::move(r));
    }
    return out;
}

std::string serialize_rules(const std::vector<RuleSpec>& rules) {
    json doc;
    doc["rules"] = json::array();
    for (const auto& r : rules) {
        json jr;
        jr["name"] = r.name;
        jr["pattern"] = json::array();
        for (const auto& t : r.pattern) {
            jr["pattern"].push_back(template_to_json(t));
        }
        jr["substitution"] = json::array();
        for (const auto& t : r.substitution) {
            jr["substitution"].push_back(template_to_json(t));
        }
        doc["rules"].push_back(std::move(jr));
    }
    return doc.dump(2) + "\n";
}

} // namespace qrw
