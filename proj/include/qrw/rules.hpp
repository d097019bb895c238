#pragma once

#include "qrw/angle.hpp"
#include "qrw/circuit.hpp"

#include <string>
#include <vector>

namespace qrw {

/// One slot of a rule: a gate over pattern-local qubits with symbolic angles.
struct InstrTemplate {
    GateId gate;
    std::vector<std::uint32_t> qubits; // pattern-local indices
    std::vector<AngleExpr> angles;

    char alias() const { return gate_kind(gate).alias; }
    bool operator==(const InstrTemplate& o) const {
        return gate == o.gate && qubits == o.qubits && angles == o.angles;
    }
};

/// A rewrite rule: pattern circuit and substitution circuit over a shared
/// pattern-local qubit namespace (0..k-1) and the pattern's angle variables.
struct RuleSpec {
    std::string name;
    std::vector<InstrTemplate> pattern;
    std::vector<InstrTemplate> substitution;

    std::string pattern_sequence() const;
    std::size_t pattern_qubit_count() const;

    /// Enforces: nonempty pattern, contiguous qubit namespace, substitution
    /// qubits and angle variables bound by the pattern. Throws on violation.
    void check() const;

    bool operator==(const RuleSpec& o) const {
        return name == o.name && pattern == o.pattern && substitution == o.substitution;
    }
};

/// Parses the JSON rule-file format:
///   {"rules":[{"name":...,"pattern":[{"gate":...,"qubits":[...],"angles":[...]}...],
///              "substitution":[...]}]}
std::vector<RuleSpec> parse_rules(const std::string& text);

/// Inverse of parse_rules; emits a stable, human-diffable document.
std::string serialize_rules(const std::vector<RuleSpec>& rules);

} // namespace qrw
