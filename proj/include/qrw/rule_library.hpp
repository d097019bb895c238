#pragma once

#include "qrw/rules.hpp"

#include <string>
#include <vector>

namespace qrw {

/// Ordered, immutable collection of rules. Matching iterates rules in the
/// stored order, so the order is part of the engine's deterministic output.
struct RuleSet {
    std::string name;
    std::vector<RuleSpec> rules;
    enum class Kind { Internal, External } kind = Kind::External;
    bool validated = false;

    std::size_t size() const { return rules.size(); }
};

/// Per-rule outcome of the unitary-equivalence check.
struct RuleValidation {
    std::string rule_name;
    bool passed;
    std::string detail;
};

struct ValidationReport {
    std::vector<RuleValidation> results;
    bool all_passed() const;
};

/// Built-in optimization library: the X/CX rules, the 1- and 2-qubit
/// cancellation identities, and the commutation rules.
RuleSet builtin_internal();

/// Decomposition of Z,H,T,Tdg,S,Sdg,CX,SWAP,CCZ,CCX into the Surface-17
/// primitive set {X, Y, Rx, Ry, CZ}; closure over repeated application
/// drives any supported circuit into that set.
RuleSet builtin_surface17();

/// Just the four X/CX optimization rules (xx, cc, ccc, xcx).
RuleSet builtin_fig4();

/// Optional translations for u1/u2/u3 inputs into rz/ry/h form. Oracle
/// validated, but not drawn from a published decomposition table.
RuleSet builtin_ibm_u();

/// Resolves a built-in set by name ("internal", "surface17", "fig4",
/// "ibm_u"); empty optional when the name is not a built-in.
std::optional<RuleSet> builtin_by_name(const std::string& name);

/// Checks every rule's pattern and substitution for unitary equivalence up
/// to global phase at tolerance 1e-9, instantiating angle variables at
/// {pi/3, -pi/7, 1.0}. Rules over more than 10 qubits are a capacity error.
ValidationReport validate(const RuleSet& rs);

/// Instantiates a template list as a concrete circuit on `num_qubits`
/// qubits under a variable assignment (identity qubit mapping).
Circuit instantiate_templates(const std::vector<InstrTemplate>& templates,
                              std::uint32_t num_qubits,
                              const std::map<std::string, double>& bindings);

/// True when the rule set contains a pattern mentioning u2 or u3 (used to
/// gate parsing of those gates).
bool rules_translate_u23(const RuleSet& rs);

} // namespace qrw
