#pragma once

#include "qrw/circuit.hpp"
#include "qrw/rule_library.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qrw {

/// Sentinel for an unbounded match span.
inline constexpr std::size_t kDeltaUnlimited = SIZE_MAX;
/// Sentinel asking pattern_matching to use 4 * |pattern| per rule.
inline constexpr std::size_t kDeltaAuto = 0;

using Subsequence = std::vector<std::size_t>;

/// Injective partial map from pattern-local qubits to target qubits.
struct QubitMapping {
    std::vector<std::int64_t> map; // -1 while unset

    explicit QubitMapping(std::size_t pattern_qubits = 0)
        : map(pattern_qubits, -1) {}

    std::uint32_t at(std::uint32_t pattern_qubit) const;
    bool bind(std::uint32_t pattern_qubit, std::uint32_t target_qubit);
    bool total() const;
    bool operator==(const QubitMapping& o) const { return map == o.map; }
};

/// One replacement candidate: matched index subsequence, the rule, the
/// qubit mapping and angle bindings that witnessed the match, and the
/// conflict index (-1 while unconflicted).
struct MatchCandidate {
    Subsequence indices;
    std::size_t rule_index = 0; // position in the rule set
    RuleSpec rule;
    QubitMapping mapping;
    std::map<std::string, double> bindings;
    std::int64_t conflict = -1;

    std::size_t first_index() const { return indices.front(); }
};

/// All strictly increasing index lists spelling `pattern` inside `target`
/// with span (last - first) < delta, via the subsequence DP.
std::vector<Subsequence> distinct_subsequence(const std::string& target,
                                              const std::string& pattern, std::size_t delta);

/// Checks Defs. 3-5 for one subsequence: builds the qubit mapping, unifies
/// pattern angles against concrete angles, and requires control/target
/// disjointness between matched gates and the gap gates they skip.
std::optional<std::pair<QubitMapping, std::map<std::string, double>>> check_qubit_condition(
    const Subsequence& s, const Circuit& target, const RuleSpec& rule, double angle_tol = 1e-9);

/// Runs the DP and the qubit-condition filter for every rule in order and
/// returns the accepted candidates (rule order, then lexicographic index
/// order). `delta` = kDeltaAuto selects 4 * |pattern| per rule.
std::vector<MatchCandidate> pattern_matching(const Circuit& target, const RuleSet& rules,
                                             std::size_t delta = kDeltaAuto);

} // namespace qrw
