#include "qrw/matcher.hpp"

#include "qrw/angle.hpp"

#include <algorithm>
#include <stdexcept>

namespace qrw {

std::uint32_t QubitMapping::at(std::uint32_t pattern_qubit) const {
    std::int64_t v = map.at(pattern_qubit);
    if (v < 0) {
        throw std::logic_error("qubit mapping missing pattern qubit " +
                               std::to_string(pattern_qubit));
    }
    return static_cast<std::uint32_t>(v);
}

bool QubitMapping::bind(std::uint32_t pattern_qubit, std::uint32_t target_qubit) {
    std::int64_t& slot = map.at(pattern_qubit);
    if (slot >= 0) {
        return slot == static_cast<std::int64_t>(target_qubit);
    }
    for (std::int64_t v : map) {
        if (v == static_cast<std::int64_t>(target_qubit)) {
            return false; // injectivity
        }
    }
    slot = target_qubit;
    return true;
}

bool QubitMapping::total() const {
    return std::all_of(map.begin(), map.end(), [](std::int64_t v) { return v >= 0; });
}

std::vector<Subsequence> distinct_subsequence(const std::string& target,
                                              const std::string& pattern, std::size_t delta) {
    if (pattern.empty()) {
        throw std::invalid_argument("empty pattern sequence");
    }
    if (delta < 1) {
        throw std::invalid_argument("delta must be positive");
    }
    const std::size_t n = target.size();
    const std::size_t m = pattern.size();

    // D[j] holds the subsequences matching pattern[0:j]; scanning j downward
    // keeps one target position from serving two pattern slots at once.
    // Entries whose window closed (i - front >= delta) can never extend
    // again, so intermediate states are pruned as the scan passes them.
    std::vector<std::vector<Subsequence>> d(m + 1);
    d[0].push_back({});
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j_top = std::min(i, m - 1);
        for (std::size_t j = j_top + 1; j-- > 0;) {
            if (target[i] != pattern[j]) {
                continue;
            }
            if (j > 0 && delta != kDeltaUnlimited) {
                std::erase_if(d[j], [&](const Subsequence& s) {
                    return i - s.front() >= delta;
                });
            }
            for (const Subsequence& s : d[j]) {
                if (s.empty() && j != 0) {
                    continue;
                }
                Subsequence ext = s;
                ext.push_back(i);
                d[j + 1].push_back(std::move(ext));
            }
        }
    }
    return d[m];
}

namespace {

void collect_roles(const Instruction& instr, std::vector<bool>& controls,
                   std::vector<bool>& targets) {
    const GateKind& k = instr.kind();
    for (std::size_t slot = 0; slot < instr.qubits.size(); ++slot) {
        if (k.slot_is_control(slot)) {
            controls[instr.qubits[slot]] = true;
        }
        if (k.slot_is_target(slot)) {
            targets[instr.qubits[slot]] = true;
        }
    }
}

// Angle slots are linear forms coeff*v + ground; solve for v modulo 2*pi,
// or check consistency when v is already bound.
bool unify_angle(const AngleExpr& slot, double concrete, std::map<std::string, double>& bindings,
                 double tol) {
    double ground = slot.pi_coeff.value() * kPi + slot.const_term.value();
    if (slot.var_terms.empty()) {
        return angles_close(ground, concrete, tol);
    }
    if (slot.var_terms.size() != 1) {
        return false; // pattern slots carry at most one variable
    }
    const auto& [name, coeff] = *slot.var_terms.begin();
    double cv = coeff.value();
    if (cv == 0.0) {
        return angles_close(ground, concrete, tol);
    }
    double solved = canonical_angle((canonical_angle(concrete) - ground) / cv);
    auto it = bindings.find(name);
    if (it != bindings.end()) {
        return angles_close(it->second, solved, tol);
    }
    bindings[name] = solved;
    return true;
}

} // namespace

std::optional<std::pair<QubitMapping, std::map<std::string, double>>> check_qubit_condition(
    const Subsequence& s, const Circuit& target, const RuleSpec& rule, double angle_tol) {
    if (s.size() != rule.pattern.size()) {
        throw std::invalid_argument("subsequence length does not match pattern length");
    }

    QubitMapping mapping(rule.pattern_qubit_count());
    std::map<std::string, double> bindings;

    for (std::size_t k = 0; k < s.size(); ++k) {
        const Instruction& instr = target[s[k]];
        const InstrTemplate& tmpl = rule.pattern[k];
        if (instr.gate != tmpl.gate) {
            return std::nullopt;
        }
        for (std::size_t slot = 0; slot < tmpl.qubits.size(); ++slot) {
            if (!mapping.bind(tmpl.qubits[slot], instr.qubits[slot])) {
                return std::nullopt;
            }
        }
        for (std::size_t a = 0; a < tmpl.angles.size(); ++a) {
            if (!unify_angle(tmpl.angles[a], instr.angles[a], bindings, angle_tol)) {
                return std::nullopt;
            }
        }
    }

    // Qubit state independence: matched controls vs gap targets and matched
    // targets vs gap controls must be disjoint over the spanned segment.
    std::vector<bool> s_controls(target.num_qubits(), false);
    std::vector<bool> s_targets(target.num_qubits(), false);
    for (std::size_t idx : s) {
        collect_roles(target[idx], s_controls, s_targets);
    }
    std::size_t si = 0;
    for (std::size_t pos = s.front(); pos <= s.back(); ++pos) {
        if (si < s.size() && s[si] == pos) {
            ++si;
            continue;
        }
        const Instruction& gap = target[pos];
        const GateKind& k = gap.kind();
        for (std::size_t slot = 0; slot < gap.qubits.size(); ++slot) {
            std::uint32_t q = gap.qubits[slot];
            if (k.slot_is_control(slot) && s_targets[q]) {
                return std::nullopt;
            }
            if (k.slot_is_target(slot) && s_controls[q]) {
                return std::nullopt;
            }
        }
    }

    return std::make_pair(std::move(mapping), std::move(bindings));
}

std::vector<MatchCandidate> pattern_matching(const Circuit& target, const RuleSet& rules,
                                             std::size_t delta) {
    std::vector<MatchCandidate> out;
    const std::string gamma = target.gate_sequence();
    for (std::size_t ri = 0; ri < rules.rules.size(); ++ri) {
        const RuleSpec& rule = rules.rules[ri];
        std::size_t rule_delta = delta == kDeltaAuto ? 4 * rule.pattern.size() : delta;
        std::vector<Subsequence> subs =
            distinct_subsequence(gamma, rule.pattern_sequence(), rule_delta);
        std::sort(subs.begin(), subs.end());
        for (auto& s : subs) {
            auto witness = check_qubit_condition(s, target, rule);
            if (!witness) {
                continue;
            }
            MatchCandidate cand;
            cand.indices = std::move(s);
            cand.rule_index = ri;
            cand.rule = rule;
            cand.mapping = std::move(witness->first);
            cand.bindings = std::move(witness->second);
            out.push_back(std::move(cand));
        }
    }
    return out;
}

} // namespace qrw
