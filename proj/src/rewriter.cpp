#include "qrw/rewriter.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qrw {

namespace {

Instruction instantiate(const InstrTemplate& tmpl, const QubitMapping& mapping,
                        const std::map<std::string, double>& bindings) {
    std::vector<std::uint32_t> qubits;
    qubits.reserve(tmpl.qubits.size());
    for (std::uint32_t pq : tmpl.qubits) {
        qubits.push_back(mapping.at(pq));
    }
    std::vector<double> angles;
    angles.reserve(tmpl.angles.size());
    for (const auto& a : tmpl.angles) {
        angles.push_back(a.evaluate(bindings));
    }
    return Instruction(tmpl.gate, std::move(qubits), std::move(angles));
}

} // namespace

Circuit substitute(const Circuit& target, const Scheduler& scheduler) {
    const std::size_t n = target.size();
    // Edit plan, keyed by original position: overwritten payloads, deletions,
    // and insertion blocks attached after a position. Building the plan
    // first keeps every index valid regardless of how pick spans interleave.
    std::vector<const Instruction*> original(n);
    for (std::size_t i = 0; i < n; ++i) {
        original[i] = &target[i];
    }
    std::vector<std::optional<Instruction>> overwrite(n);
    std::vector<bool> deleted(n, false);
    std::map<std::size_t, std::vector<Instruction>> inserted_after;
    std::vector<bool> claimed(n, false);

    for (const MatchCandidate& pick : scheduler.picks) {
        if (pick.indices.empty()) {
            continue;
        }
        for (std::size_t idx : pick.indices) {
            if (idx >= n) {
                throw std::invalid_argument("scheduler index " + std::to_string(idx) +
                                            " out of range");
            }
            if (claimed[idx]) {
                throw std::invalid_argument("scheduler is not index-disjoint at index " +
                                            std::to_string(idx));
            }
            claimed[idx] = true;
        }
        const std::size_t l1 = pick.indices.size();
        const std::size_t l2 = pick.rule.substitution.size();
        const std::size_t keep = std::min(l1, l2);
        for (std::size_t j = 0; j < keep; ++j) {
            overwrite[pick.indices[j]] =
                instantiate(pick.rule.substitution[j], pick.mapping, pick.bindings);
        }
        if (l2 > keep) {
            auto& block = inserted_after[pick.indices[keep - 1]];
            for (std::size_t j = keep; j < l2; ++j) {
                block.push_back(instantiate(pick.rule.substitution[j], pick.mapping,
                                            pick.bindings));
            }
        }
        for (std::size_t j = keep; j < l1; ++j) {
            deleted[pick.indices[j]] = true;
        }
    }

    Circuit out(target.num_qubits());
    for (std::size_t i = 0; i < n; ++i) {
        if (!deleted[i]) {
            out.append(overwrite[i] ? *overwrite[i] : *original[i]);
        }
        auto it = inserted_after.find(i);
        if (it != inserted_after.end()) {
            for (const Instruction& instr : it->second) {
                out.append(instr);
            }
        }
    }
    return out;
}

std::pair<Circuit, std::size_t> rewrite_once(const Circuit& target, const RuleSet& rules,
                                             const Policy& policy, std::size_t delta) {
    std::vector<MatchCandidate> candidates = pattern_matching(target, rules, delta);
    if (candidates.empty()) {
        return {target, 0};
    }
    Scheduler sched = solve_conflicts(target, std::move(candidates), policy);
    if (sched.picks.empty()) {
        return {target, 0};
    }
    Circuit rewritten = substitute(target, sched).remove_identities();
    return {std::move(rewritten), sched.picks.size()};
}

OptimizeResult optimize(const Circuit& target, const RuleSet& internal, const RuleSet& external,
                        const Policy& policy, std::size_t max_rounds, std::size_t delta) {
    if (max_rounds < 1) {
        throw std::invalid_argument("max_rounds must be at least 1");
    }
    OptimizeResult result;
    result.circuit = target;
    for (std::size_t round = 1; round <= max_rounds; ++round) {
        std::size_t round_picks = 0;

        if (!internal.rules.empty()) {
            // Internal pass runs to fixpoint, bounded by the round budget so
            // directed commutation rules cannot cycle forever.
            for (std::size_t i = 0; i < max_rounds; ++i) {
                auto [next, picks] = rewrite_once(result.circuit, internal, policy, delta);
                if (picks == 0) {
                    break;
                }
                result.circuit = std::move(next);
                round_picks += picks;
            }
            result.rounds.push_back(RoundReport{round, result.circuit.size(),
                                                result.circuit.depth(), round_picks, "internal"});
        }

        std::size_t external_picks = 0;
        if (!external.rules.empty()) {
            auto [next, picks] = rewrite_once(result.circuit, external, policy, delta);
            external_picks = picks;
            result.circuit = std::move(next);
            result.rounds.push_back(RoundReport{round, result.circuit.size(),
                                                result.circuit.depth(), external_picks,
                                                "external"});
        }

        result.total_picks += round_picks + external_picks;
        if (round_picks + external_picks == 0) {
            break;
        }
    }
    return result;
}

} // namespace qrw
