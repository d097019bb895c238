#pragma once

#include "qrw/scheduler.hpp"

#include <string>
#include <vector>

namespace qrw {

/// Applies an index-disjoint scheduler to a circuit and returns the edited
/// copy. For each pick with pattern length l1 and substitution length l2,
/// the first min(l1,l2) matched positions are overwritten with remapped
/// substitution instructions; surplus substitution gates are inserted
/// immediately after the last overwritten position, surplus matched
/// positions are deleted. Identity gates produced by rules are kept (run
/// remove_identities afterwards).
Circuit substitute(const Circuit& target, const Scheduler& scheduler);

/// One match -> schedule -> substitute -> remove-identities pass.
/// Returns the new circuit and the number of picks applied.
std::pair<Circuit, std::size_t> rewrite_once(const Circuit& target, const RuleSet& rules,
                                             const Policy& policy,
                                             std::size_t delta = kDeltaAuto);

struct RoundReport {
    std::size_t round;
    std::size_t gates;
    std::size_t depth;
    std::size_t picks;
    std::string phase; // "internal" or "external"
};

struct OptimizeResult {
    Circuit circuit;
    std::vector<RoundReport> rounds;
    std::size_t total_picks = 0;
};

/// Alternates internal-library passes (run to fixpoint or the round bound)
/// with one external rewriting pass per round, until a full round applies
/// nothing or max_rounds is reached. Either rule set may be empty.
OptimizeResult optimize(const Circuit& target, const RuleSet& internal, const RuleSet& external,
                        const Policy& policy, std::size_t max_rounds = 5,
                        std::size_t delta = kDeltaAuto);

} // namespace qrw
