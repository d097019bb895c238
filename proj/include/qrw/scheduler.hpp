#pragma once

#include "qrw/matcher.hpp"

#include <cstdint>
#include <vector>

namespace qrw {

/// Conflict-resolution policy for overlapping replacement candidates.
struct Policy {
    enum class Kind { Precise, Greedy, Stochastic } kind = Kind::Greedy;
    std::uint64_t seed = 0;          // stochastic only
    std::size_t queue_cap = 10000;   // precise only

    static Policy precise(std::size_t queue_cap = 10000) {
        return {Kind::Precise, 0, queue_cap};
    }
    static Policy greedy() { return {Kind::Greedy, 0, 0}; }
    static Policy stochastic(std::uint64_t seed) { return {Kind::Stochastic, seed, 0}; }
};

/// Index-disjoint set of replacement candidates, ordered by each pick's
/// smallest target index.
struct Scheduler {
    std::vector<MatchCandidate> picks;
};

/// Candidates sharing a target index, tagged with the smallest shared index.
struct ConflictSet {
    std::size_t index;
    std::vector<std::size_t> members; // positions into the candidate vector
};

/// Groups candidates by shared target indices. Each member's conflict field
/// is set to the smallest index at which it collides; non-conflicting
/// candidates keep -1. Returned sets are ordered by index.
std::vector<ConflictSet> find_conflicts(std::vector<MatchCandidate>& candidates);

/// Thrown when the precise policy's scheduler queue exceeds its cap.
struct QueueCapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Left-to-right scan resolving conflicts per the policy: precise branches
/// over every member (BFS) and keeps the scheduler whose rewritten circuit
/// is shallowest; greedy takes the first-come member; stochastic draws one
/// with the seeded generator.
Scheduler solve_conflicts(const Circuit& target, std::vector<MatchCandidate> candidates,
                          const Policy& policy);

/// Precise-policy enumeration of every complete scheduler (the BFS frontier
/// of solve_conflicts before depth selection). Exposed for tests and for
/// callers that want the whole Pareto set.
std::vector<Scheduler> enumerate_schedulers(std::vector<MatchCandidate> candidates,
                                            std::size_t queue_cap = 10000);

} // namespace qrw
