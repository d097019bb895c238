#include "qrw/scheduler.hpp"

#include "qrw/rewriter.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>

namespace qrw {

namespace {

// Candidate order used everywhere ties must break deterministically:
// smallest first index, then rule order, then full index list.
bool candidate_before(const MatchCandidate& a, const MatchCandidate& b) {
    if (a.first_index() != b.first_index()) {
        return a.first_index() < b.first_index();
    }
    if (a.rule_index != b.rule_index) {
        return a.rule_index < b.rule_index;
    }
    return a.indices < b.indices;
}

} // namespace

std::vector<ConflictSet> find_conflicts(std::vector<MatchCandidate>& candidates) {
    std::map<std::size_t, std::vector<std::size_t>> claims;
    for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
        candidates[ci].conflict = -1;
        for (std::size_t idx : candidates[ci].indices) {
            claims[idx].push_back(ci);
        }
    }
    std::vector<ConflictSet> out;
    for (const auto& [idx, members] : claims) {
        if (members.size() < 2) {
            continue;
        }
        out.push_back(ConflictSet{idx, members});
        for (std::size_t ci : members) {
            if (candidates[ci].conflict < 0) {
                candidates[ci].conflict = static_cast<std::int64_t>(idx);
            }
        }
    }
    return out;
}

namespace {

struct PartialScheduler {
    std::vector<std::size_t> picked;  // candidate positions, in pick order
    std::set<std::size_t> consumed;   // target indices already claimed
};

bool overlaps(const MatchCandidate& c, const std::set<std::size_t>& consumed) {
    for (std::size_t idx : c.indices) {
        if (consumed.count(idx)) {
            return true;
        }
    }
    return false;
}

// Advances a partial scheduler to its next decision point: appends every
// live candidate that shares no index with another live candidate, then
// returns the members of the lowest-indexed conflict (empty when complete).
std::vector<std::size_t> advance_partial(const std::vector<MatchCandidate>& candidates,
                                 PartialScheduler& ps) {
    while (true) {
        std::vector<std::size_t> live;
        for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
            if (!overlaps(candidates[ci], ps.consumed)) {
                live.push_back(ci);
            }
        }
        std::map<std::size_t, std::vector<std::size_t>> claims;
        for (std::size_t ci : live) {
            for (std::size_t idx : candidates[ci].indices) {
                claims[idx].push_back(ci);
            }
        }
        std::size_t conflict_index = SIZE_MAX;
        std::set<std::size_t> contested;
        for (const auto& [idx, members] : claims) {
            if (members.size() >= 2) {
                contested.insert(members.begin(), members.end());
                conflict_index = std::min(conflict_index, idx);
            }
        }

        std::vector<std::size_t> unconflicted;
        for (std::size_t ci : live) {
            if (!contested.count(ci)) {
                unconflicted.push_back(ci);
            }
        }
        std::sort(unconflicted.begin(), unconflicted.end(), [&](std::size_t a, std::size_t b) {
            return candidate_before(candidates[a], candidates[b]);
        });
        // A candidate whose first index precedes the conflict is committed
        // now; everything after the conflict waits for the branch decision.
        bool appended = false;
        for (std::size_t ci : unconflicted) {
            if (candidates[ci].first_index() < conflict_index) {
                ps.picked.push_back(ci);
                ps.consumed.insert(candidates[ci].indices.begin(), candidates[ci].indices.end());
                appended = true;
            }
        }
        if (appended) {
            continue; // re-derive liveness; disjointness may have changed
        }
        if (conflict_index == SIZE_MAX) {
            return {};
        }
        std::vector<std::size_t> members = claims[conflict_index];
        std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
            return candidate_before(candidates[a], candidates[b]);
        });
        return members;
    }
}

Scheduler assemble(const std::vector<MatchCandidate>& candidates,
                   const std::vector<std::size_t>& picked) {
    Scheduler s;
    for (std::size_t ci : picked) {
        s.picks.push_back(candidates[ci]);
    }
    std::sort(s.picks.begin(), s.picks.end(), candidate_before);
    return s;
}

// Unbiased bounded draw; rejection sampling keeps it deterministic for a
// fixed seed independent of library distributions.
std::size_t draw_uniform(std::mt19937_64& rng, std::size_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    while (true) {
        std::uint64_t v = rng();
        if (v < limit) {
            return static_cast<std::size_t>(v % n);
        }
    }
}

} // namespace

std::vector<Scheduler> enumerate_schedulers(std::vector<MatchCandidate> candidates,
                                            std::size_t queue_cap) {
    find_conflicts(candidates);
    std::vector<Scheduler> complete;
    std::deque<PartialScheduler> queue;
    queue.push_back({});
    std::set<std::vector<std::size_t>> seen;
    while (!queue.empty()) {
        PartialScheduler ps = std::move(queue.front());
        queue.pop_front();
        std::vector<std::size_t> members = advance_partial(candidates, ps);
        if (members.empty()) {
            complete.push_back(assemble(candidates, ps.picked));
            continue;
        }
        for (std::size_t ci : members) {
            PartialScheduler next = ps;
            next.picked.push_back(ci);
            next.consumed.insert(candidates[ci].indices.begin(), candidates[ci].indices.end());
            std::vector<std::size_t> key = next.picked;
            std::sort(key.begin(), key.end());
            if (!seen.insert(std::move(key)).second) {
                continue;
            }
            queue.push_back(std::move(next));
            if (queue.size() > queue_cap) {
                throw QueueCapacityError(
                    "precise scheduler queue exceeded cap of " + std::to_string(queue_cap) +
                    "; use the greedy or stochastic policy for this circuit");
            }
        }
    }
    return complete;
}

Scheduler solve_conflicts(const Circuit& target, std::vector<MatchCandidate> candidates,
                          const Policy& policy) {
    find_conflicts(candidates);

    if (policy.kind == Policy::Kind::Precise) {
        std::vector<Scheduler> all = enumerate_schedulers(candidates, policy.queue_cap);
        if (all.empty()) {
            return {};
        }
        // Smallest depth wins; ties fall to gate count, then to the
        // lexicographically smallest concatenated index sequence.
        const Scheduler* best = nullptr;
        std::size_t best_depth = 0;
        std::size_t best_gates = 0;
        std::vector<std::size_t> best_key;
        for (const Scheduler& s : all) {
            Circuit rewritten = substitute(target, s).remove_identities();
            std::size_t d = rewritten.depth();
            std::size_t gates = rewritten.size();
            std::vector<std::size_t> key;
            for (const auto& p : s.picks) {
                key.insert(key.end(), p.indices.begin(), p.indices.end());
            }
            if (!best || d < best_depth || (d == best_depth && gates < best_gates) ||
                (d == best_depth && gates == best_gates && key < best_key)) {
                best = &s;
                best_depth = d;
                best_gates = gates;
                best_key = std::move(key);
            }
        }
        return *best;
    }

    std::mt19937_64 rng(policy.seed);
    PartialScheduler ps;
    while (true) {
        std::vector<std::size_t> members = advance_partial(candidates, ps);
        if (members.empty()) {
            return assemble(candidates, ps.picked);
        }
        std::size_t choice = 0;
        if (policy.kind == Policy::Kind::Stochastic) {
            choice = draw_uniform(rng, members.size());
        }
        // Greedy: members are already ordered first-come-first-served.
        std::size_t ci = members[choice];
        ps.picked.push_back(ci);
        ps.consumed.insert(candidates[ci].indices.begin(), candidates[ci].indices.end());
    }
}

} // namespace qrw
