#pragma once

// Exhaustive breadth-first search over always-connected temporal graphs
// reachable by valid relabels. Ground truth for small instances only: the
// state space grows exponentially in the number of temporal edges.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "tgr/temporal_graph.hpp"

namespace tgr {

struct OracleBudget {
    std::size_t max_states = 5'000'000;
    // States deeper than this are not expanded.
    std::optional<std::size_t> max_depth;
};

enum class OracleStatus { Found, Unreachable, BudgetExceeded };

struct OracleResult {
    OracleStatus status = OracleStatus::BudgetExceeded;
    // Found: a minimum-length sequence (oracle_shortest_sequence) or the minimum
    // step count (oracle_min_steps_to_nonbridge).
    ReconfigSequence sequence;
    std::size_t steps = 0;
    std::size_t states_visited = 0;
};

// Sorted temporal edge list identifying a graph with fixed vertices and lifetime.
struct CanonicalState {
    std::vector<std::uint64_t> key;

    static CanonicalState of(const TemporalGraph& g);
    friend bool operator==(const CanonicalState&, const CanonicalState&) = default;
};

struct CanonicalStateHash {
    std::size_t operator()(const CanonicalState& s) const noexcept;
};

// Requires g1, g2 always-connected on the same vertices and lifetime.
// Unreachable is reported only after the whole reachable component was
// enumerated within budget.
[[nodiscard]] OracleResult oracle_shortest_sequence(const TemporalGraph& g1, const TemporalGraph& g2,
                                                    const OracleBudget& budget = {});

// Minimum number of valid relabels after which the slot `target` exists and is
// a non-bridge. Status Unreachable means "never".
[[nodiscard]] OracleResult oracle_min_steps_to_nonbridge(const TemporalGraph& g, const TemporalEdge& target,
                                                         const OracleBudget& budget = {});

// Every graph reachable from g by valid relabels (including g itself), in BFS
// order; nullopt if the budget runs out first.
[[nodiscard]] std::optional<std::vector<TemporalGraph>> oracle_reachable_set(const TemporalGraph& g,
                                                                             const OracleBudget& budget = {});

// Per snapshot: a uniformly random labelled spanning tree plus `extra` distinct
// non-tree edges. Deterministic for a given seed. Throws DomainError when n or
// T is zero or `extra` exceeds the free pairs per snapshot.
[[nodiscard]] TemporalGraph generate_random_instance(std::size_t n, TimeLabel lifetime, std::size_t extra,
                                                     std::uint64_t seed);

}  // namespace tgr
