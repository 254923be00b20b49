#pragma once

// Feasibility decision and sequence synthesis between two always-connected
// temporal graphs over the same vertices and lifetime.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "tgr/temporal_graph.hpp"

namespace tgr {

// Raised when a differing edge of the first graph is unchangeable.
class UnchangeableEdgeError : public PreconditionError {
  public:
    explicit UnchangeableEdgeError(TemporalEdge witness);
    [[nodiscard]] const TemporalEdge& witness() const { return witness_; }

  private:
    TemporalEdge witness_;
};

// One round of moving both graphs towards each other.
struct DifferenceStep {
    // Differing edge of g1 that was moved, and its change level.
    TemporalEdge chosen;
    std::size_t level = 0;
    // level + 1 ops valid on g1; the last one moves `chosen`.
    ReconfigSequence g1_ops;
    // The first `level` ops of g1_ops, valid on g2, minus those whose target
    // slot g2 already holds.
    ReconfigSequence g2_ops;
};

// Requires difference(g1, g2) > 0 and equal pair counts. Picks the differing
// edge of g1 with the smallest level (ties: canonical order) and the smallest
// free target time present in g2. Throws UnchangeableEdgeError carrying the
// first unchangeable differing edge, if there is one.
[[nodiscard]] DifferenceStep decrease_difference(const TemporalGraph& g1, const TemporalGraph& g2);

enum class InfeasibleKind { UnchangeableEdge, PairCountMismatch };

struct PlanOutcome {
    bool feasible = false;

    // Feasible.
    ReconfigSequence sequence;
    std::optional<TemporalGraph> meeting_graph;
    std::size_t phases = 0;
    // Change level of the edge moved in each phase.
    std::vector<std::size_t> phase_levels;

    // Infeasible.
    std::optional<InfeasibleKind> kind;
    std::optional<TemporalEdge> witness;
    std::optional<StaticEdge> mismatched_pair;
};

struct FeasibilityResult {
    bool feasible = false;
    std::optional<InfeasibleKind> kind;
    std::optional<TemporalEdge> witness;
    std::optional<StaticEdge> mismatched_pair;
};

// Called after each phase with that phase's ops on g1 and on g2.
using PhaseCallback = std::function<void(const DifferenceStep&)>;

// Requires both graphs always-connected with the same vertices and lifetime
// (PreconditionError otherwise). The feasible sequence runs g1 -> meeting
// graph -> g2, the second half being the g2-side ops reversed and inverted.
[[nodiscard]] PlanOutcome plan(const TemporalGraph& g1, const TemporalGraph& g2,
                               const PhaseCallback& on_phase = nullptr);

[[nodiscard]] FeasibilityResult feasible(const TemporalGraph& g1, const TemporalGraph& g2);

}  // namespace tgr
