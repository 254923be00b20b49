#include "tgr/planner.hpp"

#include <algorithm>
#include <stdexcept>

#include "tgr/changeability.hpp"
#include "tgr/reachability.hpp"

namespace tgr {

UnchangeableEdgeError::UnchangeableEdgeError(TemporalEdge witness)
    : PreconditionError("differing edge is unchangeable"), witness_(witness) {}

namespace {

void require_plannable(const TemporalGraph& g1, const TemporalGraph& g2) {
    if (!g1.same_vertices_and_lifetime(g2)) {
        throw PreconditionError("graphs differ in vertex set or lifetime");
    }
    if (!is_always_connected(g1) || !is_always_connected(g2)) {
        throw PreconditionError("input graph is not always-connected");
    }
}

}  // namespace

DifferenceStep decrease_difference(const TemporalGraph& g1, const TemporalGraph& g2) {
    if (!check_pair_counts(g1, g2)) {
        throw PreconditionError("pair counts differ between the graphs");
    }
    const auto differing = edges_only_in_first(g1, g2);
    if (differing.empty()) {
        throw PreconditionError("graphs are already equal");
    }
    const auto table = compute_change_table(g1, compute_cross(g1));

    std::optional<TemporalEdge> best;
    std::size_t best_level = 0;
    for (const auto& te : differing) {
        auto c = table.at(te);
        if (!c.changeable()) {
            throw UnchangeableEdgeError(te);
        }
        if (!best || *c.level < best_level) {
            best = te;
            best_level = *c.level;
        }
    }

    DifferenceStep step;
    step.chosen = *best;
    step.level = best_level;
    const auto prep = sequence_to_nonbridge(g1, table, *best);

    TemporalGraph a = g1;
    TemporalGraph b = g2;
    for (const auto& op : prep.ops) {
        if (!is_valid_relabel(a, op)) {
            throw std::logic_error("change table produced an invalid relabel");
        }
        a = apply_relabel(a, op);
        // The second graph may already hold the target slot while still holding
        // the source; it then matches the first graph on that slot as is.
        if (b.contains(op.target()) && b.contains(op.source())) {
            continue;
        }
        if (!is_valid_relabel(b, op)) {
            throw std::logic_error("shared relabel is invalid on the second graph");
        }
        b = apply_relabel(b, op);
        step.g2_ops.ops.push_back(op);
    }

    // Smallest time at which the pair exists in b but not in a.
    std::optional<TimeLabel> target;
    for (auto t : b.times_of(best->edge)) {
        if (!a.contains({best->edge, t})) {
            target = t;
            break;
        }
    }
    if (!target) {
        throw std::logic_error("no free target slot for the differing edge");
    }
    RelabelOp last{best->edge, best->time, *target};
    if (!is_valid_relabel(a, last)) {
        throw std::logic_error("differing edge is still a bridge after its change sequence");
    }
    step.g1_ops = prep;
    step.g1_ops.ops.push_back(last);
    return step;
}

PlanOutcome plan(const TemporalGraph& g1, const TemporalGraph& g2, const PhaseCallback& on_phase) {
    require_plannable(g1, g2);
    PlanOutcome out;
    if (auto pair = first_pair_count_mismatch(g1, g2)) {
        out.kind = InfeasibleKind::PairCountMismatch;
        out.mismatched_pair = pair;
        return out;
    }

    TemporalGraph a = g1;
    TemporalGraph b = g2;
    std::vector<RelabelOp> forward;
    std::vector<RelabelOp> backward;
    std::size_t before = difference(a, b);
    while (before > 0) {
        DifferenceStep step;
        try {
            step = decrease_difference(a, b);
        } catch (const UnchangeableEdgeError& e) {
            if (out.phases > 0) {
                throw std::logic_error("differing edge became unchangeable mid-plan");
            }
            out.kind = InfeasibleKind::UnchangeableEdge;
            out.witness = e.witness();
            return out;
        }
        a = apply_sequence(a, step.g1_ops);
        b = apply_sequence(b, step.g2_ops);
        std::size_t after = difference(a, b);
        if (after + 1 != before) {
            throw std::logic_error("phase did not reduce the difference by one");
        }
        before = after;
        forward.insert(forward.end(), step.g1_ops.ops.begin(), step.g1_ops.ops.end());
        backward.insert(backward.end(), step.g2_ops.ops.begin(), step.g2_ops.ops.end());
        out.phase_levels.push_back(step.level);
        ++out.phases;
        if (on_phase) {
            on_phase(step);
        }
    }

    out.feasible = true;
    out.sequence.ops = std::move(forward);
    for (auto it = backward.rbegin(); it != backward.rend(); ++it) {
        out.sequence.ops.push_back(it->reversed());
    }
    out.meeting_graph = a;
    return out;
}

FeasibilityResult feasible(const TemporalGraph& g1, const TemporalGraph& g2) {
    require_plannable(g1, g2);
    FeasibilityResult out;
    if (auto pair = first_pair_count_mismatch(g1, g2)) {
        out.kind = InfeasibleKind::PairCountMismatch;
        out.mismatched_pair = pair;
        return out;
    }
    const auto table = compute_change_table(g1, compute_cross(g1));
    for (const auto& te : edges_only_in_first(g1, g2)) {
        if (!table.at(te).changeable()) {
            out.kind = InfeasibleKind::UnchangeableEdge;
            out.witness = te;
            return out;
        }
    }
    out.feasible = true;
    return out;
}

}  // namespace tgr
