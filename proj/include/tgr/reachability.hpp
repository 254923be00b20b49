#pragma once

// Reachability partitions of bridges and the map from each temporal edge to the
// bridges whose partition its vertex pair crosses.

#include <cstddef>
#include <span>
#include <vector>

#include "tgr/temporal_graph.hpp"

namespace tgr {

// The two components of snapshot bridge.time after deleting the bridge.
// Stored as one side flag per vertex.
class ReachabilityPartition {
  public:
    ReachabilityPartition(TemporalEdge bridge, std::vector<bool> on_v_side);

    [[nodiscard]] const TemporalEdge& bridge() const { return bridge_; }
    // True when x is reachable from bridge().edge.u.
    [[nodiscard]] bool in_u_component(VertexId x) const { return !on_v_side_[x]; }
    [[nodiscard]] std::vector<VertexId> comp_u() const;
    [[nodiscard]] std::vector<VertexId> comp_v() const;
    [[nodiscard]] std::size_t vertex_count() const { return on_v_side_.size(); }

    friend bool operator==(const ReachabilityPartition&, const ReachabilityPartition&) = default;

  private:
    TemporalEdge bridge_;
    std::vector<bool> on_v_side_;
};

// Throws DomainError if `bridge` is absent or is not a bridge of its snapshot.
[[nodiscard]] ReachabilityPartition reachability_partition(const TemporalGraph& g, const TemporalEdge& bridge);

[[nodiscard]] bool is_crossing(const ReachabilityPartition& p, const StaticEdge& e);

struct CrossStats {
    std::size_t bridges = 0;
    // Adjacency arcs scanned by the partition traversals.
    std::size_t traversal_work = 0;
    // Incidences inspected while collecting crossing edges.
    std::size_t crossing_work = 0;
    std::size_t entries = 0;
    // Largest traversal_work + crossing_work spent on a single bridge.
    std::size_t max_work_per_bridge = 0;
};

// For every temporal edge (aligned with g.edges()), the bridges (as indices
// into g.edges(), ascending) whose reachability partition the edge's pair
// crosses. A bridge never lists itself.
class CrossMap {
  public:
    CrossMap(std::vector<TemporalEdge> edges, std::vector<std::vector<std::size_t>> entries);

    [[nodiscard]] std::size_t size() const { return entries_.size(); }
    [[nodiscard]] std::span<const std::size_t> at_index(std::size_t edge_index) const { return entries_[edge_index]; }
    [[nodiscard]] std::vector<TemporalEdge> at(const TemporalEdge& te) const;
    [[nodiscard]] const TemporalEdge& edge(std::size_t index) const { return edges_[index]; }
    [[nodiscard]] std::span<const TemporalEdge> edges() const { return edges_; }
    [[nodiscard]] std::size_t total_entries() const;

  private:
    std::vector<TemporalEdge> edges_;
    std::vector<std::vector<std::size_t>> entries_;
};

// Requires g always-connected. Each bridge's partition is computed once with
// two traversals of its snapshot; crossing pairs are then collected from the
// smaller side's incident edges, so per-bridge work is O(n + M).
[[nodiscard]] CrossMap compute_cross(const TemporalGraph& g, CrossStats* stats = nullptr);

}  // namespace tgr
