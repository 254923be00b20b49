#pragma once

// Level-synchronous classification of temporal edges by the minimum number of
// valid relabels needed to make them non-bridges.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "tgr/reachability.hpp"
#include "tgr/temporal_graph.hpp"

namespace tgr {

// Result per temporal edge: level k >= 0, or unchangeable.
struct Changeability {
    std::optional<std::size_t> level;

    [[nodiscard]] bool changeable() const { return level.has_value(); }
    static Changeability unchangeable() { return {}; }
    static Changeability at_level(std::size_t k) { return {k}; }

    friend bool operator==(const Changeability&, const Changeability&) = default;
};

struct ChangeStats {
    // Cross entries inspected during expansion.
    std::size_t cross_visits = 0;
    // Same-pair entries skipped because the enabling relabel would collide.
    std::size_t same_pair_skips = 0;
};

class ChangeTable {
  public:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    ChangeTable(std::vector<TemporalEdge> edges, std::vector<std::size_t> levels, std::vector<std::size_t> back_refs);

    [[nodiscard]] std::size_t size() const { return edges_.size(); }
    [[nodiscard]] std::span<const TemporalEdge> edges() const { return edges_; }

    [[nodiscard]] Changeability at_index(std::size_t i) const;
    [[nodiscard]] Changeability at(const TemporalEdge& te) const;
    // Predecessor whose relabel turns this edge into a non-bridge (levels >= 1).
    [[nodiscard]] std::optional<TemporalEdge> back_ref(const TemporalEdge& te) const;
    [[nodiscard]] std::size_t back_ref_index(std::size_t i) const { return back_refs_[i]; }
    [[nodiscard]] std::size_t raw_level(std::size_t i) const { return levels_[i]; }
    [[nodiscard]] std::size_t index(const TemporalEdge& te) const;

    // Largest k with a non-empty level; nullopt when no edge is changeable.
    [[nodiscard]] std::optional<std::size_t> max_level() const;
    // Edges of level k in canonical order.
    [[nodiscard]] std::vector<TemporalEdge> level_set(std::size_t k) const;

  private:
    std::vector<TemporalEdge> edges_;
    std::vector<std::size_t> levels_;
    std::vector<std::size_t> back_refs_;
};

// cross must come from compute_cross(g). Change(0) is the set of non-bridges;
// level k+1 collects the not-yet-levelled bridges in Cross(e) of a level-k
// edge e. Levels and Cross lists are processed in canonical order. Entries
// on the same vertex pair are skipped since their relabel would collide.
[[nodiscard]] ChangeTable compute_change_table(const TemporalGraph& g, const CrossMap& cross,
                                               ChangeStats* stats = nullptr);

// Exactly level(target) relabels after which target is a non-bridge.
// Throws DomainError if target is unchangeable or absent.
[[nodiscard]] ReconfigSequence sequence_to_nonbridge(const TemporalGraph& g, const ChangeTable& table,
                                                     const TemporalEdge& target);

[[nodiscard]] std::map<TemporalEdge, Changeability> classify(const TemporalGraph& g);

}  // namespace tgr
