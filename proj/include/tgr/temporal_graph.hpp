#pragma once

// Core value types for temporal graphs: edges labelled with integer times in
// [1, T], snapshots, connectivity/bridge queries and edge relabeling.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tgr {

using VertexId = std::uint32_t;
using TimeLabel = std::int32_t;

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Argument outside its domain (time label out of [1, T], unknown vertex, ...).
class DomainError : public Error {
  public:
    using Error::Error;
};

// An operation was called on inputs violating its documented precondition.
class PreconditionError : public Error {
  public:
    using Error::Error;
};

// apply_relabel on a missing source edge, an occupied target slot, or from == to.
class RelabelError : public Error {
  public:
    using Error::Error;
};

// Unordered pair of distinct vertices, stored with the smaller index first.
struct StaticEdge {
    VertexId u = 0;
    VertexId v = 0;

    static StaticEdge make(VertexId a, VertexId b);

    [[nodiscard]] bool touches(VertexId x) const { return u == x || v == x; }
    [[nodiscard]] VertexId other(VertexId x) const { return x == u ? v : u; }

    friend auto operator<=>(const StaticEdge&, const StaticEdge&) = default;
};

struct TemporalEdge {
    StaticEdge edge;
    TimeLabel time = 1;

    friend auto operator<=>(const TemporalEdge&, const TemporalEdge&) = default;
};

struct RelabelOp {
    StaticEdge edge;
    TimeLabel from = 1;
    TimeLabel to = 1;

    [[nodiscard]] RelabelOp reversed() const { return {edge, to, from}; }
    [[nodiscard]] TemporalEdge source() const { return {edge, from}; }
    [[nodiscard]] TemporalEdge target() const { return {edge, to}; }

    friend bool operator==(const RelabelOp&, const RelabelOp&) = default;
};

struct ReconfigSequence {
    std::vector<RelabelOp> ops;

    [[nodiscard]] std::size_t length() const { return ops.size(); }
    void append(const ReconfigSequence& other) { ops.insert(ops.end(), other.ops.begin(), other.ops.end()); }

    friend bool operator==(const ReconfigSequence&, const ReconfigSequence&) = default;
};

// Static graph of the edges active at one time label. Holds its own edge list.
class Snapshot {
  public:
    Snapshot(std::size_t vertex_count, TimeLabel time, std::vector<StaticEdge> edges);

    [[nodiscard]] std::size_t vertex_count() const { return n_; }
    [[nodiscard]] TimeLabel time() const { return time_; }
    [[nodiscard]] std::span<const StaticEdge> edges() const { return edges_; }
    [[nodiscard]] auto begin() const { return edges_.begin(); }
    [[nodiscard]] auto end() const { return edges_.end(); }

  private:
    std::size_t n_;
    TimeLabel time_;
    std::vector<StaticEdge> edges_;
};

// Immutable temporal graph. Edges are kept in canonical order
// (min endpoint, max endpoint, time); vertex names are shared between graphs
// derived from one another by relabeling.
class TemporalGraph {
  public:
    // Vertices get the names "v0", "v1", ... .
    TemporalGraph(std::size_t vertex_count, TimeLabel lifetime, std::vector<TemporalEdge> edges);
    TemporalGraph(std::vector<std::string> names, TimeLabel lifetime, std::vector<TemporalEdge> edges);

    [[nodiscard]] std::size_t vertex_count() const { return names_->size(); }
    [[nodiscard]] TimeLabel lifetime() const { return lifetime_; }
    [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }
    [[nodiscard]] std::span<const TemporalEdge> edges() const { return edges_; }

    [[nodiscard]] bool contains(const TemporalEdge& te) const;
    // Position of te in edges(), if present.
    [[nodiscard]] std::optional<std::size_t> index_of(const TemporalEdge& te) const;
    // Time labels at which the pair e is active, ascending.
    [[nodiscard]] std::vector<TimeLabel> times_of(const StaticEdge& e) const;

    [[nodiscard]] const std::string& name(VertexId v) const;
    [[nodiscard]] std::optional<VertexId> find_vertex(std::string_view name) const;
    [[nodiscard]] const std::vector<std::string>& names() const { return *names_; }
    [[nodiscard]] bool same_vertices_and_lifetime(const TemporalGraph& other) const;

    // Returns a graph with the edge list replaced; names and lifetime are shared.
    [[nodiscard]] TemporalGraph with_edges(std::vector<TemporalEdge> edges) const;

    friend bool operator==(const TemporalGraph& a, const TemporalGraph& b);

  private:
    struct SharedNames;
    TemporalGraph(std::shared_ptr<const std::vector<std::string>> names,
                  std::shared_ptr<const SharedNames> lookup, TimeLabel lifetime,
                  std::vector<TemporalEdge> edges);
    void check_edges();

    std::shared_ptr<const std::vector<std::string>> names_;
    std::shared_ptr<const SharedNames> lookup_;
    TimeLabel lifetime_;
    std::vector<TemporalEdge> edges_;
};

[[nodiscard]] Snapshot snapshot(const TemporalGraph& g, TimeLabel t);

[[nodiscard]] bool is_connected(const Snapshot& s);
// Connectivity of s with `removed` deleted (removed must be one of its edges).
[[nodiscard]] bool is_connected_without(const Snapshot& s, const StaticEdge& removed);
[[nodiscard]] bool is_always_connected(const TemporalGraph& g);

// Bridges of one static snapshot (any graph, connected or not), canonical order.
[[nodiscard]] std::vector<StaticEdge> snapshot_bridges(const Snapshot& s);

// Per-edge bridge flags aligned with g.edges(). Requires g always-connected.
[[nodiscard]] std::vector<bool> bridge_mask(const TemporalGraph& g);
// Requires g always-connected; throws PreconditionError otherwise.
[[nodiscard]] std::vector<TemporalEdge> find_bridges(const TemporalGraph& g);
// Removal test on the single snapshot te.time; te must be present.
[[nodiscard]] bool is_bridge(const TemporalGraph& g, const TemporalEdge& te);

[[nodiscard]] bool is_valid_relabel(const TemporalGraph& g, const RelabelOp& op);
[[nodiscard]] TemporalGraph apply_relabel(const TemporalGraph& g, const RelabelOp& op);
// Applies every op in order; throws RelabelError on the first that cannot be applied.
[[nodiscard]] TemporalGraph apply_sequence(const TemporalGraph& g, const ReconfigSequence& seq);

enum class StepFailure { None, MissingEdge, Collision, SameTime, TimeOutOfRange, DisconnectsSnapshot };

[[nodiscard]] std::string_view to_string(StepFailure f);

struct ValidationReport {
    bool ok = false;
    std::optional<std::size_t> failed_step;
    StepFailure failure = StepFailure::None;
    bool ends_at_target = false;
    std::size_t length = 0;
};

[[nodiscard]] ValidationReport validate_sequence(const TemporalGraph& g1, const ReconfigSequence& seq,
                                                 const TemporalGraph& g2);

// |E1 \ E2|. Throws PreconditionError when vertex sets or lifetimes differ.
[[nodiscard]] std::size_t difference(const TemporalGraph& g1, const TemporalGraph& g2);
[[nodiscard]] std::vector<TemporalEdge> edges_only_in_first(const TemporalGraph& g1, const TemporalGraph& g2);

[[nodiscard]] bool check_pair_counts(const TemporalGraph& g1, const TemporalGraph& g2);
// First pair (canonical order) whose number of time labels differs, if any.
[[nodiscard]] std::optional<StaticEdge> first_pair_count_mismatch(const TemporalGraph& g1, const TemporalGraph& g2);

}  // namespace tgr
