#pragma once

// Internal static-graph helpers shared by the library modules.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tgr/temporal_graph.hpp"

namespace tgr::detail {

// Compressed adjacency of a simple undirected graph; each arc records the
// index of the edge it came from in the input span.
class Adjacency {
  public:
    struct Arc {
        VertexId to;
        std::size_t edge;
    };

    Adjacency(std::size_t n, std::span<const StaticEdge> edges);

    [[nodiscard]] std::size_t vertex_count() const { return offsets_.size() - 1; }
    [[nodiscard]] std::size_t edge_count() const { return edge_count_; }
    [[nodiscard]] std::span<const Arc> arcs(VertexId v) const {
        return {arcs_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }

  private:
    std::vector<std::size_t> offsets_;
    std::vector<Arc> arcs_;
    std::size_t edge_count_;
};

// Number of vertices reachable from start, optionally ignoring one edge.
std::size_t count_reachable(const Adjacency& adj, VertexId start, std::optional<std::size_t> skip_edge);

// Sets mark[x] = value for every x reachable from start (ignoring skip_edge)
// whose mark differs from value. Returns the number of vertices marked and
// adds the number of arcs scanned to *work when given.
std::size_t mark_reachable(const Adjacency& adj, VertexId start, std::optional<std::size_t> skip_edge,
                           std::vector<signed char>& mark, signed char value, std::size_t* work = nullptr);

// Bridge flag per input edge (Tarjan low-link, iterative).
std::vector<bool> bridge_flags(const Adjacency& adj);

}  // namespace tgr::detail
