#pragma once

// Builds lifetime-2 instance pairs from Vertex Cover instances: a cover of
// size <= k yields a valid sequence of length <= 2k + 4|E| between them.
//
// Gadget vertex names (for source vertices x, y with edge {x, y}, x < y):
//   x.1 x.2 x.3         vertex cycle; x.1-x.2 and x.2-x.3 at time 2 are the
//                       activation edges, x.3-x.1 exists at both times
//   x_y x_y'            pair on x's time-1 transition path for edge {x, y}
//   e_x_y e_x_y.1 e_x_y.2   edge gadget; e_x_y-e_x_y.1 at 1 and
//                       e_x_y-e_x_y.2 at 2 (swapped in the target graph)
// Each transition path runs x.1, x_y1, x_y1', x_y2, x_y2', ..., x.2 with the
// neighbours y1 < y2 < ... in vertex order. The backbone at both times runs
// through every x.3 (vertex order) and then every e_x_y (edge order).

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tgr/temporal_graph.hpp"

namespace tgr {

// Simple undirected graph with a cover budget. Vertex order is the index
// order; edges are stored with the smaller index first, sorted.
struct VCInstance {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::size_t k = 0;

    // Canonicalizes and validates (no self-loops, no duplicates, indices in range).
    static VCInstance make(std::vector<std::string> vertices, std::vector<std::pair<std::size_t, std::size_t>> edges,
                           std::size_t k);

    [[nodiscard]] std::optional<std::size_t> find(const std::string& name) const;
    [[nodiscard]] bool is_cover(const std::vector<std::size_t>& cover) const;
    // Incident edge indices of v, ordered by the other endpoint.
    [[nodiscard]] std::vector<std::size_t> incident(std::size_t v) const;
};

// Edge list: one "u v" pair per line, '#' comments. Vertex indices follow the
// lexicographic order of the names.
[[nodiscard]] VCInstance parse_edge_list(std::istream& in, std::size_t k);
void write_edge_list(std::ostream& out, const VCInstance& inst);

struct VertexGadget {
    VertexId v1 = 0;
    VertexId v2 = 0;
    VertexId v3 = 0;
};

struct EdgeGadget {
    std::size_t u = 0;
    std::size_t v = 0;
    VertexId e = 0;
    VertexId e1 = 0;
    VertexId e2 = 0;
    // Transition pair of u for this edge (u_v, u_v') and of v (v_u, v_u').
    VertexId u_v = 0;
    VertexId u_v_prime = 0;
    VertexId v_u = 0;
    VertexId v_u_prime = 0;
};

struct ReductionOutput {
    VCInstance instance;
    TemporalGraph g1;
    TemporalGraph g2;
    std::size_t ell = 0;
    std::vector<VertexGadget> vertex_gadgets;
    std::vector<EdgeGadget> edge_gadgets;
};

[[nodiscard]] ReductionOutput build_reduction(const VCInstance& inst);

// Sequence of length 2|cover| + 4|E| from g1 to g2. Throws DomainError if the
// vertices do not cover every edge.
[[nodiscard]] ReconfigSequence cover_to_sequence(const ReductionOutput& red, std::vector<std::size_t> cover);

// Prerequisite edges of edge gadget `edge_index` in g1: the two time-2 edges
// into e_uv.2 from u_v' and v_u', plus every time-1 edge touching u_v' or v_u'.
[[nodiscard]] std::vector<TemporalEdge> prerequisite_edges(const ReductionOutput& red, std::size_t edge_index);
[[nodiscard]] std::vector<TemporalEdge> prerequisite_edges(const ReductionOutput& red, const std::string& u,
                                                           const std::string& v);

// Smallest cover of size <= inst.k (lexicographically first among the
// smallest), or nullopt. Exhaustive; requires at most 20 vertices.
[[nodiscard]] std::optional<std::vector<std::size_t>> brute_force_vertex_cover(const VCInstance& inst);

}  // namespace tgr
