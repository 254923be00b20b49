#include "graph_util.hpp"

#include <algorithm>
#include <limits>

namespace tgr::detail {

Adjacency::Adjacency(std::size_t n, std::span<const StaticEdge> edges)
    : offsets_(n + 1, 0), arcs_(2 * edges.size()), edge_count_(edges.size()) {
    for (const auto& e : edges) {
        ++offsets_[e.u + 1];
        ++offsets_[e.v + 1];
    }
    for (std::size_t i = 0; i < n; ++i) {
        offsets_[i + 1] += offsets_[i];
    }
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        arcs_[fill[edges[i].u]++] = {edges[i].v, i};
        arcs_[fill[edges[i].v]++] = {edges[i].u, i};
    }
}

std::size_t count_reachable(const Adjacency& adj, VertexId start, std::optional<std::size_t> skip_edge) {
    if (adj.vertex_count() == 0) {
        return 0;
    }
    std::vector<signed char> mark(adj.vertex_count(), 0);
    return mark_reachable(adj, start, skip_edge, mark, 1);
}

std::size_t mark_reachable(const Adjacency& adj, VertexId start, std::optional<std::size_t> skip_edge,
                           std::vector<signed char>& mark, signed char value, std::size_t* work) {
    std::vector<VertexId> stack{start};
    mark[start] = value;
    std::size_t count = 1;
    std::size_t scanned = 0;
    while (!stack.empty()) {
        VertexId x = stack.back();
        stack.pop_back();
        for (const auto& arc : adj.arcs(x)) {
            ++scanned;
            if (skip_edge && arc.edge == *skip_edge) {
                continue;
            }
            if (mark[arc.to] != value) {
                mark[arc.to] = value;
                ++count;
                stack.push_back(arc.to);
            }
        }
    }
    if (work != nullptr) {
        *work += scanned;
    }
    return count;
}

std::vector<bool> bridge_flags(const Adjacency& adj) {
    constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();
    const std::size_t n = adj.vertex_count();
    std::vector<bool> bridge(adj.edge_count(), false);
    std::vector<std::size_t> disc(n, kUnvisited);
    std::vector<std::size_t> low(n, 0);

    struct Frame {
        VertexId v;
        std::size_t parent_edge;
        std::size_t next_arc;
    };
    std::vector<Frame> stack;
    std::size_t clock = 0;

    for (VertexId root = 0; root < n; ++root) {
        if (disc[root] != kUnvisited) {
            continue;
        }
        disc[root] = low[root] = clock++;
        stack.push_back({root, kUnvisited, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            auto arcs = adj.arcs(f.v);
            if (f.next_arc < arcs.size()) {
                const auto arc = arcs[f.next_arc++];
                if (arc.edge == f.parent_edge) {
                    continue;
                }
                if (disc[arc.to] == kUnvisited) {
                    disc[arc.to] = low[arc.to] = clock++;
                    stack.push_back({arc.to, arc.edge, 0});
                } else {
                    low[f.v] = std::min(low[f.v], disc[arc.to]);
                }
                continue;
            }
            const Frame done = f;
            stack.pop_back();
            if (!stack.empty()) {
                Frame& parent = stack.back();
                low[parent.v] = std::min(low[parent.v], low[done.v]);
                if (low[done.v] > disc[parent.v]) {
                    bridge[done.parent_edge] = true;
                }
            }
        }
    }
    return bridge;
}

}  // namespace tgr::detail
