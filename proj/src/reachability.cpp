#include "tgr/reachability.hpp"

#include <algorithm>

#include "graph_util.hpp"

namespace tgr {

ReachabilityPartition::ReachabilityPartition(TemporalEdge bridge, std::vector<bool> on_v_side)
    : bridge_(bridge), on_v_side_(std::move(on_v_side)) {}

std::vector<VertexId> ReachabilityPartition::comp_u() const {
    std::vector<VertexId> out;
    for (VertexId x = 0; x < on_v_side_.size(); ++x) {
        if (!on_v_side_[x]) {
            out.push_back(x);
        }
    }
    return out;
}

std::vector<VertexId> ReachabilityPartition::comp_v() const {
    std::vector<VertexId> out;
    for (VertexId x = 0; x < on_v_side_.size(); ++x) {
        if (on_v_side_[x]) {
            out.push_back(x);
        }
    }
    return out;
}

namespace {

// Index lists of the edges at each time, plus their static endpoints.
struct SnapshotIndex {
    std::vector<std::vector<std::size_t>> ids;
    std::vector<std::vector<StaticEdge>> edges;

    explicit SnapshotIndex(const TemporalGraph& g)
        : ids(static_cast<std::size_t>(g.lifetime()) + 1), edges(static_cast<std::size_t>(g.lifetime()) + 1) {
        const auto all = g.edges();
        for (std::size_t i = 0; i < all.size(); ++i) {
            auto t = static_cast<std::size_t>(all[i].time);
            ids[t].push_back(i);
            edges[t].push_back(all[i].edge);
        }
    }
};

constexpr signed char kUnseen = 0;
constexpr signed char kUSide = 1;
constexpr signed char kVSide = 2;

// Marks both sides of the bridge at position `local` of adj's edge list.
// Returns false if the endpoints are still connected or some vertex is
// unreachable from both (the snapshot was not connected).
bool split(const detail::Adjacency& adj, const StaticEdge& bridge, std::size_t local, std::vector<signed char>& mark,
           std::size_t* work) {
    std::fill(mark.begin(), mark.end(), kUnseen);
    std::size_t seen = detail::mark_reachable(adj, bridge.u, local, mark, kUSide, work);
    if (mark[bridge.v] == kUSide) {
        return false;
    }
    seen += detail::mark_reachable(adj, bridge.v, local, mark, kVSide, work);
    return seen == adj.vertex_count();
}

}  // namespace

ReachabilityPartition reachability_partition(const TemporalGraph& g, const TemporalEdge& bridge) {
    if (!g.contains(bridge)) {
        throw DomainError("reachability partition of an absent edge");
    }
    auto snap = snapshot(g, bridge.time);
    std::size_t local = 0;
    while (snap.edges()[local] != bridge.edge) {
        ++local;
    }
    detail::Adjacency adj(g.vertex_count(), snap.edges());
    std::vector<signed char> mark(g.vertex_count(), kUnseen);
    if (!split(adj, bridge.edge, local, mark, nullptr)) {
        throw DomainError("edge is not a bridge of a connected snapshot");
    }
    std::vector<bool> on_v(g.vertex_count());
    for (std::size_t x = 0; x < mark.size(); ++x) {
        on_v[x] = mark[x] == kVSide;
    }
    return ReachabilityPartition(bridge, std::move(on_v));
}

bool is_crossing(const ReachabilityPartition& p, const StaticEdge& e) {
    return p.in_u_component(e.u) != p.in_u_component(e.v);
}

CrossMap::CrossMap(std::vector<TemporalEdge> edges, std::vector<std::vector<std::size_t>> entries)
    : edges_(std::move(edges)), entries_(std::move(entries)) {}

std::vector<TemporalEdge> CrossMap::at(const TemporalEdge& te) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), te);
    if (it == edges_.end() || *it != te) {
        throw DomainError("temporal edge not in cross map");
    }
    std::vector<TemporalEdge> out;
    for (auto b : entries_[static_cast<std::size_t>(it - edges_.begin())]) {
        out.push_back(edges_[b]);
    }
    return out;
}

std::size_t CrossMap::total_entries() const {
    std::size_t total = 0;
    for (const auto& e : entries_) {
        total += e.size();
    }
    return total;
}

CrossMap compute_cross(const TemporalGraph& g, CrossStats* stats) {
    const auto edges = g.edges();
    const std::size_t n = g.vertex_count();
    auto bridges = bridge_mask(g);
    SnapshotIndex index(g);

    // Temporal edge indices incident to each vertex, over all times.
    std::vector<std::vector<std::size_t>> incident(n);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        incident[edges[i].edge.u].push_back(i);
        incident[edges[i].edge.v].push_back(i);
    }

    std::vector<std::vector<std::size_t>> entries(edges.size());
    std::vector<signed char> mark(n, kUnseen);
    CrossStats local_stats;

    for (TimeLabel t = 1; t <= g.lifetime(); ++t) {
        const auto& ids = index.ids[static_cast<std::size_t>(t)];
        detail::Adjacency adj(n, index.edges[static_cast<std::size_t>(t)]);
        for (std::size_t local = 0; local < ids.size(); ++local) {
            const std::size_t b = ids[local];
            if (!bridges[b]) {
                continue;
            }
            std::size_t work = 0;
            const StaticEdge& be = edges[b].edge;
            split(adj, be, local, mark, &work);
            local_stats.traversal_work += work;

            std::size_t u_count = 0;
            for (auto m : mark) {
                u_count += m == kUSide ? 1 : 0;
            }
            const signed char small = 2 * u_count <= n ? kUSide : kVSide;
            std::size_t crossing_work = 0;
            for (VertexId x = 0; x < n; ++x) {
                if (mark[x] != small) {
                    continue;
                }
                for (auto i : incident[x]) {
                    ++crossing_work;
                    if (i != b && mark[edges[i].edge.other(x)] != small) {
                        entries[i].push_back(b);
                        ++local_stats.entries;
                    }
                }
            }
            local_stats.crossing_work += crossing_work;
            local_stats.max_work_per_bridge = std::max(local_stats.max_work_per_bridge, work + crossing_work);
            ++local_stats.bridges;
        }
    }

    // Bridges were visited by time, not canonically; restore ascending order.
    for (auto& list : entries) {
        std::sort(list.begin(), list.end());
    }
    if (stats != nullptr) {
        *stats = local_stats;
    }
    return CrossMap(std::vector<TemporalEdge>(edges.begin(), edges.end()), std::move(entries));
}

}  // namespace tgr
