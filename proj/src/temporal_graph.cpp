#include "tgr/temporal_graph.hpp"

#include <algorithm>
#include <unordered_map>

#include "graph_util.hpp"

namespace tgr {

StaticEdge StaticEdge::make(VertexId a, VertexId b) {
    if (a == b) {
        throw DomainError("self-loop on vertex " + std::to_string(a));
    }
    return a < b ? StaticEdge{a, b} : StaticEdge{b, a};
}

Snapshot::Snapshot(std::size_t vertex_count, TimeLabel time, std::vector<StaticEdge> edges)
    : n_(vertex_count), time_(time), edges_(std::move(edges)) {}

struct TemporalGraph::SharedNames {
    std::unordered_map<std::string, VertexId> index;
};

namespace {

std::vector<std::string> default_names(std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back("v" + std::to_string(i));
    }
    return names;
}

}  // namespace

TemporalGraph::TemporalGraph(std::size_t vertex_count, TimeLabel lifetime, std::vector<TemporalEdge> edges)
    : TemporalGraph(default_names(vertex_count), lifetime, std::move(edges)) {}

TemporalGraph::TemporalGraph(std::vector<std::string> names, TimeLabel lifetime, std::vector<TemporalEdge> edges)
    : lifetime_(lifetime), edges_(std::move(edges)) {
    auto lookup = std::make_shared<SharedNames>();
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i].empty()) {
            throw DomainError("empty vertex name");
        }
        if (!lookup->index.emplace(names[i], static_cast<VertexId>(i)).second) {
            throw DomainError("duplicate vertex name '" + names[i] + "'");
        }
    }
    names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
    lookup_ = std::move(lookup);
    check_edges();
}

TemporalGraph::TemporalGraph(std::shared_ptr<const std::vector<std::string>> names,
                             std::shared_ptr<const SharedNames> lookup, TimeLabel lifetime,
                             std::vector<TemporalEdge> edges)
    : names_(std::move(names)), lookup_(std::move(lookup)), lifetime_(lifetime), edges_(std::move(edges)) {
    check_edges();
}

void TemporalGraph::check_edges() {
    if (lifetime_ < 1) {
        throw DomainError("lifetime must be at least 1");
    }
    const auto n = names_->size();
    for (const auto& te : edges_) {
        if (te.edge.u >= te.edge.v) {
            throw DomainError("edge endpoints must be distinct and in canonical order");
        }
        if (te.edge.v >= n) {
            throw DomainError("edge endpoint out of range");
        }
        if (te.time < 1 || te.time > lifetime_) {
            throw DomainError("edge time " + std::to_string(te.time) + " outside [1, " +
                              std::to_string(lifetime_) + "]");
        }
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw DomainError("duplicate temporal edge");
    }
}

bool TemporalGraph::contains(const TemporalEdge& te) const { return std::binary_search(edges_.begin(), edges_.end(), te); }

std::optional<std::size_t> TemporalGraph::index_of(const TemporalEdge& te) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), te);
    if (it == edges_.end() || *it != te) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - edges_.begin());
}

std::vector<TimeLabel> TemporalGraph::times_of(const StaticEdge& e) const {
    std::vector<TimeLabel> times;
    auto it = std::lower_bound(edges_.begin(), edges_.end(), TemporalEdge{e, 0});
    for (; it != edges_.end() && it->edge == e; ++it) {
        times.push_back(it->time);
    }
    return times;
}

const std::string& TemporalGraph::name(VertexId v) const {
    if (v >= names_->size()) {
        throw DomainError("vertex index " + std::to_string(v) + " out of range");
    }
    return (*names_)[v];
}

std::optional<VertexId> TemporalGraph::find_vertex(std::string_view name) const {
    auto it = lookup_->index.find(std::string(name));
    if (it == lookup_->index.end()) {
        return std::nullopt;
    }
    return it->second;
}

bool TemporalGraph::same_vertices_and_lifetime(const TemporalGraph& other) const {
    return lifetime_ == other.lifetime_ && (names_ == other.names_ || *names_ == *other.names_);
}

TemporalGraph TemporalGraph::with_edges(std::vector<TemporalEdge> edges) const {
    return TemporalGraph(names_, lookup_, lifetime_, std::move(edges));
}

bool operator==(const TemporalGraph& a, const TemporalGraph& b) {
    return a.same_vertices_and_lifetime(b) && a.edges_ == b.edges_;
}

Snapshot snapshot(const TemporalGraph& g, TimeLabel t) {
    if (t < 1 || t > g.lifetime()) {
        throw DomainError("snapshot time " + std::to_string(t) + " outside [1, " + std::to_string(g.lifetime()) + "]");
    }
    std::vector<StaticEdge> edges;
    for (const auto& te : g.edges()) {
        if (te.time == t) {
            edges.push_back(te.edge);
        }
    }
    return Snapshot(g.vertex_count(), t, std::move(edges));
}

bool is_connected(const Snapshot& s) {
    detail::Adjacency adj(s.vertex_count(), s.edges());
    return detail::count_reachable(adj, 0, std::nullopt) == s.vertex_count();
}

bool is_connected_without(const Snapshot& s, const StaticEdge& removed) {
    detail::Adjacency adj(s.vertex_count(), s.edges());
    std::optional<std::size_t> skip;
    for (std::size_t i = 0; i < s.edges().size(); ++i) {
        if (s.edges()[i] == removed) {
            skip = i;
            break;
        }
    }
    return detail::count_reachable(adj, 0, skip) == s.vertex_count();
}

bool is_always_connected(const TemporalGraph& g) {
    if (g.vertex_count() <= 1) {
        return true;
    }
    for (TimeLabel t = 1; t <= g.lifetime(); ++t) {
        if (!is_connected(snapshot(g, t))) {
            return false;
        }
    }
    return true;
}

std::vector<StaticEdge> snapshot_bridges(const Snapshot& s) {
    detail::Adjacency adj(s.vertex_count(), s.edges());
    auto flags = detail::bridge_flags(adj);
    std::vector<StaticEdge> out;
    for (std::size_t i = 0; i < flags.size(); ++i) {
        if (flags[i]) {
            out.push_back(s.edges()[i]);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<bool> bridge_mask(const TemporalGraph& g) {
    const auto edges = g.edges();
    std::vector<bool> mask(edges.size(), false);
    // Edges sorted by pair first, so gather per-time index lists.
    std::vector<std::vector<std::size_t>> by_time(static_cast<std::size_t>(g.lifetime()) + 1);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        by_time[static_cast<std::size_t>(edges[i].time)].push_back(i);
    }
    std::vector<StaticEdge> local;
    for (TimeLabel t = 1; t <= g.lifetime(); ++t) {
        const auto& ids = by_time[static_cast<std::size_t>(t)];
        local.clear();
        for (auto i : ids) {
            local.push_back(edges[i].edge);
        }
        detail::Adjacency adj(g.vertex_count(), local);
        if (g.vertex_count() > 1 && detail::count_reachable(adj, 0, std::nullopt) != g.vertex_count()) {
            throw PreconditionError("snapshot " + std::to_string(t) + " is disconnected");
        }
        auto flags = detail::bridge_flags(adj);
        for (std::size_t j = 0; j < ids.size(); ++j) {
            mask[ids[j]] = flags[j];
        }
    }
    return mask;
}

std::vector<TemporalEdge> find_bridges(const TemporalGraph& g) {
    auto mask = bridge_mask(g);
    std::vector<TemporalEdge> out;
    for (std::size_t i = 0; i < mask.size(); ++i) {
        if (mask[i]) {
            out.push_back(g.edges()[i]);
        }
    }
    return out;
}

bool is_bridge(const TemporalGraph& g, const TemporalEdge& te) {
    if (!g.contains(te)) {
        throw DomainError("temporal edge not present");
    }
    return !is_connected_without(snapshot(g, te.time), te.edge);
}

bool is_valid_relabel(const TemporalGraph& g, const RelabelOp& op) {
    if (op.from == op.to || op.to < 1 || op.to > g.lifetime() || op.edge.u >= op.edge.v ||
        op.edge.v >= g.vertex_count()) {
        return false;
    }
    if (!g.contains(op.source()) || g.contains(op.target())) {
        return false;
    }
    // Adding (e, to) cannot disconnect anything; only the removal matters.
    return !is_bridge(g, op.source());
}

TemporalGraph apply_relabel(const TemporalGraph& g, const RelabelOp& op) {
    if (op.from == op.to) {
        throw RelabelError("relabel with identical source and target time");
    }
    if (op.to < 1 || op.to > g.lifetime()) {
        throw RelabelError("relabel target time out of range");
    }
    auto pos = g.index_of(op.source());
    if (!pos) {
        throw RelabelError("relabel source edge not present");
    }
    if (g.contains(op.target())) {
        throw RelabelError("relabel target slot already occupied");
    }
    std::vector<TemporalEdge> edges(g.edges().begin(), g.edges().end());
    edges[*pos].time = op.to;
    // Only the moved edge can be out of place, and only within its pair's run.
    std::sort(edges.begin(), edges.end());
    return g.with_edges(std::move(edges));
}

TemporalGraph apply_sequence(const TemporalGraph& g, const ReconfigSequence& seq) {
    TemporalGraph cur = g;
    for (const auto& op : seq.ops) {
        cur = apply_relabel(cur, op);
    }
    return cur;
}

std::string_view to_string(StepFailure f) {
    switch (f) {
        case StepFailure::None:
            return "none";
        case StepFailure::MissingEdge:
            return "missing-edge";
        case StepFailure::Collision:
            return "collision";
        case StepFailure::SameTime:
            return "same-time";
        case StepFailure::TimeOutOfRange:
            return "time-out-of-range";
        case StepFailure::DisconnectsSnapshot:
            return "disconnects-snapshot";
    }
    return "unknown";
}

ValidationReport validate_sequence(const TemporalGraph& g1, const ReconfigSequence& seq, const TemporalGraph& g2) {
    ValidationReport report;
    report.length = seq.length();
    TemporalGraph cur = g1;
    for (std::size_t i = 0; i < seq.ops.size(); ++i) {
        const auto& op = seq.ops[i];
        StepFailure failure = StepFailure::None;
        if (op.from == op.to) {
            failure = StepFailure::SameTime;
        } else if (op.to < 1 || op.to > cur.lifetime() || op.from < 1 || op.from > cur.lifetime()) {
            failure = StepFailure::TimeOutOfRange;
        } else if (!cur.contains(op.source())) {
            failure = StepFailure::MissingEdge;
        } else if (cur.contains(op.target())) {
            failure = StepFailure::Collision;
        } else if (is_bridge(cur, op.source())) {
            failure = StepFailure::DisconnectsSnapshot;
        }
        if (failure != StepFailure::None) {
            report.failed_step = i;
            report.failure = failure;
            return report;
        }
        cur = apply_relabel(cur, op);
    }
    report.ends_at_target = cur == g2;
    report.ok = report.ends_at_target;
    return report;
}

namespace {

void require_compatible(const TemporalGraph& g1, const TemporalGraph& g2) {
    if (!g1.same_vertices_and_lifetime(g2)) {
        throw PreconditionError("graphs differ in vertex set or lifetime");
    }
}

}  // namespace

std::vector<TemporalEdge> edges_only_in_first(const TemporalGraph& g1, const TemporalGraph& g2) {
    require_compatible(g1, g2);
    std::vector<TemporalEdge> out;
    std::set_difference(g1.edges().begin(), g1.edges().end(), g2.edges().begin(), g2.edges().end(),
                        std::back_inserter(out));
    return out;
}

std::size_t difference(const TemporalGraph& g1, const TemporalGraph& g2) { return edges_only_in_first(g1, g2).size(); }

std::optional<StaticEdge> first_pair_count_mismatch(const TemporalGraph& g1, const TemporalGraph& g2) {
    require_compatible(g1, g2);
    auto a = g1.edges();
    auto b = g2.edges();
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        StaticEdge pair = (j == b.size() || (i < a.size() && a[i].edge < b[j].edge)) ? a[i].edge : b[j].edge;
        std::size_t ca = 0;
        std::size_t cb = 0;
        while (i < a.size() && a[i].edge == pair) {
            ++ca;
            ++i;
        }
        while (j < b.size() && b[j].edge == pair) {
            ++cb;
            ++j;
        }
        if (ca != cb) {
            return pair;
        }
    }
    return std::nullopt;
}

bool check_pair_counts(const TemporalGraph& g1, const TemporalGraph& g2) {
    return !first_pair_count_mismatch(g1, g2).has_value();
}

}  // namespace tgr
