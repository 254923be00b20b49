#include "tgr/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <queue>
#include <random>
#include <set>
#include <unordered_map>

namespace tgr {

namespace {

constexpr std::uint64_t kVertexBits = 20;
constexpr std::uint64_t kTimeBits = 24;

std::uint64_t pack(const TemporalEdge& te) {
    return (static_cast<std::uint64_t>(te.edge.u) << (kVertexBits + kTimeBits)) |
           (static_cast<std::uint64_t>(te.edge.v) << kTimeBits) | static_cast<std::uint64_t>(te.time);
}

TemporalEdge unpack(std::uint64_t key) {
    constexpr std::uint64_t vmask = (std::uint64_t{1} << kVertexBits) - 1;
    constexpr std::uint64_t tmask = (std::uint64_t{1} << kTimeBits) - 1;
    return {{static_cast<VertexId>(key >> (kVertexBits + kTimeBits)), static_cast<VertexId>((key >> kTimeBits) & vmask)},
            static_cast<TimeLabel>(key & tmask)};
}

TemporalGraph decode(const TemporalGraph& like, const CanonicalState& s) {
    std::vector<TemporalEdge> edges;
    edges.reserve(s.key.size());
    for (auto k : s.key) {
        edges.push_back(unpack(k));
    }
    return like.with_edges(std::move(edges));
}

struct Node {
    CanonicalState state;
    std::size_t parent;
    RelabelOp op;
    std::size_t depth;
};

struct SearchResult {
    OracleStatus status = OracleStatus::BudgetExceeded;
    std::vector<Node> nodes;
    std::size_t goal = 0;
};

constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

// Breadth-first search from start; `goal` is tested on dequeue so the first
// hit has minimum depth. A null goal enumerates the reachable component.
SearchResult search(const TemporalGraph& start, const std::function<bool(const TemporalGraph&)>& goal,
                    const OracleBudget& budget) {
    if (budget.max_states < 1) {
        throw DomainError("oracle budget must allow at least one state");
    }
    if (start.vertex_count() >= (std::size_t{1} << kVertexBits) ||
        start.lifetime() >= (TimeLabel{1} << kTimeBits)) {
        throw DomainError("instance too large for the oracle state encoding");
    }
    SearchResult res;
    std::unordered_map<CanonicalState, std::size_t, CanonicalStateHash> seen;
    res.nodes.push_back({CanonicalState::of(start), kNoParent, {}, 0});
    seen.emplace(res.nodes.back().state, 0);
    bool truncated = false;

    for (std::size_t head = 0; head < res.nodes.size(); ++head) {
        const TemporalGraph g = decode(start, res.nodes[head].state);
        if (goal && goal(g)) {
            res.status = OracleStatus::Found;
            res.goal = head;
            return res;
        }
        const std::size_t depth = res.nodes[head].depth;
        if (budget.max_depth && depth >= *budget.max_depth) {
            truncated = true;
            continue;
        }
        for (const auto& te : g.edges()) {
            for (TimeLabel t = 1; t <= g.lifetime(); ++t) {
                if (t == te.time) {
                    continue;
                }
                RelabelOp op{te.edge, te.time, t};
                if (!is_valid_relabel(g, op)) {
                    continue;
                }
                auto child = CanonicalState::of(apply_relabel(g, op));
                if (seen.contains(child)) {
                    continue;
                }
                if (res.nodes.size() >= budget.max_states) {
                    res.status = OracleStatus::BudgetExceeded;
                    return res;
                }
                seen.emplace(child, res.nodes.size());
                res.nodes.push_back({std::move(child), head, op, depth + 1});
            }
        }
    }
    res.status = truncated ? OracleStatus::BudgetExceeded : OracleStatus::Unreachable;
    return res;
}

ReconfigSequence path_to(const std::vector<Node>& nodes, std::size_t i) {
    ReconfigSequence seq;
    for (; nodes[i].parent != kNoParent; i = nodes[i].parent) {
        seq.ops.push_back(nodes[i].op);
    }
    std::reverse(seq.ops.begin(), seq.ops.end());
    return seq;
}

OracleResult finish(const SearchResult& res) {
    OracleResult out;
    out.status = res.status;
    out.states_visited = res.nodes.size();
    if (res.status == OracleStatus::Found) {
        out.sequence = path_to(res.nodes, res.goal);
        out.steps = out.sequence.length();
    }
    return out;
}

}  // namespace

CanonicalState CanonicalState::of(const TemporalGraph& g) {
    CanonicalState s;
    s.key.reserve(g.edge_count());
    for (const auto& te : g.edges()) {
        s.key.push_back(pack(te));
    }
    return s;
}

std::size_t CanonicalStateHash::operator()(const CanonicalState& s) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ s.key.size();
    for (auto k : s.key) {
        h ^= k + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

OracleResult oracle_shortest_sequence(const TemporalGraph& g1, const TemporalGraph& g2, const OracleBudget& budget) {
    if (!g1.same_vertices_and_lifetime(g2)) {
        throw PreconditionError("graphs differ in vertex set or lifetime");
    }
    const auto target = CanonicalState::of(g2);
    return finish(search(g1, [&](const TemporalGraph& g) { return CanonicalState::of(g) == target; }, budget));
}

OracleResult oracle_min_steps_to_nonbridge(const TemporalGraph& g, const TemporalEdge& target,
                                           const OracleBudget& budget) {
    if (!g.contains(target)) {
        throw DomainError("target edge not present");
    }
    return finish(search(
        g, [&](const TemporalGraph& s) { return s.contains(target) && !is_bridge(s, target); }, budget));
}

std::optional<std::vector<TemporalGraph>> oracle_reachable_set(const TemporalGraph& g, const OracleBudget& budget) {
    auto res = search(g, nullptr, budget);
    if (res.status != OracleStatus::Unreachable) {
        return std::nullopt;
    }
    std::vector<TemporalGraph> out;
    out.reserve(res.nodes.size());
    for (const auto& node : res.nodes) {
        out.push_back(decode(g, node.state));
    }
    return out;
}

namespace {

// Decodes a uniformly random Pruefer sequence into a labelled tree.
std::vector<StaticEdge> random_tree(std::size_t n, std::mt19937_64& rng) {
    std::vector<StaticEdge> edges;
    if (n < 2) {
        return edges;
    }
    if (n == 2) {
        edges.push_back({0, 1});
        return edges;
    }
    std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
    std::vector<VertexId> code(n - 2);
    std::vector<std::size_t> degree(n, 1);
    for (auto& c : code) {
        c = pick(rng);
        ++degree[c];
    }
    std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> leaves;
    for (VertexId v = 0; v < n; ++v) {
        if (degree[v] == 1) {
            leaves.push(v);
        }
    }
    for (auto c : code) {
        VertexId leaf = leaves.top();
        leaves.pop();
        edges.push_back(StaticEdge::make(leaf, c));
        if (--degree[c] == 1) {
            leaves.push(c);
        }
    }
    VertexId a = leaves.top();
    leaves.pop();
    VertexId b = leaves.top();
    edges.push_back(StaticEdge::make(a, b));
    return edges;
}

}  // namespace

TemporalGraph generate_random_instance(std::size_t n, TimeLabel lifetime, std::size_t extra, std::uint64_t seed) {
    if (n < 1) {
        throw DomainError("instance needs at least one vertex");
    }
    if (lifetime < 1) {
        throw DomainError("lifetime must be at least 1");
    }
    const std::size_t pairs = n * (n - 1) / 2;
    const std::size_t capacity = pairs - (n - 1);
    if (extra > capacity) {
        throw DomainError("requested " + std::to_string(extra) + " extra edges but only " + std::to_string(capacity) +
                          " free pairs per snapshot");
    }
    std::mt19937_64 rng(seed);
    std::vector<TemporalEdge> edges;
    for (TimeLabel t = 1; t <= lifetime; ++t) {
        auto tree = random_tree(n, rng);
        std::set<StaticEdge> used(tree.begin(), tree.end());
        std::vector<StaticEdge> added;
        if (extra * 3 <= capacity) {
            std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
            while (added.size() < extra) {
                VertexId a = pick(rng);
                VertexId b = pick(rng);
                if (a == b) {
                    continue;
                }
                auto e = StaticEdge::make(a, b);
                if (used.insert(e).second) {
                    added.push_back(e);
                }
            }
        } else {
            std::vector<StaticEdge> free;
            for (VertexId a = 0; a < n; ++a) {
                for (VertexId b = a + 1; b < n; ++b) {
                    if (!used.contains({a, b})) {
                        free.push_back({a, b});
                    }
                }
            }
            std::shuffle(free.begin(), free.end(), rng);
            added.assign(free.begin(), free.begin() + static_cast<std::ptrdiff_t>(extra));
        }
        for (const auto& e : tree) {
            edges.push_back({e, t});
        }
        for (const auto& e : added) {
            edges.push_back({e, t});
        }
    }
    return TemporalGraph(n, lifetime, std::move(edges));
}

}  // namespace tgr
