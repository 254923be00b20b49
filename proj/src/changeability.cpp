#include "tgr/changeability.hpp"

#include <algorithm>

namespace tgr {

ChangeTable::ChangeTable(std::vector<TemporalEdge> edges, std::vector<std::size_t> levels,
                         std::vector<std::size_t> back_refs)
    : edges_(std::move(edges)), levels_(std::move(levels)), back_refs_(std::move(back_refs)) {}

std::size_t ChangeTable::index(const TemporalEdge& te) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), te);
    if (it == edges_.end() || *it != te) {
        throw DomainError("temporal edge not in change table");
    }
    return static_cast<std::size_t>(it - edges_.begin());
}

Changeability ChangeTable::at_index(std::size_t i) const {
    return levels_[i] == kNone ? Changeability::unchangeable() : Changeability::at_level(levels_[i]);
}

Changeability ChangeTable::at(const TemporalEdge& te) const { return at_index(index(te)); }

std::optional<TemporalEdge> ChangeTable::back_ref(const TemporalEdge& te) const {
    auto b = back_refs_[index(te)];
    if (b == kNone) {
        return std::nullopt;
    }
    return edges_[b];
}

std::optional<std::size_t> ChangeTable::max_level() const {
    std::optional<std::size_t> best;
    for (auto l : levels_) {
        if (l != kNone && (!best || l > *best)) {
            best = l;
        }
    }
    return best;
}

std::vector<TemporalEdge> ChangeTable::level_set(std::size_t k) const {
    std::vector<TemporalEdge> out;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (levels_[i] == k) {
            out.push_back(edges_[i]);
        }
    }
    return out;
}

ChangeTable compute_change_table(const TemporalGraph& g, const CrossMap& cross, ChangeStats* stats) {
    const auto edges = g.edges();
    if (cross.size() != edges.size() || !std::equal(edges.begin(), edges.end(), cross.edges().begin())) {
        throw PreconditionError("cross map does not belong to this graph");
    }
    const auto bridges = bridge_mask(g);
    std::vector<std::size_t> level(edges.size(), ChangeTable::kNone);
    std::vector<std::size_t> back(edges.size(), ChangeTable::kNone);
    ChangeStats local;

    std::vector<std::size_t> frontier;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (!bridges[i]) {
            level[i] = 0;
            frontier.push_back(i);
        }
    }
    std::size_t k = 0;
    std::vector<std::size_t> next;
    while (!frontier.empty()) {
        next.clear();
        for (auto i : frontier) {
            for (auto b : cross.at_index(i)) {
                ++local.cross_visits;
                if (level[b] != ChangeTable::kNone) {
                    continue;
                }
                if (edges[b].edge == edges[i].edge) {
                    ++local.same_pair_skips;
                    continue;
                }
                level[b] = k + 1;
                back[b] = i;
                next.push_back(b);
            }
        }
        std::sort(next.begin(), next.end());
        frontier.swap(next);
        ++k;
    }
    if (stats != nullptr) {
        *stats = local;
    }
    return ChangeTable(std::vector<TemporalEdge>(edges.begin(), edges.end()), std::move(level), std::move(back));
}

ReconfigSequence sequence_to_nonbridge(const TemporalGraph& g, const ChangeTable& table, const TemporalEdge& target) {
    if (!g.contains(target)) {
        throw DomainError("target edge not present");
    }
    std::size_t i = table.index(target);
    if (!table.at_index(i).changeable()) {
        throw DomainError("target edge is unchangeable");
    }
    // Chain target = c_k, c_{k-1}, ..., c_0; op j moves pair(c_{j-1}) to time(c_j).
    std::vector<std::size_t> chain{i};
    while (table.raw_level(chain.back()) > 0) {
        chain.push_back(table.back_ref_index(chain.back()));
    }
    std::reverse(chain.begin(), chain.end());
    ReconfigSequence seq;
    for (std::size_t j = 1; j < chain.size(); ++j) {
        const auto& prev = table.edges()[chain[j - 1]];
        const auto& cur = table.edges()[chain[j]];
        seq.ops.push_back({prev.edge, prev.time, cur.time});
    }
    return seq;
}

std::map<TemporalEdge, Changeability> classify(const TemporalGraph& g) {
    auto table = compute_change_table(g, compute_cross(g));
    std::map<TemporalEdge, Changeability> out;
    for (std::size_t i = 0; i < table.size(); ++i) {
        out.emplace(table.edges()[i], table.at_index(i));
    }
    return out;
}

}  // namespace tgr
