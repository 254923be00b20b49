#include "tgr/hardness.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "tgr/io.hpp"

namespace tgr {

VCInstance VCInstance::make(std::vector<std::string> vertices, std::vector<std::pair<std::size_t, std::size_t>> edges,
                            std::size_t k) {
    std::set<std::string> names(vertices.begin(), vertices.end());
    if (names.size() != vertices.size()) {
        throw DomainError("duplicate vertex name in vertex cover instance");
    }
    for (auto& [a, b] : edges) {
        if (a >= vertices.size() || b >= vertices.size()) {
            throw DomainError("edge endpoint out of range");
        }
        if (a == b) {
            throw DomainError("self-loop on '" + vertices[a] + "'");
        }
        if (a > b) {
            std::swap(a, b);
        }
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
        throw DomainError("duplicate edge in vertex cover instance");
    }
    return VCInstance{std::move(vertices), std::move(edges), k};
}

std::optional<std::size_t> VCInstance::find(const std::string& name) const {
    auto it = std::find(vertices.begin(), vertices.end(), name);
    if (it == vertices.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - vertices.begin());
}

bool VCInstance::is_cover(const std::vector<std::size_t>& cover) const {
    std::set<std::size_t> in(cover.begin(), cover.end());
    return std::all_of(edges.begin(), edges.end(),
                       [&](const auto& e) { return in.contains(e.first) || in.contains(e.second); });
}

std::vector<std::size_t> VCInstance::incident(std::size_t v) const {
    std::vector<std::pair<std::size_t, std::size_t>> by_other;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].first == v) {
            by_other.emplace_back(edges[i].second, i);
        } else if (edges[i].second == v) {
            by_other.emplace_back(edges[i].first, i);
        }
    }
    std::sort(by_other.begin(), by_other.end());
    std::vector<std::size_t> out;
    for (const auto& [other, i] : by_other) {
        out.push_back(i);
    }
    return out;
}

VCInstance parse_edge_list(std::istream& in, std::size_t k) {
    std::vector<std::pair<std::string, std::string>> raw_edges;
    std::set<std::string> names;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line.substr(0, line.find('#')));
        std::vector<std::string> tokens;
        std::string tok;
        while (ss >> tok) {
            tokens.push_back(tok);
        }
        if (tokens.empty()) {
            continue;
        }
        if (tokens.size() != 2) {
            throw ParseError(line_no, "expected '<u> <v>'");
        }
        if (tokens[0] == tokens[1]) {
            throw ParseError(line_no, "self-loop on '" + tokens[0] + "'");
        }
        names.insert(tokens[0]);
        names.insert(tokens[1]);
        raw_edges.emplace_back(tokens[0], tokens[1]);
    }
    std::vector<std::string> vertices(names.begin(), names.end());
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        index[vertices[i]] = i;
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& [a, b] : raw_edges) {
        edges.emplace_back(index[a], index[b]);
    }
    return VCInstance::make(std::move(vertices), std::move(edges), k);
}

void write_edge_list(std::ostream& out, const VCInstance& inst) {
    for (const auto& [a, b] : inst.edges) {
        out << inst.vertices[a] << ' ' << inst.vertices[b] << '\n';
    }
}

ReductionOutput build_reduction(const VCInstance& inst) {
    std::vector<std::string> names;
    auto add = [&](std::string name) {
        names.push_back(std::move(name));
        return static_cast<VertexId>(names.size() - 1);
    };
    const auto& vx = inst.vertices;

    std::vector<VertexGadget> vg;
    for (const auto& x : vx) {
        vg.push_back({add(x + ".1"), add(x + ".2"), add(x + ".3")});
    }
    std::vector<EdgeGadget> eg;
    for (const auto& [a, b] : inst.edges) {
        EdgeGadget g;
        g.u = a;
        g.v = b;
        const std::string base = "e_" + vx[a] + "_" + vx[b];
        g.e = add(base);
        g.e1 = add(base + ".1");
        g.e2 = add(base + ".2");
        eg.push_back(g);
    }
    // Transition vertices, grouped by owning vertex in path order.
    std::vector<std::vector<std::size_t>> path_edges(vx.size());
    for (std::size_t x = 0; x < vx.size(); ++x) {
        path_edges[x] = inst.incident(x);
        for (auto i : path_edges[x]) {
            auto& g = eg[i];
            const std::size_t y = g.u == x ? g.v : g.u;
            VertexId a = add(vx[x] + "_" + vx[y]);
            VertexId b = add(vx[x] + "_" + vx[y] + "'");
            if (g.u == x) {
                g.u_v = a;
                g.u_v_prime = b;
            } else {
                g.v_u = a;
                g.v_u_prime = b;
            }
        }
    }

    std::vector<TemporalEdge> common;
    auto edge = [&](VertexId a, VertexId b, TimeLabel t) { common.push_back({StaticEdge::make(a, b), t}); };
    auto both = [&](VertexId a, VertexId b) {
        edge(a, b, 1);
        edge(a, b, 2);
    };

    for (const auto& g : vg) {
        edge(g.v1, g.v2, 2);
        edge(g.v2, g.v3, 2);
        both(g.v3, g.v1);
    }
    for (const auto& g : eg) {
        both(g.e1, g.e2);
    }
    for (std::size_t x = 0; x < vx.size(); ++x) {
        VertexId prev = vg[x].v1;
        for (auto i : path_edges[x]) {
            const auto& g = eg[i];
            VertexId a = g.u == x ? g.u_v : g.v_u;
            VertexId b = g.u == x ? g.u_v_prime : g.v_u_prime;
            edge(prev, a, 1);
            edge(a, b, 1);
            prev = b;
        }
        edge(prev, vg[x].v2, 1);
    }
    for (const auto& g : eg) {
        edge(g.e, g.u_v, 2);
        edge(g.e, g.v_u, 2);
        edge(g.e2, g.u_v_prime, 2);
        edge(g.e2, g.v_u_prime, 2);
    }
    std::vector<VertexId> backbone;
    for (const auto& g : vg) {
        backbone.push_back(g.v3);
    }
    for (const auto& g : eg) {
        backbone.push_back(g.e);
    }
    for (std::size_t i = 1; i < backbone.size(); ++i) {
        both(backbone[i - 1], backbone[i]);
    }

    std::vector<TemporalEdge> first = common;
    std::vector<TemporalEdge> second = common;
    for (const auto& g : eg) {
        first.push_back({StaticEdge::make(g.e, g.e1), 1});
        first.push_back({StaticEdge::make(g.e, g.e2), 2});
        second.push_back({StaticEdge::make(g.e, g.e1), 2});
        second.push_back({StaticEdge::make(g.e, g.e2), 1});
    }

    TemporalGraph g1(std::move(names), 2, std::move(first));
    TemporalGraph g2 = g1.with_edges(std::move(second));
    const std::size_t ell = 2 * inst.k + 4 * inst.edges.size();
    return ReductionOutput{inst, std::move(g1), std::move(g2), ell, std::move(vg), std::move(eg)};
}

ReconfigSequence cover_to_sequence(const ReductionOutput& red, std::vector<std::size_t> cover) {
    const auto& inst = red.instance;
    for (auto v : cover) {
        if (v >= inst.vertices.size()) {
            throw DomainError("cover vertex out of range");
        }
    }
    std::sort(cover.begin(), cover.end());
    cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
    if (!inst.is_cover(cover)) {
        throw DomainError("vertex set does not cover every edge");
    }

    ReconfigSequence seq;
    auto flip = [&](VertexId a, VertexId b, TimeLabel from) {
        seq.ops.push_back({StaticEdge::make(a, b), from, from == 1 ? 2 : 1});
    };
    std::vector<bool> fixed(inst.edges.size(), false);
    for (auto x : cover) {
        const auto& vg = red.vertex_gadgets[x];
        const auto incident = inst.incident(x);
        // With no incident edges the path is the single edge x.1-x.2 at time 1,
        // so x.1-x.2 cannot move there; the other activation edge can.
        const VertexId act_a = incident.empty() ? vg.v3 : vg.v1;
        flip(act_a, vg.v2, 2);
        for (auto i : incident) {
            if (fixed[i]) {
                continue;
            }
            const auto& g = red.edge_gadgets[i];
            VertexId a = g.u == x ? g.u_v : g.v_u;
            VertexId b = g.u == x ? g.u_v_prime : g.v_u_prime;
            flip(a, b, 1);
            flip(g.e, g.e2, 2);
            flip(g.e, g.e1, 1);
            flip(a, b, 2);
            fixed[i] = true;
        }
        flip(act_a, vg.v2, 1);
    }
    return seq;
}

std::vector<TemporalEdge> prerequisite_edges(const ReductionOutput& red, std::size_t edge_index) {
    if (edge_index >= red.edge_gadgets.size()) {
        throw DomainError("unknown edge");
    }
    const auto& g = red.edge_gadgets[edge_index];
    std::set<TemporalEdge> out{{StaticEdge::make(g.u_v_prime, g.e2), 2}, {StaticEdge::make(g.v_u_prime, g.e2), 2}};
    for (const auto& te : red.g1.edges()) {
        if (te.time == 1 && (te.edge.touches(g.u_v_prime) || te.edge.touches(g.v_u_prime))) {
            out.insert(te);
        }
    }
    return {out.begin(), out.end()};
}

std::vector<TemporalEdge> prerequisite_edges(const ReductionOutput& red, const std::string& u, const std::string& v) {
    auto a = red.instance.find(u);
    auto b = red.instance.find(v);
    if (!a || !b) {
        throw DomainError("unknown edge " + u + " " + v);
    }
    auto key = std::minmax(*a, *b);
    auto it = std::find(red.instance.edges.begin(), red.instance.edges.end(), std::pair{key.first, key.second});
    if (it == red.instance.edges.end()) {
        throw DomainError("unknown edge " + u + " " + v);
    }
    return prerequisite_edges(red, static_cast<std::size_t>(it - red.instance.edges.begin()));
}

std::optional<std::vector<std::size_t>> brute_force_vertex_cover(const VCInstance& inst) {
    const std::size_t n = inst.vertices.size();
    if (n > 20) {
        throw DomainError("brute-force vertex cover supports at most 20 vertices");
    }
    for (std::size_t size = 0; size <= std::min(inst.k, n); ++size) {
        // Lexicographic enumeration of size-subsets via a selection mask.
        std::vector<bool> pick(n, false);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
        do {
            std::vector<std::size_t> cover;
            for (std::size_t i = 0; i < n; ++i) {
                if (pick[i]) {
                    cover.push_back(i);
                }
            }
            if (inst.is_cover(cover)) {
                return cover;
            }
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return std::nullopt;
}

}  // namespace tgr
