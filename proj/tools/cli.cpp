#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "tgr/changeability.hpp"
#include "tgr/hardness.hpp"
#include "tgr/io.hpp"
#include "tgr/oracle.hpp"
#include "tgr/planner.hpp"
#include "tgr/reachability.hpp"

namespace tgr::cli {

namespace {

using nlohmann::json;

constexpr int kPositive = 0;
constexpr int kNegative = 1;
constexpr int kFailure = 2;
constexpr int kBudget = 3;

json edge_json(const TemporalGraph& g, const TemporalEdge& te) {
    return {{"u", g.name(te.edge.u)}, {"v", g.name(te.edge.v)}, {"t", te.time}};
}

json ops_json(const TemporalGraph& g, const ReconfigSequence& seq) {
    json ops = json::array();
    for (const auto& op : seq.ops) {
        ops.push_back({{"u", g.name(op.edge.u)}, {"v", g.name(op.edge.v)}, {"from", op.from}, {"to", op.to}});
    }
    return ops;
}

std::string kind_name(InfeasibleKind kind) {
    return kind == InfeasibleKind::UnchangeableEdge ? "unchangeable-edge" : "pair-count-mismatch";
}

std::string pair_text(const TemporalGraph& g, const StaticEdge& e) { return g.name(e.u) + " " + g.name(e.v); }

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    if (!f) {
        throw Error("cannot write '" + path + "'");
    }
    f << content;
    if (!f) {
        throw Error("write failed for '" + path + "'");
    }
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) {
        throw Error("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// Reports an infeasible outcome; shared by check and plan.
template <typename Outcome>
int report_infeasible(const TemporalGraph& g1, const Outcome& o, bool as_json, const char* command,
                      std::ostream& out) {
    if (as_json) {
        json doc{{"command", command}, {"feasible", false}, {"kind", kind_name(*o.kind)}};
        doc["witness"] = o.witness ? edge_json(g1, *o.witness) : json(nullptr);
        doc["mismatched_pair"] =
            o.mismatched_pair ? json{g1.name(o.mismatched_pair->u), g1.name(o.mismatched_pair->v)} : json(nullptr);
        out << doc.dump(2) << '\n';
        return kNegative;
    }
    out << "infeasible\n";
    if (o.witness) {
        out << "witness " << format_edge(g1, *o.witness) << '\n';
    }
    if (o.mismatched_pair) {
        out << "count-mismatch " << pair_text(g1, *o.mismatched_pair) << '\n';
    }
    return kNegative;
}

struct Options {
    bool json = false;
    std::string g;
    std::string g1;
    std::string g2;
    std::string seq;
    std::string output;
    bool dump_cross = false;
    std::size_t max_states = OracleBudget{}.max_states;
    std::size_t n = 0;
    TimeLabel lifetime = 1;
    std::size_t extra = 0;
    std::uint64_t seed = 0;
    std::string graph;
    std::size_t k = 0;
    std::string prefix;
    std::string cover;
};

int cmd_check(const Options& o, std::ostream& out) {
    auto g1 = read_graph_file(o.g1);
    auto g2 = read_graph_file(o.g2);
    auto res = feasible(g1, g2);
    if (!res.feasible) {
        return report_infeasible(g1, res, o.json, "check", out);
    }
    if (o.json) {
        out << json{{"command", "check"}, {"feasible", true}}.dump(2) << '\n';
    } else {
        out << "feasible\n";
    }
    return kPositive;
}

int cmd_plan(const Options& o, std::ostream& out) {
    auto g1 = read_graph_file(o.g1);
    auto g2 = read_graph_file(o.g2);
    auto pre = feasible(g1, g2);
    if (!pre.feasible) {
        return report_infeasible(g1, pre, o.json, "plan", out);
    }
    // Without -o or --json the sequence goes to stdout, g1-side ops streamed per phase.
    const bool stream = o.output.empty() && !o.json;
    if (stream) {
        out << "tgs " << kSequenceFormatVersion << '\n';
    }
    auto outcome = plan(g1, g2, [&](const DifferenceStep& step) {
        if (stream) {
            for (const auto& op : step.g1_ops.ops) {
                out << "r " << format_op(g1, op) << '\n';
            }
        }
    });
    if (!outcome.feasible) {
        throw std::logic_error("planner disagrees with feasibility check");
    }
    std::size_t forward = 0;
    for (auto l : outcome.phase_levels) {
        forward += l + 1;
    }
    if (stream) {
        for (std::size_t i = forward; i < outcome.sequence.ops.size(); ++i) {
            out << "r " << format_op(g1, outcome.sequence.ops[i]) << '\n';
        }
        return kPositive;
    }
    if (!o.output.empty()) {
        write_file(o.output, format_sequence(outcome.sequence, g1));
    }
    if (o.json) {
        json doc{{"command", "plan"},
                 {"feasible", true},
                 {"length", outcome.sequence.length()},
                 {"phases", outcome.phases},
                 {"ops", ops_json(g1, outcome.sequence)}};
        out << doc.dump(2) << '\n';
    } else {
        out << "feasible length " << outcome.sequence.length() << " phases " << outcome.phases << '\n';
    }
    return kPositive;
}

int cmd_validate(const Options& o, std::ostream& out) {
    auto g1 = read_graph_file(o.g1);
    auto g2 = read_graph_file(o.g2);
    if (!g1.same_vertices_and_lifetime(g2)) {
        throw PreconditionError("graphs differ in vertex set or lifetime");
    }
    if (!is_always_connected(g1) || !is_always_connected(g2)) {
        throw PreconditionError("input graph is not always-connected");
    }
    auto seq = parse_sequence(read_file(o.seq), g1);
    auto report = validate_sequence(g1, seq, g2);
    if (o.json) {
        json doc{{"command", "validate"},
                 {"valid", report.ok},
                 {"length", report.length},
                 {"ends_at_target", report.ends_at_target}};
        doc["failed_step"] = report.failed_step ? json(*report.failed_step) : json(nullptr);
        doc["failure"] = report.failed_step ? json(std::string(to_string(report.failure))) : json(nullptr);
        out << doc.dump(2) << '\n';
    } else if (report.ok) {
        out << "valid length " << report.length << '\n';
    } else if (report.failed_step) {
        out << "invalid step " << *report.failed_step << ' ' << to_string(report.failure) << '\n';
    } else {
        out << "invalid does-not-reach-target length " << report.length << '\n';
    }
    return report.ok ? kPositive : kNegative;
}

int cmd_classify(const Options& o, std::ostream& out) {
    auto g = read_graph_file(o.g);
    if (!is_always_connected(g)) {
        throw PreconditionError("input graph is not always-connected");
    }
    auto cross = compute_cross(g);
    auto table = compute_change_table(g, cross);
    auto via = [&](const TemporalEdge& te) {
        auto b = table.back_ref(te);
        return b ? g.name(b->edge.u) + "," + g.name(b->edge.v) + "," + std::to_string(b->time) : std::string("-");
    };

    std::vector<std::vector<std::size_t>> crossed_by(g.edge_count());
    for (std::size_t i = 0; i < cross.size(); ++i) {
        for (auto b : cross.at_index(i)) {
            crossed_by[b].push_back(i);
        }
    }

    if (o.json) {
        json edges = json::array();
        for (std::size_t i = 0; i < table.size(); ++i) {
            const auto& te = table.edges()[i];
            auto c = table.at_index(i);
            json entry = edge_json(g, te);
            entry["level"] = c.level ? json(*c.level) : json("unchangeable");
            auto b = table.back_ref(te);
            entry["via"] = b ? edge_json(g, *b) : json(nullptr);
            edges.push_back(entry);
        }
        json doc{{"command", "classify"}, {"edges", edges}};
        if (o.dump_cross) {
            json bridges = json::array();
            for (std::size_t b = 0; b < g.edge_count(); ++b) {
                const auto& te = g.edges()[b];
                if (!table.at_index(b).level || *table.at_index(b).level != 0) {
                    auto p = reachability_partition(g, te);
                    json crossing = json::array();
                    for (auto i : crossed_by[b]) {
                        crossing.push_back(edge_json(g, g.edges()[i]));
                    }
                    json entry = edge_json(g, te);
                    entry["comp_u"] = p.comp_u().size();
                    entry["comp_v"] = p.comp_v().size();
                    entry["crossing"] = crossing;
                    bridges.push_back(entry);
                }
            }
            doc["bridges"] = bridges;
        }
        out << doc.dump(2) << '\n';
        return kPositive;
    }

    for (std::size_t i = 0; i < table.size(); ++i) {
        const auto& te = table.edges()[i];
        auto c = table.at_index(i);
        out << format_edge(g, te) << " level=" << (c.level ? std::to_string(*c.level) : "unchangeable")
            << " via=" << via(te) << '\n';
    }
    if (o.dump_cross) {
        for (std::size_t b = 0; b < g.edge_count(); ++b) {
            const auto& te = g.edges()[b];
            auto c = table.at_index(b);
            if (c.level && *c.level == 0) {
                continue;
            }
            auto p = reachability_partition(g, te);
            out << "bridge " << format_edge(g, te) << " comp_u=" << p.comp_u().size()
                << " comp_v=" << p.comp_v().size() << '\n';
            for (auto i : crossed_by[b]) {
                out << "  cross " << format_edge(g, g.edges()[i]) << '\n';
            }
        }
    }
    return kPositive;
}

int cmd_diff(const Options& o, std::ostream& out) {
    auto g1 = read_graph_file(o.g1);
    auto g2 = read_graph_file(o.g2);
    auto only1 = edges_only_in_first(g1, g2);
    auto only2 = edges_only_in_first(g2, g1);
    if (o.json) {
        json a = json::array();
        json b = json::array();
        for (const auto& te : only1) {
            a.push_back(edge_json(g1, te));
        }
        for (const auto& te : only2) {
            b.push_back(edge_json(g1, te));
        }
        out << json{{"command", "diff"}, {"only_in_g1", a}, {"only_in_g2", b}, {"delta", only1.size()}}.dump(2)
            << '\n';
        return kPositive;
    }
    for (const auto& te : only1) {
        out << "- " << format_edge(g1, te) << '\n';
    }
    for (const auto& te : only2) {
        out << "+ " << format_edge(g1, te) << '\n';
    }
    out << "delta " << only1.size() << '\n';
    return kPositive;
}

int cmd_oracle(const Options& o, std::ostream& out) {
    auto g1 = read_graph_file(o.g1);
    auto g2 = read_graph_file(o.g2);
    if (!is_always_connected(g1) || !is_always_connected(g2)) {
        throw PreconditionError("input graph is not always-connected");
    }
    OracleBudget budget;
    budget.max_states = o.max_states;
    auto res = oracle_shortest_sequence(g1, g2, budget);
    std::string status = res.status == OracleStatus::Found         ? "found"
                         : res.status == OracleStatus::Unreachable ? "unreachable"
                                                                   : "budget";
    if (o.json) {
        json doc{{"command", "oracle"}, {"status", status}, {"states", res.states_visited}};
        doc["length"] = res.status == OracleStatus::Found ? json(res.steps) : json(nullptr);
        if (res.status == OracleStatus::Found) {
            doc["ops"] = ops_json(g1, res.sequence);
        }
        out << doc.dump(2) << '\n';
    } else if (res.status == OracleStatus::Found) {
        out << "found " << res.steps << '\n';
    } else {
        out << status << '\n';
    }
    switch (res.status) {
        case OracleStatus::Found:
            return kPositive;
        case OracleStatus::Unreachable:
            return kNegative;
        case OracleStatus::BudgetExceeded:
            break;
    }
    return kBudget;
}

int cmd_gen(const Options& o, std::ostream& out) {
    auto g = generate_random_instance(o.n, o.lifetime, o.extra, o.seed);
    if (o.output.empty()) {
        write_graph(out, g);
        return kPositive;
    }
    write_graph_file(o.output, g);
    if (o.json) {
        out << json{{"command", "gen"}, {"vertices", g.vertex_count()}, {"edges", g.edge_count()}, {"path", o.output}}
                   .dump(2)
            << '\n';
    } else {
        out << "wrote " << o.output << " vertices " << g.vertex_count() << " edges " << g.edge_count() << '\n';
    }
    return kPositive;
}

int cmd_reduce(const Options& o, std::ostream& out) {
    std::istringstream in(read_file(o.graph));
    auto inst = parse_edge_list(in, o.k);
    auto red = build_reduction(inst);
    write_graph_file(o.prefix + ".g1.tg", red.g1);
    write_graph_file(o.prefix + ".g2.tg", red.g2);
    std::ostringstream el;
    write_edge_list(el, inst);
    write_file(o.prefix + ".edgelist", el.str());
    if (o.json) {
        out << json{{"command", "reduce-vc"},
                    {"ell", red.ell},
                    {"vertices", red.g1.vertex_count()},
                    {"edges", red.g1.edge_count()},
                    {"delta", difference(red.g1, red.g2)}}
                   .dump(2)
            << '\n';
    } else {
        out << "ell " << red.ell << '\n';
    }
    return kPositive;
}

int cmd_cover_seq(const Options& o, std::ostream& out) {
    std::istringstream in(read_file(o.prefix + ".edgelist"));
    auto inst = parse_edge_list(in, 0);
    std::vector<std::size_t> cover;
    std::istringstream names(o.cover);
    std::string name;
    while (std::getline(names, name, ',')) {
        if (name.empty()) {
            continue;
        }
        auto v = inst.find(name);
        if (!v) {
            throw DomainError("unknown cover vertex '" + name + "'");
        }
        cover.push_back(*v);
    }
    inst.k = cover.size();
    auto red = build_reduction(inst);
    if (!(read_graph_file(o.prefix + ".g1.tg") == red.g1) || !(read_graph_file(o.prefix + ".g2.tg") == red.g2)) {
        throw PreconditionError("graphs under prefix do not match the reduction of its edge list");
    }
    auto seq = cover_to_sequence(red, cover);
    if (o.output.empty() && !o.json) {
        write_sequence(out, seq, red.g1);
        return kPositive;
    }
    if (!o.output.empty()) {
        write_file(o.output, format_sequence(seq, red.g1));
    }
    if (o.json) {
        out << json{{"command", "cover-seq"}, {"length", seq.length()}, {"ops", ops_json(red.g1, seq)}}.dump(2)
            << '\n';
    } else {
        out << "length " << seq.length() << '\n';
    }
    return kPositive;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Connectivity-preserving reconfiguration of temporal graphs", "tgr"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("tgr ") + kVersion + " (tg format " +
                                          std::to_string(kGraphFormatVersion) + ", tgs format " +
                                          std::to_string(kSequenceFormatVersion) + ")");
    Options o;

    auto pair_cmd = [&](const char* name, const char* desc) {
        auto* c = app.add_subcommand(name, desc);
        c->add_option("--g1", o.g1, "source graph (.tg)")->required();
        c->add_option("--g2", o.g2, "target graph (.tg)")->required();
        c->add_flag("--json", o.json, "structured output");
        return c;
    };

    auto* check = pair_cmd("check", "decide whether a valid sequence exists");
    auto* plan_cmd = pair_cmd("plan", "construct a valid sequence");
    plan_cmd->add_option("-o,--output", o.output, "write the sequence (.tgs) here");
    auto* validate = pair_cmd("validate", "check a sequence file");
    validate->add_option("--seq", o.seq, "sequence (.tgs)")->required();
    auto* diff = pair_cmd("diff", "list edges present in only one graph");
    auto* oracle = pair_cmd("oracle", "exhaustive shortest sequence search");
    oracle->add_option("--max-states", o.max_states, "state budget")->check(CLI::PositiveNumber);

    auto* classify_cmd = app.add_subcommand("classify", "change level of every temporal edge");
    classify_cmd->add_option("--g", o.g, "graph (.tg)")->required();
    classify_cmd->add_flag("--dump-cross", o.dump_cross, "print bridge partitions and crossing edges");
    classify_cmd->add_flag("--json", o.json, "structured output");

    auto* gen = app.add_subcommand("gen", "random always-connected instance");
    gen->add_option("--n", o.n, "vertices")->required()->check(CLI::PositiveNumber);
    gen->add_option("--t", o.lifetime, "lifetime")->required()->check(CLI::PositiveNumber);
    gen->add_option("--extra", o.extra, "extra edges per snapshot");
    gen->add_option("--seed", o.seed, "random seed");
    gen->add_option("-o,--output", o.output, "output file (.tg)");
    gen->add_flag("--json", o.json, "structured output");

    auto* reduce = app.add_subcommand("reduce-vc", "build instance pair from a vertex cover instance");
    reduce->add_option("--graph", o.graph, "edge list")->required();
    reduce->add_option("--k", o.k, "cover budget")->required();
    reduce->add_option("--out-prefix", o.prefix, "output prefix")->required();
    reduce->add_flag("--json", o.json, "structured output");

    auto* cover_seq = app.add_subcommand("cover-seq", "sequence induced by a vertex cover");
    cover_seq->add_option("--prefix", o.prefix, "prefix used with reduce-vc")->required();
    cover_seq->add_option("--cover", o.cover, "comma-separated cover vertices")->required();
    cover_seq->add_option("-o,--output", o.output, "output file (.tgs)");
    cover_seq->add_flag("--json", o.json, "structured output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : kFailure;
    }

    try {
        if (check->parsed()) {
            return cmd_check(o, out);
        }
        if (plan_cmd->parsed()) {
            return cmd_plan(o, out);
        }
        if (validate->parsed()) {
            return cmd_validate(o, out);
        }
        if (diff->parsed()) {
            return cmd_diff(o, out);
        }
        if (oracle->parsed()) {
            return cmd_oracle(o, out);
        }
        if (classify_cmd->parsed()) {
            return cmd_classify(o, out);
        }
        if (gen->parsed()) {
            return cmd_gen(o, out);
        }
        if (reduce->parsed()) {
            return cmd_reduce(o, out);
        }
        if (cover_seq->parsed()) {
            return cmd_cover_seq(o, out);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << '\n';
        return kFailure;
    }
    return kFailure;
}

}  // namespace tgr::cli
