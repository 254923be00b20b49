#include "tgr/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace tgr {

ParseError::ParseError(std::size_t line, const std::string& message)
    : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::vector<std::string> tokenize(const std::string& raw) {
    std::string line = raw.substr(0, raw.find('#'));
    std::istringstream ss(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ss >> tok) {
        tokens.push_back(tok);
    }
    return tokens;
}

long long parse_int(const std::string& tok, std::size_t line) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError(line, "expected integer, got '" + tok + "'");
    }
    return value;
}

void expect_arity(const std::vector<std::string>& tokens, std::size_t n, std::size_t line) {
    if (tokens.size() != n) {
        throw ParseError(line, "'" + tokens[0] + "' expects " + std::to_string(n - 1) + " arguments");
    }
}

void expect_header(const std::vector<std::string>& tokens, const std::string& magic, int version, std::size_t line) {
    if (tokens.size() != 2 || tokens[0] != magic) {
        throw ParseError(line, "expected header '" + magic + " " + std::to_string(version) + "'");
    }
    if (parse_int(tokens[1], line) != version) {
        throw ParseError(line, "unsupported " + magic + " format version " + tokens[1]);
    }
}

}  // namespace

TemporalGraph parse_graph(std::istream& in) {
    std::string raw;
    std::size_t line_no = 0;
    bool have_header = false;
    long long lifetime = 0;
    std::vector<std::string> names;
    std::vector<TemporalEdge> edges;
    std::set<TemporalEdge> seen;
    std::unordered_map<std::string, VertexId> index;

    auto vertex = [&](const std::string& name, std::size_t line) {
        auto it = index.find(name);
        if (it == index.end()) {
            throw ParseError(line, "undeclared vertex '" + name + "'");
        }
        return it->second;
    };

    while (std::getline(in, raw)) {
        ++line_no;
        auto tokens = tokenize(raw);
        if (tokens.empty()) {
            continue;
        }
        if (!have_header) {
            expect_header(tokens, "tg", kGraphFormatVersion, line_no);
            have_header = true;
            continue;
        }
        const auto& kw = tokens[0];
        if (kw == "t") {
            expect_arity(tokens, 2, line_no);
            if (lifetime != 0) {
                throw ParseError(line_no, "lifetime declared twice");
            }
            lifetime = parse_int(tokens[1], line_no);
            if (lifetime < 1 || lifetime > 1'000'000) {
                throw ParseError(line_no, "lifetime must be in [1, 1000000]");
            }
        } else if (kw == "v") {
            expect_arity(tokens, 2, line_no);
            if (!index.emplace(tokens[1], static_cast<VertexId>(names.size())).second) {
                throw ParseError(line_no, "duplicate vertex '" + tokens[1] + "'");
            }
            names.push_back(tokens[1]);
        } else if (kw == "e") {
            expect_arity(tokens, 4, line_no);
            if (lifetime == 0) {
                throw ParseError(line_no, "edge before lifetime declaration");
            }
            VertexId a = vertex(tokens[1], line_no);
            VertexId b = vertex(tokens[2], line_no);
            if (a == b) {
                throw ParseError(line_no, "self-loop on '" + tokens[1] + "'");
            }
            long long t = parse_int(tokens[3], line_no);
            if (t < 1 || t > lifetime) {
                throw ParseError(line_no, "time " + tokens[3] + " outside [1, " + std::to_string(lifetime) + "]");
            }
            TemporalEdge te{StaticEdge::make(a, b), static_cast<TimeLabel>(t)};
            if (!seen.insert(te).second) {
                throw ParseError(line_no, "duplicate temporal edge");
            }
            edges.push_back(te);
        } else {
            throw ParseError(line_no, "unknown directive '" + kw + "'");
        }
    }
    if (!have_header) {
        throw ParseError(line_no, "missing 'tg 1' header");
    }
    if (lifetime == 0) {
        throw ParseError(line_no, "missing lifetime declaration 't <T>'");
    }
    return TemporalGraph(std::move(names), static_cast<TimeLabel>(lifetime), std::move(edges));
}

TemporalGraph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_graph(in);
}

void write_graph(std::ostream& out, const TemporalGraph& g) {
    out << "tg " << kGraphFormatVersion << '\n';
    out << "t " << g.lifetime() << '\n';
    for (const auto& name : g.names()) {
        out << "v " << name << '\n';
    }
    for (const auto& te : g.edges()) {
        out << "e " << format_edge(g, te) << '\n';
    }
}

std::string format_graph(const TemporalGraph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

ReconfigSequence parse_sequence(std::istream& in, const TemporalGraph& g) {
    std::string raw;
    std::size_t line_no = 0;
    bool have_header = false;
    ReconfigSequence seq;

    auto vertex = [&](const std::string& name, std::size_t line) {
        auto v = g.find_vertex(name);
        if (!v) {
            throw ParseError(line, "undeclared vertex '" + name + "'");
        }
        return *v;
    };
    auto time = [&](const std::string& tok, std::size_t line) {
        long long t = parse_int(tok, line);
        if (t < 1 || t > g.lifetime()) {
            throw ParseError(line, "time " + tok + " outside [1, " + std::to_string(g.lifetime()) + "]");
        }
        return static_cast<TimeLabel>(t);
    };

    while (std::getline(in, raw)) {
        ++line_no;
        auto tokens = tokenize(raw);
        if (tokens.empty()) {
            continue;
        }
        if (!have_header) {
            expect_header(tokens, "tgs", kSequenceFormatVersion, line_no);
            have_header = true;
            continue;
        }
        if (tokens[0] != "r") {
            throw ParseError(line_no, "unknown directive '" + tokens[0] + "'");
        }
        expect_arity(tokens, 5, line_no);
        VertexId a = vertex(tokens[1], line_no);
        VertexId b = vertex(tokens[2], line_no);
        if (a == b) {
            throw ParseError(line_no, "self-loop on '" + tokens[1] + "'");
        }
        RelabelOp op{StaticEdge::make(a, b), time(tokens[3], line_no), time(tokens[4], line_no)};
        if (op.from == op.to) {
            throw ParseError(line_no, "relabel with identical times");
        }
        seq.ops.push_back(op);
    }
    if (!have_header) {
        throw ParseError(line_no, "missing 'tgs 1' header");
    }
    return seq;
}

ReconfigSequence parse_sequence(std::string_view text, const TemporalGraph& g) {
    std::istringstream in{std::string(text)};
    return parse_sequence(in, g);
}

void write_sequence(std::ostream& out, const ReconfigSequence& seq, const TemporalGraph& g) {
    out << "tgs " << kSequenceFormatVersion << '\n';
    for (const auto& op : seq.ops) {
        out << "r " << format_op(g, op) << '\n';
    }
}

std::string format_sequence(const ReconfigSequence& seq, const TemporalGraph& g) {
    std::ostringstream out;
    write_sequence(out, seq, g);
    return out.str();
}

std::string format_edge(const TemporalGraph& g, const TemporalEdge& te) {
    return g.name(te.edge.u) + " " + g.name(te.edge.v) + " " + std::to_string(te.time);
}

std::string format_op(const TemporalGraph& g, const RelabelOp& op) {
    return g.name(op.edge.u) + " " + g.name(op.edge.v) + " " + std::to_string(op.from) + " " + std::to_string(op.to);
}

TemporalGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open '" + path + "'");
    }
    try {
        return parse_graph(in);
    } catch (const ParseError& e) {
        throw Error(path + ": " + e.what());
    }
}

void write_graph_file(const std::string& path, const TemporalGraph& g) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write '" + path + "'");
    }
    write_graph(out, g);
    if (!out) {
        throw Error("write failed for '" + path + "'");
    }
}

}  // namespace tgr
