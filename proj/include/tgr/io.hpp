#pragma once

// Line-based text formats.
//
//   Temporal graph (.tg):          Sequence (.tgs):
//     tg 1                           tgs 1
//     t <T>                          r <u> <v> <t_from> <t_to>
//     v <name>                       ...
//     e <u> <v> <t>
//
// '#' starts a comment that runs to the end of the line. Parsing is strict
// and reports the offending line number.

#include <iosfwd>
#include <string>
#include <string_view>

#include "tgr/temporal_graph.hpp"

namespace tgr {

class ParseError : public Error {
  public:
    ParseError(std::size_t line, const std::string& message);
    [[nodiscard]] std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

inline constexpr int kGraphFormatVersion = 1;
inline constexpr int kSequenceFormatVersion = 1;

[[nodiscard]] TemporalGraph parse_graph(std::istream& in);
[[nodiscard]] TemporalGraph parse_graph(std::string_view text);
void write_graph(std::ostream& out, const TemporalGraph& g);
[[nodiscard]] std::string format_graph(const TemporalGraph& g);

// Names in the sequence are resolved against g's vertices.
[[nodiscard]] ReconfigSequence parse_sequence(std::istream& in, const TemporalGraph& g);
[[nodiscard]] ReconfigSequence parse_sequence(std::string_view text, const TemporalGraph& g);
void write_sequence(std::ostream& out, const ReconfigSequence& seq, const TemporalGraph& g);
[[nodiscard]] std::string format_sequence(const ReconfigSequence& seq, const TemporalGraph& g);

// "<u> <v> <t>" with vertex names.
[[nodiscard]] std::string format_edge(const TemporalGraph& g, const TemporalEdge& te);
[[nodiscard]] std::string format_op(const TemporalGraph& g, const RelabelOp& op);

[[nodiscard]] TemporalGraph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const TemporalGraph& g);

}  // namespace tgr
