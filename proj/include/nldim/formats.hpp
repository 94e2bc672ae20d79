#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "nldim/graph.hpp"

namespace nldim {

class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// graph6: size header followed by the upper triangle, column by column,
/// packed six bits per printable byte. An optional ">>graph6<<" prefix and
/// trailing whitespace are accepted.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

/// Edge list: one "u v" pair per line, 0-indexed; blank lines and '#'
/// comments are ignored. A "# vertices N" comment fixes the order, otherwise
/// it is one more than the largest index. Duplicate edges collapse; loops are
/// rejected.
Graph parse_edgelist(std::string_view text);
std::string emit_edgelist(const Graph& g);

enum class GraphFormat { Graph6, EdgeList };

GraphFormat parse_format(std::string_view name);
Graph parse_graph(std::string_view text, GraphFormat format);

}  // namespace nldim
