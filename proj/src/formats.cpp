#include "nldim/formats.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace nldim {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

int sextet(char c) {
  const int v = static_cast<unsigned char>(c);
  if (v < 63 || v > 126) throw FormatError(std::string("graph6: invalid character '") + c + "'");
  return v - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw FormatError("graph6: empty input");

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != '~') {
    n = sextet(text[0]);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != '~') {
    if (text.size() < 4) throw FormatError("graph6: truncated size header");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | sextet(text[i]);
    pos = 4;
  } else {
    if (text.size() < 8) throw FormatError("graph6: truncated size header");
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | sextet(text[i]);
    pos = 8;
  }
  if (n > kMaxOrder) throw FormatError("graph6: order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() - pos != body)
    throw FormatError("graph6: expected " + std::to_string(body) + " body bytes, found " + std::to_string(text.size() - pos));

  std::vector<Edge> es;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = sextet(text[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1) es.emplace_back(i, j);
    }
  for (; k < body * 6; ++k)
    if ((sextet(text[pos + k / 6]) >> (5 - k % 6)) & 1) throw FormatError("graph6: nonzero padding bits");
  return Graph(static_cast<int>(n), es);
}

std::string emit_graph6(const Graph& g) {
  const long n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph parse_edgelist(std::string_view text) {
  std::vector<Edge> es;
  long declared = -1;
  long max_index = -1;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::istringstream in{std::string(line.substr(1))};
      std::string key;
      long value = 0;
      if (in >> key >> value && key == "vertices") {
        if (value < 0 || value > kMaxOrder) throw FormatError("edgelist: declared order out of range");
        declared = value;
      }
      continue;
    }
    std::istringstream in{std::string(line)};
    long u = 0, v = 0;
    std::string rest;
    if (!(in >> u >> v) || (in >> rest && !rest.starts_with("#")))
      throw FormatError("edgelist: line " + std::to_string(line_no) + " is not a 'u v' pair");
    if (u < 0 || v < 0 || u >= kMaxOrder || v >= kMaxOrder)
      throw FormatError("edgelist: line " + std::to_string(line_no) + " has a vertex index out of range");
    if (u == v) throw FormatError("edgelist: line " + std::to_string(line_no) + " is a loop");
    max_index = std::max({max_index, u, v});
    es.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  const long n = declared >= 0 ? declared : max_index + 1;
  if (max_index >= n) throw FormatError("edgelist: vertex index exceeds declared order");
  return Graph(static_cast<int>(n), es);
}

std::string emit_edgelist(const Graph& g) {
  std::string out = "# vertices " + std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

GraphFormat parse_format(std::string_view name) {
  if (name == "graph6" || name == "g6") return GraphFormat::Graph6;
  if (name == "edgelist" || name == "edges") return GraphFormat::EdgeList;
  throw FormatError("unknown graph format '" + std::string(name) + "'");
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::Graph6 ? parse_graph6(text) : parse_edgelist(text);
}

}  // namespace nldim
