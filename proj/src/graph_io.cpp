#include "scc/graph_io.hpp"

#include <charconv>
#include <istream>
#include <sstream>
#include <vector>

namespace scc {

namespace {

std::vector<std::vector<long long>> content_lines(std::istream& in) {
  std::vector<std::vector<long long>> lines;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::vector<long long> values;
    std::istringstream tokens(line);
    std::string tok;
    while (tokens >> tok) {
      long long v = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw FormatError("line " + std::to_string(lineno) + ": not an integer: '" + tok + "'");
      values.push_back(v);
    }
    lines.push_back(std::move(values));
  }
  return lines;
}

void expect_arity(const std::vector<long long>& line, std::size_t arity, std::string_view what) {
  if (line.size() != arity)
    throw FormatError(std::string(what) + ": expected " + std::to_string(arity) + " integers, got " +
                      std::to_string(line.size()));
}

int checked_index(long long v, long long bound, std::string_view part) {
  if (v < 0 || v >= bound)
    throw FormatError(std::string(part) + " index " + std::to_string(v) + " out of range 0.." +
                      std::to_string(bound - 1));
  return static_cast<int>(v);
}

}  // namespace

AnyGraph decode_graph(std::istream& in, GraphKind kind) {
  const auto lines = content_lines(in);
  if (lines.empty()) throw FormatError("missing header");
  const auto& header = lines.front();
  const std::size_t header_arity = kind == GraphKind::Bigraph ? 3 : 2;
  expect_arity(header, header_arity, "header");
  for (long long v : header)
    if (v < 0) throw FormatError("header: negative count");
  const long long m = header.back();
  if (static_cast<long long>(lines.size()) - 1 != m)
    throw FormatError("header declares " + std::to_string(m) + " edges, found " + std::to_string(lines.size() - 1));

  EdgeList edges;
  edges.reserve(m);
  if (kind == GraphKind::Bigraph) {
    const long long nx = header[0], ny = header[1];
    for (std::size_t i = 1; i < lines.size(); ++i) {
      expect_arity(lines[i], 2, "edge line");
      edges.emplace_back(checked_index(lines[i][0], nx, "X"), checked_index(lines[i][1], ny, "Y"));
    }
    return Bigraph(static_cast<int>(nx), static_cast<int>(ny), edges);
  }

  const long long n = header[0];
  for (std::size_t i = 1; i < lines.size(); ++i) {
    expect_arity(lines[i], 2, "edge line");
    const int u = checked_index(lines[i][0], n, "vertex");
    const int v = checked_index(lines[i][1], n, "vertex");
    if (u == v) {
      if (kind == GraphKind::Simple) throw FormatError("loop at vertex " + std::to_string(u) + " in simple graph");
      continue;  // loops are implicit in reflexive graphs
    }
    edges.emplace_back(u, v);
  }
  if (kind == GraphKind::Simple) return SimpleGraph(static_cast<int>(n), edges);
  return Graph(static_cast<int>(n), edges);
}

AnyGraph decode_graph(std::string_view text, GraphKind kind) {
  std::istringstream in{std::string(text)};
  return decode_graph(in, kind);
}

Graph read_graph(std::string_view text) { return std::get<Graph>(decode_graph(text, GraphKind::Reflexive)); }
SimpleGraph read_simple_graph(std::string_view text) {
  return std::get<SimpleGraph>(decode_graph(text, GraphKind::Simple));
}
Bigraph read_bigraph(std::string_view text) { return std::get<Bigraph>(decode_graph(text, GraphKind::Bigraph)); }

namespace {

std::string encode_edges(std::string header, const EdgeList& edges) {
  std::ostringstream out;
  out << header << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace

std::string encode(const Graph& g) {
  EdgeList edges;
  for (const auto& e : g.edges()) edges.emplace_back(e.x, e.y);
  return encode_edges(std::to_string(g.size()), edges);
}

std::string encode(const SimpleGraph& h) { return encode_edges(std::to_string(h.size()), h.edges()); }

std::string encode(const Bigraph& h) {
  return encode_edges(std::to_string(h.nx()) + ' ' + std::to_string(h.ny()), h.edges());
}

std::string encode(const AnyGraph& g) {
  return std::visit([](const auto& x) { return encode(x); }, g);
}

GraphKind parse_kind(std::string_view name) {
  if (name == "reflexive") return GraphKind::Reflexive;
  if (name == "simple") return GraphKind::Simple;
  if (name == "bigraph") return GraphKind::Bigraph;
  throw std::invalid_argument("unknown graph kind '" + std::string(name) + "'");
}

}  // namespace scc
