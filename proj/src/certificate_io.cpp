#include "scc/certificate_io.hpp"

#include <istream>
#include <sstream>

namespace scc {

namespace {

void write_sequence(std::ostream& out, const std::vector<int>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? " " : "") << values[i];
  out << '\n';
}

std::vector<int> read_sequence(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw MalformedCertificate("unexpected end of certificate");
  std::istringstream tokens(line);
  std::vector<int> values;
  int v = 0;
  while (tokens >> v) values.push_back(v);
  if (!tokens.eof()) throw MalformedCertificate("non-integer token in certificate line '" + line + "'");
  return values;
}

std::vector<int> read_fixed(std::istream& in, std::size_t arity) {
  auto values = read_sequence(in);
  if (values.size() != arity) throw MalformedCertificate("expected " + std::to_string(arity) + " integers");
  return values;
}

VertexOrdering to_ordering(std::vector<int> values) {
  try {
    return VertexOrdering(std::move(values));
  } catch (const std::invalid_argument& e) {
    throw MalformedCertificate(e.what());
  }
}

}  // namespace

std::string format_ordering(const VertexOrdering& ord) {
  std::ostringstream out;
  out << "ordering\n";
  write_sequence(out, ord.values());
  return out.str();
}

std::string format_bigraph_ordering(const VertexOrdering& rows, const VertexOrdering& cols) {
  std::ostringstream out;
  out << "bigraph-ordering\n";
  write_sequence(out, rows.values());
  write_sequence(out, cols.values());
  return out.str();
}

std::string format_weak_edge_asteroid(const WeakEdgeAsteroid& w) {
  std::ostringstream out;
  out << "weak-edge-asteroid " << w.edges.size() << '\n';
  for (const auto& e : w.edges) out << e.x << ' ' << e.y << '\n';
  for (const auto& walk : w.walks) write_sequence(out, walk);
  return out.str();
}

std::string format_orientation(const Orientation& o) {
  const auto arcs = o.arcs();
  std::ostringstream out;
  out << "orientation " << arcs.size() << '\n';
  for (auto [a, b] : arcs) out << a << ' ' << b << '\n';
  return out.str();
}

Certificate parse_certificate(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw MalformedCertificate("empty certificate");
  std::istringstream h(header);
  std::string tag;
  h >> tag;
  if (tag == "ordering") return to_ordering(read_sequence(in));
  if (tag == "bigraph-ordering") {
    auto rows = to_ordering(read_sequence(in));
    auto cols = to_ordering(read_sequence(in));
    return BigraphOrdering{std::move(rows), std::move(cols)};
  }
  long long count = -1;
  if (!(h >> count) || count < 0) throw MalformedCertificate("missing count in '" + header + "'");
  if (tag == "weak-edge-asteroid") {
    WeakEdgeAsteroid w;
    for (long long i = 0; i < count; ++i) {
      const auto e = read_fixed(in, 2);
      w.edges.emplace_back(e[0], e[1]);
    }
    for (long long i = 0; i < count; ++i) w.walks.push_back(read_sequence(in));
    return w;
  }
  if (tag == "orientation") {
    EdgeList arcs;
    for (long long i = 0; i < count; ++i) {
      const auto a = read_fixed(in, 2);
      arcs.emplace_back(a[0], a[1]);
    }
    return arcs;
  }
  throw MalformedCertificate("unknown certificate kind '" + tag + "'");
}

}  // namespace scc
