// scc: recognize, certify and cross-check strong cocomparability graphs.
//
// Exit status: 0 YES, 1 NO, 2 malformed input, 3 oracle guard violation.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "scc/avoidance.hpp"
#include "scc/certificate_io.hpp"
#include "scc/comparability.hpp"
#include "scc/constructions.hpp"
#include "scc/graph_io.hpp"
#include "scc/oracle.hpp"
#include "scc/recognize.hpp"

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kBadInput = 2;
constexpr int kGuard = 3;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

scc::GraphKind kind_from_extension(const std::string& path, scc::GraphKind fallback) {
  const auto ends_with = [&](std::string_view ext) {
    return path.size() >= ext.size() && path.compare(path.size() - ext.size(), ext.size(), ext) == 0;
  };
  if (ends_with(".sg")) return scc::GraphKind::Simple;
  if (ends_with(".bg")) return scc::GraphKind::Bigraph;
  if (ends_with(".g")) return scc::GraphKind::Reflexive;
  return fallback;
}

struct Input {
  std::string path;
  std::string kind;  // empty: from the extension, else the command default

  scc::AnyGraph load(scc::GraphKind fallback) const {
    const auto k = kind.empty() ? kind_from_extension(path, fallback) : scc::parse_kind(kind);
    return scc::decode_graph(read_input(path), k);
  }

  // Reflexive and simple inputs convert into each other by adding or dropping
  // loops; bigraphs never convert.
  scc::Graph reflexive() const {
    auto g = load(scc::GraphKind::Reflexive);
    if (auto* r = std::get_if<scc::Graph>(&g)) return *r;
    if (auto* s = std::get_if<scc::SimpleGraph>(&g)) return scc::reflexive_closure(*s);
    throw InputError("expected a reflexive graph, got a bigraph");
  }
  scc::SimpleGraph simple() const {
    auto g = load(scc::GraphKind::Simple);
    if (auto* s = std::get_if<scc::SimpleGraph>(&g)) return *s;
    if (auto* r = std::get_if<scc::Graph>(&g)) return scc::underlying_simple(*r);
    throw InputError("expected a simple graph, got a bigraph");
  }
  scc::Bigraph bigraph() const {
    auto g = load(scc::GraphKind::Bigraph);
    if (auto* b = std::get_if<scc::Bigraph>(&g)) return *b;
    throw InputError("expected a bigraph");
  }
};

int answer(bool yes) {
  std::cout << (yes ? "YES" : "NO") << '\n';
  return yes ? kYes : kNo;
}

// Prints a certificate only after it has been re-verified here.
void print_verified(bool verified, const std::string& block) {
  if (!verified) throw std::logic_error("refusing to print a certificate that fails verification");
  std::cout << block;
}

void print_ordering_or_note(const scc::OrderingSearch& search, auto&& print) {
  if (search.ordering)
    print(*search.ordering);
  else
    std::cerr << "scc: ordering search stopped after " << search.nodes << " nodes; no ordering printed\n";
}

int recognize(const std::string& cls, const Input& input, bool certify, std::uint64_t budget) {
  if (cls == "strong-cocomp") {
    const auto g = input.reflexive();
    const auto d = scc::recognize_strong_cocomparability(g, {.ordering_bound = 0});
    const int code = answer(d.strong);
    if (!certify) return code;
    if (!d.strong) {
      print_verified(scc::verify_weak_edge_asteroid(g, *d.asteroid), scc::format_weak_edge_asteroid(*d.asteroid));
    } else {
      print_ordering_or_note(scc::search_strong_ordering(g, budget), [&](const scc::VertexOrdering& ord) {
        print_verified(scc::is_slash_free_ordering(g, ord), scc::format_ordering(ord));
      });
    }
    return code;
  }
  if (cls == "cocomp" || cls == "comparability") {
    const auto h = cls == "cocomp" ? scc::complement_simple(input.reflexive()) : input.simple();
    const auto o = scc::recognize_comparability(h);
    const int code = answer(o.has_value());
    if (certify && o) print_verified(scc::verify_transitive(h, *o), scc::format_orientation(*o));
    return code;
  }
  if (cls == "cocomp-bigraph") {
    const auto h = input.bigraph();
    const auto closure = scc::close_both_sides(h);
    const auto d = scc::recognize_strong_cocomparability(closure, {.ordering_bound = 0});
    const int code = answer(d.strong);
    if (!certify) return code;
    if (!d.strong) {
      print_verified(scc::verify_weak_edge_asteroid(closure, *d.asteroid),
                     scc::format_weak_edge_asteroid(*d.asteroid));
    } else {
      print_ordering_or_note(scc::search_strong_ordering(closure, budget), [&](const scc::VertexOrdering& ord) {
        const auto split = scc::split_closure_ordering(h, ord);
        print_verified(scc::is_bigraph_slash_free(h, split.rows, split.cols),
                       scc::format_bigraph_ordering(split.rows, split.cols));
      });
    }
    return code;
  }
  throw InputError("unknown class '" + cls + "'");
}

int construct(const std::string& op, const Input& input) {
  if (op == "bipartite-double")
    std::cout << scc::encode(scc::bipartite_double(input.reflexive()));
  else if (op == "h-plus-plus")
    std::cout << scc::encode(scc::close_both_sides(input.bigraph()));
  else if (op == "complement")
    std::cout << scc::encode(scc::complement_simple(input.reflexive()));
  else
    throw InputError("unknown construction '" + op + "'");
  return 0;
}

int oracle(const std::string& cls, const Input& input) {
  if (cls == "strong-cocomp") {
    const auto g = input.reflexive();
    const auto ord = scc::oracle_strong_cocomp(g);
    const int code = answer(ord.has_value());
    if (ord) print_verified(scc::is_slash_free_ordering(g, *ord), scc::format_ordering(*ord));
    return code;
  }
  if (cls == "comparability" || cls == "cocomp") {
    const auto h = cls == "cocomp" ? scc::complement_simple(input.reflexive()) : input.simple();
    const auto o = scc::oracle_comparability(h);
    const int code = answer(o.has_value());
    if (o) print_verified(scc::verify_transitive(h, *o), scc::format_orientation(*o));
    return code;
  }
  if (cls == "cocomp-bigraph") {
    const auto h = input.bigraph();
    const auto ords = scc::oracle_cocomp_bigraph(h);
    const int code = answer(ords.has_value());
    if (ords)
      print_verified(scc::is_bigraph_slash_free(h, ords->first, ords->second),
                     scc::format_bigraph_ordering(ords->first, ords->second));
    return code;
  }
  throw InputError("unknown class '" + cls + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Recognition and certification of strong cocomparability graphs"};
  app.require_subcommand(1);

  const std::vector<std::string> classes{"strong-cocomp", "cocomp", "comparability", "cocomp-bigraph"};
  const std::vector<std::string> kinds{"reflexive", "simple", "bigraph"};

  std::string cls = "strong-cocomp";
  Input input;
  std::uint64_t budget = 10'000'000;
  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--kind", input.kind, "Input graph kind (default: from extension .g/.sg/.bg)")
        ->check(CLI::IsMember(kinds));
    cmd->add_option("file", input.path, "Graph file, '-' for standard input")->required();
  };

  auto* rec = app.add_subcommand("recognize", "Print YES or NO");
  rec->add_option("--class", cls, "Graph class")->check(CLI::IsMember(classes));
  add_input(rec);

  auto* cert = app.add_subcommand("certify", "Print YES or NO followed by a verified certificate");
  cert->add_option("--class", cls, "Graph class")->check(CLI::IsMember(classes));
  cert->add_option("--budget", budget, "Node budget for the YES ordering search (0 = unlimited)");
  add_input(cert);

  std::string op;
  auto* cons = app.add_subcommand("construct", "Print a derived graph in canonical form");
  cons->add_option("--op", op, "Construction")
      ->required()
      ->check(CLI::IsMember({"bipartite-double", "h-plus-plus", "complement"}));
  add_input(cons);

  scc::CrosscheckOptions cc;
  std::string format = "text", output;
  std::vector<std::string> recognizers{"pair", "avoidance", "oracle"};
  auto* cross = app.add_subcommand("crosscheck", "Compare recognizers on every (or sampled) labeled graph");
  cross->add_option("--n", cc.n, "Vertex count")->required();
  auto* seed_opt = cross->add_option("--seed", cc.seed, "Sampling seed");
  auto* samples_opt = cross->add_option("--samples", cc.samples, "Number of sampled graphs");
  seed_opt->needs(samples_opt);
  cross->add_option("--recognizers", recognizers, "Subset of pair, avoidance, oracle")
      ->delimiter(',')
      ->check(CLI::IsMember({"pair", "avoidance", "oracle"}));
  cross->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "structured"}));
  cross->add_option("--output", output, "Write the report here instead of standard output");

  auto* orc = app.add_subcommand("oracle", "Brute-force recognition (small inputs only)");
  orc->add_option("--class", cls, "Graph class")->check(CLI::IsMember(classes));
  add_input(orc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*rec) return recognize(cls, input, false, budget);
    if (*cert) return recognize(cls, input, true, budget);
    if (*cons) return construct(op, input);
    if (*orc) return oracle(cls, input);
    if (*cross) {
      cc.sampled = samples_opt->count() > 0;
      const auto has = [&](const char* name) {
        return std::find(recognizers.begin(), recognizers.end(), name) != recognizers.end();
      };
      cc.use_pair = has("pair");
      cc.use_avoidance = has("avoidance");
      cc.use_oracle = has("oracle");
      const auto report = scc::crosscheck_enumerate(cc);
      const auto text =
          scc::emit_report(report, format == "text" ? scc::ReportFormat::Text : scc::ReportFormat::Structured);
      if (output.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(output);
        if (!out) throw InputError("cannot write '" + output + "'");
        out << text;
      }
      return report.disagreement_count() == 0 ? 0 : 1;
    }
  } catch (const scc::GuardViolation& e) {
    std::cerr << "scc: " << e.what() << '\n';
    return kGuard;
  } catch (const scc::FormatError& e) {
    std::cerr << "scc: malformed input: " << e.what() << '\n';
    return kBadInput;
  } catch (const InputError& e) {
    std::cerr << "scc: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "scc: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}
