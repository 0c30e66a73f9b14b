#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "scc/avoidance.hpp"
#include "scc/certificate_io.hpp"
#include "scc/oracle.hpp"
#include "scc/random.hpp"
#include "scc/recognize.hpp"

namespace scc {

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

bool GraphRecord::agrees() const {
  std::optional<bool> seen;
  for (const auto& verdict : {pair, avoidance, oracle}) {
    if (!verdict) continue;
    if (seen && *seen != *verdict) return false;
    seen = verdict;
  }
  return true;
}

bool GraphRecord::strong() const {
  if (pair) return *pair;
  if (avoidance) return *avoidance;
  return oracle.value_or(false);
}

std::size_t Report::strong_count() const {
  std::size_t c = 0;
  for (const auto& r : records) c += r.strong();
  return c;
}

std::size_t Report::disagreement_count() const {
  std::size_t c = 0;
  for (const auto& r : records) c += !r.agrees();
  return c;
}

namespace {

GraphRecord check_graph(int n, std::uint64_t mask, const CrosscheckOptions& options) {
  const Graph g = Graph::from_upper_mask(n, mask);
  GraphRecord record;
  record.mask = mask;
  std::string certificate;
  if (options.use_pair) {
    const auto ip = find_invertible_pair(g);
    record.pair = !ip.has_value();
    if (ip) certificate = format_weak_edge_asteroid(extract_weak_edge_asteroid(g, *ip));
  }
  if (options.use_avoidance) record.avoidance = recognize_via_avoidance(g);
  if (options.use_oracle) {
    const auto ord = oracle_strong_cocomp(g);
    record.oracle = ord.has_value();
    if (ord) certificate = format_ordering(*ord);
  }
  record.certificate_hash = certificate.empty() ? 0 : fnv1a(certificate);
  return record;
}

}  // namespace

Report crosscheck_enumerate(const CrosscheckOptions& options) {
  const int n = options.n;
  if (n < 0) throw std::invalid_argument("crosscheck: negative vertex count");
  const int bits = n * (n - 1) / 2;
  if (!options.sampled && n > 6) throw std::invalid_argument("crosscheck: exhaustive mode supports n <= 6");
  if (options.sampled && n > 11) throw std::invalid_argument("crosscheck: sampled mode supports n <= 11");
  if (options.use_oracle && n > kOracleMaxVertices)
    throw GuardViolation("crosscheck: oracle guard is n <= " + std::to_string(kOracleMaxVertices));

  std::vector<std::uint64_t> masks;
  if (options.sampled) {
    Rng rng(options.seed);
    const std::uint64_t keep = bits == 64 ? ~0ULL : (std::uint64_t{1} << bits) - 1;
    for (std::uint64_t i = 0; i < options.samples; ++i) masks.push_back(rng.bits() & keep);
  } else {
    masks.resize(std::uint64_t{1} << bits);
    for (std::uint64_t m = 0; m < masks.size(); ++m) masks[m] = m;
  }

  Report report;
  report.options = options;
  report.records.resize(masks.size());
  const long long count = static_cast<long long>(masks.size());
  // each worker writes only its own slice of records
#pragma omp parallel for schedule(dynamic, 64)
  for (long long i = 0; i < count; ++i) report.records[i] = check_graph(n, masks[i], options);
  return report;
}

namespace {

std::string hex(std::uint64_t v) {
  std::ostringstream out;
  out << "0x" << std::hex << std::setw(16) << std::setfill('0') << v;
  return out.str();
}

std::string verdict(const std::optional<bool>& v) { return v ? (*v ? "YES" : "NO") : "-"; }

std::vector<std::string> recognizer_names(const CrosscheckOptions& o) {
  std::vector<std::string> names;
  if (o.use_pair) names.emplace_back("pair");
  if (o.use_avoidance) names.emplace_back("avoidance");
  if (o.use_oracle) names.emplace_back("oracle");
  return names;
}

}  // namespace

std::string emit_report(const Report& report, ReportFormat format) {
  const auto& o = report.options;
  const auto names = recognizer_names(o);
  if (format == ReportFormat::Structured) {
    nlohmann::ordered_json doc;
    doc["n"] = o.n;
    doc["mode"] = o.sampled ? "sampled" : "exhaustive";
    if (o.sampled) {
      doc["seed"] = o.seed;
      doc["samples"] = o.samples;
    }
    doc["recognizers"] = names;
    doc["records"] = nlohmann::ordered_json::array();
    for (const auto& r : report.records) {
      nlohmann::ordered_json rec;
      rec["mask"] = hex(r.mask);
      if (r.pair) rec["pair"] = *r.pair;
      if (r.avoidance) rec["avoidance"] = *r.avoidance;
      if (r.oracle) rec["oracle"] = *r.oracle;
      rec["certificate"] = hex(r.certificate_hash);
      doc["records"].push_back(std::move(rec));
    }
    if (!report.records.empty())
      doc["summary"] = {{"graphs", report.records.size()},
                        {"strong", report.strong_count()},
                        {"disagreements", report.disagreement_count()}};
    return doc.dump(1) + "\n";
  }

  std::ostringstream out;
  out << "crosscheck n=" << o.n << " mode=" << (o.sampled ? "sampled" : "exhaustive");
  if (o.sampled) out << " seed=" << o.seed << " samples=" << o.samples;
  out << " recognizers=";
  for (std::size_t i = 0; i < names.size(); ++i) out << (i ? "," : "") << names[i];
  out << '\n';
  if (report.records.empty()) return out.str();
  out << "graphs=" << report.records.size() << " strong=" << report.strong_count()
      << " not_strong=" << report.records.size() - report.strong_count()
      << " disagreements=" << report.disagreement_count() << '\n';
  for (const auto& r : report.records)
    if (!r.agrees())
      out << "disagreement mask=" << hex(r.mask) << " pair=" << verdict(r.pair)
          << " avoidance=" << verdict(r.avoidance) << " oracle=" << verdict(r.oracle) << '\n';
  return out.str();
}

}  // namespace scc
