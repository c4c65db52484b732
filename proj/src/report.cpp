#include "commgraph/report.hpp"

#include <sstream>

namespace commgraph {
namespace {

nlohmann::json optional_size(const std::optional<std::size_t>& v) { return v ? nlohmann::json(*v) : nlohmann::json(); }

nlohmann::json optional_text(const std::string& s) { return s.empty() ? nlohmann::json() : nlohmann::json(s); }

std::string params_text(const MetacyclicParams& p) {
  return "(" + std::to_string(p.m) + "," + std::to_string(p.n) + "," + std::to_string(p.s) + "," +
         std::to_string(p.t) + ")";
}

}  // namespace

nlohmann::json verdicts_json(const AnalysisReport& report) {
  auto out = nlohmann::json::array();
  for (const auto& v : report.verdicts) {
    out.push_back({{"claim", to_string(v.claim)},
                   {"status", to_string(v.status)},
                   {"detail", optional_text(v.detail)},
                   {"note", optional_text(v.note)}});
  }
  return out;
}

nlohmann::json to_json(const AnalysisReport& report) {
  nlohmann::json j;
  j["group"] = {{"order", report.order},
                {"center_size", report.center_size},
                {"derived_size", report.derived_size},
                {"index", report.index_g_prime}};
  if (report.factorization) {
    j["factorization"] = {{"n_gen", report.factorization->n_gen}, {"a_gens", report.factorization->a_gens}};
  } else {
    j["factorization"] = nullptr;
  }
  auto components = nlohmann::json::array();
  for (const auto& c : report.components) components.push_back({{"size", c.size}, {"complete", c.complete}});
  j["graph"] = {{"vertices", report.vertex_count},
                {"edges", report.edge_count},
                {"connected", report.connected},
                {"diameter", optional_size(report.diameter)},
                {"radius", optional_size(report.radius)},
                {"components", components}};
  j["verdicts"] = verdicts_json(report);
  return j;
}

nlohmann::json to_json(const SweepSummary& s) {
  nlohmann::json hist = nlohmann::json::object();
  for (auto [d, count] : s.diameter_histogram) hist[std::to_string(d)] = count;
  auto failures = nlohmann::json::array();
  for (const auto& f : s.failures) {
    failures.push_back({{"params", {f.params.m, f.params.n, f.params.s, f.params.t}},
                        {"claim", to_string(f.claim)},
                        {"detail", f.detail}});
  }
  auto four = nlohmann::json::array();
  for (const auto& p : s.diameter_four) four.push_back({p.m, p.n, p.s, p.t});
  return {{"max_order", s.max_order},
          {"s_zero_only", s.s_zero_only},
          {"presentations", s.presentations},
          {"abelian_skipped", s.abelian_skipped},
          {"tested", s.tested},
          {"connected", s.connected},
          {"disconnected", s.disconnected},
          {"disconnected_complete_union", s.disconnected_complete_union},
          {"no_factorization", s.no_factorization},
          {"lemma_i_sampled", s.lemma_i_sampled},
          {"diameter_histogram", hist},
          {"diameter_four", four},
          {"failures", failures}};
}

std::string verdicts_text(const AnalysisReport& report) {
  std::ostringstream out;
  for (const auto& v : report.verdicts) {
    out << to_string(v.claim) << ": " << to_string(v.status);
    if (!v.detail.empty()) out << " - " << v.detail;
    if (!v.note.empty()) out << " [" << v.note << "]";
    out << '\n';
  }
  return out.str();
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "order " << r.order << ", |Z| = " << r.center_size << ", |G'| = " << r.derived_size
      << ", [G:G'] = " << r.index_g_prime << '\n';
  out << "factorization: ";
  if (r.factorization) {
    out << "N = <" << r.factorization->n_gen << ">, A = <";
    for (std::size_t i = 0; i < r.factorization->a_gens.size(); ++i) {
      out << (i ? ", " : "") << r.factorization->a_gens[i];
    }
    out << ">\n";
  } else {
    out << "none found\n";
  }
  out << "graph: " << r.vertex_count << " vertices, " << r.edge_count << " edges, "
      << (r.connected ? "connected" : "disconnected");
  if (r.diameter) out << ", diameter " << *r.diameter << ", radius " << *r.radius;
  out << '\n' << "components:";
  for (const auto& c : r.components) out << ' ' << c.size << (c.complete ? "K" : "*");
  out << "   (K = complete, * = not complete)\n";
  out << verdicts_text(r);
  return out.str();
}

std::string to_text(const SweepSummary& s) {
  std::ostringstream out;
  out << "metacyclic sweep, m n <= " << s.max_order << (s.s_zero_only ? " (s = 0 only)" : "") << '\n'
      << "  presentations        " << s.presentations << '\n'
      << "  abelian (skipped)    " << s.abelian_skipped << '\n'
      << "  non-abelian tested   " << s.tested << '\n'
      << "  connected            " << s.connected << '\n'
      << "  disconnected         " << s.disconnected << " (" << s.disconnected_complete_union
      << " are |G'| + 1 complete graphs)\n"
      << "  no factorization     " << s.no_factorization << '\n'
      << "  lemma (i) sampled    " << s.lemma_i_sampled << '\n'
      << "  diameter histogram  ";
  for (auto [d, count] : s.diameter_histogram) out << ' ' << d << ':' << count;
  out << '\n' << "  failures             " << s.failures.size() << '\n';
  for (const auto& f : s.failures) {
    out << "    " << params_text(f.params) << ' ' << to_string(f.claim) << ": " << f.detail << '\n';
  }
  return out.str();
}

}  // namespace commgraph
