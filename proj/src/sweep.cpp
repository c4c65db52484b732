#include <atomic>
#include <thread>

#include "commgraph/error.hpp"
#include "commgraph/theorem_checker.hpp"

namespace commgraph {
namespace {

struct SweepItem {
  bool abelian = false;
  bool connected = false;
  std::optional<std::size_t> diameter;
  bool factorized = false;
  bool lemma_i_sampled = false;
  bool complete_union = false;
  std::vector<std::pair<ClaimId, std::string>> failures;
};

SweepItem run_one(const MetacyclicParams& p, const CheckOptions& options) {
  SweepItem item;
  const FiniteGroup G = build_metacyclic(p);
  AnalysisReport report;
  try {
    report = analyze(G, options);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::AbelianGroup) throw;
    item.abelian = true;
    return item;
  }
  item.connected = report.connected;
  item.diameter = report.diameter;
  item.factorized = report.factorization.has_value();
  for (const auto& v : report.verdicts) {
    if (v.status == VerdictStatus::Fails) item.failures.emplace_back(v.claim, v.detail);
    if (v.claim == ClaimId::LemBasicI && v.note.starts_with("sampled")) item.lemma_i_sampled = true;
  }
  if (!report.connected) {
    bool all_complete = true;
    for (const auto& c : report.components) all_complete = all_complete && c.complete;
    item.complete_union = all_complete && report.components.size() == report.derived_size + 1;
  }
  return item;
}

}  // namespace

std::vector<MetacyclicParams> enumerate_metacyclic(std::size_t max_order, bool s_zero_only) {
  std::vector<MetacyclicParams> out;
  for (std::size_t m = 1; m <= max_order; ++m) {
    for (std::size_t n = 1; m * n <= max_order; ++n) {
      const std::size_t t_lo = n == 1 ? 0 : 1;
      const std::size_t t_hi = n == 1 ? 1 : n;
      for (std::size_t t = t_lo; t < t_hi; ++t) {
        for (std::size_t s = 0; s < (s_zero_only ? 1 : n); ++s) {
          MetacyclicParams p{m, n, s, t};
          if (metacyclic_inconsistency(p).empty()) out.push_back(p);
        }
      }
    }
  }
  return out;
}

SweepSummary sweep_metacyclic(std::size_t max_order, bool s_zero_only, const CheckOptions& options,
                              std::size_t threads) {
  if (max_order < 6) throw Error(ErrorKind::InvalidArgument, "sweep needs max_order >= 6");
  const auto params = enumerate_metacyclic(max_order, s_zero_only);

  SweepSummary summary;
  summary.max_order = max_order;
  summary.s_zero_only = s_zero_only;
  summary.presentations = params.size();

  // x^a = x (t = 1, or n = 1) makes the group abelian; those need no table.
  std::vector<std::size_t> work;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (params[i].n == 1 || params[i].t == 1) {
      ++summary.abelian_skipped;
    } else {
      work.push_back(i);
    }
  }

  std::vector<SweepItem> items(work.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(1, work.size()));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t i; !failed && (i = next.fetch_add(1)) < work.size();) {
      try {
        items[i] = run_one(params[work[i]], options);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);

  // Merge in enumeration order so the summary does not depend on scheduling.
  for (std::size_t i = 0; i < work.size(); ++i) {
    const auto& item = items[i];
    const auto& p = params[work[i]];
    if (item.abelian) {
      ++summary.abelian_skipped;
      continue;
    }
    ++summary.tested;
    if (!item.factorized) ++summary.no_factorization;
    if (item.lemma_i_sampled) ++summary.lemma_i_sampled;
    if (item.connected) {
      ++summary.connected;
      ++summary.diameter_histogram[*item.diameter];
      if (*item.diameter == 4) summary.diameter_four.push_back(p);
    } else {
      ++summary.disconnected;
      if (item.complete_union) ++summary.disconnected_complete_union;
    }
    for (const auto& [claim, detail] : item.failures) summary.failures.push_back({p, claim, detail});
  }
  return summary;
}

}  // namespace commgraph
