#pragma once

// Machine checks of the structural claims about commuting graphs of groups
// G = A N (N cyclic normal, A abelian), run on concrete Cayley tables.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "commgraph/commuting_graph.hpp"
#include "commgraph/factorization.hpp"
#include "commgraph/group.hpp"
#include "commgraph/ingest.hpp"

namespace commgraph {

enum class ClaimId {
  ThmA,              // connected iff some non-central centralizer is non-abelian
  ThmB,              // connected implies diameter <= 4
  ThmC,              // disconnected implies 1 + |G'| complete components of prescribed sizes
  LemBasicI,         // gu ~ hv iff [u,h] = [v,g] for commuting g, h and u, v in N
  LemBasicII,        // N cap Z = <x^|G'|>, |<N,Z>| = |G'||Z|
  LemBasicIII,       // <[x,g]> = G' implies |C(g)| = [G:G'] and C(g) abelian
  LemEquiv,          // C(u) <= <N,Z> for non-central u in N iff all non-central centralizers abelian
  LemEquivMoreover,  // then C(g) = <N,Z> or |C(g)| = [G:G']
  RemarkPower,       // [u,g]^l = [u^l,g]
  Case1Witness,      // connected: some vertex of N has eccentricity <= 2
};

inline constexpr ClaimId kAllClaims[] = {ClaimId::ThmA,        ClaimId::ThmB,         ClaimId::ThmC,
                                         ClaimId::LemBasicI,   ClaimId::LemBasicII,   ClaimId::LemBasicIII,
                                         ClaimId::LemEquiv,    ClaimId::LemEquivMoreover, ClaimId::RemarkPower,
                                         ClaimId::Case1Witness};

std::string_view to_string(ClaimId id);

enum class VerdictStatus { Holds, Fails, Skipped };

std::string_view to_string(VerdictStatus status);

struct ClaimVerdict {
  ClaimId claim;
  VerdictStatus status;
  // Counterexample or skip reason; empty exactly when status == Holds.
  std::string detail;
  // Informational (coverage, witnesses); may accompany any status.
  std::string note;

  bool holds() const { return status == VerdictStatus::Holds; }

  static ClaimVerdict pass(ClaimId id, std::string note = {}) { return {id, VerdictStatus::Holds, {}, std::move(note)}; }
  static ClaimVerdict fail(ClaimId id, std::string detail) { return {id, VerdictStatus::Fails, std::move(detail), {}}; }
  static ClaimVerdict skip(ClaimId id, std::string reason) {
    return {id, VerdictStatus::Skipped, std::move(reason), {}};
  }
};

struct CheckOptions {
  std::size_t max_a_gens = kDefaultMaxAGens;
  // Lemma (i) runs every commuting (g, h) pair when |G| is at most this, or
  // when the full tuple count fits the cap; otherwise (g, h) pairs are drawn
  // at random (all u, v for each) until the cap is spent.
  std::size_t lemma_i_exhaustive_order = 200;
  std::size_t lemma_i_tuple_cap = 1'000'000;
  // Word budget for the lemma (i) lookup rows; above it a slower gather path is used.
  std::size_t lemma_i_table_words = std::size_t{1} << 22;
  std::uint64_t seed = 0x5eed'c0ff'eeULL;
};

// Group data every check needs, computed once.
struct GroupFacts {
  const FiniteGroup* group;
  std::vector<Bitset> centralizers;   // indexed by element
  Subgroup center;
  Subgroup derived;
  std::vector<std::uint8_t> abelian_centralizer;  // indexed by element

  static GroupFacts compute(const FiniteGroup& G);

  std::size_t index() const { return group->order() / derived.size(); }
  bool is_central(Element g) const { return center.contains(g); }
};

// Throws Error(NoFactorization) when f is absent or fails verification.
void require_factorization(const FiniteGroup& G, const std::optional<Factorization>& f);

ClaimVerdict check_thm_a(const FiniteGroup& G, const CommutingGraph& graph, const std::optional<Factorization>& f);
ClaimVerdict check_thm_b(const FiniteGroup& G, const CommutingGraph& graph, const std::optional<Factorization>& f);
ClaimVerdict check_thm_c(const FiniteGroup& G, const CommutingGraph& graph, const std::optional<Factorization>& f);
// Verdicts for LemBasicI, LemBasicII, LemBasicIII in that order.
std::vector<ClaimVerdict> check_lemma_basic(const FiniteGroup& G, const std::optional<Factorization>& f,
                                            const CheckOptions& options = {});
// Verdicts for LemEquiv and LemEquivMoreover.
std::vector<ClaimVerdict> check_lemma_equiv(const FiniteGroup& G, const std::optional<Factorization>& f);
// Throws Error(GraphDisconnected) when the graph is disconnected.
ClaimVerdict check_case1_witness(const FiniteGroup& G, const CommutingGraph& graph,
                                 const std::optional<Factorization>& f);
// N must be an abelian normal subgroup.
ClaimVerdict check_remark_power(const FiniteGroup& G, const Subgroup& N);

// Variants over precomputed facts; f must already be verified.
namespace checks {
ClaimVerdict thm_a(const GroupFacts& facts, const CommutingGraph& graph);
ClaimVerdict thm_b(const CommutingGraph& graph, std::optional<std::size_t> diam);
ClaimVerdict thm_c(const GroupFacts& facts, const CommutingGraph& graph);
ClaimVerdict lemma_basic_i(const GroupFacts& facts, const Factorization& f, const CheckOptions& options);
ClaimVerdict lemma_basic_ii(const GroupFacts& facts, const Factorization& f);
ClaimVerdict lemma_basic_iii(const GroupFacts& facts, const Factorization& f);
std::vector<ClaimVerdict> lemma_equiv(const GroupFacts& facts, const Factorization& f);
ClaimVerdict case1_witness(const GroupFacts& facts, const CommutingGraph& graph, const Factorization& f,
                           const std::vector<std::size_t>& ecc);
}  // namespace checks

struct AnalysisReport {
  std::size_t order = 0;
  std::size_t center_size = 0;
  std::size_t derived_size = 0;
  std::size_t index_g_prime = 0;
  std::optional<Factorization> factorization;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  bool connected = false;
  std::optional<std::size_t> diameter;
  std::optional<std::size_t> radius;
  std::vector<ComponentShape> components;
  std::vector<ClaimVerdict> verdicts;

  bool all_hold_or_skipped() const;
  const ClaimVerdict& verdict(ClaimId id) const;
};

// Throws Error(AbelianGroup) for abelian input.
AnalysisReport analyze(const FiniteGroup& G, const CheckOptions& options = {});

struct SweepFailure {
  MetacyclicParams params;
  ClaimId claim;
  std::string detail;
};

struct SweepSummary {
  std::size_t max_order = 0;
  bool s_zero_only = false;
  std::size_t presentations = 0;       // consistent (m, n, s, t) with m n <= max_order
  std::size_t abelian_skipped = 0;
  std::size_t tested = 0;
  std::size_t connected = 0;
  std::size_t disconnected = 0;
  std::size_t no_factorization = 0;
  std::size_t lemma_i_sampled = 0;     // groups where lemma (i) was sampled rather than exhaustive
  std::map<std::size_t, std::size_t> diameter_histogram;
  // Disconnected groups whose graph is |G'| + 1 complete components.
  std::size_t disconnected_complete_union = 0;
  std::vector<SweepFailure> failures;
  std::vector<MetacyclicParams> diameter_four;  // connected groups reaching the bound
};

// Every consistent presentation with m n <= max_order (s = 0 only when asked).
std::vector<MetacyclicParams> enumerate_metacyclic(std::size_t max_order, bool s_zero_only);

// Analyses each non-abelian presentation. threads = 0 uses hardware concurrency.
SweepSummary sweep_metacyclic(std::size_t max_order, bool s_zero_only, const CheckOptions& options = {},
                              std::size_t threads = 0);

}  // namespace commgraph
