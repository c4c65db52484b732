#include "commgraph/theorem_checker.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "commgraph/error.hpp"
#include "commgraph/simd/kernels.hpp"

namespace commgraph {

std::string_view to_string(ClaimId id) {
  switch (id) {
    case ClaimId::ThmA: return "ThmA";
    case ClaimId::ThmB: return "ThmB";
    case ClaimId::ThmC: return "ThmC";
    case ClaimId::LemBasicI: return "LemBasicI";
    case ClaimId::LemBasicII: return "LemBasicII";
    case ClaimId::LemBasicIII: return "LemBasicIII";
    case ClaimId::LemEquiv: return "LemEquiv";
    case ClaimId::LemEquivMoreover: return "LemEquivMoreover";
    case ClaimId::RemarkPower: return "RemarkPower";
    case ClaimId::Case1Witness: return "Case1Witness";
  }
  return "Unknown";
}

std::string_view to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::Holds: return "holds";
    case VerdictStatus::Fails: return "fails";
    case VerdictStatus::Skipped: return "skipped";
  }
  return "unknown";
}

GroupFacts GroupFacts::compute(const FiniteGroup& G) {
  auto masks = all_centralizer_masks(G);
  Bitset central(G.order());
  for (std::size_t g = 0; g < G.order(); ++g) {
    if (masks[g].count() == G.order()) central.set(g);
  }
  std::vector<std::uint8_t> abelian(G.order(), 1);
  for (std::size_t g = 0; g < G.order(); ++g) {
    // C(g) is abelian iff it lies inside C(h) for each of its members h.
    const Bitset& cg = masks[g];
    bool ok = true;
    cg.for_each([&](std::size_t h) {
      if (ok && !cg.is_subset_of(masks[h])) ok = false;
    });
    abelian[g] = ok;
  }
  return GroupFacts{&G, std::move(masks), Subgroup::from_mask_unchecked(G, std::move(central)), derived_subgroup(G),
                    std::move(abelian)};
}

void require_factorization(const FiniteGroup& G, const std::optional<Factorization>& f) {
  if (!f) throw Error(ErrorKind::NoFactorization, "no cyclic-by-abelian factorization witness supplied");
  if (!verify_factorization(G, *f)) {
    throw Error(ErrorKind::NoFactorization, "supplied witness is not a cyclic-by-abelian factorization");
  }
}

namespace {

std::string elem(const FiniteGroup& G, Element g) {
  return G.has_labels() ? std::to_string(g) + " (" + G.label(g) + ")" : std::to_string(g);
}

std::string shapes_text(const std::vector<ComponentShape>& shapes) {
  std::string s = "{";
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    if (i) s += ", ";
    s += "(" + std::to_string(shapes[i].size) + (shapes[i].complete ? ", complete)" : ", not complete)");
  }
  return s + "}";
}

// Lemma (i) for one commuting pair (g, h): for all u = x^i, v = x^k in N,
// gu commutes with hv iff [u, h] = [v, g]. Both sides are built as bit masks
// over k.
//
// Writing h = r x^j with r the least element of the left coset hN, the
// left-hand mask is bits j .. j+q-1 of a doubled centralizer row of gu
// restricted to rN. The right-hand mask is a level set of k -> [x^k, g].
// When the doubled rows would not fit the memory budget, the left-hand side
// falls back to gathering table entries.
class LemmaIChecker {
 public:
  LemmaIChecker(const GroupFacts& facts, Element x, std::size_t table_words) : G_(*facts.group) {
    const std::size_t n = G_.order();
    for (Element p = kIdentity;;) {
      powers_.push_back(p);
      p = G_.mul(p, x);
      if (p == kIdentity) break;
    }
    q_ = powers_.size();
    words_ = simd::words_for(q_);
    lhs_.resize(words_);
    zero_.assign(words_, 0);
    slot_.assign(n, kNoSlot);

    // comm_[h * q + k] = [x^k, h]
    comm_.resize(n * q_);
    for (std::size_t h = 0; h < n; ++h) {
      for (std::size_t k = 0; k < q_; ++k) comm_[h * q_ + k] = commutator(G_, powers_[k], static_cast<Element>(h));
    }

    coset_.assign(n, kNoSlot);
    offset_.assign(n, 0);
    for (std::size_t r = 0; r < n; ++r) {
      if (coset_[r] != kNoSlot) continue;
      for (std::size_t k = 0; k < q_; ++k) {
        const Element w = G_.mul(static_cast<Element>(r), powers_[k]);
        coset_[w] = cosets_;
        offset_[w] = static_cast<std::uint32_t>(k);
      }
      ++cosets_;
    }

    stride_ = simd::words_for(2 * q_) + 1;
    if (n * cosets_ * stride_ <= table_words) {
      rows_.assign(n * cosets_ * stride_, 0);
      for (std::size_t y = 0; y < n; ++y) {
        facts.centralizers[y].for_each([&](std::size_t w) {
          std::uint64_t* row = rows_.data() + (y * cosets_ + coset_[w]) * stride_;
          for (std::size_t bit : {std::size_t{offset_[w]}, offset_[w] + q_}) row[bit / 64] |= std::uint64_t{1} << (bit % 64);
        });
      }
    } else {
      // h x^k for every h, used by the gather fallback.
      coset_times_.resize(n * q_);
      for (std::size_t h = 0; h < n; ++h) {
        for (std::size_t k = 0; k < q_; ++k) coset_times_[h * q_ + k] = G_.mul(static_cast<Element>(h), powers_[k]);
      }
    }
  }

  std::size_t q() const { return q_; }

  std::optional<std::string> check(Element g, Element h) {
    build_levels(g);
    const std::uint32_t c = coset_[h], j = offset_[h];
    for (std::size_t i = 0; i < q_; ++i) {
      const Element gu = G_.mul(g, powers_[i]);
      if (rows_.empty()) {
        simd::active().gather_equal_mask(G_.row(gu).data(), G_.column(gu).data(), coset_times_.data() + h * q_, q_,
                                         lhs_.data());
      } else {
        window(rows_.data() + (static_cast<std::size_t>(gu) * cosets_ + c) * stride_, j);
      }
      const std::uint32_t s = slot_[comm_[static_cast<std::size_t>(h) * q_ + i]];
      const std::uint64_t* rhs = s == kNoSlot ? zero_.data() : levels_.data() + s * words_;
      for (std::size_t w = 0; w < words_; ++w) {
        if (lhs_[w] != rhs[w]) return describe(g, h, i, w * simd::kWordBits + std::countr_zero(lhs_[w] ^ rhs[w]));
      }
    }
    return std::nullopt;
  }

 private:
  static constexpr std::uint32_t kNoSlot = UINT32_MAX;

  // lhs_ = bits j .. j+q-1 of a doubled row.
  void window(const std::uint64_t* row, std::size_t j) {
    const std::size_t base = j / 64, shift = j % 64;
    for (std::size_t w = 0; w < words_; ++w) {
      const std::uint64_t lo = row[base + w] >> shift;
      const std::uint64_t hi = shift ? row[base + w + 1] << (64 - shift) : 0;
      lhs_[w] = lo | hi;
    }
    if (q_ % 64) lhs_[words_ - 1] &= (std::uint64_t{1} << (q_ % 64)) - 1;
  }

  // Groups k by the value of [x^k, g]; slot_[value] indexes levels_.
  void build_levels(Element g) {
    if (level_owner_ == g) return;
    for (Element v : level_values_) slot_[v] = kNoSlot;
    level_values_.clear();
    levels_.clear();
    const Element* comm_g = comm_.data() + static_cast<std::size_t>(g) * q_;
    for (std::size_t k = 0; k < q_; ++k) {
      std::uint32_t& s = slot_[comm_g[k]];
      if (s == kNoSlot) {
        s = static_cast<std::uint32_t>(level_values_.size());
        level_values_.push_back(comm_g[k]);
        levels_.resize(levels_.size() + words_, 0);
      }
      levels_[s * words_ + k / 64] |= std::uint64_t{1} << (k % 64);
    }
    level_owner_ = g;
  }

  std::string describe(Element g, Element h, std::size_t i, std::size_t k) const {
    const bool commute = (lhs_[k / 64] >> (k % 64)) & 1u;
    return "g = " + elem(G_, g) + ", h = " + elem(G_, h) + ", u = " + elem(G_, powers_[i]) + ", v = " +
           elem(G_, powers_[k]) + ": gu and hv " + (commute ? "commute" : "do not commute") + " but [u,h] " +
           (commute ? "!=" : "=") + " [v,g]";
  }

  const FiniteGroup& G_;
  std::vector<Element> powers_;
  std::size_t q_ = 0;
  std::size_t words_ = 0;
  std::vector<Element> comm_;
  std::vector<std::uint32_t> coset_;
  std::vector<std::uint32_t> offset_;
  std::uint32_t cosets_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<Element> coset_times_;
  std::vector<std::uint64_t> lhs_, zero_;
  std::vector<std::uint32_t> slot_;
  std::vector<Element> level_values_;
  std::vector<std::uint64_t> levels_;
  std::optional<Element> level_owner_;
};

bool is_connected(const CommutingGraph& graph) { return components(graph).size() == 1; }

}  // namespace

namespace checks {

ClaimVerdict thm_a(const GroupFacts& facts, const CommutingGraph& graph) {
  const FiniteGroup& G = *facts.group;
  const bool connected = is_connected(graph);
  std::optional<Element> witness;
  for (std::size_t g = 0; g < G.order() && !witness; ++g) {
    if (!facts.is_central(static_cast<Element>(g)) && !facts.abelian_centralizer[g]) witness = static_cast<Element>(g);
  }
  if (connected == witness.has_value()) {
    return ClaimVerdict::pass(ClaimId::ThmA, witness ? "non-abelian centralizer at " + elem(G, *witness)
                                                     : "every non-central centralizer is abelian");
  }
  return ClaimVerdict::fail(ClaimId::ThmA,
                            connected ? "graph connected but every non-central centralizer is abelian"
                                      : "graph disconnected but C(" + elem(G, *witness) + ") is non-abelian");
}

ClaimVerdict thm_b(const CommutingGraph& graph, std::optional<std::size_t> diam) {
  if (!is_connected(graph)) return ClaimVerdict::pass(ClaimId::ThmB, "vacuous: graph disconnected");
  if (!diam) throw std::logic_error("connected graph without a diameter");
  if (*diam <= 4) {
    return ClaimVerdict::pass(ClaimId::ThmB, "diameter " + std::to_string(*diam) + (*diam == 4 ? " (bound attained)" : ""));
  }
  return ClaimVerdict::fail(ClaimId::ThmB, "diameter " + std::to_string(*diam) + " exceeds 4");
}

ClaimVerdict thm_c(const GroupFacts& facts, const CommutingGraph& graph) {
  if (is_connected(graph)) return ClaimVerdict::pass(ClaimId::ThmC, "vacuous: graph connected");
  const std::size_t z = facts.center.size();
  const std::size_t d = facts.derived.size();
  const std::size_t index = facts.index();
  // The two prescribed sizes may coincide, so compare one merged multiset.
  std::vector<ComponentShape> expected{{(d - 1) * z, true}};
  expected.insert(expected.end(), d, ComponentShape{index - z, true});
  std::sort(expected.begin(), expected.end(), [](const ComponentShape& a, const ComponentShape& b) {
    return a.size != b.size ? a.size > b.size : a.complete > b.complete;
  });
  const auto actual = component_structure(graph);
  if (actual != expected) {
    return ClaimVerdict::fail(ClaimId::ThmC, "components " + shapes_text(actual) + ", expected " + shapes_text(expected));
  }
  if (!adjacency_is_transitive(graph)) {
    return ClaimVerdict::fail(ClaimId::ThmC, "components have the expected sizes but adjacency is not transitive");
  }
  return ClaimVerdict::pass(ClaimId::ThmC, std::to_string(d + 1) + " complete components");
}

ClaimVerdict lemma_basic_i(const GroupFacts& facts, const Factorization& f, const CheckOptions& options) {
  const FiniteGroup& G = *facts.group;
  LemmaIChecker checker(facts, f.n_gen, options.lemma_i_table_words);
  const std::size_t q = checker.q();

  std::vector<std::pair<Element, Element>> pairs;
  for (std::size_t g = 0; g < G.order(); ++g) {
    facts.centralizers[g].for_each([&](std::size_t h) { pairs.emplace_back(static_cast<Element>(g), static_cast<Element>(h)); });
  }

  const std::size_t per_pair = q * q;
  const std::size_t total = pairs.size() * per_pair;
  if (G.order() <= options.lemma_i_exhaustive_order || total <= options.lemma_i_tuple_cap) {
    for (auto [g, h] : pairs) {
      if (auto bad = checker.check(g, h)) return ClaimVerdict::fail(ClaimId::LemBasicI, *bad);
    }
    return ClaimVerdict::pass(ClaimId::LemBasicI, "exhaustive: " + std::to_string(pairs.size()) +
                                                      " commuting pairs x " + std::to_string(per_pair) + " (u, v)");
  }
  const std::size_t draws = std::max<std::size_t>(1, options.lemma_i_tuple_cap / per_pair);
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
  for (std::size_t i = 0; i < draws; ++i) {
    auto [g, h] = pairs[pick(rng)];
    if (auto bad = checker.check(g, h)) return ClaimVerdict::fail(ClaimId::LemBasicI, *bad);
  }
  return ClaimVerdict::pass(ClaimId::LemBasicI, "sampled: " + std::to_string(draws) + " of " +
                                                    std::to_string(pairs.size()) + " commuting pairs, all (u, v)");
}

ClaimVerdict lemma_basic_ii(const GroupFacts& facts, const Factorization& f) {
  const FiniteGroup& G = *facts.group;
  const Subgroup N = cyclic_subgroup(G, f.n_gen);
  const Subgroup meet = intersection(N, facts.center);
  const Element xn = power(G, f.n_gen, static_cast<long long>(facts.derived.size()));
  const Subgroup expected = cyclic_subgroup(G, xn);
  if (meet != expected) {
    return ClaimVerdict::fail(ClaimId::LemBasicII, "|N cap Z| = " + std::to_string(meet.size()) + " but |<x^" +
                                                       std::to_string(facts.derived.size()) +
                                                       ">| = " + std::to_string(expected.size()));
  }
  const Subgroup nz = join(N, facts.center);
  if (nz.size() != facts.derived.size() * facts.center.size()) {
    return ClaimVerdict::fail(ClaimId::LemBasicII, "|<N, Z>| = " + std::to_string(nz.size()) + " but |G'||Z| = " +
                                                       std::to_string(facts.derived.size() * facts.center.size()));
  }
  return ClaimVerdict::pass(ClaimId::LemBasicII, "|N cap Z| = " + std::to_string(meet.size()) +
                                                     ", |<N, Z>| = " + std::to_string(nz.size()));
}

ClaimVerdict lemma_basic_iii(const GroupFacts& facts, const Factorization& f) {
  const FiniteGroup& G = *facts.group;
  std::size_t applicable = 0;
  for (std::size_t i = 0; i < G.order(); ++i) {
    const auto g = static_cast<Element>(i);
    if (cyclic_subgroup(G, commutator(G, f.n_gen, g)) != facts.derived) continue;
    ++applicable;
    const std::size_t size = facts.centralizers[g].count();
    if (size != facts.index()) {
      return ClaimVerdict::fail(ClaimId::LemBasicIII, "[x, g] generates G' for g = " + elem(G, g) + " but |C(g)| = " +
                                                          std::to_string(size) + " != [G:G'] = " +
                                                          std::to_string(facts.index()));
    }
    if (!facts.abelian_centralizer[g]) {
      return ClaimVerdict::fail(ClaimId::LemBasicIII,
                                "[x, g] generates G' for g = " + elem(G, g) + " but C(g) is non-abelian");
    }
  }
  return ClaimVerdict::pass(ClaimId::LemBasicIII, std::to_string(applicable) + " elements g with <[x,g]> = G'");
}

std::vector<ClaimVerdict> lemma_equiv(const GroupFacts& facts, const Factorization& f) {
  const FiniteGroup& G = *facts.group;
  const Subgroup N = cyclic_subgroup(G, f.n_gen);
  const Subgroup nz = join(N, facts.center);

  std::optional<Element> p1_breaker;
  for (Element u : N.elements()) {
    if (!facts.is_central(u) && !facts.centralizers[u].is_subset_of(nz.mask())) {
      p1_breaker = u;
      break;
    }
  }
  std::optional<Element> p2_breaker;
  for (std::size_t g = 0; g < G.order() && !p2_breaker; ++g) {
    if (!facts.is_central(static_cast<Element>(g)) && !facts.abelian_centralizer[g]) p2_breaker = static_cast<Element>(g);
  }
  const bool p1 = !p1_breaker;
  const bool p2 = !p2_breaker;

  std::vector<ClaimVerdict> out;
  auto state = [&](bool p, const std::optional<Element>& breaker, const char* what) {
    return p ? std::string("holds") : std::string("fails at ") + elem(G, *breaker) + " (" + what + ")";
  };
  const std::string summary = "P1 " + state(p1, p1_breaker, "C(u) not inside <N, Z>") + "; P2 " +
                              state(p2, p2_breaker, "non-abelian centralizer");
  out.push_back(p1 == p2 ? ClaimVerdict::pass(ClaimId::LemEquiv, summary) : ClaimVerdict::fail(ClaimId::LemEquiv, summary));

  if (!p1) {
    out.push_back(ClaimVerdict::pass(ClaimId::LemEquivMoreover, "vacuous: P1 fails"));
    return out;
  }
  std::size_t both = 0;
  for (std::size_t i = 0; i < G.order(); ++i) {
    const auto g = static_cast<Element>(i);
    if (facts.is_central(g)) continue;
    const bool equals_nz = facts.centralizers[g] == nz.mask();
    const bool index_size = facts.centralizers[g].count() == facts.index();
    if (!equals_nz && !index_size) {
      out.push_back(ClaimVerdict::fail(ClaimId::LemEquivMoreover,
                                       "C(" + elem(G, g) + ") has size " + std::to_string(facts.centralizers[g].count()) +
                                           ", differs from <N, Z> and from [G:G'] = " + std::to_string(facts.index())));
      return out;
    }
    if (equals_nz && index_size) ++both;
  }
  out.push_back(ClaimVerdict::pass(ClaimId::LemEquivMoreover,
                                   std::to_string(both) + " non-central elements satisfy both alternatives"));
  return out;
}

ClaimVerdict case1_witness(const GroupFacts& facts, const CommutingGraph& graph, const Factorization& f,
                           const std::vector<std::size_t>& ecc) {
  const FiniteGroup& G = *facts.group;
  const std::size_t radius = *std::min_element(ecc.begin(), ecc.end());
  if (radius > 2) return ClaimVerdict::fail(ClaimId::Case1Witness, "radius " + std::to_string(radius) + " exceeds 2");
  const Subgroup N = cyclic_subgroup(G, f.n_gen);
  for (Element u : N.elements()) {
    const auto pos = graph.position(u);
    if (pos && ecc[*pos] <= 2) {
      return ClaimVerdict::pass(ClaimId::Case1Witness, "witness u* = " + elem(G, u) + " with eccentricity " +
                                                           std::to_string(ecc[*pos]));
    }
  }
  return ClaimVerdict::fail(ClaimId::Case1Witness,
                            "radius " + std::to_string(radius) + " but no vertex of N has eccentricity <= 2");
}

}  // namespace checks

ClaimVerdict check_remark_power(const FiniteGroup& G, const Subgroup& N) {
  const long long order = static_cast<long long>(G.order());
  const long long exponents[] = {-2, -1, 0, 1, 2, order - 1};
  constexpr std::size_t kExp = std::size(exponents);
  // powers[e * kExp + i] = e^exponents[i]
  std::vector<Element> powers(G.order() * kExp);
  for (std::size_t e = 0; e < G.order(); ++e) {
    for (std::size_t i = 0; i < kExp; ++i) powers[e * kExp + i] = power(G, static_cast<Element>(e), exponents[i]);
  }
  for (Element u : N.elements()) {
    for (std::size_t j = 0; j < G.order(); ++j) {
      const auto g = static_cast<Element>(j);
      const Element c = commutator(G, u, g);
      for (std::size_t i = 0; i < kExp; ++i) {
        const Element lhs = powers[c * kExp + i];
        const Element rhs = commutator(G, powers[u * kExp + i], g);
        if (lhs != rhs) {
          return ClaimVerdict::fail(ClaimId::RemarkPower, "u = " + elem(G, u) + ", g = " + elem(G, g) +
                                                              ", l = " + std::to_string(exponents[i]) +
                                                              ": [u,g]^l = " + elem(G, lhs) + " but [u^l,g] = " +
                                                              elem(G, rhs));
        }
      }
    }
  }
  return ClaimVerdict::pass(ClaimId::RemarkPower, "l in {-2, -1, 0, 1, 2, |G| - 1}");
}

ClaimVerdict check_thm_a(const FiniteGroup& G, const CommutingGraph& graph, const std::optional<Factorization>& f) {
  require_factorization(G, f);
  return checks::thm_a(GroupFacts::compute(G), graph);
}

ClaimVerdict check_thm_b(const FiniteGroup& G, const CommutingGraph& graph, const std::optional<Factorization>& f) {
  require_factorization(G, f);
  return checks::thm_b(graph, diameter(graph));
}

ClaimVerdict check_thm_c(const FiniteGroup& G, const CommutingGraph& graph, const std::optional<Factorization>& f) {
  require_factorization(G, f);
  return checks::thm_c(GroupFacts::compute(G), graph);
}

std::vector<ClaimVerdict> check_lemma_basic(const FiniteGroup& G, const std::optional<Factorization>& f,
                                            const CheckOptions& options) {
  require_factorization(G, f);
  const auto facts = GroupFacts::compute(G);
  return {checks::lemma_basic_i(facts, *f, options), checks::lemma_basic_ii(facts, *f),
          checks::lemma_basic_iii(facts, *f)};
}

std::vector<ClaimVerdict> check_lemma_equiv(const FiniteGroup& G, const std::optional<Factorization>& f) {
  require_factorization(G, f);
  return checks::lemma_equiv(GroupFacts::compute(G), *f);
}

ClaimVerdict check_case1_witness(const FiniteGroup& G, const CommutingGraph& graph,
                                 const std::optional<Factorization>& f) {
  require_factorization(G, f);
  const auto ecc = all_eccentricities(graph);
  if (!ecc) throw Error(ErrorKind::GraphDisconnected, "the case-1 witness needs a connected commuting graph");
  return checks::case1_witness(GroupFacts::compute(G), graph, *f, *ecc);
}

bool AnalysisReport::all_hold_or_skipped() const {
  return std::none_of(verdicts.begin(), verdicts.end(),
                      [](const ClaimVerdict& v) { return v.status == VerdictStatus::Fails; });
}

const ClaimVerdict& AnalysisReport::verdict(ClaimId id) const {
  for (const auto& v : verdicts) {
    if (v.claim == id) return v;
  }
  throw std::out_of_range("no verdict for " + std::string(to_string(id)));
}

AnalysisReport analyze(const FiniteGroup& G, const CheckOptions& options) {
  const auto facts = GroupFacts::compute(G);
  if (facts.center.size() == G.order()) throw Error(ErrorKind::AbelianGroup, "group is abelian");

  const auto graph = CommutingGraph::build(G);
  const auto ecc = all_eccentricities(graph);

  AnalysisReport report;
  report.order = G.order();
  report.center_size = facts.center.size();
  report.derived_size = facts.derived.size();
  report.index_g_prime = facts.index();
  report.vertex_count = graph.vertex_count();
  report.edge_count = graph.edge_count();
  report.connected = ecc.has_value();
  if (ecc) {
    report.diameter = *std::max_element(ecc->begin(), ecc->end());
    report.radius = *std::min_element(ecc->begin(), ecc->end());
  }
  report.components = component_structure(graph);
  report.factorization = find_factorization(G, options.max_a_gens);

  if (!report.factorization) {
    const std::string reason =
        "no factorization witness found within max_a_gens = " + std::to_string(options.max_a_gens);
    for (ClaimId id : kAllClaims) report.verdicts.push_back(ClaimVerdict::skip(id, reason));
    return report;
  }
  const Factorization& f = *report.factorization;
  if (!verify_factorization(G, f)) throw std::logic_error("factorization search returned an invalid witness");

  auto& v = report.verdicts;
  v.push_back(checks::thm_a(facts, graph));
  v.push_back(checks::thm_b(graph, report.diameter));
  v.push_back(checks::thm_c(facts, graph));
  v.push_back(checks::lemma_basic_i(facts, f, options));
  v.push_back(checks::lemma_basic_ii(facts, f));
  v.push_back(checks::lemma_basic_iii(facts, f));
  for (auto& e : checks::lemma_equiv(facts, f)) v.push_back(std::move(e));
  v.push_back(check_remark_power(G, cyclic_subgroup(G, f.n_gen)));
  v.push_back(ecc ? checks::case1_witness(facts, graph, f, *ecc)
                  : ClaimVerdict::skip(ClaimId::Case1Witness, "not applicable: graph disconnected"));
  return report;
}

}  // namespace commgraph
