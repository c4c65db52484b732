#include "doctest.h"

#include "commgraph/factorization.hpp"
#include "commgraph/ingest.hpp"
#include "commgraph/theorem_checker.hpp"

using namespace commgraph;

namespace {

std::vector<std::pair<std::size_t, Element>> shape(const std::vector<NormalCyclic>& list) {
  std::vector<std::pair<std::size_t, Element>> out;
  for (const auto& nc : list) out.emplace_back(nc.subgroup.size(), nc.generator);
  return out;
}

}  // namespace

TEST_CASE("normal cyclic subgroups") {
  using V = std::vector<std::pair<std::size_t, Element>>;
  CHECK(shape(all_normal_cyclic_subgroups(build_metacyclic({2, 3, 0, 2}))) == V{{3, 1}, {1, 0}});
  CHECK(shape(all_normal_cyclic_subgroups(build_dihedral(3))) == V{{6, 1}, {3, 2}, {2, 3}, {1, 0}});
  CHECK(shape(all_normal_cyclic_subgroups(build_metacyclic({2, 4, 2, 3}))) ==
        V{{4, 1}, {4, 4}, {4, 5}, {2, 2}, {1, 0}});
}

TEST_CASE("dihedral witness") {
  const auto D = build_dihedral(3);
  const auto f = find_factorization(D);
  REQUIRE(f);
  CHECK(*f == Factorization{1, {6}});
  CHECK(verify_factorization(D, *f));
  // <a> is not normal, so it cannot play the role of N.
  CHECK_FALSE(verify_factorization(D, Factorization{6, {1}}));
  // A too small to cover G.
  CHECK_FALSE(verify_factorization(D, Factorization{2, {6}}));
}

TEST_CASE("cyclic groups factor trivially") {
  const auto C = build_metacyclic({1, 12, 0, 1});
  const auto f = find_factorization(C);
  REQUIRE(f);
  CHECK(f->a_gens == std::vector<Element>{0});
  CHECK(cyclic_subgroup(C, f->n_gen).size() == 12);
}

TEST_CASE("every metacyclic build has a witness with one A-generator") {
  for (const auto& p : enumerate_metacyclic(60, false)) {
    CAPTURE(p.m);
    CAPTURE(p.n);
    CAPTURE(p.s);
    CAPTURE(p.t);
    const auto G = build_metacyclic(p);
    const auto f = find_factorization(G, 1);
    REQUIRE(f);
    CHECK(f->a_gens.size() == 1);
    CHECK(verify_factorization(G, *f));
  }
}

TEST_CASE("search is deterministic") {
  const auto G = build_example2(21, 6);
  const auto f1 = find_factorization(G);
  const auto f2 = find_factorization(build_example2(21, 6));
  REQUIRE(f1);
  CHECK(f1 == f2);
}

TEST_CASE("the order-96 export has a witness") {
  const auto G = read_cayley_file(std::string(COMMGRAPH_DATA_DIR) + "/smallgroup_96_118.cayley");
  const auto f = find_factorization(G, 2);
  REQUIRE(f);
  CHECK(verify_factorization(G, *f));
}

TEST_CASE("no witness for the counterexample of order 48") {
  const auto G = read_cayley_file(std::string(COMMGRAPH_DATA_DIR) + "/smallgroup_48_15.cayley");
  CHECK(is_cyclic(derived_subgroup(G)));
  CHECK_FALSE(find_factorization(G, 2));
  CHECK_FALSE(find_factorization(G, 3));
}

TEST_CASE("natural witnesses verify") {
  for (std::size_t k = 2; k <= 8; ++k) {
    const auto D = build_dihedral(k);
    CHECK(verify_factorization(D, Factorization{1, {static_cast<Element>(2 * k)}}));
    CHECK(cyclic_subgroup(D, find_factorization(D)->n_gen).size() == 2 * k);
  }
  for (auto [n, m] : {std::pair<std::size_t, std::size_t>{9, 6}, {15, 4}, {21, 6}}) {
    CHECK(verify_factorization(build_example2(n, m), Factorization{1, {static_cast<Element>(n)}}));
  }
}

TEST_CASE("abelian group: every cyclic subgroup is normal") {
  // Klein four: three subgroups of order 2 and the trivial one.
  const auto list = all_normal_cyclic_subgroups(build_metacyclic({2, 2, 0, 1}));
  CHECK(list.size() == 4);
}
