#include <algorithm>
#include <filesystem>
#include <sstream>

#include "doctest.h"

#include "commgraph/error.hpp"
#include "commgraph/ingest.hpp"

using namespace commgraph;

namespace {

std::vector<std::size_t> order_profile(const FiniteGroup& G) {
  std::vector<std::size_t> orders;
  for (Element g = 0; g < G.order(); ++g) orders.push_back(element_order(G, g));
  std::sort(orders.begin(), orders.end());
  return orders;
}

void same_invariants(const FiniteGroup& a, const FiniteGroup& b) {
  CHECK(a.order() == b.order());
  CHECK(center(a).size() == center(b).size());
  CHECK(derived_subgroup(a).size() == derived_subgroup(b).size());
  CHECK(order_profile(a) == order_profile(b));
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

FiniteGroup parse(const std::string& text) {
  std::istringstream in(text);
  return parse_cayley(in);
}

const std::string kZ3 = "commgraph-cayley 1\norder 3\n0 1 2\n1 2 0\n2 0 1\n";

}  // namespace

TEST_CASE("metacyclic consistency conditions") {
  CHECK(metacyclic_inconsistency({2, 3, 0, 2}).empty());
  CHECK(metacyclic_inconsistency({2, 4, 2, 3}).empty());
  CHECK_FALSE(metacyclic_inconsistency({2, 4, 0, 2}).empty());  // 2^2 != 1 mod 4
  CHECK_FALSE(metacyclic_inconsistency({2, 4, 1, 3}).empty());  // 1*(3-1) != 0 mod 4
  CHECK(kind_of([] { build_metacyclic({2, 4, 0, 2}); }) == ErrorKind::InconsistentPresentation);
  CHECK(index_of({4, 15, 0, 2}, 1, 5) == 20);
}

TEST_CASE("metacyclic builder satisfies its defining relations") {
  const MetacyclicParams p{4, 15, 3, 4};  // 4^4 = 256 = 1 mod 15, 3*3 = 9 != 0: inconsistent
  CHECK_FALSE(metacyclic_inconsistency(p).empty());
  for (const MetacyclicParams q : {MetacyclicParams{2, 4, 2, 3}, MetacyclicParams{4, 15, 0, 2},
                                   MetacyclicParams{6, 9, 3, 4}, MetacyclicParams{3, 7, 0, 2}}) {
    REQUIRE(metacyclic_inconsistency(q).empty());
    const auto G = build_metacyclic(q);
    const Element x = index_of(q, 0, 1), a = index_of(q, 1, 0);
    CHECK(G.order() == q.m * q.n);
    CHECK(power(G, a, static_cast<long long>(q.m)) == index_of(q, 0, q.s));
    CHECK(power(G, x, static_cast<long long>(q.n)) == kIdentity);
    CHECK(conjugate(G, x, a) == index_of(q, 0, q.t % q.n));
    CHECK(element_order(G, x) == q.n);
  }
}

TEST_CASE("dihedral and example builders") {
  CHECK(build_dihedral(2).order() == 8);
  CHECK(build_dihedral(25).order() == 100);
  CHECK(kind_of([] { build_dihedral(1); }) == ErrorKind::ConstraintViolated);

  CHECK(build_example2(9, 6).order() == 54);
  CHECK(build_example2(15, 4).order() == 60);
  CHECK(kind_of([] { build_example2(15, 3); }) == ErrorKind::ConstraintViolated);
  CHECK(kind_of([] { build_example2(6, 2); }) == ErrorKind::ConstraintViolated);
  CHECK(kind_of([] { build_example2(10, 4); }) == ErrorKind::ConstraintViolated);
  CHECK(kind_of([] { build_example2(25, 20); }) == ErrorKind::ConstraintViolated);
}

TEST_CASE("permutation closure matches the metacyclic builds") {
  SUBCASE("S3") {
    const PermGenSet gens{3, {{1, 2, 0}, {1, 0, 2}}};
    const auto P = close_permutations(gens);
    CHECK(P.elements.size() == 6);
    CHECK(P.elements[0] == Permutation{0, 1, 2});
    same_invariants(P.group, build_metacyclic({2, 3, 0, 2}));
  }
  SUBCASE("dihedral of order 12 from a hexagon") {
    const PermGenSet gens{6, {{1, 2, 3, 4, 5, 0}, {0, 5, 4, 3, 2, 1}}};
    const auto P = close_permutations(gens);
    same_invariants(P.group, build_dihedral(3));
  }
  SUBCASE("composition is left to right") {
    const PermGenSet gens{3, {{1, 2, 0}, {1, 0, 2}}};
    const auto P = close_permutations(gens);
    for (Element g = 0; g < 6; ++g) {
      for (Element h = 0; h < 6; ++h) {
        const auto& p = P.elements[g];
        const auto& q = P.elements[h];
        const auto& r = P.elements[P.group.mul(g, h)];
        for (std::size_t i = 0; i < 3; ++i) CHECK(r[i] == q[p[i]]);
      }
    }
  }
  CHECK(kind_of([] { close_permutations(PermGenSet{3, {}}); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { close_permutations(PermGenSet{6, {{1, 2, 3, 4, 5, 0}, {0, 5, 4, 3, 2, 1}}}, 11); }) ==
        ErrorKind::OrderCapExceeded);
}

TEST_CASE("Cayley text round trip") {
  const auto G = build_metacyclic({4, 15, 0, 2});
  std::ostringstream out;
  write_cayley(G, out);
  const auto back = parse(out.str());
  CHECK(std::ranges::equal(G.table(), back.table()));

  const auto path = std::filesystem::temp_directory_path() / "commgraph-test-roundtrip.txt";
  write_cayley_file(G, path);
  CHECK(std::ranges::equal(read_cayley_file(path).table(), G.table()));
  std::filesystem::remove(path);
}

TEST_CASE("Cayley parser accepts comments and blank lines") {
  const auto G = parse("# a comment\n\n# another\ncommgraph-cayley 1\norder 3\n0 1 2\n1 2 0\n2 0 1\n\n");
  CHECK(G.order() == 3);
}

TEST_CASE("Cayley parser errors") {
  CHECK(kind_of([] { parse("commgraph-cayley 2\norder 3\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse("commgraph-cayley 1\nsize 3\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse("commgraph-cayley 1\norder 3\n0 1 2\n1 2 0\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse("commgraph-cayley 1\norder 3\n0 1 2\n1 2\n2 0 1\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse("commgraph-cayley 1\norder 3\n0 1 2\n1 x 0\n2 0 1\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse(kZ3 + "extra\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse("commgraph-cayley 1\norder 3\n0 1 2\n1 2 3\n2 0 1\n"); }) == ErrorKind::NotAGroup);
  // Latin square whose identity is 1.
  CHECK(kind_of([] { parse("commgraph-cayley 1\norder 3\n2 0 1\n0 1 2\n1 2 0\n"); }) ==
        ErrorKind::IdentityNotZero);
  // Corrupted: two equal entries in a row.
  CHECK(kind_of([] { parse("commgraph-cayley 1\norder 3\n0 1 2\n1 1 0\n2 0 1\n"); }) == ErrorKind::NotAGroup);
  CHECK(kind_of([] { read_cayley_file("/nonexistent/commgraph.txt"); }) == ErrorKind::IoError);
  std::istringstream big("commgraph-cayley 1\norder 5000\n");
  CHECK(kind_of([&] { parse_cayley(big, 4096); }) == ErrorKind::OrderCapExceeded);
}

TEST_CASE("parse error messages carry the line number") {
  try {
    parse("commgraph-cayley 1\norder 3\n0 1 2\n1 x 0\n2 0 1\n");
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
}

TEST_CASE("permutation file format") {
  const PermGenSet gens{4, {{1, 2, 3, 0}, {0, 3, 2, 1}}};
  std::ostringstream out;
  write_perms(gens, out);
  std::istringstream in("# dihedral of order 8\n" + out.str());
  const auto back = parse_perms(in);
  CHECK(back.degree == 4);
  CHECK(back.generators == gens.generators);
  CHECK(close_permutations(back).group.order() == 8);

  auto bad = [](const std::string& text) {
    std::istringstream s(text);
    return kind_of([&] { parse_perms(s); });
  };
  CHECK(bad("commgraph-perms 1\ndegree 3\n0 1\n") == ErrorKind::ParseError);
  CHECK(bad("commgraph-perms 1\ndegree 3\n0 0 1\n") == ErrorKind::ParseError);
  CHECK(bad("commgraph-perms 1\ndegree 3\n0 1 3\n") == ErrorKind::ParseError);
  CHECK(bad("commgraph-perms 1\ndegree 3\n") == ErrorKind::ParseError);
}

TEST_CASE("exported SmallGroup files load") {
  const std::filesystem::path dir = COMMGRAPH_DATA_DIR;
  for (const char* name : {"smallgroup_48_15", "smallgroup_60_7", "smallgroup_96_118"}) {
    CAPTURE(name);
    const auto table = read_cayley_file(dir / (std::string(name) + ".cayley"));
    const auto perms = close_permutations(read_perms_file(dir / (std::string(name) + ".perms"))).group;
    same_invariants(table, perms);
  }
  // The order-60 export is the group built from (4, 15, 0, 2).
  same_invariants(read_cayley_file(dir / "smallgroup_60_7.cayley"), build_metacyclic({4, 15, 0, 2}));
}

TEST_CASE("identity permutation generates the trivial group") {
  const auto P = close_permutations(PermGenSet{3, {{0, 1, 2}}});
  CHECK(P.group.order() == 1);
}

TEST_CASE("dihedral table round trip") {
  const auto D = build_dihedral(3);
  std::ostringstream out;
  write_cayley(D, out);
  CHECK(std::ranges::equal(parse(out.str()).table(), D.table()));
}
