#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "finsemi/semigroup.hpp"

using namespace finsemi;

namespace {

bool throws_with_substring(const std::function<void()>& f, const std::string& needle) {
  try {
    f();
  } catch (const std::exception& e) {
    return std::string(e.what()).find(needle) != std::string::npos;
  }
  return false;
}

}  // namespace

TEST_CASE("from_table validates associativity") {
  CHECK_THROWS_WITH(FiniteSemigroup::from_table({1, 0, 0, 0}, 2),
                    "not a semigroup: not associative at (0,0,1)");
  CHECK_THROWS_WITH(FiniteSemigroup::from_table({0, 1, 2, 0}, 2),
                    "not a semigroup: entry out of range");
  CHECK_THROWS_WITH(FiniteSemigroup::from_table({0, 1, 0}, 2),
                    "not a semigroup: table size mismatch");
}

TEST_CASE("predicate battery on the standard constructions") {
  FiniteSemigroup c4 = group_as_semigroup(make_cyclic(4));
  CHECK(is_group(c4));
  CHECK(is_regular(c4));
  CHECK(is_inverse_semigroup(c4));
  CHECK(is_clifford(c4));
  CHECK(is_commutative(c4));
  CHECK(identity_of(c4) == 0);

  FiniteSemigroup lz = make_left_zero(3);
  CHECK(is_regular(lz));
  CHECK_FALSE(is_inverse_semigroup(lz));
  CHECK_FALSE(is_clifford(lz));
  CHECK(idempotents(lz).size() == 3);
  CHECK_FALSE(identity_of(lz).has_value());

  FiniteSemigroup nul = make_null_semigroup(3);
  CHECK_FALSE(is_regular(nul));
  CHECK(regular_elements(nul) == std::vector<int>{0});
  CHECK(idempotents(nul) == std::vector<int>{0});

  FiniteSemigroup c2z = make_group_with_zero(make_cyclic(2));
  CHECK(is_inverse_semigroup(c2z));
  CHECK(is_clifford(c2z));
  CHECK(idempotents(c2z) == std::vector<int>{0, 2});
}

TEST_CASE("Brandt semigroup over C2 with two indices") {
  FiniteSemigroup b = make_brandt(make_cyclic(2), 2);
  REQUIRE(b.n == 9);
  CHECK(idempotents(b) == std::vector<int>{0, 1, 6});
  CHECK(is_regular(b));
  CHECK(is_inverse_semigroup(b));
  CHECK_FALSE(is_clifford(b));
  CHECK(make_brandt(make_cyclic(3), 2).n == 13);

  auto inv = inverse_table(b);
  REQUIRE(inv.has_value());
  for (int x = 0; x < b.n; ++x) {
    CHECK(b.mul(b.mul(x, (*inv)[x]), x) == x);
    CHECK(b.mul(b.mul((*inv)[x], x), (*inv)[x]) == (*inv)[x]);
  }
  CHECK_FALSE(inverse_table(make_left_zero(2)).has_value());
}

TEST_CASE("maximal subgroup at an idempotent") {
  FiniteSemigroup c2z = make_group_with_zero(make_cyclic(2));
  MaximalSubgroup top = maximal_subgroup(c2z, 0);
  CHECK(top.group.n == 2);
  CHECK(top.to_parent == std::vector<int>{0, 1});
  MaximalSubgroup bottom = maximal_subgroup(c2z, 2);
  CHECK(bottom.group.n == 1);
  CHECK_THROWS_AS(maximal_subgroup(c2z, 1), std::invalid_argument);
}

TEST_CASE("idempotent order and semilattice extraction") {
  FiniteSemigroup c2z = make_group_with_zero(make_cyclic(2));
  // The zero sits below the identity.
  CHECK(idempotent_leq(c2z, 2, 0));
  CHECK_FALSE(idempotent_leq(c2z, 0, 2));
  auto sl = semilattice_of(c2z);
  CHECK(sl.members == std::vector<int>{0, 2});
  auto hasse = idempotent_hasse(c2z);
  REQUIRE(hasse.size() == 1);
  CHECK(hasse[0] == std::pair<int, int>{2, 0});
  CHECK(principal_filter(c2z, 2) == std::vector<int>{0, 2});
  CHECK(principal_filter(c2z, 0) == std::vector<int>{0});
}

TEST_CASE("conjugate idempotent pairs in a Brandt semigroup") {
  FiniteSemigroup b = make_brandt(make_cyclic(2), 2);
  auto pairs = conjugate_idempotent_pairs(b);
  // The two nonzero idempotents are conjugate in both orientations.
  REQUIRE(pairs.size() >= 1);
  auto inv = inverse_table(b);
  REQUIRE(inv.has_value());
  for (const auto& p : pairs) {
    int zi = (*inv)[p.z];
    bool fwd = b.mul(b.mul(p.z, p.f), zi) == p.e && b.mul(b.mul(zi, p.e), p.z) == p.f;
    bool rev = b.mul(b.mul(p.z, p.e), zi) == p.f && b.mul(b.mul(zi, p.f), p.z) == p.e;
    CHECK((fwd || rev));
  }
  CHECK_THROWS_AS(conjugate_idempotent_pairs(make_left_zero(2)), std::invalid_argument);
}

TEST_CASE("strong semilattice of groups: chain C4 over C2") {
  SslgSpec spec;
  spec.leq = {{1, 1}, {0, 1}};  // idempotent 0 below idempotent 1
  spec.groups = {make_cyclic(2), make_cyclic(4)};
  spec.links[{1, 0}] = {0, 1, 0, 1};  // reduction mod 2
  spec.name = "chain";
  SslgBuilt built = make_strong_semilattice(spec);
  CHECK(built.sg.n == 6);
  CHECK(is_inverse_semigroup(built.sg));
  CHECK(is_clifford(built.sg));
  CHECK(is_commutative(built.sg));
  CHECK(idempotents(built.sg).size() == 2);
  // Mixed products land in the lower component through the link.
  int x_top = built.offset[1] + 1;  // generator of C4
  int e_bot = built.offset[0];
  CHECK(built.sg.mul(x_top, e_bot) == built.offset[0] + 1);
}

TEST_CASE("strong semilattice rejects malformed specs") {
  FiniteGroup c2 = make_cyclic(2);
  SslgSpec spec;
  spec.leq = {{1, 0}, {0, 1}};  // two incomparable idempotents, no meet
  spec.groups = {c2, c2};
  CHECK(throws_with_substring([&] { make_strong_semilattice(spec); }, "no meet"));

  spec.leq = {{1, 1}, {1, 1}};
  CHECK(throws_with_substring([&] { make_strong_semilattice(spec); }, "not antisymmetric"));

  spec.leq = {{1, 1}, {0, 1}};
  spec.links[{1, 0}] = {0, 1, 1};  // wrong image count
  CHECK(throws_with_substring([&] { make_strong_semilattice(spec); }, "link"));

  spec.links[{1, 0}] = {1, 0};  // swaps identity and the involution: not a homomorphism
  CHECK(throws_with_substring([&] { make_strong_semilattice(spec); }, "link"));
}

TEST_CASE("strong semilattice detects incoherent link paths on a diamond") {
  FiniteGroup c2 = make_cyclic(2);
  SslgSpec spec;
  // 0 below 1 and 2, both below 3.
  spec.leq = {{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}};
  spec.groups = {c2, c2, c2, c2};
  spec.links[{3, 1}] = {0, 1};
  spec.links[{3, 2}] = {0, 1};
  spec.links[{1, 0}] = {0, 1};
  spec.links[{2, 0}] = {0, 0};  // collapses, so the two paths 3->0 disagree
  CHECK(throws_with_substring([&] { make_strong_semilattice(spec); }, "coherence"));
}

TEST_CASE("strong semilattice serialization round-trips") {
  SslgSpec spec;
  spec.leq = {{1, 1}, {0, 1}};
  spec.groups = {make_cyclic(2), make_cyclic(4)};
  spec.links[{1, 0}] = {0, 1, 0, 1};
  spec.name = "chain";
  SslgBuilt built = make_strong_semilattice(spec);
  SslgSpec back = parse_strong_semilattice(serialize_strong_semilattice(built.spec), ".");
  SslgBuilt rebuilt = make_strong_semilattice(back);
  CHECK(rebuilt.sg.n == built.sg.n);
  CHECK(is_isomorphic(rebuilt.sg, built.sg));
}

TEST_CASE("embedding search finds exactly the possible group embeddings") {
  FiniteSemigroup c2 = group_as_semigroup(make_cyclic(2));
  FiniteSemigroup c3 = group_as_semigroup(make_cyclic(3));
  FiniteSemigroup c4 = group_as_semigroup(make_cyclic(4));
  auto em = find_embedding(c2, c4);
  REQUIRE(em.has_value());
  CHECK((*em)[0] == 0);
  CHECK((*em)[1] == 2);
  CHECK_FALSE(find_embedding(c3, c4).has_value());
  CHECK_FALSE(homomorphism_defect(c2, c4, *em).has_value());

  FiniteSemigroup big = make_null_semigroup(17);
  CHECK_THROWS_AS(find_embedding(big, big), ResourceLimitError);
}

TEST_CASE("group identification by isomorphism type") {
  CHECK(identify_group(make_quaternion()) == "Q8");
  CHECK(identify_group(direct_product(make_cyclic(2), make_cyclic(2))) == "K4");
  CHECK(identify_group(direct_product(make_cyclic(4), make_cyclic(2))) == "C2xC4");
  CHECK(identify_group(direct_product(make_cyclic(3), make_cyclic(2))) == "C6");
  CHECK(identify_group(make_dihedral(4)) == "D4");
  CHECK(identify_group(make_cyclic(9)) == "");
}

TEST_CASE("isomorphism check distinguishes the two groups of order 4") {
  FiniteSemigroup c4 = group_as_semigroup(make_cyclic(4));
  FiniteSemigroup k4 = group_as_semigroup(make_klein());
  FiniteSemigroup c6 = group_as_semigroup(make_cyclic(6));
  FiniteSemigroup c2xc3 = group_as_semigroup(direct_product(make_cyclic(2), make_cyclic(3)));
  CHECK_FALSE(is_isomorphic(c4, k4));
  CHECK(is_isomorphic(c6, c2xc3));
}

TEST_CASE("homomorphism defect pinpoints the first broken product") {
  FiniteSemigroup c2 = group_as_semigroup(make_cyclic(2));
  // Swapping identity and the involution is not a homomorphism.
  auto defect = homomorphism_defect(c2, c2, {1, 0});
  REQUIRE(defect.has_value());
  CHECK(*defect == std::pair<int, int>{0, 0});
}

TEST_CASE("invariant elements under a sub-semigroup image") {
  FiniteSemigroup nul = make_null_semigroup(3);
  CHECK(invariant_elements(nul, {0}) == std::vector<int>{0});
  FiniteSemigroup c4 = group_as_semigroup(make_cyclic(4));
  CHECK(invariant_elements(c4, {0, 1, 2, 3}).empty());
}

TEST_CASE("adjoined identity behaves as a unit") {
  FiniteSemigroup s = adjoin_identity(make_left_zero(2));
  CHECK(s.n == 3);
  CHECK(identity_of(s) == 2);
  for (int x = 0; x < s.n; ++x) {
    CHECK(s.mul(2, x) == x);
    CHECK(s.mul(x, 2) == x);
  }
}

TEST_CASE("materialize refuses oversized virtual semigroups") {
  VirtualSemigroup v;
  v.n = 5000;
  v.op = [](int, int) { return 0; };
  CHECK_THROWS_AS(materialize(v), ResourceLimitError);
}

TEST_CASE("semigroup serialization round-trips") {
  FiniteSemigroup b = make_brandt(make_cyclic(2), 2);
  FiniteSemigroup back = parse_semigroup(serialize_semigroup(b), b.name);
  CHECK(back.n == b.n);
  CHECK(back.table == b.table);
}
