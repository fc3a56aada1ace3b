#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <vector>

#include "finsemi/hyper.hpp"

using namespace finsemi;

TEST_CASE("subset products on C4") {
  FiniteGroup c4 = make_cyclic(4);
  CHECK(subset_product(c4, 0b0001, 0b0010) == 0b0010);   // {0}{1} = {1}
  CHECK(subset_product(c4, 0b0101, 0b0010) == 0b1010);   // {0,2}{1} = {1,3}
  CHECK(subset_product(c4, 0b1010, 0b1010) == 0b0101);   // {1,3}{1,3} = {0,2}
  CHECK(subset_product(c4, 0b1111, 0b0100) == 0b1111);   // GA = G
}

TEST_CASE("power semigroup indexing: element k is the subset with mask k+1") {
  FiniteGroup c2 = make_cyclic(2);
  VirtualSemigroup e2 = exp_semigroup(c2);
  REQUIRE(e2.n == 3);
  CHECK(e2.op(0, 1) == 1);  // {0}{1} = {1}
  CHECK(e2.op(1, 1) == 0);  // {1}{1} = {0}
  CHECK(e2.op(2, 2) == 2);  // {0,1} is idempotent
  FiniteSemigroup t2 = exp_semigroup_table(c2);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) CHECK(t2.mul(a, b) == e2.op(a, b));
}

TEST_CASE("virtual and tabulated power semigroups agree on C4") {
  FiniteGroup c4 = make_cyclic(4);
  VirtualSemigroup v = exp_semigroup(c4);
  FiniteSemigroup t = exp_semigroup_table(c4);
  REQUIRE(v.n == 15);
  for (int a = 0; a < 15; ++a)
    for (int b = 0; b < 15; ++b) CHECK(v.op(a, b) == t.mul(a, b));
}

TEST_CASE("power semigroup constructors enforce their size bounds") {
  CHECK_THROWS_AS(exp_semigroup(make_cyclic(11)), ResourceLimitError);
  CHECK_THROWS_AS(exp_semigroup_table(make_cyclic(6)), ResourceLimitError);
}

TEST_CASE("coset classification agrees with brute-force regularity up to order 6") {
  for (const FiniteGroup& g : {make_cyclic(2), make_cyclic(3), make_cyclic(4), make_cyclic(5),
                               make_cyclic(6), make_klein(), make_dihedral(3)}) {
    CAPTURE(g.name);
    for (Mask a = 1; a < (Mask(1) << g.n); ++a) {
      auto w = classify_regular_subset(g, a);
      bool brute = is_regular_subset_brute(g, a);
      CHECK(w.has_value() == brute);
      if (w) CHECK(subset_product(g, w->h.members, Mask(1) << w->shift) == a);
    }
  }
}

TEST_CASE("regular subset counts equal the sum of subgroup indices") {
  std::map<std::string, int> expected = {{"C4", 7},  {"K4", 11}, {"S3", 18},   {"C6", 12},
                                         {"D4", 35}, {"Q8", 19}, {"C8", 15},   {"C2xC4", 27}};
  for (const FiniteGroup& g : {make_cyclic(4), make_klein(), make_dihedral(3), make_cyclic(6),
                               make_dihedral(4), make_quaternion(), make_cyclic(8),
                               direct_product(make_cyclic(2), make_cyclic(4))}) {
    CAPTURE(g.name);
    CHECK((int)regular_elements_exp(g).size() == expected.at(g.name));
    long long by_index = 0;
    for (const auto& h : subgroups(g)) by_index += g.n / h.size;
    CHECK((long long)regular_elements_exp(g).size() == by_index);
  }
}

TEST_CASE("idempotent subsets are exactly the subgroups") {
  FiniteGroup c4 = make_cyclic(4);
  CHECK(idempotents_exp(c4) == std::vector<Mask>{0b0001, 0b0101, 0b1111});
  for (Mask e : idempotents_exp(make_dihedral(3)))
    CHECK(subset_product(make_dihedral(3), e, e) == e);
}

TEST_CASE("the canonical inverse satisfies both regularity identities") {
  FiniteGroup s3 = make_dihedral(3);
  for (const auto& [a, w] : regular_elements_exp(s3)) {
    Mask b = regular_subset_inverse(s3, w);
    CHECK(subset_product(s3, subset_product(s3, a, b), a) == a);
    CHECK(subset_product(s3, subset_product(s3, b, a), b) == b);
  }
}

TEST_CASE("cosets have a unique two-sided inverse among all subsets") {
  FiniteGroup c4 = make_cyclic(4);
  for (const auto& [a, w] : regular_elements_exp(c4)) {
    int count = 0;
    Mask found = 0;
    for (Mask b = 1; b < 16; ++b) {
      if (subset_product(c4, subset_product(c4, a, b), a) == a &&
          subset_product(c4, subset_product(c4, b, a), b) == b) {
        ++count;
        found = b;
      }
    }
    CHECK(count == 1);
    CHECK(found == regular_subset_inverse(c4, w));
  }
}

TEST_CASE("the idempotent order on subgroups is reverse inclusion") {
  FiniteGroup c4 = make_cyclic(4);
  Mask trivial = 0b0001, half = 0b0101, full = 0b1111;
  CHECK(subgroup_idempotent_leq(c4, full, trivial));
  CHECK(subgroup_idempotent_leq(c4, full, half));
  CHECK(subgroup_idempotent_leq(c4, half, trivial));
  CHECK_FALSE(subgroup_idempotent_leq(c4, trivial, full));
  CHECK_FALSE(subgroup_idempotent_leq(c4, half, full));
  // Reflexive.
  CHECK(subgroup_idempotent_leq(c4, half, half));
}

TEST_CASE("no left-zero pair hides inside a subset semigroup") {
  // For subgroups A, B: AB = A forces B inside A and BA = B the reverse, so
  // two distinct idempotents can never form a left-zero pair. The embedding
  // search must agree (this once regressed on products landing on the
  // candidate element itself).
  FiniteSemigroup lz = make_left_zero(2);
  for (const FiniteGroup& g : {make_cyclic(2), make_cyclic(3), make_klein(), make_dihedral(3)}) {
    CAPTURE(g.name);
    VirtualSemigroup ex = exp_semigroup(g);
    CHECK_FALSE(find_embedding(lz, ex).has_value());
  }
}

TEST_CASE("conjugate subgroup pairs exist only in nonabelian groups") {
  CHECK(conjugate_subgroup_pairs(make_cyclic(4)).empty());
  CHECK(conjugate_subgroup_pairs(make_klein()).empty());
  // S3: the three reflection subgroups are mutually conjugate.
  auto s3_pairs = conjugate_subgroup_pairs(make_dihedral(3));
  CHECK(s3_pairs.size() == 3);
  // D4: two classes of two reflection subgroups each.
  auto d4_pairs = conjugate_subgroup_pairs(make_dihedral(4));
  CHECK(d4_pairs.size() == 2);
  for (const auto& p : d4_pairs) {
    CHECK(popcount(p.e) == popcount(p.f));
    CHECK_FALSE(subgroup_idempotent_leq(make_dihedral(4), p.e, p.f));
    CHECK_FALSE(subgroup_idempotent_leq(make_dihedral(4), p.f, p.e));
  }
}
