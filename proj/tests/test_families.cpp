#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "finsemi/families.hpp"
#include "finsemi/hyper.hpp"

using namespace finsemi;

TEST_CASE("up-closure keeps only minimal generators") {
  UpFamily f = up_closure(2, {0b11, 0b01});
  CHECK(f.mins == std::vector<std::uint32_t>{0b01});
  CHECK(family_contains(f, 0b01));
  CHECK(family_contains(f, 0b11));
  CHECK_FALSE(family_contains(f, 0b10));
  CHECK(family_to_string(up_closure(3, {0b001, 0b110})) == "{{0},{1,2}}");
}

TEST_CASE("linked and maximal linked recognition on three points") {
  // All two-element subsets: pairwise intersecting, and no singleton fits.
  UpFamily pairs = up_closure(3, {0b011, 0b101, 0b110});
  CHECK(is_linked(pairs));
  CHECK(is_maximal_linked(pairs));

  UpFamily point = up_closure(3, {0b001});
  CHECK(is_linked(point));
  CHECK(is_maximal_linked(point));

  UpFamily edge = up_closure(3, {0b011});
  CHECK(is_linked(edge));
  CHECK_FALSE(is_maximal_linked(edge));

  UpFamily split = up_closure(3, {0b001, 0b110});
  CHECK_FALSE(is_linked(split));
}

TEST_CASE("counts of maximal linked systems and inclusion hyperspaces") {
  CHECK(all_mls(1).size() == 1);
  CHECK(all_mls(2).size() == 2);
  CHECK(all_mls(3).size() == 4);
  CHECK(all_mls(4).size() == 12);
  CHECK(all_mls(5).size() == 81);
  CHECK(all_inclusion_hyperspaces(1).size() == 1);
  CHECK(all_inclusion_hyperspaces(2).size() == 4);
  CHECK(all_inclusion_hyperspaces(3).size() == 18);
  CHECK(all_inclusion_hyperspaces(4).size() == 166);
  CHECK_THROWS_AS(all_mls(6), ResourceLimitError);
  CHECK_THROWS_AS(all_inclusion_hyperspaces(5), ResourceLimitError);
}

TEST_CASE("every maximal linked system is an inclusion hyperspace") {
  auto ihs = all_inclusion_hyperspaces(4);
  for (const UpFamily& m : all_mls(4))
    CHECK(std::find(ihs.begin(), ihs.end(), m) != ihs.end());
}

TEST_CASE("maximal linked systems pick one side of every complement pair") {
  for (const UpFamily& m : all_mls(4)) {
    for (std::uint32_t a = 1; a < 15; ++a) {
      std::uint32_t comp = ~a & 15u;
      CHECK(family_contains(m, a) != family_contains(m, comp));
    }
  }
}

TEST_CASE("principal ultrafilters embed the carrier and multiply like it") {
  FiniteGroup c4 = make_cyclic(4);
  FiniteSemigroup c4s = group_as_semigroup(c4);
  auto mls = all_mls(4);
  auto idx = principal_indices(mls, 4);
  REQUIRE(idx.size() == 4);
  for (int x = 0; x < 4; ++x) CHECK(mls[idx[x]] == up_closure(4, {1u << x}));
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      CHECK(family_product(c4s, mls[idx[x]], mls[idx[y]]) == mls[idx[c4.mul(x, y)]]);
}

TEST_CASE("superextension of C2 is C2 again") {
  FiniteSemigroup c2s = group_as_semigroup(make_cyclic(2));
  FiniteSemigroup lam = superextension_semigroup(c2s);
  CHECK(lam.n == 2);
  CHECK(is_isomorphic(lam, c2s));
}

TEST_CASE("superextension of C4 is a commutative Clifford inverse semigroup") {
  FiniteSemigroup c4s = group_as_semigroup(make_cyclic(4));
  std::vector<UpFamily> carrier;
  FiniteSemigroup lam = superextension_semigroup(c4s, &carrier);
  REQUIRE(lam.n == 12);
  CHECK(carrier.size() == 12);
  CHECK(is_commutative(lam));
  CHECK(is_inverse_semigroup(lam));
  CHECK(is_clifford(lam));
  CHECK(idempotents(lam).size() == 2);
}

TEST_CASE("inclusion hyperspaces over C3 close under the lifted product") {
  FiniteSemigroup c3s = group_as_semigroup(make_cyclic(3));
  std::vector<UpFamily> carrier;
  FiniteSemigroup big = inclusion_hyperspace_semigroup(c3s, &carrier);
  CHECK(big.n == 18);
  // The superextension sits inside: each product of linked systems is linked.
  auto mls = all_mls(3);
  for (const UpFamily& f : mls)
    for (const UpFamily& g : mls) CHECK(is_maximal_linked(family_product(c3s, f, g)));
}

TEST_CASE("superextension of a left-zero semigroup is left-zero") {
  FiniteSemigroup lz = make_left_zero(2);
  FiniteSemigroup lam = superextension_semigroup(lz);
  REQUIRE(lam.n == 2);
  for (int a = 0; a < lam.n; ++a)
    for (int b = 0; b < lam.n; ++b) CHECK(lam.mul(a, b) == a);
}
