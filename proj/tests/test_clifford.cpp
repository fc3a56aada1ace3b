#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "finsemi/clifford.hpp"
#include "finsemi/families.hpp"

using namespace finsemi;

namespace {

const ObstructionCheck& check_named(const ObstructionReport& rep, const std::string& id) {
  for (const auto& c : rep.checks)
    if (c.id == id) return c;
  REQUIRE(false);
  return rep.checks.front();
}

}  // namespace

TEST_CASE("obstruction report on a group: everything passes") {
  FiniteSemigroup c4 = group_as_semigroup(make_cyclic(4));
  auto rep = obstruction_report(c4);
  CHECK(rep.regular);
  REQUIRE(rep.checks.size() == 4);
  CHECK(rep.all_pass());
  CHECK_FALSE(rep.any_fail());
  CHECK(check_named(rep, "unique-inverses").verdict == ObstructionCheck::PASS);
  CHECK(check_named(rep, "filters-disconnected").verdict == ObstructionCheck::VACUOUS);
  CHECK(check_named(rep, "square-times-inverse").verdict == ObstructionCheck::PASS);
  CHECK(check_named(rep, "conjugate-incomparable").verdict == ObstructionCheck::PASS);
}

TEST_CASE("Brandt semigroups are rejected by the square-times-inverse check") {
  for (int k : {2, 3}) {
    FiniteSemigroup b = make_brandt(make_cyclic(2), k);
    auto rep = obstruction_report(b);
    CHECK(rep.regular);
    CHECK(rep.any_fail());
    const auto& sq = check_named(rep, "square-times-inverse");
    CHECK(sq.verdict == ObstructionCheck::FAIL);
    REQUIRE(sq.witness.size() == 2);
    // The witness square falls onto the zero while x itself is not idempotent.
    int x = sq.witness[0];
    CHECK(b.mul(x, x) != x);
  }
  FiniteSemigroup b32 = make_brandt(make_cyclic(3), 2);
  CHECK(check_named(obstruction_report(b32), "square-times-inverse").verdict ==
        ObstructionCheck::FAIL);
}

TEST_CASE("non-unique inverses are reported and later checks are skipped") {
  for (const FiniteSemigroup& s : {make_left_zero(2), make_right_zero(3)}) {
    auto rep = obstruction_report(s);
    CHECK(rep.regular);
    const auto& u = check_named(rep, "unique-inverses");
    CHECK(u.verdict == ObstructionCheck::FAIL);
    REQUIRE(u.witness.size() >= 2);
    CHECK(check_named(rep, "square-times-inverse").verdict == ObstructionCheck::SKIPPED);
    CHECK(check_named(rep, "conjugate-incomparable").verdict == ObstructionCheck::SKIPPED);
    CHECK_FALSE(rep.all_pass());
  }
}

TEST_CASE("non-regular input yields no certificate either way") {
  auto rep = obstruction_report(make_null_semigroup(3));
  CHECK_FALSE(rep.regular);
  CHECK(rep.checks.empty());
  CHECK_FALSE(rep.any_fail());
}

TEST_CASE("clifford decomposition of a group with zero") {
  FiniteSemigroup c2z = make_group_with_zero(make_cyclic(2));
  CliffordDecomposition d = clifford_components(c2z);
  REQUIRE(d.idems == std::vector<int>{0, 2});
  CHECK(d.spec.groups[0].n == 2);
  CHECK(d.spec.groups[1].n == 1);
  // The link from the top component collapses everything onto the zero.
  CHECK(d.spec.links.at({0, 1}) == std::vector<int>{0, 0});
  // Reassembly gives back the same semigroup.
  SslgBuilt rebuilt = make_strong_semilattice(d.spec);
  CHECK(is_isomorphic(rebuilt.sg, c2z));
  CHECK_THROWS_AS(clifford_components(make_brandt(make_cyclic(2), 2)), std::invalid_argument);
}

TEST_CASE("product group indexing is mixed-radix with factor 0 outermost") {
  ProductGroup p;
  p.factors = {make_cyclic(2), make_cyclic(3)};
  p.order = 6;
  CHECK(p.to_global({1, 2}) == 5);
  CHECK(p.from_global(5) == std::vector<int>{1, 2});
  // (1,1)*(1,2) = (0,0)
  CHECK(p.mul_global(4, 5) == 0);
  ProductSubset a;
  a.coord = {0b10, 0b101};
  auto bits = to_global_bitset(p, a);
  CHECK(bits.count() == 2);
  CHECK(bits.test(3));
  CHECK(bits.test(5));
}

TEST_CASE("per-coordinate zero embedding into subset semigroups") {
  H0ExpMap m1 = embed_h0_into_exp(make_cyclic(1));
  CHECK(m1.htilde.n == 2);  // trivial groups get a C2 ambient
  CHECK(m1.images == std::vector<Mask>{0b01, 0b11});
  H0ExpMap m3 = embed_h0_into_exp(make_cyclic(3));
  CHECK(m3.htilde.n == 3);
  CHECK(m3.images == std::vector<Mask>{0b001, 0b010, 0b100, 0b111});
}

TEST_CASE("full pipeline on a group with zero") {
  FiniteSemigroup c2z = make_group_with_zero(make_cyclic(2));
  ExpEmbedding em = assemble_exp_embedding(c2z);
  CHECK(em.group.order == 4);
  CHECK(verify_exp_embedding(c2z, em).ok);
  CHECK(verify_exp_embedding_global(c2z, em).ok);
  MeasureEmbedding me = assemble_measure_embedding(c2z);
  CHECK(verify_measure_embedding(c2z, me).ok);
  // The measure images are the uniform measures on the subset images.
  for (int x = 0; x < c2z.n; ++x)
    for (size_t e = 0; e < em.images[x].coord.size(); ++e)
      CHECK(support(me.images[x][e]) == em.images[x].coord[e]);
}

TEST_CASE("full pipeline on the superextension of C4") {
  FiniteSemigroup c4s = group_as_semigroup(make_cyclic(4));
  FiniteSemigroup lam = superextension_semigroup(c4s);
  CliffordDecomposition d = clifford_components(lam);
  REQUIRE(d.idems.size() == 2);
  std::vector<int> sizes = {d.spec.groups[0].n, d.spec.groups[1].n};
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<int>{4, 8});
  CHECK(is_isomorphic(make_strong_semilattice(d.spec).sg, lam));

  ExpEmbedding em = assemble_exp_embedding(lam);
  CHECK(em.group.order == 32);
  CHECK(verify_exp_embedding(lam, em).ok);
  CHECK(verify_exp_embedding_global(lam, em).ok);
  CHECK(verify_measure_embedding(lam, assemble_measure_embedding(lam)).ok);
}

TEST_CASE("tampered images fail verification") {
  FiniteSemigroup c2z = make_group_with_zero(make_cyclic(2));
  ExpEmbedding em = assemble_exp_embedding(c2z);
  std::swap(em.images[0], em.images[1]);
  CHECK_FALSE(verify_exp_embedding(c2z, em).ok);
}

TEST_CASE("assembly respects the product order bound") {
  SslgSpec spec;
  int k = 4;
  spec.leq.assign(k, std::vector<char>(k, 0));
  for (int e = 0; e < k; ++e)
    for (int f = e; f < k; ++f) spec.leq[e][f] = 1;  // a chain
  for (int i = 0; i < k; ++i) spec.groups.push_back(make_cyclic(8));
  for (int f = 1; f < k; ++f) spec.links[{f, f - 1}] = std::vector<int>(8, 0);
  SslgBuilt built = make_strong_semilattice(spec);
  CHECK_THROWS_AS(assemble_exp_embedding(built.sg), ResourceLimitError);
  CHECK(verify_exp_embedding(built.sg, assemble_exp_embedding(built.sg, 4096)).ok);
}

TEST_CASE("homomorphism enumeration counts") {
  CHECK(all_homs(make_cyclic(4), make_cyclic(2)).size() == 2);
  CHECK(all_homs(make_cyclic(2), make_cyclic(4)).size() == 2);
  CHECK(all_homs(make_cyclic(4), make_cyclic(4)).size() == 4);
  CHECK(all_homs(make_klein(), make_cyclic(2)).size() == 4);
  CHECK(all_homs(make_dihedral(3), make_cyclic(3)).size() == 1);
  for (const auto& h : all_homs(make_dihedral(3), make_cyclic(2)))
    CHECK(h[0] == 0);
}

TEST_CASE("generated instances build and embed within their bounds") {
  std::mt19937_64 rng(12345);
  for (int i = 0; i < 10; ++i) {
    SslgSpec spec = random_clifford_spec(rng);
    SslgBuilt built = make_strong_semilattice(spec);
    REQUIRE(built.sg.n <= 20);
    ExpEmbedding em = assemble_exp_embedding(built.sg);
    CHECK(em.group.order <= 1024);
    CHECK(verify_exp_embedding(built.sg, em).ok);
  }
}
