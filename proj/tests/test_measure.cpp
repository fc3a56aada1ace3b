#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "finsemi/measure.hpp"

using namespace finsemi;

TEST_CASE("measure construction validates mass and sign") {
  CHECK_NOTHROW(make_measure(2, {Rat(1, 3), Rat(2, 3)}));
  CHECK_THROWS_AS(make_measure(2, {Rat(1, 3), Rat(1, 3)}), std::invalid_argument);
  CHECK_THROWS_AS(make_measure(2, {Rat(3, 2), Rat(-1, 2)}), std::invalid_argument);
  CHECK_THROWS_AS(make_measure(2, {Rat(1)}), std::invalid_argument);
  CHECK_THROWS_AS(uniform_on(3, 0), std::invalid_argument);
}

TEST_CASE("point masses convolve by group multiplication") {
  FiniteGroup s3 = make_dihedral(3);
  for (int x = 0; x < s3.n; ++x)
    for (int y = 0; y < s3.n; ++y)
      CHECK(convolve(s3, delta(s3.n, x), delta(s3.n, y)) == delta(s3.n, s3.mul(x, y)));
}

TEST_CASE("fast convolution matches the rational reference on whole grids") {
  FiniteGroup c4 = make_cyclic(4);
  auto grid = measure_grid(4, 3);
  for (const auto& mu : grid)
    for (const auto& nu : grid)
      CHECK(convolve(c4, mu, nu) == convolve_reference(c4, mu, nu));

  FiniteGroup s3 = make_dihedral(3);
  auto g6 = measure_grid(6, 2);
  for (const auto& mu : g6)
    for (const auto& nu : g6)
      CHECK(convolve(s3, mu, nu) == convolve_reference(s3, mu, nu));
}

TEST_CASE("fast convolution falls back cleanly on huge denominators") {
  FiniteGroup c2 = make_cyclic(2);
  long long d = (1ll << 21) + 1;
  RationalMeasure mu = make_measure(2, {Rat(1, d), Rat(d - 1, d)});
  CHECK(convolve(c2, mu, mu) == convolve_reference(c2, mu, mu));
}

TEST_CASE("idempotent measures are the uniform subgroup measures") {
  FiniteGroup c4 = make_cyclic(4);
  RationalMeasure haar = uniform_on(4, 0b0101);
  CHECK(convolve(c4, haar, haar) == haar);
  auto sub = classify_idempotent_measure(c4, haar);
  REQUIRE(sub.has_value());
  CHECK(sub->members == Mask(0b0101));
  // Uniform on a non-subgroup is not idempotent.
  CHECK_FALSE(classify_idempotent_measure(c4, uniform_on(4, 0b0011)).has_value());
  // Non-uniform on a subgroup is not idempotent.
  RationalMeasure skew = make_measure(4, {Rat(1, 3), Rat(0), Rat(2, 3), Rat(0)});
  CHECK_FALSE(classify_idempotent_measure(c4, skew).has_value());

  // Exhaustive on C2 at denominator 6: only the two Haar measures square to themselves.
  FiniteGroup c2 = make_cyclic(2);
  int count = 0;
  for (const auto& mu : measure_grid(2, 6)) {
    bool idem = convolve(c2, mu, mu) == mu;
    CHECK(idem == classify_idempotent_measure(c2, mu).has_value());
    count += idem;
  }
  CHECK(count == 2);
}

TEST_CASE("regular measures are the coset-uniform ones") {
  FiniteGroup c4 = make_cyclic(4);
  RationalMeasure mu = uniform_on(4, 0b1010);  // uniform on {1,3} = {0,2}*1
  auto w = classify_regular_measure(c4, mu);
  REQUIRE(w.has_value());
  CHECK(w->h.members == Mask(0b0101));
  CHECK(w->shift == 1);
  CHECK_FALSE(classify_regular_measure(
                  c4, make_measure(4, {Rat(1, 2), Rat(1, 4), Rat(1, 4), Rat(0)}))
                  .has_value());

  CHECK(regular_measures(c4).size() == 7);
  CHECK(regular_measures(make_dihedral(3)).size() == 18);
}

TEST_CASE("grid regularity matches the brute-force search on small carriers") {
  for (const FiniteGroup& g : {make_cyclic(2), make_cyclic(3)}) {
    CAPTURE(g.name);
    auto grid = measure_grid(g.n, 4);
    auto candidates = grid;
    for (const auto& r : regular_measures(g)) candidates.push_back(r);
    for (const auto& mu : grid) {
      bool brute = false;
      for (const auto& nu : candidates)
        if (convolve(g, convolve(g, mu, nu), mu) == mu) {
          brute = true;
          break;
        }
      CHECK(brute == classify_regular_measure(g, mu).has_value());
    }
  }
}

TEST_CASE("the canonical measure inverse is the unique two-sided one") {
  FiniteGroup c4 = make_cyclic(4);
  auto grid = measure_grid(4, 4);
  for (const auto& mu : regular_measures(c4)) {
    RationalMeasure nu = measure_inverse(c4, mu);
    CHECK(convolve(c4, convolve(c4, mu, nu), mu) == mu);
    CHECK(convolve(c4, convolve(c4, nu, mu), nu) == nu);
    // No other grid measure is a two-sided inverse.
    int count = 0;
    for (const auto& cand : grid)
      if (convolve(c4, convolve(c4, mu, cand), mu) == mu &&
          convolve(c4, convolve(c4, cand, mu), cand) == cand)
        ++count;
    CHECK(count == 1);
  }
  CHECK_THROWS_AS(measure_inverse(c4, make_measure(4, {Rat(1, 2), Rat(1, 2), Rat(0), Rat(0)})),
                  std::invalid_argument);
}

TEST_CASE("translations agree with convolving against point masses") {
  FiniteGroup s3 = make_dihedral(3);
  RationalMeasure mu = uniform_on(6, 0b001101);
  for (int x = 0; x < s3.n; ++x) {
    CHECK(translate_left(s3, x, mu) == convolve(s3, delta(6, x), mu));
    CHECK(translate_right(s3, mu, x) == convolve(s3, mu, delta(6, x)));
  }
}

TEST_CASE("measure grid size on two points follows the Farey count") {
  // Distinct weights p/q with q <= 6 in [0,1]: the 13 Farey fractions of order 6.
  CHECK(measure_grid(2, 6).size() == 13);
  auto g = measure_grid(3, 2);
  // All weight vectors are distinct and sorted.
  CHECK(std::is_sorted(g.begin(), g.end()));
  CHECK(std::adjacent_find(g.begin(), g.end()) == g.end());
}

TEST_CASE("support map on regular measures is a bijective homomorphism") {
  for (const FiniteGroup& g : {make_cyclic(4), make_dihedral(3), make_quaternion()}) {
    CAPTURE(g.name);
    auto rep = support_iso_check(g);
    CHECK(rep.bijective);
    CHECK(rep.homomorphic);
    CHECK(rep.measures == rep.subsets);
    CHECK(rep.defect == std::pair<int, int>{-1, -1});
  }
}

TEST_CASE("the uniform measure is the only invariant one") {
  for (const FiniteGroup& g : {make_cyclic(4), make_klein()}) {
    CAPTURE(g.name);
    auto inv = invariant_measures(g, 4);
    REQUIRE(inv.size() == 1);
    CHECK(inv[0] == uniform_on(g.n, (Mask(1) << g.n) - 1));
  }
}

TEST_CASE("measure parsing accepts the documented format and rejects junk") {
  RationalMeasure mu = parse_measure("# half and half\n1: 1/2\n3: 1/2\n", 4);
  CHECK(mu == uniform_on(4, 0b1010));
  CHECK(parse_measure(serialize_measure(mu), 4) == mu);
  CHECK(measure_to_string(mu) == "1: 1/2, 3: 1/2");
  CHECK_THROWS_WITH(parse_measure("0: 1/2\n", 4), "total mass 1/2 != 1");
  CHECK_THROWS_WITH(parse_measure("9: 1\n", 4), "line 1: index 9 out of range [0,4)");
  CHECK_THROWS_WITH(parse_measure("0: 1/2\n0: 1/2\n", 4), "line 2: duplicate index 0");
  CHECK_THROWS_AS(parse_measure("0 1/2\n", 4), ParseError);
}

TEST_CASE("support extraction") {
  CHECK(support(uniform_on(4, 0b1010)) == Mask(0b1010));
  CHECK(support(delta(4, 2)) == Mask(0b0100));
}
