#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <vector>

#include "finsemi/hyper.hpp"
#include "finsemi/kernels.hpp"

using namespace finsemi;
using namespace finsemi::kernels;

TEST_CASE("regular subset scan: serial, parallel, and classifier agree") {
  for (const FiniteGroup& g : {make_cyclic(6), make_dihedral(3), make_quaternion()}) {
    CAPTURE(g.name);
    auto serial = regular_subsets_serial(g);
    CHECK(serial == regular_subsets_parallel(g));
    std::vector<Mask> from_classifier;
    for (const auto& [a, w] : regular_elements_exp(g)) from_classifier.push_back(a);
    std::sort(from_classifier.begin(), from_classifier.end());
    CHECK(serial == from_classifier);
  }
  CHECK_THROWS_AS(regular_subsets_serial(make_cyclic(25)), ResourceLimitError);
}

TEST_CASE("subgroup mask scan matches the subgroup enumerator") {
  for (const FiniteGroup& g : {make_dihedral(4), make_dihedral(7)}) {
    CAPTURE(g.name);
    auto serial = subgroup_masks_serial(g);
    CHECK(serial == subgroup_masks_parallel(g));
    std::vector<Mask> expected;
    for (const auto& h : subgroups(g)) expected.push_back(h.members);
    std::sort(expected.begin(), expected.end());
    CHECK(serial == expected);
  }
  CHECK_THROWS_AS(subgroup_masks_serial(make_cyclic(17)), ResourceLimitError);
}

TEST_CASE("idempotent grid scan finds exactly the subgroup Haar measures") {
  FiniteGroup c4 = make_cyclic(4);
  auto grid = measure_grid(4, 5);
  auto serial = idempotent_grid_serial(c4, grid);
  CHECK(serial == idempotent_grid_parallel(c4, grid));
  CHECK(serial.size() == 3);  // one Haar measure per subgroup
  for (int i : serial) CHECK(classify_idempotent_measure(c4, grid[i]).has_value());
}

TEST_CASE("regular grid scan agrees with the coset classifier") {
  FiniteGroup c3 = make_cyclic(3);
  auto grid = measure_grid(3, 4);
  auto candidates = grid;
  for (const auto& r : regular_measures(c3)) candidates.push_back(r);
  auto serial = regular_grid_serial(c3, grid, candidates);
  CHECK(serial == regular_grid_parallel(c3, grid, candidates));
  for (size_t i = 0, k = 0; i < grid.size(); ++i) {
    bool inlist = k < serial.size() && serial[k] == (int)i;
    if (inlist) ++k;
    CHECK(inlist == classify_regular_measure(c3, grid[i]).has_value());
  }
}

TEST_CASE("support identity scan finds no defect on coset-uniform measures") {
  FiniteGroup s3 = make_dihedral(3);
  auto ms = regular_measures(s3);
  auto serial = support_identity_serial(s3, ms);
  auto parallel = support_identity_parallel(s3, ms);
  CHECK(serial.ok());
  CHECK(serial.pairs == (long long)ms.size() * (long long)ms.size());
  CHECK(serial.defect == parallel.defect);
  CHECK(serial.pairs == parallel.pairs);
}

TEST_CASE("support identity holds for arbitrary nonnegative measures") {
  // With nonnegative weights no cancellation can shrink a support.
  FiniteGroup c4 = make_cyclic(4);
  auto ms = measure_grid(4, 2);
  auto scan = support_identity_serial(c4, ms);
  CHECK(scan.ok());
  CHECK(scan.defect == support_identity_parallel(c4, ms).defect);
}

TEST_CASE("subsemigroup scan of the power semigroup of C2") {
  FiniteSemigroup t = exp_semigroup_table(make_cyclic(2));
  std::vector<int> carrier(t.n);
  std::iota(carrier.begin(), carrier.end(), 0);
  auto serial = subsemigroups_serial(t, carrier);
  CHECK(serial == subsemigroups_parallel(t, carrier));
  // Position masks over the carrier {
  //   {0}: {e}, {0,1}: the copy of C2, {2}: the full set,
  //   {0,2} and {0,1,2}: with the idempotents added }.
  CHECK(serial == std::vector<std::uint32_t>{0b001, 0b011, 0b100, 0b101, 0b111});
}

TEST_CASE("clifford subsemigroups of small power semigroups have commuting idempotents") {
  for (const FiniteGroup& g : {make_cyclic(4), make_klein()}) {
    CAPTURE(g.name);
    FiniteSemigroup t = exp_semigroup_table(g);
    std::vector<int> carrier(t.n);
    std::iota(carrier.begin(), carrier.end(), 0);
    auto subs = subsemigroups_serial(t, carrier);
    CHECK(subs == subsemigroups_parallel(t, carrier));
    int clifford_count = 0;
    for (std::uint32_t mask : subs) {
      std::vector<int> elems;
      for (int i = 0; i < t.n; ++i)
        if (mask >> i & 1) elems.push_back(carrier[i]);
      std::vector<int> local(t.n, -1);
      for (size_t i = 0; i < elems.size(); ++i) local[elems[i]] = (int)i;
      std::vector<int> table;
      for (int a : elems)
        for (int b : elems) table.push_back(local[t.mul(a, b)]);
      FiniteSemigroup sub = FiniteSemigroup::from_table(table, (int)elems.size());
      if (!is_clifford(sub)) continue;
      ++clifford_count;
      for (int e : idempotents(sub))
        for (int f : idempotents(sub)) CHECK(sub.mul(e, f) == sub.mul(f, e));
    }
    // At minimum every chain of subgroups under reverse inclusion shows up.
    CHECK(clifford_count >= (int)subgroups(g).size());
  }
}

TEST_CASE("subsemigroup scan refuses oversized carriers") {
  FiniteSemigroup t = exp_semigroup_table(make_cyclic(5));
  std::vector<int> carrier(t.n);
  std::iota(carrier.begin(), carrier.end(), 0);
  CHECK_THROWS_AS(subsemigroups_serial(t, carrier), ResourceLimitError);
}
