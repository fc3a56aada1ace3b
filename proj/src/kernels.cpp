#include "finsemi/kernels.hpp"

#include <stdexcept>

namespace finsemi {
namespace kernels {

namespace {

// Flags -> sorted index list; the only ordering the callers ever see.
template <typename Out>
std::vector<Out> collect(const std::vector<char>& flags, Out base) {
  std::vector<Out> out;
  for (size_t i = 0; i < flags.size(); ++i)
    if (flags[i]) out.push_back(base + (Out)i);
  return out;
}

}  // namespace

std::vector<Mask> regular_subsets_serial(const FiniteGroup& g) {
  if (g.n > 24) throw ResourceLimitError("regular subset scan limited to order 24");
  std::vector<Mask> out;
  Mask full = (Mask(1) << g.n) - 1;
  for (Mask a = 1; a <= full; ++a)
    if (classify_regular_subset(g, a)) out.push_back(a);
  return out;
}

std::vector<Mask> regular_subsets_parallel(const FiniteGroup& g) {
  if (g.n > 24) throw ResourceLimitError("regular subset scan limited to order 24");
  long long full = (1LL << g.n) - 1;
  std::vector<char> flags((size_t)full, 0);
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 1024)
#endif
  for (long long a = 1; a <= full; ++a)
    flags[(size_t)a - 1] = classify_regular_subset(g, (Mask)a).has_value();
  return collect<Mask>(flags, Mask(1));
}

std::vector<Mask> subgroup_masks_serial(const FiniteGroup& g) {
  if (g.n > 16) throw ResourceLimitError("subgroup mask scan limited to order 16");
  std::vector<Mask> out;
  Mask full = (Mask(1) << g.n) - 1;
  for (Mask a = 1; a <= full; ++a)
    if (is_subgroup_mask(g, a)) out.push_back(a);
  return out;
}

std::vector<Mask> subgroup_masks_parallel(const FiniteGroup& g) {
  if (g.n > 16) throw ResourceLimitError("subgroup mask scan limited to order 16");
  long long full = (1LL << g.n) - 1;
  std::vector<char> flags((size_t)full, 0);
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 1024)
#endif
  for (long long a = 1; a <= full; ++a) flags[(size_t)a - 1] = is_subgroup_mask(g, (Mask)a);
  return collect<Mask>(flags, Mask(1));
}

std::vector<int> idempotent_grid_serial(const FiniteGroup& g,
                                        const std::vector<RationalMeasure>& grid) {
  std::vector<int> out;
  for (int i = 0; i < (int)grid.size(); ++i)
    if (convolve(g, grid[i], grid[i]) == grid[i]) out.push_back(i);
  return out;
}

std::vector<int> idempotent_grid_parallel(const FiniteGroup& g,
                                          const std::vector<RationalMeasure>& grid) {
  std::vector<char> flags(grid.size(), 0);
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 16)
#endif
  for (long long i = 0; i < (long long)grid.size(); ++i)
    flags[(size_t)i] = convolve(g, grid[i], grid[i]) == grid[i];
  return collect<int>(flags, 0);
}

namespace {

bool regular_against(const FiniteGroup& g, const RationalMeasure& mu,
                     const std::vector<RationalMeasure>& candidates) {
  for (const auto& nu : candidates)
    if (convolve(g, convolve(g, mu, nu), mu) == mu) return true;
  return false;
}

}  // namespace

std::vector<int> regular_grid_serial(const FiniteGroup& g,
                                     const std::vector<RationalMeasure>& grid,
                                     const std::vector<RationalMeasure>& candidates) {
  std::vector<int> out;
  for (int i = 0; i < (int)grid.size(); ++i)
    if (regular_against(g, grid[i], candidates)) out.push_back(i);
  return out;
}

std::vector<int> regular_grid_parallel(const FiniteGroup& g,
                                       const std::vector<RationalMeasure>& grid,
                                       const std::vector<RationalMeasure>& candidates) {
  std::vector<char> flags(grid.size(), 0);
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 4)
#endif
  for (long long i = 0; i < (long long)grid.size(); ++i)
    flags[(size_t)i] = regular_against(g, grid[i], candidates);
  return collect<int>(flags, 0);
}

SupportScan support_identity_serial(const FiniteGroup& g,
                                    const std::vector<RationalMeasure>& ms) {
  SupportScan r;
  int k = (int)ms.size();
  r.pairs = (long long)k * k;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (support(convolve(g, ms[i], ms[j])) !=
          subset_product(g, support(ms[i]), support(ms[j]))) {
        r.defect = {i, j};
        return r;
      }
  return r;
}

SupportScan support_identity_parallel(const FiniteGroup& g,
                                      const std::vector<RationalMeasure>& ms) {
  SupportScan r;
  int k = (int)ms.size();
  r.pairs = (long long)k * k;
  std::vector<int> row_defect(k, -1);  // smallest bad j per row, -1 if clean
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 1)
#endif
  for (int i = 0; i < k; ++i) {
    Mask si = support(ms[i]);
    for (int j = 0; j < k; ++j)
      if (support(convolve(g, ms[i], ms[j])) != subset_product(g, si, support(ms[j]))) {
        row_defect[i] = j;
        break;
      }
  }
  for (int i = 0; i < k; ++i)
    if (row_defect[i] >= 0) {
      r.defect = {i, row_defect[i]};
      break;
    }
  return r;
}

namespace {

bool closed_subset(SgView s, const std::vector<int>& carrier, std::uint32_t sel) {
  int m = (int)carrier.size();
  for (int i = 0; i < m; ++i) {
    if (!(sel >> i & 1)) continue;
    for (int j = 0; j < m; ++j) {
      if (!(sel >> j & 1)) continue;
      int p = s.mul(carrier[i], carrier[j]);
      bool inside = false;
      for (int l = 0; l < m && !inside; ++l) inside = (sel >> l & 1) && carrier[l] == p;
      if (!inside) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<std::uint32_t> subsemigroups_serial(SgView s, const std::vector<int>& carrier) {
  if (carrier.size() > 20) throw ResourceLimitError("subsemigroup scan limited to 20 elements");
  std::vector<std::uint32_t> out;
  std::uint32_t full = (std::uint32_t(1) << carrier.size()) - 1;
  for (std::uint32_t sel = 1; sel <= full; ++sel)
    if (closed_subset(s, carrier, sel)) out.push_back(sel);
  return out;
}

std::vector<std::uint32_t> subsemigroups_parallel(SgView s, const std::vector<int>& carrier) {
  if (carrier.size() > 20) throw ResourceLimitError("subsemigroup scan limited to 20 elements");
  long long full = (1LL << carrier.size()) - 1;
  std::vector<char> flags((size_t)full, 0);
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 1024)
#endif
  for (long long sel = 1; sel <= full; ++sel)
    flags[(size_t)sel - 1] = closed_subset(s, carrier, (std::uint32_t)sel);
  return collect<std::uint32_t>(flags, std::uint32_t(1));
}

}  // namespace kernels
}  // namespace finsemi
