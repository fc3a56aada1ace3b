#include "finsemi/hyper.hpp"

#include <algorithm>

namespace finsemi {

Mask subset_product(const FiniteGroup& g, Mask a, Mask b) {
  if (!a || !b) throw std::invalid_argument("subset_product: empty subset");
  Mask out = 0;
  for (int x = 0; x < g.n; ++x) {
    if (!(a >> x & 1)) continue;
    for (int y = 0; y < g.n; ++y)
      if (b >> y & 1) out |= Mask(1) << g.mul(x, y);
  }
  return out;
}

VirtualSemigroup exp_semigroup(const FiniteGroup& g, int max_group) {
  if (g.n > max_group)
    throw ResourceLimitError("exp carrier bound: group order " + std::to_string(g.n) +
                             " exceeds " + std::to_string(max_group));
  VirtualSemigroup s;
  s.n = (1 << g.n) - 1;
  s.name = "exp(" + (g.name.empty() ? "?" : g.name) + ")";
  FiniteGroup gc = g;  // own a copy; the view must outlive the caller's group
  s.op = [gc](int a, int b) {
    return (int)(subset_product(gc, (Mask)a + 1, (Mask)b + 1) - 1);
  };
  return s;
}

FiniteSemigroup exp_semigroup_table(const FiniteGroup& g, int max_group) {
  if (g.n > max_group)
    throw ResourceLimitError("exp table bound: group order " + std::to_string(g.n) +
                             " exceeds " + std::to_string(max_group));
  int n = (1 << g.n) - 1;
  std::vector<int> t((size_t)n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      t[(size_t)a * n + b] = (int)(subset_product(g, (Mask)a + 1, (Mask)b + 1) - 1);
  return FiniteSemigroup::from_table(std::move(t), n,
                                     "exp(" + (g.name.empty() ? "?" : g.name) + ")");
}

std::optional<RegularSubsetWitness> classify_regular_subset(const FiniteGroup& g, Mask a) {
  if (!a) throw std::invalid_argument("classify_regular_subset: empty subset");
  int x = lowest_bit(a);
  Mask h = 0;
  for (int y = 0; y < g.n; ++y)
    if (a >> y & 1) h |= Mask(1) << g.mul(y, g.inv[x]);
  if (!is_subgroup_mask(g, h)) return std::nullopt;
  Mask hx = 0;
  for (int y = 0; y < g.n; ++y)
    if (h >> y & 1) hx |= Mask(1) << g.mul(y, x);
  if (hx != a) return std::nullopt;
  return RegularSubsetWitness{{h, popcount(h)}, x};
}

bool is_regular_subset_brute(const FiniteGroup& g, Mask a) {
  Mask all = (Mask(1) << g.n) - 1;
  for (Mask b = 1; b <= all; ++b)
    if (subset_product(g, subset_product(g, a, b), a) == a) return true;
  return false;
}

std::vector<std::pair<Mask, RegularSubsetWitness>> regular_elements_exp(const FiniteGroup& g) {
  std::vector<std::pair<Mask, RegularSubsetWitness>> out;
  for (const Subgroup& h : subgroups(g))
    for (Mask c : right_cosets(g, h)) {
      auto w = classify_regular_subset(g, c);
      if (!w || w->h.members != h.members)
        throw std::logic_error("coset failed its own classification");  // unreachable
      out.emplace_back(c, *w);
    }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    int pa = popcount(a.first), pb = popcount(b.first);
    return pa != pb ? pa < pb : a.first < b.first;
  });
  return out;
}

std::vector<Mask> idempotents_exp(const FiniteGroup& g) {
  std::vector<Mask> out;
  for (const Subgroup& h : subgroups(g)) out.push_back(h.members);
  return out;
}

Mask regular_subset_inverse(const FiniteGroup& g, const RegularSubsetWitness& w) {
  Mask out = 0;
  int xi = g.inv[w.shift];
  for (int y = 0; y < g.n; ++y)
    if (w.h.members >> y & 1) out |= Mask(1) << g.mul(xi, y);
  return out;
}

bool subgroup_idempotent_leq(const FiniteGroup& g, Mask e, Mask f) {
  return subset_product(g, e, f) == e && subset_product(g, f, e) == e;
}

std::vector<SubgroupConjugacy> conjugate_subgroup_pairs(const FiniteGroup& g) {
  auto es = idempotents_exp(g);
  auto regs = regular_elements_exp(g);
  std::vector<SubgroupConjugacy> out;
  for (size_t i = 0; i < es.size(); ++i)
    for (size_t j = i + 1; j < es.size(); ++j) {
      Mask e = es[i], f = es[j], wit = 0;
      for (const auto& [z, w] : regs) {
        Mask zi = regular_subset_inverse(g, w);
        if (subset_product(g, subset_product(g, z, f), zi) == e &&
            subset_product(g, subset_product(g, zi, e), z) == f) {
          wit = z;
          break;
        }
        if (subset_product(g, subset_product(g, z, e), zi) == f &&
            subset_product(g, subset_product(g, zi, f), z) == e) {
          wit = z;
          break;
        }
      }
      if (wit) out.push_back({e, f, wit});
    }
  return out;
}

}  // namespace finsemi
