#include "finsemi/clifford.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "finsemi/hyper.hpp"

namespace finsemi {

bool ObstructionReport::any_fail() const {
  for (const auto& c : checks)
    if (c.verdict == ObstructionCheck::FAIL) return true;
  return false;
}

bool ObstructionReport::all_pass() const {
  for (const auto& c : checks)
    if (c.verdict == ObstructionCheck::FAIL || c.verdict == ObstructionCheck::SKIPPED)
      return false;
  return true;
}

ObstructionReport obstruction_report(SgView s) {
  ObstructionReport rep;
  rep.regular = is_regular(s);
  if (!rep.regular) return rep;  // outside the theory; nothing certified

  ObstructionCheck inv_check{"unique-inverses", ObstructionCheck::PASS,
                             "every element has exactly one inverse", {}};
  std::vector<int> inv;
  bool inverse = true;
  for (int x = 0; x < s.n; ++x) {
    auto ys = inverses_of(s, x);
    if (ys.size() != 1) {
      inverse = false;
      inv_check.verdict = ObstructionCheck::FAIL;
      inv_check.detail = "element " + std::to_string(x) + " has " + std::to_string(ys.size()) +
                         " inverses";
      inv_check.witness = {x};
      for (size_t i = 0; i < std::min<size_t>(2, ys.size()); ++i)
        inv_check.witness.push_back(ys[i]);
      break;
    }
    inv.push_back(ys[0]);
  }
  rep.checks.push_back(inv_check);

  rep.checks.push_back({"filters-disconnected", ObstructionCheck::VACUOUS,
                        "vacuous (finite): every finite space is totally disconnected", {}});

  if (!inverse) {
    rep.checks.push_back({"square-times-inverse", ObstructionCheck::SKIPPED,
                          "skipped: requires unique inverses", {}});
    rep.checks.push_back({"conjugate-incomparable", ObstructionCheck::SKIPPED,
                          "skipped: requires unique inverses", {}});
    return rep;
  }

  ObstructionCheck sq{"square-times-inverse", ObstructionCheck::PASS,
                      "x^2 x^-1 is idempotent exactly when x is", {}};
  for (int x = 0; x < s.n; ++x) {
    int z = s.mul(s.mul(x, x), inv[x]);
    bool zi = s.mul(z, z) == z, xi = s.mul(x, x) == x;
    if (zi != xi) {
      sq.verdict = ObstructionCheck::FAIL;
      sq.detail = "x = " + std::to_string(x) + ": x^2 x^-1 = " + std::to_string(z) +
                  (zi ? " is idempotent but x is not" : " is not idempotent but x is");
      sq.witness = {x, z};
      break;
    }
  }
  rep.checks.push_back(sq);

  ObstructionCheck cj{"conjugate-incomparable", ObstructionCheck::PASS,
                      "distinct conjugate idempotents are incomparable", {}};
  for (const auto& p : conjugate_idempotent_pairs(s)) {
    if (idempotent_leq(s, p.e, p.f) || idempotent_leq(s, p.f, p.e)) {
      cj.verdict = ObstructionCheck::FAIL;
      cj.detail = "idempotents " + std::to_string(p.e) + " and " + std::to_string(p.f) +
                  " are conjugate via " + std::to_string(p.z) + " yet comparable";
      cj.witness = {p.e, p.f, p.z};
      break;
    }
  }
  rep.checks.push_back(cj);
  return rep;
}

CliffordDecomposition clifford_components(SgView s) {
  auto inv = inverse_table(s);
  if (!inv || !is_clifford(s))
    throw std::invalid_argument("clifford_components: not a Clifford inverse semigroup");
  CliffordDecomposition d;
  d.idems = idempotents(s);
  int k = (int)d.idems.size();
  d.spec.leq.assign(k, std::vector<char>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) d.spec.leq[i][j] = idempotent_leq(s, d.idems[i], d.idems[j]);
  d.elem_comp.assign(s.n, -1);
  d.elem_local.assign(s.n, -1);
  d.spec.groups.resize(k);
  d.to_parent.resize(k);
  for (int i = 0; i < k; ++i) {
    MaximalSubgroup h = maximal_subgroup(s, d.idems[i]);
    for (int l = 0; l < (int)h.to_parent.size(); ++l) {
      int x = h.to_parent[l];
      if (d.elem_comp[x] >= 0)
        throw std::logic_error("maximal subgroups overlap");  // unreachable
      d.elem_comp[x] = i;
      d.elem_local[x] = l;
    }
    d.to_parent[i] = h.to_parent;
    d.spec.groups[i] = std::move(h.group);
  }
  for (int x = 0; x < s.n; ++x)
    if (d.elem_comp[x] < 0)
      throw std::logic_error("carrier is not the union of its subgroups");  // unreachable
  // canonical links phi_{f,e}(x) = x * e
  for (int f = 0; f < k; ++f)
    for (int e = 0; e < k; ++e) {
      if (e == f || !d.spec.leq[e][f]) continue;
      std::vector<int> img(d.spec.groups[f].n);
      for (int l = 0; l < d.spec.groups[f].n; ++l) {
        int y = s.mul(d.to_parent[f][l], d.idems[e]);
        if (d.elem_comp[y] != e)
          throw std::logic_error("link leaves its component");  // unreachable
        img[l] = d.elem_local[y];
      }
      d.spec.links[{f, e}] = std::move(img);
    }
  d.spec.name = "components";
  return d;
}

H0Embedding embed_into_product_h0(const CliffordDecomposition& d, SgView s) {
  int k = (int)d.idems.size();
  H0Embedding em;
  em.images.assign(s.n, std::vector<int>(k));
  for (int x = 0; x < s.n; ++x) {
    int f = d.elem_comp[x];
    for (int e = 0; e < k; ++e) {
      if (e == f) em.images[x][e] = d.elem_local[x];
      else if (d.spec.leq[e][f]) em.images[x][e] = d.spec.links.at({f, e})[d.elem_local[x]];
      else em.images[x][e] = d.spec.groups[e].n;  // the adjoined zero
    }
  }
  // injectivity + homomorphism with zero absorption, coordinatewise
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y) {
      if (y > x && em.images[x] == em.images[y])
        throw std::logic_error("product-of-H0 map is not injective");  // unreachable
      int xy = s.mul(x, y);
      for (int e = 0; e < k; ++e) {
        int a = em.images[x][e], b = em.images[y][e], zero = d.spec.groups[e].n;
        int prod = (a == zero || b == zero) ? zero : d.spec.groups[e].mul(a, b);
        if (prod != em.images[xy][e])
          throw std::logic_error("product-of-H0 map is not a homomorphism");  // unreachable
      }
    }
  return em;
}

H0ExpMap embed_h0_into_exp(const FiniteGroup& h) {
  H0ExpMap m;
  m.htilde = h.n >= 2 ? h : make_cyclic(2);  // need a nontrivial ambient group
  for (int x = 0; x < h.n; ++x) m.images.push_back(Mask(1) << (h.n >= 2 ? x : m.htilde.identity));
  m.images.push_back((Mask(1) << m.htilde.n) - 1);  // zero -> the full group
  return m;
}

ExpEmbedding assemble_exp_embedding(SgView s, long long max_product_order) {
  CliffordDecomposition d = clifford_components(s);
  H0Embedding h0 = embed_into_product_h0(d, s);
  int k = (int)d.idems.size();
  std::vector<H0ExpMap> coords;
  long long order = 1;
  for (int e = 0; e < k; ++e) {
    coords.push_back(embed_h0_into_exp(d.spec.groups[e]));
    order *= coords.back().htilde.n;
    if (order > max_product_order)
      throw ResourceLimitError("embedding needs a product group of order >= " +
                               std::to_string(order) + " (bound " +
                               std::to_string(max_product_order) + ")");
  }
  ExpEmbedding em;
  em.group.order = 1;
  for (auto& c : coords) {
    em.group.order *= c.htilde.n;
    std::string type = identify_group(c.htilde);
    if (!type.empty()) c.htilde.name = type;  // report recognizable factor names
    em.group.factors.push_back(c.htilde);
  }
  em.images.resize(s.n);
  for (int x = 0; x < s.n; ++x) {
    em.images[x].coord.resize(k);
    for (int e = 0; e < k; ++e) em.images[x].coord[e] = coords[e].images[h0.images[x][e]];
  }
  return em;
}

long long ProductGroup::to_global(const std::vector<int>& tuple) const {
  long long g = 0;
  for (size_t i = 0; i < factors.size(); ++i) g = g * factors[i].n + tuple[i];
  return g;
}

std::vector<int> ProductGroup::from_global(long long g) const {
  std::vector<int> t(factors.size());
  for (size_t i = factors.size(); i-- > 0;) {
    t[i] = (int)(g % factors[i].n);
    g /= factors[i].n;
  }
  return t;
}

long long ProductGroup::mul_global(long long a, long long b) const {
  auto ta = from_global(a), tb = from_global(b);
  std::vector<int> tc(factors.size());
  for (size_t i = 0; i < factors.size(); ++i) tc[i] = factors[i].mul(ta[i], tb[i]);
  return to_global(tc);
}

VerifyResult verify_exp_embedding(SgView s, const ExpEmbedding& em) {
  for (int x = 0; x < s.n; ++x)
    for (int y = x + 1; y < s.n; ++y)
      if (em.images[x] == em.images[y])
        return {false, "not injective: elements " + std::to_string(x) + " and " +
                           std::to_string(y) + " share an image"};
  int k = (int)em.group.factors.size();
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y) {
      int xy = s.mul(x, y);
      for (int e = 0; e < k; ++e)
        if (subset_product(em.group.factors[e], em.images[x].coord[e], em.images[y].coord[e]) !=
            em.images[xy].coord[e])
          return {false, "image of " + std::to_string(x) + "*" + std::to_string(y) +
                             " differs in coordinate " + std::to_string(e)};
    }
  return {true, "injective homomorphism over " + std::to_string(s.n * s.n) + " pairs"};
}

MeasureEmbedding assemble_measure_embedding(SgView s, long long max_product_order) {
  ExpEmbedding ee = assemble_exp_embedding(s, max_product_order);
  MeasureEmbedding em;
  em.group = std::move(ee.group);
  em.images.resize(s.n);
  int k = (int)em.group.factors.size();
  for (int x = 0; x < s.n; ++x) {
    em.images[x].reserve(k);
    for (int e = 0; e < k; ++e)
      em.images[x].push_back(uniform_on(em.group.factors[e].n, ee.images[x].coord[e]));
  }
  return em;
}

VerifyResult verify_measure_embedding(SgView s, const MeasureEmbedding& em) {
  for (int x = 0; x < s.n; ++x)
    for (int y = x + 1; y < s.n; ++y)
      if (em.images[x] == em.images[y])
        return {false, "not injective: elements " + std::to_string(x) + " and " +
                           std::to_string(y) + " share an image"};
  int k = (int)em.group.factors.size();
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y) {
      int xy = s.mul(x, y);
      for (int e = 0; e < k; ++e)
        if (!(convolve(em.group.factors[e], em.images[x][e], em.images[y][e]) ==
              em.images[xy][e]))
          return {false, "convolution of images of " + std::to_string(x) + "," +
                             std::to_string(y) + " is not the image of the product"};
    }
  return {true, "injective convolution homomorphism over " + std::to_string(s.n * s.n) +
                    " pairs"};
}

boost::dynamic_bitset<> to_global_bitset(const ProductGroup& g, const ProductSubset& a) {
  boost::dynamic_bitset<> out((size_t)g.order);
  std::vector<int> tuple(g.factors.size(), 0);
  // walk the cartesian product of the coordinate masks
  std::vector<std::vector<int>> lists(g.factors.size());
  for (size_t i = 0; i < g.factors.size(); ++i)
    for (int v = 0; v < g.factors[i].n; ++v)
      if (a.coord[i] >> v & 1) lists[i].push_back(v);
  std::vector<size_t> pos(g.factors.size(), 0);
  while (true) {
    for (size_t i = 0; i < g.factors.size(); ++i) tuple[i] = lists[i][pos[i]];
    out.set((size_t)g.to_global(tuple));
    size_t i = g.factors.size();
    while (i-- > 0) {
      if (++pos[i] < lists[i].size()) break;
      pos[i] = 0;
      if (i == 0) return out;
    }
    if (pos[0] == 0) {
      bool all_zero = true;
      for (size_t j = 0; j < pos.size(); ++j) all_zero = all_zero && pos[j] == 0;
      if (all_zero) return out;
    }
  }
}

boost::dynamic_bitset<> literal_subset_product(const ProductGroup& g,
                                               const boost::dynamic_bitset<>& a,
                                               const boost::dynamic_bitset<>& b) {
  boost::dynamic_bitset<> out(a.size());
  for (size_t x = a.find_first(); x != boost::dynamic_bitset<>::npos; x = a.find_next(x))
    for (size_t y = b.find_first(); y != boost::dynamic_bitset<>::npos; y = b.find_next(y))
      out.set((size_t)g.mul_global((long long)x, (long long)y));
  return out;
}

VerifyResult verify_exp_embedding_global(SgView s, const ExpEmbedding& em, long long max_order) {
  if (em.group.order > max_order)
    return {true, "skipped: product group order " + std::to_string(em.group.order) +
                      " above cross-check bound"};
  std::vector<boost::dynamic_bitset<>> global;
  global.reserve(s.n);
  for (int x = 0; x < s.n; ++x) global.push_back(to_global_bitset(em.group, em.images[x]));
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y)
      if (literal_subset_product(em.group, global[x], global[y]) != global[s.mul(x, y)])
        return {false, "flattened product disagrees at (" + std::to_string(x) + "," +
                           std::to_string(y) + ")"};
  return {true, "flattened subset products agree on all pairs"};
}

std::vector<std::vector<int>> all_homs(const FiniteGroup& h, const FiniteGroup& k) {
  std::vector<std::vector<int>> out;
  std::vector<int> img(h.n, -1);
  img[h.identity] = k.identity;
  // backtracking with forced closure over products of assigned elements
  std::function<void()> rec = [&]() {
    for (int a = 0; a < h.n; ++a) {
      if (img[a] < 0) continue;
      for (int b = 0; b < h.n; ++b) {
        if (img[b] < 0) continue;
        int p = h.mul(a, b), v = k.mul(img[a], img[b]);
        if (img[p] >= 0) {
          if (img[p] != v) return;  // inconsistent branch
          continue;
        }
        img[p] = v;
        rec();
        img[p] = -1;
        return;
      }
    }
    int x = -1;
    for (int i = 0; i < h.n; ++i)
      if (img[i] < 0) {
        x = i;
        break;
      }
    if (x < 0) {
      out.push_back(img);
      return;
    }
    for (int v = 0; v < k.n; ++v) {
      img[x] = v;
      rec();
    }
    img[x] = -1;
  };
  rec();
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SslgSpec random_clifford_spec(std::mt19937_64& rng, int max_elements,
                              long long max_product_order) {
  auto pick = [&](int lo, int hi) { return lo + (int)(rng() % (std::uint64_t)(hi - lo + 1)); };
  for (int attempt = 0; attempt < 1000; ++attempt) {
    SslgSpec sp;
    if (rng() & 1) {
      // divisor-coherent poset: idempotents are AND-closed bitmasks, the group
      // at mask e is cyclic of order prod(c_i : bit i in e), links are mod maps
      int bits = pick(1, 3);
      std::vector<int> c(bits);
      for (int& v : c) v = pick(1, 4);
      std::vector<int> masks;
      for (int m = 0; m < (1 << bits); ++m)
        if (rng() & 1) masks.push_back(m);
      if (masks.empty()) continue;
      for (size_t i = 0; i < masks.size(); ++i)  // close under AND
        for (size_t j = 0; j < masks.size(); ++j) {
          int m = masks[i] & masks[j];
          if (std::find(masks.begin(), masks.end(), m) == masks.end()) masks.push_back(m);
        }
      std::sort(masks.begin(), masks.end());
      int kk = (int)masks.size();
      auto ord = [&](int m) {
        int o = 1;
        for (int i = 0; i < bits; ++i)
          if (m >> i & 1) o *= c[i];
        return o;
      };
      sp.leq.assign(kk, std::vector<char>(kk, 0));
      for (int i = 0; i < kk; ++i)
        for (int j = 0; j < kk; ++j) sp.leq[i][j] = (masks[i] & masks[j]) == masks[i];
      for (int i = 0; i < kk; ++i) sp.groups.push_back(make_cyclic(ord(masks[i])));
      for (int f = 0; f < kk; ++f)
        for (int e = 0; e < kk; ++e) {
          if (e == f || !sp.leq[e][f]) continue;
          std::vector<int> img(sp.groups[f].n);
          for (int x = 0; x < sp.groups[f].n; ++x) img[x] = x % sp.groups[e].n;
          sp.links[{f, e}] = std::move(img);
        }
      sp.name = "rand-poset";
    } else {
      // chain with random linking homomorphisms between consecutive levels
      int kk = pick(2, 4);
      sp.leq.assign(kk, std::vector<char>(kk, 0));
      for (int i = 0; i < kk; ++i)
        for (int j = i; j < kk; ++j) sp.leq[i][j] = 1;  // e0 <= e1 <= ...
      for (int i = 0; i < kk; ++i) {
        int which = pick(0, 6);
        sp.groups.push_back(which == 6 ? make_klein() : make_cyclic(which + 1));
      }
      for (int f = 1; f < kk; ++f) {
        auto homs = all_homs(sp.groups[f], sp.groups[f - 1]);
        sp.links[{f, f - 1}] = homs[rng() % homs.size()];
      }
      sp.name = "rand-chain";
    }
    int total = 0;
    long long prod = 1;
    for (const auto& g : sp.groups) {
      total += g.n;
      prod *= std::max(g.n, 2);  // trivial components embed through C2
      if (prod > max_product_order) break;
    }
    if (total <= max_elements && prod <= max_product_order) return sp;
  }
  throw std::logic_error("random_clifford_spec: no instance within bounds");  // unreachable
}

}  // namespace finsemi
