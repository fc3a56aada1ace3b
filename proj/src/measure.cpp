#include "finsemi/measure.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace finsemi {

RationalMeasure make_measure(int n, std::vector<Rat> w) {
  if ((int)w.size() != n) throw std::invalid_argument("measure: weight count mismatch");
  Rat mass(0);
  for (const Rat& x : w) {
    if (x < Rat(0)) throw std::invalid_argument("measure: negative weight");
    mass += x;
  }
  if (mass != Rat(1)) throw std::invalid_argument("measure: total mass " + rat_to_string(mass) +
                                                  " != 1");
  return RationalMeasure{n, std::move(w)};
}

RationalMeasure delta(int n, int g) {
  std::vector<Rat> w(n, Rat(0));
  w[g] = Rat(1);
  return RationalMeasure{n, std::move(w)};
}

RationalMeasure uniform_on(int n, Mask a) {
  if (!a) throw std::invalid_argument("uniform_on: empty support");
  std::vector<Rat> w(n, Rat(0));
  Rat p(1, popcount(a));
  for (int i = 0; i < n; ++i)
    if (a >> i & 1) w[i] = p;
  return RationalMeasure{n, std::move(w)};
}

RationalMeasure convolve_reference(const FiniteGroup& g, const RationalMeasure& mu,
                                   const RationalMeasure& nu) {
  if (mu.n != g.n || nu.n != g.n) throw std::invalid_argument("convolve: carrier mismatch");
  std::vector<Rat> w(g.n, Rat(0));
  for (int x = 0; x < g.n; ++x) {
    if (mu.w[x] == Rat(0)) continue;
    for (int y = 0; y < g.n; ++y)
      if (nu.w[y] != Rat(0)) w[g.mul(x, y)] += mu.w[x] * nu.w[y];
  }
  Rat mass = std::accumulate(w.begin(), w.end(), Rat(0));
  if (mass != Rat(1)) throw std::logic_error("convolution lost mass");  // unreachable
  return RationalMeasure{g.n, std::move(w)};
}

RationalMeasure convolve(const FiniteGroup& g, const RationalMeasure& mu,
                         const RationalMeasure& nu) {
  if (mu.n != g.n || nu.n != g.n) throw std::invalid_argument("convolve: carrier mismatch");
  // Integer fast path: scale both by their lcm denominators, accumulate in
  // int64, divide once. Falls back to rationals if the scale would overflow.
  long long lm = 1, ln = 1;
  for (const Rat& x : mu.w) lm = std::lcm(lm, x.denominator());
  for (const Rat& x : nu.w) ln = std::lcm(ln, x.denominator());
  if (lm > (1 << 20) || ln > (1 << 20)) return convolve_reference(g, mu, nu);
  std::vector<long long> a(g.n), b(g.n), c(g.n, 0);
  for (int i = 0; i < g.n; ++i) a[i] = mu.w[i].numerator() * (lm / mu.w[i].denominator());
  for (int i = 0; i < g.n; ++i) b[i] = nu.w[i].numerator() * (ln / nu.w[i].denominator());
  for (int x = 0; x < g.n; ++x) {
    if (!a[x]) continue;
    const int* row = g.table.data() + (size_t)x * g.n;
    for (int y = 0; y < g.n; ++y)
      if (b[y]) c[row[y]] += a[x] * b[y];
  }
  std::vector<Rat> w(g.n);
  for (int i = 0; i < g.n; ++i) w[i] = Rat(c[i], lm * ln);
  return RationalMeasure{g.n, std::move(w)};
}

Mask support(const RationalMeasure& mu) {
  Mask m = 0;
  for (int i = 0; i < mu.n; ++i)
    if (mu.w[i] != Rat(0)) m |= Mask(1) << i;
  return m;
}

std::optional<Subgroup> classify_idempotent_measure(const FiniteGroup& g,
                                                    const RationalMeasure& mu) {
  Mask s = support(mu);
  if (!is_subgroup_mask(g, s)) return std::nullopt;
  if (!(mu == uniform_on(g.n, s))) return std::nullopt;
  return Subgroup{s, popcount(s)};
}

std::optional<RegularMeasureWitness> classify_regular_measure(const FiniteGroup& g,
                                                              const RationalMeasure& mu) {
  Mask s = support(mu);
  auto coset = classify_regular_subset(g, s);
  if (!coset) return std::nullopt;
  if (!(mu == uniform_on(g.n, s))) return std::nullopt;
  return RegularMeasureWitness{coset->h, coset->shift};
}

RationalMeasure measure_inverse(const FiniteGroup& g, const RationalMeasure& mu) {
  auto w = classify_regular_measure(g, mu);
  if (!w) throw std::invalid_argument("measure_inverse: measure is not regular");
  return translate_left(g, g.inv[w->shift], uniform_on(g.n, w->h.members));
}

RationalMeasure translate_left(const FiniteGroup& g, int x, const RationalMeasure& mu) {
  // (x*mu)(z) = mu(x^-1 z)
  std::vector<Rat> w(g.n);
  for (int z = 0; z < g.n; ++z) w[z] = mu.w[g.mul(g.inv[x], z)];
  return RationalMeasure{g.n, std::move(w)};
}

RationalMeasure translate_right(const FiniteGroup& g, const RationalMeasure& mu, int x) {
  std::vector<Rat> w(g.n);
  for (int z = 0; z < g.n; ++z) w[z] = mu.w[g.mul(z, g.inv[x])];
  return RationalMeasure{g.n, std::move(w)};
}

std::vector<RationalMeasure> regular_measures(const FiniteGroup& g) {
  std::vector<RationalMeasure> out;
  for (const auto& [mask, w] : regular_elements_exp(g)) out.push_back(uniform_on(g.n, mask));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RationalMeasure> measure_grid(int n, int max_den) {
  std::set<std::vector<Rat>> seen;
  // compositions of d into n nonnegative parts, every d up to the bound
  for (int d = 1; d <= max_den; ++d) {
    std::vector<int> parts(n, 0);
    // iterate over all ways to place d among n cells
    std::vector<int> stack;
    std::function<void(int, int)> go = [&](int cell, int left) {
      if (cell == n - 1) {
        parts[cell] = left;
        std::vector<Rat> w(n);
        for (int i = 0; i < n; ++i) w[i] = Rat(parts[i], d);
        seen.insert(std::move(w));
        return;
      }
      for (int k = 0; k <= left; ++k) {
        parts[cell] = k;
        go(cell + 1, left - k);
      }
    };
    go(0, d);
  }
  std::vector<RationalMeasure> out;
  for (auto& w : seen) out.push_back(RationalMeasure{n, w});
  return out;
}

SupportIsoReport support_iso_check(const FiniteGroup& g) {
  SupportIsoReport rep;
  auto regs = regular_measures(g);
  auto subs = regular_elements_exp(g);
  rep.measures = (int)regs.size();
  rep.subsets = (int)subs.size();
  std::set<Mask> reg_masks;
  for (const auto& [mask, w] : subs) reg_masks.insert(mask);
  std::set<Mask> images;
  for (const auto& mu : regs) images.insert(support(mu));
  rep.bijective = images == reg_masks && images.size() == regs.size();
  rep.homomorphic = true;
  for (size_t i = 0; i < regs.size() && rep.homomorphic; ++i)
    for (size_t j = 0; j < regs.size(); ++j) {
      Mask lhs = support(convolve(g, regs[i], regs[j]));
      Mask rhs = subset_product(g, support(regs[i]), support(regs[j]));
      if (lhs != rhs) {
        rep.homomorphic = false;
        rep.defect = {(int)i, (int)j};
        break;
      }
    }
  return rep;
}

std::vector<RationalMeasure> invariant_measures(const FiniteGroup& g, int grid_den) {
  std::set<std::vector<Rat>> carrier;
  for (const auto& mu : regular_measures(g)) carrier.insert(mu.w);
  for (const auto& mu : measure_grid(g.n, grid_den)) carrier.insert(mu.w);
  std::vector<RationalMeasure> out;
  for (const auto& w : carrier) {
    RationalMeasure mu{g.n, w};
    bool inv = true;
    for (int x = 0; x < g.n && inv; ++x)
      inv = translate_left(g, x, mu) == mu && translate_right(g, mu, x) == mu;
    if (inv) out.push_back(mu);
  }
  return out;
}

RationalMeasure parse_measure(const std::string& text, int n) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::vector<Rat> w(n, Rat(0));
  std::vector<char> seen(n, 0);
  while (std::getline(in, line)) {
    ++lineno;
    std::string stripped = line.substr(0, line.find('#'));
    if (stripped.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto colon = stripped.find(':');
    if (colon == std::string::npos)
      throw ParseError("line " + std::to_string(lineno) + ": expected 'index: num/den'");
    int idx;
    try {
      idx = std::stoi(stripped.substr(0, colon));
    } catch (...) {
      throw ParseError("line " + std::to_string(lineno) + ": bad index");
    }
    if (idx < 0 || idx >= n)
      throw ParseError("line " + std::to_string(lineno) + ": index " + std::to_string(idx) +
                       " out of range [0," + std::to_string(n) + ")");
    if (seen[idx])
      throw ParseError("line " + std::to_string(lineno) + ": duplicate index " +
                       std::to_string(idx));
    std::string val = stripped.substr(colon + 1);
    auto first = val.find_first_not_of(" \t");
    auto last = val.find_last_not_of(" \t\r");
    if (first == std::string::npos)
      throw ParseError("line " + std::to_string(lineno) + ": missing weight");
    Rat r = parse_rat(val.substr(first, last - first + 1));
    if (r < Rat(0)) throw ParseError("line " + std::to_string(lineno) + ": negative weight");
    w[idx] = r;
    seen[idx] = 1;
  }
  Rat mass = std::accumulate(w.begin(), w.end(), Rat(0));
  if (mass != Rat(1)) throw ParseError("total mass " + rat_to_string(mass) + " != 1");
  return RationalMeasure{n, std::move(w)};
}

std::string serialize_measure(const RationalMeasure& mu) {
  std::ostringstream out;
  for (int i = 0; i < mu.n; ++i)
    if (mu.w[i] != Rat(0)) out << i << ": " << rat_to_string(mu.w[i]) << "\n";
  return out.str();
}

std::string measure_to_string(const RationalMeasure& mu) {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < mu.n; ++i)
    if (mu.w[i] != Rat(0)) {
      out << (first ? "" : ", ") << i << ": " << rat_to_string(mu.w[i]);
      first = false;
    }
  return out.str();
}

}  // namespace finsemi
