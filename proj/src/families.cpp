#include "finsemi/families.hpp"

#include <algorithm>
#include <map>

namespace finsemi {

namespace {

std::vector<std::uint32_t> minimize(std::vector<std::uint32_t> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<std::uint32_t> mins;
  for (std::uint32_t a : sets) {
    bool minimal = true;
    for (std::uint32_t b : sets)
      if (b != a && (a & b) == b) {  // b subset of a
        minimal = false;
        break;
      }
    if (minimal) mins.push_back(a);
  }
  return mins;
}

}  // namespace

UpFamily up_closure(int n, std::vector<std::uint32_t> sets) {
  if (sets.empty()) throw std::invalid_argument("up_closure: empty family");
  std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t a : sets)
    if (!a || a > full) throw std::invalid_argument("up_closure: set out of range");
  return UpFamily{n, minimize(std::move(sets))};
}

bool family_contains(const UpFamily& f, std::uint32_t a) {
  for (std::uint32_t m : f.mins)
    if ((a & m) == m) return true;
  return false;
}

std::string family_to_string(const UpFamily& f) {
  std::string out = "{";
  for (size_t i = 0; i < f.mins.size(); ++i) {
    if (i) out += ",";
    out += mask_to_string(f.mins[i]);
  }
  return out + "}";
}

bool is_linked(const UpFamily& f) {
  for (size_t i = 0; i < f.mins.size(); ++i)
    for (size_t j = i + 1; j < f.mins.size(); ++j)
      if (!(f.mins[i] & f.mins[j])) return false;
  return true;
}

bool is_maximal_linked(const UpFamily& f) {
  if (!is_linked(f)) return false;
  std::uint32_t full = (1u << f.n) - 1;
  for (std::uint32_t a = 1; a <= full; ++a) {
    if (family_contains(f, a)) continue;
    bool meets_all = true;
    for (std::uint32_t m : f.mins)
      if (!(a & m)) {
        meets_all = false;
        break;
      }
    if (meets_all) return false;  // proper linked extension exists
  }
  return true;
}

std::vector<UpFamily> all_mls(int n) {
  if (n < 1 || n > 5) throw ResourceLimitError("maximal linked systems enumerated for n <= 5");
  // A maximal linked family picks exactly one of {A, complement(A)} from every
  // complementary pair of proper nonempty sets, pairwise intersecting; the
  // full set always belongs.
  std::uint32_t full = (1u << n) - 1;
  std::vector<std::uint32_t> reps;  // one per complement pair
  for (std::uint32_t a = 1; a < full; ++a)
    if (a < (full ^ a)) reps.push_back(a);
  int pairs = (int)reps.size();
  std::vector<UpFamily> out;
  std::vector<std::uint32_t> chosen(pairs);
  for (std::uint64_t sel = 0; sel < (1ull << pairs); ++sel) {
    bool ok = true;
    for (int i = 0; i < pairs && ok; ++i) {
      chosen[i] = (sel >> i & 1) ? (full ^ reps[i]) : reps[i];
      for (int j = 0; j < i && ok; ++j) ok = (chosen[i] & chosen[j]) != 0;
    }
    if (!ok) continue;
    std::vector<std::uint32_t> sets(chosen.begin(), chosen.end());
    sets.push_back(full);
    out.push_back(UpFamily{n, minimize(std::move(sets))});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<UpFamily> all_inclusion_hyperspaces(int n) {
  if (n < 1 || n > 4)
    throw ResourceLimitError("inclusion hyperspaces enumerated for n <= 4");
  std::uint32_t full = (1u << n) - 1;
  int nsets = (int)full;  // nonempty subsets, membership bit a-1 for set a
  std::vector<UpFamily> out;
  for (std::uint32_t fam = 1; fam < (1u << nsets); ++fam) {
    bool upclosed = true;
    for (std::uint32_t a = 1; a <= full && upclosed; ++a) {
      if (!(fam >> (a - 1) & 1)) continue;
      // every superset of a must belong; step through supersets of a
      std::uint32_t rest = full ^ a;
      for (std::uint32_t s = rest; s; s = (s - 1) & rest)
        if (!(fam >> ((a | s) - 1) & 1)) {
          upclosed = false;
          break;
        }
    }
    if (!upclosed) continue;
    std::vector<std::uint32_t> sets;
    for (std::uint32_t a = 1; a <= full; ++a)
      if (fam >> (a - 1) & 1) sets.push_back(a);
    out.push_back(UpFamily{n, minimize(std::move(sets))});
  }
  std::sort(out.begin(), out.end());
  return out;
}

UpFamily family_product(SgView s, const UpFamily& f, const UpFamily& g) {
  if (f.n != s.n || g.n != s.n) throw std::invalid_argument("family_product: carrier mismatch");
  std::uint32_t full = (1u << s.n) - 1;
  std::vector<std::uint32_t> members;
  for (std::uint32_t c = 1; c <= full; ++c) {
    std::uint32_t pullers = 0;  // {x : x^-1 c in g}
    for (int x = 0; x < s.n; ++x) {
      std::uint32_t quot = 0;  // {y : xy in c}
      for (int y = 0; y < s.n; ++y)
        if (c >> s.mul(x, y) & 1) quot |= 1u << y;
      if (quot && family_contains(g, quot)) pullers |= 1u << x;
    }
    if (pullers && family_contains(f, pullers)) members.push_back(c);
  }
  if (members.empty()) throw std::logic_error("family product is empty");  // unreachable
  return UpFamily{s.n, minimize(std::move(members))};
}

namespace {

FiniteSemigroup family_semigroup(SgView s, std::vector<UpFamily> fams, const std::string& name,
                                 std::vector<UpFamily>* carrier_out) {
  std::map<std::vector<std::uint32_t>, int> index;
  for (size_t i = 0; i < fams.size(); ++i) index[fams[i].mins] = (int)i;
  int n = (int)fams.size();
  std::vector<int> t((size_t)n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      UpFamily p = family_product(s, fams[a], fams[b]);
      auto it = index.find(p.mins);
      if (it == index.end())
        throw std::logic_error(name + ": product " + family_to_string(p) +
                               " falls outside the carrier");
      t[(size_t)a * n + b] = it->second;
    }
  if (carrier_out) *carrier_out = std::move(fams);
  return FiniteSemigroup::from_table(std::move(t), n, name);
}

}  // namespace

FiniteSemigroup superextension_semigroup(SgView s, std::vector<UpFamily>* carrier) {
  if (s.n > 5) throw ResourceLimitError("superextension bound: carrier larger than 5");
  return family_semigroup(s, all_mls(s.n), "lambda", carrier);
}

FiniteSemigroup inclusion_hyperspace_semigroup(SgView s, std::vector<UpFamily>* carrier) {
  if (s.n > 4) throw ResourceLimitError("inclusion hyperspace bound: carrier larger than 4");
  return family_semigroup(s, all_inclusion_hyperspaces(s.n), "ih", carrier);
}

std::vector<int> principal_indices(const std::vector<UpFamily>& carrier, int n) {
  std::vector<int> out(n, -1);
  for (size_t i = 0; i < carrier.size(); ++i)
    if (carrier[i].mins.size() == 1 && popcount(carrier[i].mins[0]) == 1)
      out[lowest_bit(carrier[i].mins[0])] = (int)i;
  for (int x = 0; x < n; ++x)
    if (out[x] < 0) throw std::logic_error("missing principal ultrafilter");  // unreachable
  return out;
}

}  // namespace finsemi
