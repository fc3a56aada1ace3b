#include "finsemi/group.hpp"

#include <algorithm>
#include <sstream>

namespace finsemi {

namespace {

// Returns an error string for the first violated group axiom, or empty.
std::string group_axiom_defect(const std::vector<int>& t, int n, int* identity_out,
                               std::vector<int>* inv_out) {
  auto mul = [&](int a, int b) { return t[a * n + b]; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          return "not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                 std::to_string(c) + ")";
  int e = -1;
  for (int x = 0; x < n && e < 0; ++x) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = mul(x, a) == a && mul(a, x) == a;
    if (ok) e = x;
  }
  if (e < 0) return "no identity element";
  std::vector<int> inv(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == e && mul(b, a) == e) {
        inv[a] = b;
        break;
      }
    if (inv[a] < 0) return "no inverse for element " + std::to_string(a);
  }
  if (identity_out) *identity_out = e;
  if (inv_out) *inv_out = std::move(inv);
  return "";
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<int> table, int n, std::string name) {
  if (n <= 0 || (int)table.size() != n * n)
    throw ParseError("not a group: table size mismatch");
  for (int v : table)
    if (v < 0 || v >= n) throw ParseError("not a group: entry out of range");
  FiniteGroup g;
  std::string defect = group_axiom_defect(table, n, &g.identity, &g.inv);
  if (!defect.empty()) throw ParseError("not a group: " + defect);
  g.n = n;
  g.table = std::move(table);
  g.name = std::move(name);
  return g;
}

FiniteGroup make_cyclic(int n) {
  if (n < 1) throw std::invalid_argument("make_cyclic: order must be positive");
  FiniteGroup g;
  g.n = n;
  g.name = "C" + std::to_string(n);
  g.table.resize(n * n);
  g.inv.resize(n);
  for (int i = 0; i < n; ++i) {
    g.inv[i] = (n - i) % n;
    for (int j = 0; j < n; ++j) g.table[i * n + j] = (i + j) % n;
  }
  return g;
}

FiniteGroup make_klein() {
  FiniteGroup g = direct_product(make_cyclic(2), make_cyclic(2));
  g.name = "K4";
  return g;
}

FiniteGroup make_dihedral(int n) {
  if (n < 1) throw std::invalid_argument("make_dihedral: order must be positive");
  // 0..n-1 rotations r^i, n..2n-1 reflections s r^i; s r^i s = r^-i.
  int m = 2 * n;
  FiniteGroup g;
  g.n = m;
  g.name = n == 3 ? "S3" : "D" + std::to_string(n);
  g.table.resize(m * m);
  auto idx = [&](bool flip, int rot) { return (flip ? n : 0) + (rot % n + n) % n; };
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      bool fx = x >= n, fy = y >= n;
      int rx = x % n, ry = y % n;
      // (s^fx r^rx)(s^fy r^ry) = s^(fx^fy) r^(ry + (fy ? -rx : rx))
      g.table[x * m + y] = idx(fx ^ fy, ry + (fy ? -rx : rx));
    }
  g.identity = 0;
  g.inv.resize(m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (g.table[x * m + y] == 0 && g.table[y * m + x] == 0) g.inv[x] = y;
  return g;
}

FiniteGroup make_quaternion() {
  // 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k
  auto sign = [](int x) { return x & 1 ? -1 : 1; };
  auto axis = [](int x) { return x >> 1; };  // 0:unit 1:i 2:j 3:k
  auto enc = [](int s, int a) { return (a << 1) | (s < 0 ? 1 : 0); };
  FiniteGroup g;
  g.n = 8;
  g.name = "Q8";
  g.table.resize(64);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int s = sign(x) * sign(y), ax = axis(x), ay = axis(y), a;
      if (ax == 0) a = ay;
      else if (ay == 0) a = ax;
      else if (ax == ay) { a = 0; s = -s; }
      else {
        // i*j=k, j*k=i, k*i=j, reversed order negates
        a = 6 - ax - ay;
        if ((ay - ax + 3) % 3 == 2) s = -s;
      }
      g.table[x * 8 + y] = enc(s, a);
    }
  g.identity = 0;
  g.inv.resize(8);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y)
      if (g.table[x * 8 + y] == 0 && g.table[y * 8 + x] == 0) g.inv[x] = y;
  return g;
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  FiniteGroup p;
  p.n = g.n * h.n;
  p.name = (g.name.empty() ? "?" : g.name) + "x" + (h.name.empty() ? "?" : h.name);
  p.table.resize((size_t)p.n * p.n);
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < h.n; ++b)
      for (int c = 0; c < g.n; ++c)
        for (int d = 0; d < h.n; ++d)
          p.table[(size_t)(a * h.n + b) * p.n + (c * h.n + d)] =
              g.mul(a, c) * h.n + h.mul(b, d);
  p.identity = g.identity * h.n + h.identity;
  p.inv.resize(p.n);
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < h.n; ++b) p.inv[a * h.n + b] = g.inv[a] * h.n + h.inv[b];
  return p;
}

bool is_subgroup_mask(const FiniteGroup& g, Mask m) {
  if (!(m >> g.identity & 1)) return false;
  for (int a = 0; a < g.n; ++a) {
    if (!(m >> a & 1)) continue;
    for (int b = 0; b < g.n; ++b)
      if (m >> b & 1 && !(m >> g.mul(a, b) & 1)) return false;
  }
  return true;  // closure + identity suffice in a finite group
}

Mask closure_of(const FiniteGroup& g, Mask seed) {
  Mask m = seed | (Mask(1) << g.identity);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a = 0; a < g.n; ++a) {
      if (!(m >> a & 1)) continue;
      for (int b = 0; b < g.n; ++b) {
        if (!(m >> b & 1)) continue;
        Mask bit = Mask(1) << g.mul(a, b);
        if (!(m & bit)) {
          m |= bit;
          grew = true;
        }
      }
    }
  }
  return m;
}

static std::vector<Subgroup> sorted_subgroups(std::vector<Mask> masks) {
  std::sort(masks.begin(), masks.end(), [](Mask a, Mask b) {
    int pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<Subgroup> out;
  out.reserve(masks.size());
  for (Mask m : masks) out.push_back({m, popcount(m)});
  return out;
}

std::vector<Subgroup> subgroups_by_scan(const FiniteGroup& g) {
  if (g.n > 16) throw ResourceLimitError("subgroup scan limited to order 16");
  std::vector<Mask> found;
  for (Mask m = 1; m < (Mask(1) << g.n); ++m)
    if (is_subgroup_mask(g, m)) found.push_back(m);
  return sorted_subgroups(std::move(found));
}

std::vector<Subgroup> subgroups_by_closure(const FiniteGroup& g) {
  if (g.n > 64) throw ResourceLimitError("subgroup enumeration limited to order 64");
  // Grow every subgroup by one extra generator until nothing new appears.
  std::vector<Mask> known = {Mask(1) << g.identity};
  for (size_t i = 0; i < known.size(); ++i) {
    Mask h = known[i];
    for (int x = 0; x < g.n; ++x) {
      if (h >> x & 1) continue;
      Mask bigger = closure_of(g, h | (Mask(1) << x));
      if (std::find(known.begin(), known.end(), bigger) == known.end())
        known.push_back(bigger);
    }
  }
  return sorted_subgroups(std::move(known));
}

std::vector<Subgroup> subgroups(const FiniteGroup& g, int max_order) {
  if (g.n > max_order)
    throw ResourceLimitError("group order " + std::to_string(g.n) +
                             " exceeds bound " + std::to_string(max_order));
  return g.n <= 16 ? subgroups_by_scan(g) : subgroups_by_closure(g);
}

std::vector<Mask> right_cosets(const FiniteGroup& g, const Subgroup& h) {
  if (!is_subgroup_mask(g, h.members))
    throw std::invalid_argument("right_cosets: not a subgroup");
  std::vector<Mask> out;
  Mask seen = 0;
  for (int x = 0; x < g.n; ++x) {
    if (seen >> x & 1) continue;
    Mask coset = 0;
    for (int a = 0; a < g.n; ++a)
      if (h.members >> a & 1) coset |= Mask(1) << g.mul(a, x);
    out.push_back(coset);
    seen |= coset;
  }
  return out;
}

CayleyFile parse_cayley(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0, n = -1, row = 0;
  CayleyFile f;
  while (std::getline(in, line)) {
    ++lineno;
    std::string stripped = line.substr(0, line.find('#'));
    std::istringstream ls(stripped);
    std::vector<long long> nums;
    long long v;
    while (ls >> v) nums.push_back(v);
    if (!ls.eof()) {
      std::string tok;
      ls.clear();
      ls >> tok;
      throw ParseError("line " + std::to_string(lineno) + ": unexpected token '" + tok + "'");
    }
    if (nums.empty()) continue;
    if (n < 0) {
      if (nums.size() != 1 || nums[0] < 1 || nums[0] > 4096)
        throw ParseError("line " + std::to_string(lineno) +
                         ": expected carrier size on the first data line");
      n = (int)nums[0];
      f.n = n;
      f.table.reserve((size_t)n * n);
      continue;
    }
    if (row >= n)
      throw ParseError("line " + std::to_string(lineno) + ": more than " + std::to_string(n) +
                       " table rows");
    if ((int)nums.size() != n)
      throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(n) +
                       " entries, got " + std::to_string(nums.size()));
    for (long long x : nums) {
      if (x < 0 || x >= n)
        throw ParseError("line " + std::to_string(lineno) + ": entry " + std::to_string(x) +
                         " out of range [0," + std::to_string(n) + ")");
      f.table.push_back((int)x);
    }
    ++row;
  }
  if (n < 0) throw ParseError("empty input: no carrier size found");
  if (row != n)
    throw ParseError("expected " + std::to_string(n) + " table rows, got " + std::to_string(row));
  return f;
}

std::string serialize_cayley(int n, const std::vector<int>& table, const std::string& comment) {
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << "\n";
  out << n << "\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out << (j ? " " : "") << table[i * n + j];
    out << "\n";
  }
  return out.str();
}

FiniteGroup parse_group(const std::string& text, const std::string& name) {
  CayleyFile f = parse_cayley(text);
  return FiniteGroup::from_table(std::move(f.table), f.n, name);
}

std::string serialize_group(const FiniteGroup& g) {
  return serialize_cayley(g.n, g.table, g.name);
}

}  // namespace finsemi
