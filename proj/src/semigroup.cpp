#include "finsemi/semigroup.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

namespace finsemi {

namespace {

void check_associative(const std::vector<int>& t, int n, const char* what) {
  auto mul = [&](int a, int b) { return t[(size_t)a * n + b]; };
  auto fail = [&](int a, int b, int c) {
    throw ParseError(std::string(what) + ": not associative at (" + std::to_string(a) + "," +
                     std::to_string(b) + "," + std::to_string(c) + ")");
  };
  if (n <= 256) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail(a, b, c);
  } else {
    std::mt19937_64 rng(0xF1A57EEDull);  // fixed seed: deterministic validation
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int i = 0; i < 100000; ++i) {
      int a = pick(rng), b = pick(rng), c = pick(rng);
      if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail(a, b, c);
    }
  }
}

}  // namespace

FiniteSemigroup FiniteSemigroup::from_table(std::vector<int> table, int n, std::string name) {
  if (n <= 0 || table.size() != (size_t)n * (size_t)n)
    throw ParseError("not a semigroup: table size mismatch");
  for (int v : table)
    if (v < 0 || v >= n) throw ParseError("not a semigroup: entry out of range");
  check_associative(table, n, "not a semigroup");
  FiniteSemigroup s;
  s.n = n;
  s.table = std::move(table);
  s.name = std::move(name);
  return s;
}

FiniteSemigroup materialize(const VirtualSemigroup& s, int max_n) {
  if (s.n > max_n)
    throw ResourceLimitError("cannot materialize table with " + std::to_string(s.n) +
                             " elements (bound " + std::to_string(max_n) + ")");
  std::vector<int> t((size_t)s.n * s.n);
  for (int a = 0; a < s.n; ++a)
    for (int b = 0; b < s.n; ++b) t[(size_t)a * s.n + b] = s.op(a, b);
  return FiniteSemigroup::from_table(std::move(t), s.n, s.name);
}

std::vector<int> idempotents(SgView s) {
  std::vector<int> out;
  for (int x = 0; x < s.n; ++x)
    if (s.mul(x, x) == x) out.push_back(x);
  return out;
}

std::vector<int> regular_elements(SgView s) {
  std::vector<int> out;
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y)
      if (s.mul(s.mul(x, y), x) == x) {
        out.push_back(x);
        break;
      }
  return out;
}

bool is_regular(SgView s) { return (int)regular_elements(s).size() == s.n; }

std::vector<int> inverses_of(SgView s, int x) {
  std::vector<int> out;
  for (int y = 0; y < s.n; ++y)
    if (s.mul(s.mul(x, y), x) == x && s.mul(s.mul(y, x), y) == y) out.push_back(y);
  return out;
}

std::optional<std::vector<int>> inverse_table(SgView s) {
  std::vector<int> inv(s.n);
  bool unique = true;
  for (int x = 0; x < s.n && unique; ++x) {
    auto ys = inverses_of(s, x);
    if (ys.size() == 1) inv[x] = ys[0];
    else unique = false;
  }
  // Cross-check against the classical criterion: inverse <=> regular with
  // commuting idempotents.
  bool criterion = is_regular(s);
  if (criterion) {
    auto e = idempotents(s);
    for (size_t i = 0; i < e.size() && criterion; ++i)
      for (size_t j = i + 1; j < e.size() && criterion; ++j)
        criterion = s.mul(e[i], e[j]) == s.mul(e[j], e[i]);
  }
  if (criterion != unique)
    throw std::logic_error("inverse-semigroup criteria disagree");  // unreachable
  if (!unique) return std::nullopt;
  return inv;
}

bool is_inverse_semigroup(SgView s) { return inverse_table(s).has_value(); }

bool is_commutative(SgView s) {
  for (int a = 0; a < s.n; ++a)
    for (int b = a + 1; b < s.n; ++b)
      if (s.mul(a, b) != s.mul(b, a)) return false;
  return true;
}

bool is_clifford(SgView s) {
  // Completely regular: every element lies in a subgroup.
  bool cr = true;
  for (int x = 0; x < s.n && cr; ++x) {
    bool found = false;
    for (int y = 0; y < s.n && !found; ++y)
      found = s.mul(s.mul(x, y), x) == x && s.mul(x, y) == s.mul(y, x);
    cr = found;
  }
  auto inv = inverse_table(s);
  if (inv) {
    bool balanced = true;
    for (int x = 0; x < s.n && balanced; ++x)
      balanced = s.mul(x, (*inv)[x]) == s.mul((*inv)[x], x);
    if (balanced != cr) throw std::logic_error("clifford criteria disagree");  // unreachable
  }
  // Semilattice of groups: completely regular with unique inverses.
  return cr && inv.has_value();
}

std::optional<int> identity_of(SgView s) {
  for (int e = 0; e < s.n; ++e) {
    bool ok = true;
    for (int a = 0; a < s.n && ok; ++a) ok = s.mul(e, a) == a && s.mul(a, e) == a;
    if (ok) return e;
  }
  return std::nullopt;
}

bool is_group(SgView s) {
  auto e = identity_of(s);
  if (!e) return false;
  for (int x = 0; x < s.n; ++x) {
    bool has = false;
    for (int y = 0; y < s.n && !has; ++y) has = s.mul(x, y) == *e && s.mul(y, x) == *e;
    if (!has) return false;
  }
  return true;
}

bool idempotent_leq(SgView s, int e, int f) {
  return s.mul(e, f) == e && s.mul(f, e) == e;
}

std::vector<int> principal_filter(SgView s, int e) {
  if (s.mul(e, e) != e) throw std::invalid_argument("principal_filter: not an idempotent");
  std::vector<int> out;
  for (int f : idempotents(s))
    if (s.mul(e, f) == e && s.mul(f, e) == e) out.push_back(f);
  return out;
}

IdempotentSemilattice semilattice_of(SgView s) {
  IdempotentSemilattice l;
  l.members = idempotents(s);
  int k = (int)l.members.size();
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (s.mul(l.members[i], l.members[j]) != s.mul(l.members[j], l.members[i]))
        throw std::invalid_argument("semilattice_of: idempotents do not commute");
  l.leq.assign(k, std::vector<char>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      l.leq[i][j] = idempotent_leq(s, l.members[i], l.members[j]);
  return l;
}

std::vector<std::pair<int, int>> idempotent_hasse(SgView s) {
  auto e = idempotents(s);
  int k = (int)e.size();
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j || !idempotent_leq(s, e[i], e[j])) continue;
      bool cover = true;
      for (int m = 0; m < k && cover; ++m)
        cover = m == i || m == j || !(idempotent_leq(s, e[i], e[m]) && idempotent_leq(s, e[m], e[j]));
      if (cover) out.emplace_back(e[i], e[j]);
    }
  return out;
}

MaximalSubgroup maximal_subgroup(SgView s, int e) {
  if (s.mul(e, e) != e) throw std::invalid_argument("maximal_subgroup: not an idempotent");
  auto inv = inverse_table(s);
  if (!inv) throw std::invalid_argument("maximal_subgroup: not an inverse semigroup");
  MaximalSubgroup h;
  for (int x = 0; x < s.n; ++x)
    if (s.mul(x, (*inv)[x]) == e && s.mul((*inv)[x], x) == e) h.to_parent.push_back(x);
  int m = (int)h.to_parent.size();
  std::vector<int> local(s.n, -1);
  for (int i = 0; i < m; ++i) local[h.to_parent[i]] = i;
  std::vector<int> t((size_t)m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int p = local[s.mul(h.to_parent[i], h.to_parent[j])];
      if (p < 0) throw std::logic_error("maximal subgroup not closed");  // unreachable
      t[i * m + j] = p;
    }
  h.group = FiniteGroup::from_table(std::move(t), m, "H@" + std::to_string(e));
  return h;
}

std::vector<ConjugatePair> conjugate_idempotent_pairs(SgView s) {
  auto inv = inverse_table(s);
  if (!inv) throw std::invalid_argument("conjugate_idempotent_pairs: not an inverse semigroup");
  auto es = idempotents(s);
  std::vector<ConjugatePair> out;
  for (size_t i = 0; i < es.size(); ++i)
    for (size_t j = i + 1; j < es.size(); ++j) {
      int e = es[i], f = es[j], wit = -1;
      for (int z = 0; z < s.n && wit < 0; ++z) {
        int zi = (*inv)[z];
        if (s.mul(s.mul(z, f), zi) == e && s.mul(s.mul(zi, e), z) == f) wit = z;
        else if (s.mul(s.mul(z, e), zi) == f && s.mul(s.mul(zi, f), z) == e) wit = z;
      }
      if (wit >= 0) out.push_back({e, f, wit});
    }
  return out;
}

FiniteSemigroup make_brandt(const FiniteGroup& h, int k) {
  if (k < 1) throw std::invalid_argument("make_brandt: k must be positive");
  int m = h.n, n = k * k * m + 1;
  auto idx = [&](int a, int x, int b) { return 1 + (a * m + x) * k + b; };
  std::vector<int> t((size_t)n * n, 0);  // 0 is the zero element
  for (int a = 0; a < k; ++a)
    for (int x = 0; x < m; ++x)
      for (int b = 0; b < k; ++b)
        for (int c = 0; c < k; ++c)
          for (int y = 0; y < m; ++y)
            for (int d = 0; d < k; ++d)
              if (b == c) t[(size_t)idx(a, x, b) * n + idx(c, y, d)] = idx(a, h.mul(x, y), d);
  return FiniteSemigroup::from_table(std::move(t), n,
                                     "B(" + (h.name.empty() ? "?" : h.name) + "," +
                                         std::to_string(k) + ")");
}

FiniteSemigroup make_group_with_zero(const FiniteGroup& h) {
  int n = h.n + 1, zero = h.n;
  std::vector<int> t((size_t)n * n, zero);
  for (int a = 0; a < h.n; ++a)
    for (int b = 0; b < h.n; ++b) t[(size_t)a * n + b] = h.mul(a, b);
  return FiniteSemigroup::from_table(std::move(t), n, (h.name.empty() ? "?" : h.name) + "^0");
}

FiniteSemigroup make_left_zero(int n) {
  std::vector<int> t((size_t)n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[(size_t)a * n + b] = a;
  return FiniteSemigroup::from_table(std::move(t), n, "LZ" + std::to_string(n));
}

FiniteSemigroup make_right_zero(int n) {
  std::vector<int> t((size_t)n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[(size_t)a * n + b] = b;
  return FiniteSemigroup::from_table(std::move(t), n, "RZ" + std::to_string(n));
}

FiniteSemigroup make_null_semigroup(int n) {
  std::vector<int> t((size_t)n * n, 0);
  return FiniteSemigroup::from_table(std::move(t), n, "N" + std::to_string(n));
}

FiniteSemigroup group_as_semigroup(const FiniteGroup& g) {
  FiniteSemigroup s;
  s.n = g.n;
  s.table = g.table;
  s.name = g.name;
  return s;
}

FiniteSemigroup adjoin_identity(const FiniteSemigroup& s) {
  int n = s.n + 1, one = s.n;
  std::vector<int> t((size_t)n * n);
  for (int a = 0; a < s.n; ++a)
    for (int b = 0; b < s.n; ++b) t[(size_t)a * n + b] = s.mul(a, b);
  for (int a = 0; a < n; ++a) {
    t[(size_t)a * n + one] = a;
    t[(size_t)one * n + a] = a;
  }
  return FiniteSemigroup::from_table(std::move(t), n, s.name + "^1");
}

FiniteSemigroup semigroup_direct_product(const FiniteSemigroup& a, const FiniteSemigroup& b) {
  int n = a.n * b.n;
  std::vector<int> t((size_t)n * n);
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < b.n; ++j)
      for (int k = 0; k < a.n; ++k)
        for (int l = 0; l < b.n; ++l)
          t[(size_t)(i * b.n + j) * n + (k * b.n + l)] = a.mul(i, k) * b.n + b.mul(j, l);
  return FiniteSemigroup::from_table(std::move(t), n, a.name + "x" + b.name);
}

// ---------------------------------------------------------------- sslg

namespace {

int link_apply(const SslgSpec& sp, int f, int e, int x) {
  if (f == e) return x;
  return sp.links.at({f, e})[x];
}

void check_link_is_hom(const SslgSpec& sp, int f, int e, const std::vector<int>& img) {
  const FiniteGroup& hf = sp.groups[f];
  const FiniteGroup& he = sp.groups[e];
  if ((int)img.size() != hf.n)
    throw std::invalid_argument("link (" + std::to_string(f) + "->" + std::to_string(e) +
                                "): expected " + std::to_string(hf.n) + " images");
  for (int v : img)
    if (v < 0 || v >= he.n)
      throw std::invalid_argument("link (" + std::to_string(f) + "->" + std::to_string(e) +
                                  "): image out of range");
  for (int x = 0; x < hf.n; ++x)
    for (int y = 0; y < hf.n; ++y)
      if (img[hf.mul(x, y)] != he.mul(img[x], img[y]))
        throw std::invalid_argument("link (" + std::to_string(f) + "->" + std::to_string(e) +
                                    ") is not a homomorphism at (" + std::to_string(x) + "," +
                                    std::to_string(y) + ")");
}

}  // namespace

SslgBuilt make_strong_semilattice(const SslgSpec& input) {
  SslgSpec sp = input;
  int k = (int)sp.groups.size();
  if (k == 0) throw std::invalid_argument("strong semilattice: no components");
  if ((int)sp.leq.size() != k)
    throw std::invalid_argument("strong semilattice: order relation size mismatch");
  for (int e = 0; e < k; ++e)
    if ((int)sp.leq[e].size() != k)
      throw std::invalid_argument("strong semilattice: order relation row size mismatch");
  for (int e = 0; e < k; ++e) sp.leq[e][e] = 1;
  // transitive closure, then antisymmetry
  for (int m = 0; m < k; ++m)
    for (int e = 0; e < k; ++e)
      for (int f = 0; f < k; ++f)
        if (sp.leq[e][m] && sp.leq[m][f]) sp.leq[e][f] = 1;
  for (int e = 0; e < k; ++e)
    for (int f = e + 1; f < k; ++f)
      if (sp.leq[e][f] && sp.leq[f][e])
        throw std::invalid_argument("strong semilattice: order not antisymmetric at (" +
                                    std::to_string(e) + "," + std::to_string(f) + ")");
  // meets
  std::vector<std::vector<int>> meet(k, std::vector<int>(k, -1));
  for (int e = 0; e < k; ++e)
    for (int f = 0; f < k; ++f) {
      for (int m = 0; m < k; ++m) {
        if (!(sp.leq[m][e] && sp.leq[m][f])) continue;
        bool greatest = true;
        for (int d = 0; d < k && greatest; ++d)
          if (sp.leq[d][e] && sp.leq[d][f]) greatest = sp.leq[d][m];
        if (greatest) {
          meet[e][f] = m;
          break;
        }
      }
      if (meet[e][f] < 0)
        throw std::invalid_argument("strong semilattice: no meet for idempotents " +
                                    std::to_string(e) + "," + std::to_string(f));
    }
  // validate given links, then fill the remaining comparable pairs by composing
  for (auto& [fe, img] : sp.links) {
    auto [f, e] = fe;
    if (f < 0 || f >= k || e < 0 || e >= k || e == f || !sp.leq[e][f])
      throw std::invalid_argument("link (" + std::to_string(f) + "->" + std::to_string(e) +
                                  ") does not follow the order");
    check_link_is_hom(sp, f, e, img);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (int f = 0; f < k; ++f)
      for (int e = 0; e < k; ++e) {
        if (e == f || !sp.leq[e][f] || sp.links.count({f, e})) continue;
        for (int m = 0; m < k; ++m) {
          if (m == e || m == f || !(sp.leq[e][m] && sp.leq[m][f])) continue;
          if (!sp.links.count({f, m}) || !sp.links.count({m, e})) continue;
          const auto& fm = sp.links.at({f, m});
          const auto& me = sp.links.at({m, e});
          std::vector<int> img(sp.groups[f].n);
          for (int x = 0; x < sp.groups[f].n; ++x) img[x] = me[fm[x]];
          sp.links[{f, e}] = std::move(img);
          grew = true;
          break;
        }
      }
  }
  for (int f = 0; f < k; ++f)
    for (int e = 0; e < k; ++e)
      if (e != f && sp.leq[e][f] && !sp.links.count({f, e}))
        throw std::invalid_argument("missing link " + std::to_string(f) + "->" +
                                    std::to_string(e));
  // coherence across every comparable chain e <= m <= f
  for (int f = 0; f < k; ++f)
    for (int m = 0; m < k; ++m)
      for (int e = 0; e < k; ++e) {
        if (!(sp.leq[e][m] && sp.leq[m][f]) || e == m || m == f) continue;
        for (int x = 0; x < sp.groups[f].n; ++x)
          if (link_apply(sp, f, e, x) != link_apply(sp, m, e, link_apply(sp, f, m, x)))
            throw std::invalid_argument("link coherence fails on chain (" + std::to_string(e) +
                                        "<=" + std::to_string(m) + "<=" + std::to_string(f) +
                                        ") at element " + std::to_string(x));
      }

  SslgBuilt built;
  built.offset.resize(k);
  int n = 0;
  for (int e = 0; e < k; ++e) {
    built.offset[e] = n;
    n += sp.groups[e].n;
  }
  built.elem_comp.resize(n);
  built.elem_local.resize(n);
  for (int e = 0; e < k; ++e)
    for (int x = 0; x < sp.groups[e].n; ++x) {
      built.elem_comp[built.offset[e] + x] = e;
      built.elem_local[built.offset[e] + x] = x;
    }
  std::vector<int> t((size_t)n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int f = built.elem_comp[a], g = built.elem_comp[b], m = meet[f][g];
      int prod = sp.groups[m].mul(link_apply(sp, f, m, built.elem_local[a]),
                                  link_apply(sp, g, m, built.elem_local[b]));
      t[(size_t)a * n + b] = built.offset[m] + prod;
    }
  built.sg = FiniteSemigroup::from_table(std::move(t), n,
                                         sp.name.empty() ? "sslg" : sp.name);
  if (!is_inverse_semigroup(built.sg) || !is_clifford(built.sg))
    throw std::logic_error("strong semilattice output is not Clifford inverse");  // unreachable
  built.spec = std::move(sp);
  return built;
}

namespace {

FiniteGroup group_by_name(const std::string& spec, const std::string& base_dir) {
  if (spec.rfind("file:", 0) == 0) {
    std::filesystem::path p(spec.substr(5));
    if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
    std::ifstream in(p);
    if (!in) throw ParseError("cannot open group file " + p.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_group(buf.str(), p.filename().string());
  }
  if (spec == "K4") return make_klein();
  if (spec == "Q8") return make_quaternion();
  if (spec == "S3") return make_dihedral(3);
  auto tail_number = [&]() {
    try {
      size_t used = 0;
      int v = std::stoi(spec.substr(1), &used);
      if (used + 1 == spec.size() && v >= 1) return v;
    } catch (...) {
    }
    throw ParseError("unknown group name '" + spec + "'");
  };
  if (spec.size() > 1 && spec[0] == 'C') return make_cyclic(tail_number());
  if (spec.size() > 1 && spec[0] == 'D') return make_dihedral(tail_number());
  throw ParseError("unknown group name '" + spec + "'");
}

int int_token(const std::string& s, int ln, const char* what) {
  try {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (...) {
  }
  throw ParseError("line " + std::to_string(ln) + ": bad " + what + " '" + s + "'");
}

}  // namespace

SslgSpec parse_strong_semilattice(const std::string& text, const std::string& base_dir) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0, k = -1;
  std::vector<std::vector<std::string>> group_lines, link_lines, order_lines;
  std::vector<int> group_linenos, link_linenos, order_linenos;
  while (std::getline(in, line)) {
    ++lineno;
    std::string stripped = line.substr(0, line.find('#'));
    std::istringstream ls(stripped);
    std::vector<std::string> tok;
    std::string w;
    while (ls >> w) tok.push_back(w);
    if (tok.empty()) continue;
    if (tok[0] == "semilattice") {
      if (k >= 0 || tok.size() != 2)
        throw ParseError("line " + std::to_string(lineno) + ": bad semilattice header");
      k = int_token(tok[1], lineno, "semilattice size");
      if (k < 1 || k > 64)
        throw ParseError("line " + std::to_string(lineno) + ": semilattice size out of range");
    } else if (tok[0] == "order") {
      order_lines.push_back(tok);
      order_linenos.push_back(lineno);
    } else if (tok[0] == "group") {
      group_lines.push_back(tok);
      group_linenos.push_back(lineno);
    } else if (tok[0] == "link") {
      link_lines.push_back(tok);
      link_linenos.push_back(lineno);
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unknown directive '" + tok[0] + "'");
    }
  }
  if (k < 0) throw ParseError("missing 'semilattice <k>' header");
  SslgSpec sp;
  sp.leq.assign(k, std::vector<char>(k, 0));
  auto idem_index = [&](const std::string& s, int ln) {
    int v = int_token(s, ln, "idempotent index");
    if (v < 0 || v >= k)
      throw ParseError("line " + std::to_string(ln) + ": idempotent index out of range");
    return v;
  };
  for (size_t i = 0; i < order_lines.size(); ++i) {
    // accept "order 0 <= 1" and "order 0<=1"
    std::string joined;
    for (size_t j = 1; j < order_lines[i].size(); ++j) joined += order_lines[i][j];
    auto pos = joined.find("<=");
    if (pos == std::string::npos)
      throw ParseError("line " + std::to_string(order_linenos[i]) + ": expected 'e <= f'");
    int e = idem_index(joined.substr(0, pos), order_linenos[i]);
    int f = idem_index(joined.substr(pos + 2), order_linenos[i]);
    sp.leq[e][f] = 1;
  }
  sp.groups.resize(k);
  std::vector<char> have(k, 0);
  for (size_t i = 0; i < group_lines.size(); ++i) {
    auto& tok = group_lines[i];
    int ln = group_linenos[i];
    if (tok.size() < 3) throw ParseError("line " + std::to_string(ln) + ": bad group line");
    int e = idem_index(tok[1], ln);
    if (have[e]) throw ParseError("line " + std::to_string(ln) + ": duplicate group for " + tok[1]);
    if (tok[2] == "table") {
      if (tok.size() < 4) throw ParseError("line " + std::to_string(ln) + ": bad inline table");
      int m = int_token(tok[3], ln, "table size");
      if (m < 1 || (int)tok.size() != 4 + m * m)
        throw ParseError("line " + std::to_string(ln) + ": inline table needs " +
                         std::to_string(m * m) + " entries");
      std::vector<int> t;
      for (size_t j = 4; j < tok.size(); ++j) t.push_back(int_token(tok[j], ln, "table entry"));
      sp.groups[e] = FiniteGroup::from_table(std::move(t), m);
    } else {
      sp.groups[e] = group_by_name(tok[2], base_dir);
    }
    have[e] = 1;
  }
  for (int e = 0; e < k; ++e)
    if (!have[e]) throw ParseError("no group given for idempotent " + std::to_string(e));
  for (size_t i = 0; i < link_lines.size(); ++i) {
    auto& tok = link_lines[i];
    int ln = link_linenos[i];
    if (tok.size() < 3) throw ParseError("line " + std::to_string(ln) + ": bad link line");
    int f = idem_index(tok[1], ln), e = idem_index(tok[2], ln);
    std::vector<int> img;
    for (size_t j = 3; j < tok.size(); ++j) img.push_back(int_token(tok[j], ln, "link image"));
    if ((int)img.size() != sp.groups[f].n)
      throw ParseError("line " + std::to_string(ln) + ": link needs " +
                       std::to_string(sp.groups[f].n) + " images");
    sp.links[{f, e}] = std::move(img);
  }
  return sp;
}

std::string serialize_strong_semilattice(const SslgSpec& sp) {
  std::ostringstream out;
  int k = (int)sp.groups.size();
  if (!sp.name.empty()) out << "# " << sp.name << "\n";
  out << "semilattice " << k << "\n";
  for (int e = 0; e < k; ++e)
    for (int f = 0; f < k; ++f)
      if (e != f && sp.leq[e][f]) out << "order " << e << " <= " << f << "\n";
  for (int e = 0; e < k; ++e) {
    const FiniteGroup& g = sp.groups[e];
    static const std::string named[] = {"K4", "Q8", "S3"};
    bool is_named = std::find(std::begin(named), std::end(named), g.name) != std::end(named) ||
                    (g.name.size() > 1 && (g.name[0] == 'C' || g.name[0] == 'D') &&
                     g.name.find_first_not_of("0123456789", 1) == std::string::npos);
    if (is_named) {
      out << "group " << e << " " << g.name << "\n";
    } else {
      out << "group " << e << " table " << g.n;
      for (int v : g.table) out << " " << v;
      out << "\n";
    }
  }
  for (auto& [fe, img] : sp.links) {
    out << "link " << fe.first << " " << fe.second;
    for (int v : img) out << " " << v;
    out << "\n";
  }
  return out.str();
}

// ------------------------------------------------- embedding search

namespace {

// (index, period) of the monogenic semigroup generated by x; an injective
// homomorphism preserves both, which prunes the search hard.
std::pair<int, int> cycle_shape(SgView s, int x) {
  std::vector<int> when(s.n, -1);
  int cur = x, step = 1;
  while (when[cur] < 0) {
    when[cur] = step;
    cur = s.mul(cur, x);
    ++step;
  }
  return {when[cur], step - when[cur]};
}

struct EmbedSearch {
  SgView s, t;
  std::vector<int> images;      // -1 = unassigned
  std::vector<char> used;
  std::vector<std::pair<int, int>> shape_s, shape_t;
  std::vector<char> order;      // preferred branch order over source elements

  EmbedSearch(SgView s_, SgView t_) : s(s_), t(t_) {}

  // Trial-assigns x -> im so that self products and products landing back on
  // x itself are constrained too, not only those between older assignments.
  bool compatible(int x, int im) {
    images[x] = im;
    bool ok = true;
    for (int a = 0; a < s.n && ok; ++a) {
      if (images[a] < 0) continue;
      int p = s.mul(x, a), q = s.mul(a, x);
      if (images[p] >= 0 && t.mul(im, images[a]) != images[p]) ok = false;
      if (ok && images[q] >= 0 && t.mul(images[a], im) != images[q]) ok = false;
    }
    images[x] = -1;
    return ok;
  }

  bool rec() {
    // forced first: any unassigned product of two assigned elements
    for (int a = 0; a < s.n; ++a) {
      if (images[a] < 0) continue;
      for (int b = 0; b < s.n; ++b) {
        if (images[b] < 0) continue;
        int p = s.mul(a, b);
        int v = t.mul(images[a], images[b]);
        if (images[p] >= 0) {
          // Two pairs can force the same product; they must agree.
          if (images[p] != v) return false;
          continue;
        }
        if (used[v] || shape_s[p] != shape_t[v] || !compatible(p, v)) return false;
        images[p] = v;
        used[v] = 1;
        bool ok = rec();
        images[p] = -1;
        used[v] = 0;
        return ok;
      }
    }
    int x = -1;
    for (int i = 0; i < s.n; ++i)
      if (images[order[i]] < 0) {
        x = order[i];
        break;
      }
    if (x < 0) return true;  // everything assigned consistently
    for (int v = 0; v < t.n; ++v) {
      if (used[v] || shape_s[x] != shape_t[v] || !compatible(x, v)) continue;
      images[x] = v;
      used[v] = 1;
      if (rec()) return true;
      images[x] = -1;
      used[v] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_embedding(SgView s, SgView t, int max_source) {
  if (s.n > max_source)
    throw ResourceLimitError("embedding search limited to " + std::to_string(max_source) +
                             " source elements");
  if (s.n > t.n) return std::nullopt;
  EmbedSearch es(s, t);
  es.images.assign(s.n, -1);
  es.used.assign(t.n, 0);
  es.shape_s.resize(s.n);
  es.shape_t.resize(t.n);
  for (int x = 0; x < s.n; ++x) es.shape_s[x] = cycle_shape(s, x);
  for (int v = 0; v < t.n; ++v) es.shape_t[v] = cycle_shape(t, v);
  // assign idempotents first, then the rest in index order
  for (int x = 0; x < s.n; ++x)
    if (s.mul(x, x) == x) es.order.push_back((char)x);
  for (int x = 0; x < s.n; ++x)
    if (s.mul(x, x) != x) es.order.push_back((char)x);
  if (!es.rec()) return std::nullopt;
  return es.images;
}

bool is_isomorphic(SgView s, SgView t, int max_n) {
  if (s.n != t.n) return false;
  return find_embedding(s, t, max_n).has_value();
}

std::string identify_group(const FiniteGroup& g) {
  if (g.n > 8) return "";
  std::vector<FiniteGroup> catalogue;
  for (int n = 1; n <= 8; ++n) catalogue.push_back(make_cyclic(n));
  catalogue.push_back(make_klein());
  catalogue.push_back(make_dihedral(3));
  catalogue.push_back(make_dihedral(4));
  catalogue.push_back(make_quaternion());
  catalogue.push_back(direct_product(make_cyclic(2), make_cyclic(4)));
  FiniteGroup eab8 = direct_product(make_cyclic(2), make_klein());
  eab8.name = "C2xC2xC2";
  catalogue.push_back(std::move(eab8));
  FiniteSemigroup gs = group_as_semigroup(g);
  for (const FiniteGroup& c : catalogue)
    if (c.n == g.n && is_isomorphic(gs, group_as_semigroup(c))) return c.name;
  return "";  // unreachable for orders <= 8: the catalogue is complete there
}

std::optional<std::pair<int, int>> homomorphism_defect(SgView s, SgView t,
                                                       const std::vector<int>& images) {
  for (int a = 0; a < s.n; ++a)
    for (int b = 0; b < s.n; ++b)
      if (t.mul(images[a], images[b]) != images[s.mul(a, b)]) return std::make_pair(a, b);
  return std::nullopt;
}

std::vector<int> invariant_elements(SgView big, const std::vector<int>& group_image) {
  std::vector<int> out;
  for (int a = 0; a < big.n; ++a) {
    bool inv = true;
    for (int g : group_image)
      if (big.mul(g, a) != a || big.mul(a, g) != a) {
        inv = false;
        break;
      }
    if (inv) out.push_back(a);
  }
  return out;
}

FiniteSemigroup parse_semigroup(const std::string& text, const std::string& name) {
  CayleyFile f = parse_cayley(text);
  return FiniteSemigroup::from_table(std::move(f.table), f.n, name);
}

std::string serialize_semigroup(const FiniteSemigroup& s) {
  return serialize_cayley(s.n, s.table, s.name);
}

}  // namespace finsemi
