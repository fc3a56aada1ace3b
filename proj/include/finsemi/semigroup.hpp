#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "finsemi/group.hpp"

namespace finsemi {

// Finite semigroup as a Cayley table; associativity validated on construction.
struct FiniteSemigroup {
  int n = 0;
  std::vector<int> table;
  std::string name;

  int mul(int a, int b) const { return table[a * n + b]; }

  // Exhaustive associativity check for n <= 256, else 1e5 fixed-seed triples.
  static FiniteSemigroup from_table(std::vector<int> table, int n, std::string name = "");
};

// Lazy semigroup for carriers too large to tabulate (e.g. subset semigroups).
struct VirtualSemigroup {
  int n = 0;
  std::function<int(int, int)> op;
  std::string name;
};

// Non-owning view over either representation; all predicates take this.
struct SgView {
  int n = 0;
  const FiniteSemigroup* tab = nullptr;
  const VirtualSemigroup* virt = nullptr;

  SgView(const FiniteSemigroup& s) : n(s.n), tab(&s) {}
  SgView(const VirtualSemigroup& s) : n(s.n), virt(&s) {}
  int mul(int a, int b) const { return tab ? tab->mul(a, b) : virt->op(a, b); }
};

FiniteSemigroup materialize(const VirtualSemigroup& s, int max_n = 4096);

std::vector<int> idempotents(SgView s);
std::vector<int> regular_elements(SgView s);
bool is_regular(SgView s);
std::vector<int> inverses_of(SgView s, int x);
bool is_inverse_semigroup(SgView s);
// x -> its unique inverse; nullopt when s is not an inverse semigroup.
std::optional<std::vector<int>> inverse_table(SgView s);
bool is_commutative(SgView s);
// Semilattice of groups: completely regular (some y with xyx=x and xy=yx for
// every x) and inverse.
bool is_clifford(SgView s);
bool is_group(SgView s);
std::optional<int> identity_of(SgView s);

// Partial order on idempotents: e <= f iff ef = fe = e.
bool idempotent_leq(SgView s, int e, int f);
std::vector<int> principal_filter(SgView s, int e);  // {f in E : ef = e}

struct IdempotentSemilattice {
  std::vector<int> members;            // idempotent indices, sorted
  std::vector<std::vector<char>> leq;  // leq[i][j]: members[i] <= members[j]
};
IdempotentSemilattice semilattice_of(SgView s);  // requires commuting idempotents
// Covering pairs (e,f) of the idempotent order, e covered by f.
std::vector<std::pair<int, int>> idempotent_hasse(SgView s);

struct MaximalSubgroup {
  FiniteGroup group;
  std::vector<int> to_parent;  // local index -> element of s
};
// H_e = {x : xx^-1 = e = x^-1x}; requires an inverse semigroup and idempotent e.
MaximalSubgroup maximal_subgroup(SgView s, int e);

struct ConjugatePair {
  int e, f, z;  // e = z f z^-1 and f = z^-1 e z, e != f
};
std::vector<ConjugatePair> conjugate_idempotent_pairs(SgView s);

FiniteSemigroup make_brandt(const FiniteGroup& h, int k);  // order k*k*|h|+1, zero at 0
FiniteSemigroup make_group_with_zero(const FiniteGroup& h);  // zero at index |h|
FiniteSemigroup make_left_zero(int n);
FiniteSemigroup make_right_zero(int n);
FiniteSemigroup make_null_semigroup(int n);  // xy = 0 throughout
FiniteSemigroup group_as_semigroup(const FiniteGroup& g);
FiniteSemigroup adjoin_identity(const FiniteSemigroup& s);  // S^1, unit at index |s|
FiniteSemigroup semigroup_direct_product(const FiniteSemigroup& a, const FiniteSemigroup& b);

// Strong semilattice of groups: idempotent poset E (indices 0..k-1), a group
// per idempotent, and linking homomorphisms phi[(f,e)] : H_f -> H_e for e < f.
// Links may be given for covering pairs only; the rest are composed, and all
// paths are checked to agree.
struct SslgSpec {
  std::vector<std::vector<char>> leq;  // leq[e][f]: e <= f
  std::vector<FiniteGroup> groups;
  std::map<std::pair<int, int>, std::vector<int>> links;  // (f,e) -> images
  std::string name;
};

struct SslgBuilt {
  FiniteSemigroup sg;
  std::vector<int> elem_comp;   // element -> idempotent index in E
  std::vector<int> elem_local;  // element -> index inside its group
  std::vector<int> offset;      // idempotent index -> first element index
  SslgSpec spec;                // with all comparable links filled in
};

SslgBuilt make_strong_semilattice(const SslgSpec& spec);
SslgSpec parse_strong_semilattice(const std::string& text, const std::string& base_dir);
std::string serialize_strong_semilattice(const SslgSpec& spec);

// Complete backtracking search for an injective homomorphism; nullopt means
// none exists. Idempotents are assigned first and images of products are
// propagated, so the search stays small for the carriers used here.
std::optional<std::vector<int>> find_embedding(SgView s, SgView t, int max_source = 16);
bool is_isomorphic(SgView s, SgView t, int max_n = 16);

// Isomorphism type of a group of order <= 8 ("C4", "K4", "Q8", ...); empty
// string outside the catalogue.
std::string identify_group(const FiniteGroup& g);

// First pair (a,b) with images[a*b] != images[a]*images[b], if any.
std::optional<std::pair<int, int>> homomorphism_defect(SgView s, SgView t,
                                                       const std::vector<int>& images);

// All a in big with g*a = a = a*g for every g in group_image.
std::vector<int> invariant_elements(SgView big, const std::vector<int>& group_image);

FiniteSemigroup parse_semigroup(const std::string& text, const std::string& name = "");
std::string serialize_semigroup(const FiniteSemigroup& s);

}  // namespace finsemi
