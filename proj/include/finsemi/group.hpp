#pragma once

#include <string>
#include <vector>

#include "finsemi/base.hpp"

namespace finsemi {

// Finite group given by its Cayley table over indices 0..n-1.
struct FiniteGroup {
  int n = 0;
  std::vector<int> table;  // row-major n*n, table[a*n+b] = a*b
  int identity = 0;
  std::vector<int> inv;
  std::string name;

  int mul(int a, int b) const { return table[a * n + b]; }

  // Validates the group axioms; throws ParseError naming the first violated
  // axiom with a witness ("not a group: ...").
  static FiniteGroup from_table(std::vector<int> table, int n, std::string name = "");
};

FiniteGroup make_cyclic(int n);
FiniteGroup make_klein();                // C2 x C2
FiniteGroup make_dihedral(int n);        // order 2n; make_dihedral(3) = S3
FiniteGroup make_quaternion();           // Q8
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

struct Subgroup {
  Mask members = 0;  // contains the identity bit
  int size = 0;
};

bool is_subgroup_mask(const FiniteGroup& g, Mask m);
Mask closure_of(const FiniteGroup& g, Mask seed);  // subgroup generated by seed

// All subgroups, sorted by (size, mask). Exhaustive subset scan for n <= 16,
// generated-subgroup lattice above; the two methods are cross-checked in tests.
std::vector<Subgroup> subgroups(const FiniteGroup& g, int max_order = 64);
std::vector<Subgroup> subgroups_by_scan(const FiniteGroup& g);     // n <= 16
std::vector<Subgroup> subgroups_by_closure(const FiniteGroup& g);  // n <= 64

// Partition of the carrier into right cosets Hx, sorted by lowest member.
std::vector<Mask> right_cosets(const FiniteGroup& g, const Subgroup& h);

FiniteGroup parse_group(const std::string& text, const std::string& name = "");
std::string serialize_group(const FiniteGroup& g);

// Shared Cayley-table reader for groups and semigroups: '#' comments, carrier
// size, then n rows of n indices. Errors carry 1-based line numbers.
struct CayleyFile {
  int n = 0;
  std::vector<int> table;
};
CayleyFile parse_cayley(const std::string& text);
std::string serialize_cayley(int n, const std::vector<int>& table, const std::string& comment);

}  // namespace finsemi
