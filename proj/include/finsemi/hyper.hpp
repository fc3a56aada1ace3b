#pragma once

#include <optional>
#include <vector>

#include "finsemi/semigroup.hpp"

namespace finsemi {

// Product of nonempty subsets AB = {ab : a in A, b in B}.
Mask subset_product(const FiniteGroup& g, Mask a, Mask b);

// The power semigroup on all 2^n - 1 nonempty subsets; element index = mask-1.
// Lazy by default; materialize only for small carriers.
VirtualSemigroup exp_semigroup(const FiniteGroup& g, int max_group = 10);
FiniteSemigroup exp_semigroup_table(const FiniteGroup& g, int max_group = 5);

struct RegularSubsetWitness {
  Subgroup h;
  int shift = 0;  // lowest member of the subset; the subset equals H*shift
};

// Coset test: with x the lowest member of A, A is regular iff H = A*x^-1 is a
// subgroup with Hx = A. Agrees with the brute-force definition (see tests).
std::optional<RegularSubsetWitness> classify_regular_subset(const FiniteGroup& g, Mask a);

// Brute-force oracle: some B with ABA = A.
bool is_regular_subset_brute(const FiniteGroup& g, Mask a);

// All regular elements of exp(G) = all cosets Hx, sorted by (size, mask).
std::vector<std::pair<Mask, RegularSubsetWitness>> regular_elements_exp(const FiniteGroup& g);

// Idempotents of exp(G) = the subgroups of G.
std::vector<Mask> idempotents_exp(const FiniteGroup& g);

// The unique inverse x^-1 H of a regular subset Hx.
Mask regular_subset_inverse(const FiniteGroup& g, const RegularSubsetWitness& w);

// Order on the idempotents of exp(G): e <= f iff ef = fe = e. On subgroup
// masks this is reverse inclusion.
bool subgroup_idempotent_leq(const FiniteGroup& g, Mask e, Mask f);

struct SubgroupConjugacy {
  Mask e = 0, f = 0;  // distinct subgroup masks
  Mask z = 0;         // regular witness: z*f*z^-1 = e and z^-1*e*z = f
};
// Conjugate idempotent pairs inside Reg(exp(G)), conjugating by regular
// subsets with their canonical coset inverses.
std::vector<SubgroupConjugacy> conjugate_subgroup_pairs(const FiniteGroup& g);

}  // namespace finsemi
