#pragma once

#include <random>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "finsemi/measure.hpp"
#include "finsemi/semigroup.hpp"

namespace finsemi {

// Necessary conditions for embeddability into a subset/measure semigroup over
// a group. Any FAIL is a certificate of non-embeddability; all-PASS is
// necessary but not sufficient.
struct ObstructionCheck {
  enum Verdict { PASS, FAIL, VACUOUS, SKIPPED };
  std::string id;
  Verdict verdict = PASS;
  std::string detail;
  std::vector<int> witness;
};

struct ObstructionReport {
  bool regular = false;
  std::vector<ObstructionCheck> checks;
  bool any_fail() const;
  bool all_pass() const;  // no FAIL and nothing SKIPPED besides vacuous items
};

ObstructionReport obstruction_report(SgView s);

// Decomposition of a Clifford inverse semigroup into its semilattice of
// maximal subgroups with the canonical links phi(x) = x*e.
struct CliffordDecomposition {
  std::vector<int> idems;       // idempotents of s, sorted
  SslgSpec spec;                // groups, order and links over positions in idems
  std::vector<int> elem_comp;   // element -> position of its idempotent
  std::vector<int> elem_local;  // element -> index inside its maximal subgroup
  std::vector<std::vector<int>> to_parent;  // per component, local -> element
};
CliffordDecomposition clifford_components(SgView s);

// Direct product of small groups with mixed-radix element indexing.
struct ProductGroup {
  std::vector<FiniteGroup> factors;
  long long order = 1;

  long long to_global(const std::vector<int>& tuple) const;
  std::vector<int> from_global(long long g) const;
  long long mul_global(long long a, long long b) const;
};

// Subset of a product group stored one coordinate mask at a time; the subset
// is the cartesian product of its coordinates. All pipeline images have this
// shape, which keeps verification exact without touching 2^|G| objects.
struct ProductSubset {
  std::vector<Mask> coord;
  bool operator==(const ProductSubset& o) const { return coord == o.coord; }
};

// Step 1: x -> (phi_e(x))_e into prod H_e^0, phi_e(x) = x*e if e <= x x^-1,
// else the adjoined zero (index |H_e|).
struct H0Embedding {
  std::vector<std::vector<int>> images;
};
H0Embedding embed_into_product_h0(const CliffordDecomposition& d, SgView s);

// Step 2 (one coordinate): H^0 into exp(H~), h -> {h}, 0 -> H~, where H~ is H
// itself when nontrivial and C2 otherwise.
struct H0ExpMap {
  FiniteGroup htilde;
  std::vector<Mask> images;  // |H|+1 entries
};
H0ExpMap embed_h0_into_exp(const FiniteGroup& h);

struct ExpEmbedding {
  ProductGroup group;
  std::vector<ProductSubset> images;
};
ExpEmbedding assemble_exp_embedding(SgView s, long long max_product_order = 1024);

// The measure form of the same pipeline: x maps to the product of uniform
// measures on its coordinate subsets, so supports recover the subset images.
struct MeasureEmbedding {
  ProductGroup group;
  std::vector<std::vector<RationalMeasure>> images;  // element -> one measure per coordinate
};
MeasureEmbedding assemble_measure_embedding(SgView s, long long max_product_order = 1024);

struct VerifyResult {
  bool ok = true;
  std::string detail;
};
// Injectivity plus the homomorphism identity, coordinatewise (exact: subset
// products in a direct product act coordinatewise).
VerifyResult verify_exp_embedding(SgView s, const ExpEmbedding& em);
// Injectivity plus the convolution identity, coordinatewise.
VerifyResult verify_measure_embedding(SgView s, const MeasureEmbedding& em);
// Literal cross-check on the flattened product group (skipped above the
// order bound; the coordinatewise verifiers are the primary path).
VerifyResult verify_exp_embedding_global(SgView s, const ExpEmbedding& em,
                                         long long max_order = 256);

boost::dynamic_bitset<> to_global_bitset(const ProductGroup& g, const ProductSubset& a);
boost::dynamic_bitset<> literal_subset_product(const ProductGroup& g,
                                               const boost::dynamic_bitset<>& a,
                                               const boost::dynamic_bitset<>& b);

// All homomorphisms h -> k as image tables, in lexicographic order.
std::vector<std::vector<int>> all_homs(const FiniteGroup& h, const FiniteGroup& k);

// Seeded generator of strong-semilattice instances: either a divisor-coherent
// poset of cyclic groups or a chain with random linking homomorphisms.
SslgSpec random_clifford_spec(std::mt19937_64& rng, int max_elements = 20,
                              long long max_product_order = 1024);

}  // namespace finsemi
