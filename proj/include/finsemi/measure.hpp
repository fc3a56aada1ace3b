#pragma once

#include <optional>
#include <string>
#include <vector>

#include "finsemi/hyper.hpp"

namespace finsemi {

// Exact rational probability distribution on a group carrier.
struct RationalMeasure {
  int n = 0;
  std::vector<Rat> w;

  bool operator==(const RationalMeasure& o) const { return n == o.n && w == o.w; }
  bool operator<(const RationalMeasure& o) const { return w < o.w; }
};

RationalMeasure make_measure(int n, std::vector<Rat> w);  // validates mass = 1, nonneg
RationalMeasure delta(int n, int g);
RationalMeasure uniform_on(int n, Mask a);

RationalMeasure convolve(const FiniteGroup& g, const RationalMeasure& mu,
                         const RationalMeasure& nu);
// Straight rational double loop, kept as the test oracle for the fast path.
RationalMeasure convolve_reference(const FiniteGroup& g, const RationalMeasure& mu,
                                   const RationalMeasure& nu);

Mask support(const RationalMeasure& mu);

// Haar classification: idempotent iff uniform on a subgroup.
std::optional<Subgroup> classify_idempotent_measure(const FiniteGroup& g,
                                                    const RationalMeasure& mu);

struct RegularMeasureWitness {
  Subgroup h;
  int shift = 0;  // mu = uniform on H*shift
};
std::optional<RegularMeasureWitness> classify_regular_measure(const FiniteGroup& g,
                                                              const RationalMeasure& mu);

// The unique nu with mu*nu*mu = mu and nu*mu*nu = nu: x^-1 * uniform(H).
RationalMeasure measure_inverse(const FiniteGroup& g, const RationalMeasure& mu);

RationalMeasure translate_left(const FiniteGroup& g, int x, const RationalMeasure& mu);
RationalMeasure translate_right(const FiniteGroup& g, const RationalMeasure& mu, int x);

// All coset-uniform measures = the regular elements of the convolution
// semigroup, sorted by weight vector.
std::vector<RationalMeasure> regular_measures(const FiniteGroup& g);

// Every weight vector with common denominator <= max_den (deduplicated).
std::vector<RationalMeasure> measure_grid(int n, int max_den);

struct SupportIsoReport {
  int measures = 0, subsets = 0;
  bool bijective = false;
  bool homomorphic = false;    // supp(mu*nu) = supp(mu)supp(nu) on regular pairs
  std::pair<int, int> defect{-1, -1};  // offending pair when not homomorphic
};
SupportIsoReport support_iso_check(const FiniteGroup& g);

// Two-sided invariant measures among regular + grid measures; the carrier
// matches how the uniqueness claim is verified.
std::vector<RationalMeasure> invariant_measures(const FiniteGroup& g, int grid_den);

RationalMeasure parse_measure(const std::string& text, int n);
std::string serialize_measure(const RationalMeasure& mu);
// One-line display "1: 1/2, 3: 1/2" for reports.
std::string measure_to_string(const RationalMeasure& mu);

}  // namespace finsemi
