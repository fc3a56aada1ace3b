#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "finsemi/semigroup.hpp"

namespace finsemi {

// Upward-closed family of nonempty subsets of a carrier [0,n), stored as the
// sorted antichain of its minimal members. Canonical: equal families have
// equal `mins`.
struct UpFamily {
  int n = 0;
  std::vector<std::uint32_t> mins;

  bool operator==(const UpFamily& o) const { return n == o.n && mins == o.mins; }
  bool operator<(const UpFamily& o) const { return mins < o.mins; }
};

// Builds the up-closure of the given nonempty generator sets.
UpFamily up_closure(int n, std::vector<std::uint32_t> sets);
bool family_contains(const UpFamily& f, std::uint32_t a);
std::string family_to_string(const UpFamily& f);  // "{{0,1},{2}}"

bool is_linked(const UpFamily& f);          // members pairwise intersect
bool is_maximal_linked(const UpFamily& f);  // linked and no proper linked extension

// All maximal linked systems on an n-point carrier, canonically sorted.
std::vector<UpFamily> all_mls(int n);                    // n <= 5
std::vector<UpFamily> all_inclusion_hyperspaces(int n);  // n <= 4

// The lifted product F*G = {C : {x : x^-1 C in G} in F}, x^-1 C = {y : xy in C}.
UpFamily family_product(SgView s, const UpFamily& f, const UpFamily& g);

// Semigroup of all maximal linked systems (resp. all inclusion hyperspaces)
// over the carrier of s under the lifted product. Throws if some product
// falls outside the carrier (cannot happen over groups).
FiniteSemigroup superextension_semigroup(SgView s, std::vector<UpFamily>* carrier = nullptr);
FiniteSemigroup inclusion_hyperspace_semigroup(SgView s, std::vector<UpFamily>* carrier = nullptr);

// Index of the principal ultrafilter <{x}> for each carrier point, i.e. the
// canonical copy of s inside the family semigroup.
std::vector<int> principal_indices(const std::vector<UpFamily>& carrier, int n);

}  // namespace finsemi
