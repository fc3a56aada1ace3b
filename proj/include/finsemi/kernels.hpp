#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "finsemi/measure.hpp"

namespace finsemi {
namespace kernels {

// Bulk scans used by the classifiers and the acceptance suite. Each kernel has
// a serial reference and an OpenMP variant; the parallel form writes per-index
// flags and collects them in index order afterwards, so its output is
// identical to the serial one for any thread count (and when OpenMP is absent
// the pragmas vanish and both run serially).

// All regular subsets of G as masks, ascending. Group order <= 24.
std::vector<Mask> regular_subsets_serial(const FiniteGroup& g);
std::vector<Mask> regular_subsets_parallel(const FiniteGroup& g);

// All subgroup masks, ascending. Group order <= 16 (full 2^n scan).
std::vector<Mask> subgroup_masks_serial(const FiniteGroup& g);
std::vector<Mask> subgroup_masks_parallel(const FiniteGroup& g);

// Indices into grid of the idempotent measures (mu*mu = mu), ascending.
std::vector<int> idempotent_grid_serial(const FiniteGroup& g,
                                        const std::vector<RationalMeasure>& grid);
std::vector<int> idempotent_grid_parallel(const FiniteGroup& g,
                                          const std::vector<RationalMeasure>& grid);

// Indices into grid of measures regular against the candidate set: some nu
// among candidates has mu*nu*mu = mu. Ascending.
std::vector<int> regular_grid_serial(const FiniteGroup& g,
                                     const std::vector<RationalMeasure>& grid,
                                     const std::vector<RationalMeasure>& candidates);
std::vector<int> regular_grid_parallel(const FiniteGroup& g,
                                       const std::vector<RationalMeasure>& grid,
                                       const std::vector<RationalMeasure>& candidates);

struct SupportScan {
  long long pairs = 0;                  // pairs checked
  std::pair<int, int> defect{-1, -1};   // first (i,j) with supp(m_i*m_j) != supp(m_i)supp(m_j)
  bool ok() const { return defect.first < 0; }
};
SupportScan support_identity_serial(const FiniteGroup& g,
                                    const std::vector<RationalMeasure>& ms);
SupportScan support_identity_parallel(const FiniteGroup& g,
                                      const std::vector<RationalMeasure>& ms);

// All nonempty subsets of the carrier (given as element indices, <= 20 of
// them) that are closed under the product of s, as bitmasks over carrier
// positions, ascending.
std::vector<std::uint32_t> subsemigroups_serial(SgView s, const std::vector<int>& carrier);
std::vector<std::uint32_t> subsemigroups_parallel(SgView s, const std::vector<int>& carrier);

}  // namespace kernels
}  // namespace finsemi
