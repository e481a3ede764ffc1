#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "arfbetti/divisor_complex.hpp"
#include "arfbetti/semigroup.hpp"

namespace arfbetti::detail {

// classify_all_rows without the face lists, for the sweep.
struct RowTally {
  int i = 0;
  std::array<std::size_t, 4> by_kind{};
  std::size_t matched = 0;
  std::vector<FaceMask> unclassified;
};

std::vector<RowTally> tally_all_rows(const NumericalSemigroup& S, const NumericalSemigroup& blowup,
                                     Element s);

}  // namespace arfbetti::detail
