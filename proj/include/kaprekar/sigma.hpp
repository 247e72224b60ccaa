#pragma once

// sigma(r), the least m >= 1 with 2^m = +-1 (mod r), and the i-cycles that
// govern how interior index components permute under the transformation.

#include <vector>

#include "kaprekar/core.hpp"

namespace kaprekar {

/// r odd, r >= 3.
Count sigma(Count r);

struct ICyclePartition {
  Count modulus = 0;  // B, odd
  /// Each cycle starts at its smallest element; cycles sorted by that element.
  std::vector<std::vector<Count>> cycles;
};

/// Partition of {1, ..., (B-1)/2} under i -> 2i or B - 2i.
ICyclePartition i_cycles(Count top);

/// Doubling with reflection on 0 < i < B (B odd), as used for non-symmetric
/// sigma-cycles.
Count i_successor_nonsym(Count i, Count top);

/// Cycle length of a symmetric or almost-symmetric index predicted from its
/// components along the i-cycles.
std::size_t predicted_symmetric_cycle_length(const KaprekarIndex& k);

}  // namespace kaprekar
