#include "kaprekar/sigma.hpp"

#include <algorithm>

#include "kaprekar/classifier.hpp"

namespace kaprekar {

Count sigma(Count r) {
  if (r < 3 || r % 2 == 0) {
    throw DomainError("sigma is defined for odd r >= 3, got " + std::to_string(r));
  }
  Count power = 2 % r;
  for (Count m = 1;; ++m) {
    if (power == 1 || power == r - 1) return m;
    power = (power * 2) % r;
  }
}

ICyclePartition i_cycles(Count top) {
  if (top < 3 || top % 2 == 0) {
    throw DomainError("i-cycles need an odd modulus >= 3, got " + std::to_string(top));
  }
  const Count half = (top - 1) / 2;
  std::vector<bool> used(static_cast<std::size_t>(half + 1), false);
  ICyclePartition partition{top, {}};
  for (Count start = 1; start <= half; ++start) {
    if (used[static_cast<std::size_t>(start)]) continue;
    std::vector<Count> cycle;
    Count i = start;
    do {
      used[static_cast<std::size_t>(i)] = true;
      cycle.push_back(i);
      i = 2 * i < top - 2 * i ? 2 * i : top - 2 * i;
    } while (i != start);
    partition.cycles.push_back(std::move(cycle));
  }
  return partition;
}

Count i_successor_nonsym(Count i, Count top) {
  if (top < 3 || top % 2 == 0) throw DomainError("modulus must be odd and >= 3");
  if (i <= 0 || i >= top) {
    throw DomainError("i-successor needs 0 < i < " + std::to_string(top) + ", got " + std::to_string(i));
  }
  // compare 4i against B, 2B, 3B to stay in integers; B odd so no ties
  if (4 * i < top) return 2 * i;
  if (4 * i < 2 * top) return top - 2 * i;
  if (4 * i < 3 * top) return 2 * top - 2 * i;
  return 2 * i - top;
}

std::size_t predicted_symmetric_cycle_length(const KaprekarIndex& k) {
  const auto info = symmetry_info(k);
  if (!info.symmetric && !info.almost_symmetric) {
    throw DomainError(k.to_string() + " is neither symmetric nor almost-symmetric");
  }
  const Count top = k.base().top();
  const auto partition = i_cycles(top);
  const Count period = sigma(top);
  for (Count p = 1; p <= period; ++p) {
    bool repeats = std::all_of(partition.cycles.begin(), partition.cycles.end(), [&](const auto& cycle) {
      const std::size_t len = cycle.size();
      for (std::size_t m = 0; m < len; ++m) {
        auto shifted = cycle[(m + static_cast<std::size_t>(p)) % len];
        if (k[static_cast<std::size_t>(shifted)] != k[static_cast<std::size_t>(cycle[m])]) return false;
      }
      return true;
    });
    if (repeats) return static_cast<std::size_t>(p);
  }
  return static_cast<std::size_t>(period);  // unreachable: every i-cycle length divides sigma(B)
}

}  // namespace kaprekar
