#pragma once

#include <random>
#include <vector>

#include "kaprekar/core.hpp"

namespace testing {

using kaprekar::BaseConfig;
using kaprekar::Count;
using kaprekar::KaprekarIndex;

inline KaprekarIndex idx(int b, std::vector<Count> counts) { return KaprekarIndex(BaseConfig(b), std::move(counts)); }

/// Full mirror-equal index; alpha = 0 gives a symmetric index, alpha > 0 an
/// almost-symmetric one.
inline KaprekarIndex random_mirror_index(int b, std::mt19937& rng, Count alpha, Count max_component = 6) {
  std::uniform_int_distribution<Count> comp(1, max_component);
  std::vector<Count> k(b);
  for (int i = 1; i <= (b - 2) / 2; ++i) k[i] = k[b - 1 - i] = comp(rng);
  Count interior_min = max_component;
  for (int i = 1; i < b - 1; ++i) interior_min = std::min(interior_min, k[i]);
  if (alpha >= interior_min) {
    for (int i = 1; i < b - 1; ++i) k[i] += alpha;
  }
  k[0] = comp(rng);
  k[b - 1] = k[0] + alpha;
  return idx(b, k);
}

}  // namespace testing
