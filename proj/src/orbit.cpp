#include "kaprekar/orbit.hpp"

#include <algorithm>
#include <unordered_map>

namespace kaprekar {

OrbitResult iterate_to_cycle(const KaprekarIndex& start, MemberOrdering ordering) {
  if (start.is_repdigit()) throw RepdigitError("repdigit " + start.to_string() + " maps to zero");
  std::unordered_map<KaprekarIndex, std::size_t, KaprekarIndexHash> seen;
  std::vector<KaprekarIndex> path;
  KaprekarIndex current = start;
  while (true) {
    auto [it, inserted] = seen.emplace(current, path.size());
    if (!inserted) {
      std::size_t entry = it->second;
      std::vector<KaprekarIndex> members(path.begin() + static_cast<std::ptrdiff_t>(entry), path.end());
      Trajectory trajectory{start, std::move(path), entry};
      return {std::move(trajectory), canonicalize_cycle(std::move(members), ordering)};
    }
    path.push_back(current);
    current = kaprekar_step(current);
  }
}

CycleRecord canonicalize_cycle(std::vector<KaprekarIndex> members, MemberOrdering ordering) {
  if (members.empty()) throw NotACycleError("empty member list");
  const std::size_t l = members.size();
  for (std::size_t j = 0; j < l; ++j) {
    if (!(kaprekar_step(members[j]) == members[(j + 1) % l])) {
      throw NotACycleError("member " + members[j].to_string() + " does not map to " +
                           members[(j + 1) % l].to_string());
    }
  }
  {
    auto sorted = members;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw NotACycleError("cycle members repeat");
    }
  }

  std::vector<DigitString> realized;
  realized.reserve(l);
  for (std::size_t j = 0; j < l; ++j) {
    realized.push_back(kaprekar_step_subtraction(descending_string(members[(j + l - 1) % l])));
  }

  std::size_t best = 0;
  for (std::size_t j = 1; j < l; ++j) {
    bool smaller = ordering == MemberOrdering::RealizedValue
                       ? compare_value(realized[j], realized[best]) < 0
                       : members[j] < members[best];
    if (smaller) best = j;
  }
  std::rotate(members.begin(), members.begin() + static_cast<std::ptrdiff_t>(best), members.end());
  std::rotate(realized.begin(), realized.begin() + static_cast<std::ptrdiff_t>(best), realized.end());

  const BaseConfig base = members.front().base();
  const Count n = members.front().digit_count();
  return CycleRecord{base, n, std::move(members), std::move(realized)};
}

std::size_t cycle_length(const KaprekarIndex& start) {
  return iterate_to_cycle(start).cycle.length();
}

}  // namespace kaprekar
