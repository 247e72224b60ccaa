#pragma once

#include <vector>

#include "kaprekar/core.hpp"

namespace kaprekar {

/// How the leading member of a cycle is chosen.
enum class MemberOrdering {
  RealizedValue,  // smallest integer actually produced inside the cycle
  IndexLex,       // lexicographically smallest index vector
};

struct Trajectory {
  KaprekarIndex start;
  std::vector<KaprekarIndex> path;  // pre-period followed by one pass round the cycle
  std::size_t preperiod_length = 0;
};

/// A fixed point (length 1) or cycle, rotated so the least member leads.
struct CycleRecord {
  BaseConfig base;
  Count digit_count = 0;
  std::vector<KaprekarIndex> members;
  /// realized[j] is the integer with index members[j] produced by the
  /// subtraction applied to members[j-1].
  std::vector<DigitString> realized;

  std::size_t length() const { return members.size(); }
  bool is_fixed_point() const { return members.size() == 1; }
  const KaprekarIndex& lead() const { return members.front(); }

  friend bool operator==(const CycleRecord&, const CycleRecord&) = default;
};

struct OrbitResult {
  Trajectory trajectory;
  CycleRecord cycle;
};

OrbitResult iterate_to_cycle(const KaprekarIndex& start,
                             MemberOrdering ordering = MemberOrdering::RealizedValue);

/// Members must be consecutive under kaprekar_step and close up.
CycleRecord canonicalize_cycle(std::vector<KaprekarIndex> members,
                               MemberOrdering ordering = MemberOrdering::RealizedValue);

std::size_t cycle_length(const KaprekarIndex& start);

class NotACycleError : public Error {
 public:
  using Error::Error;
};

}  // namespace kaprekar
