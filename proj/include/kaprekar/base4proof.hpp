#pragma once

// Base-4 succession table: closed-form successors grouped into cases A..G
// by which components vanish, and an exhaustive replay of the completeness
// argument built on it.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kaprekar/core.hpp"

namespace kaprekar::base4 {

using Components = std::array<Count, 4>;

struct SuccessionCase {
  std::string id;  // "A(i)" .. "G(xv)"
  bool (*guard)(const Components&);
  Components (*formula)(const Components&);
};

/// The 44 cases in table order.
const std::vector<SuccessionCase>& succession_cases();

/// k_0 > k_3 > 0, or k_0 > 1 with k_3 = 0. Such indices are never fixed
/// points or cycle members and carry no case.
bool is_excluded(const KaprekarIndex& k);

class ExcludedIndexError : public Error {
 public:
  using Error::Error;
};

/// The unique case whose guard holds, or nullopt when k is excluded.
/// Throws DomainError for repdigits or bases other than 4.
std::optional<SuccessionCase> match_case(const KaprekarIndex& k);

/// Every case whose guard holds, ignoring table order.
std::vector<std::string> matching_cases(const KaprekarIndex& k);

KaprekarIndex formula_successor(const KaprekarIndex& k);

struct ReplayReport {
  Count n_max = 0;
  Count states = 0;
  Count excluded_states = 0;
  Count formula_mismatches = 0;
  Count overlapping_guards = 0;
  Count uncovered = 0;
  Count gap_violations = 0;
  /// How often each case appears among cycle and fixed-point members.
  std::map<std::string, Count> cases_on_cycles;
  /// Cycles of length > 1 whose members are all full.
  Count full_cycles = 0;
  /// Cycles of length > 1 with a full member but no B(iv) member with k_0 = 1.
  Count full_member_cycles_without_entry = 0;
  Count excluded_on_cycles = 0;
  Count unclassified = 0;
  Count catalogue_discrepancies = 0;

  bool ok() const {
    return formula_mismatches == 0 && overlapping_guards == 0 && uncovered == 0 && gap_violations == 0 &&
           full_cycles == 0 && full_member_cycles_without_entry == 0 && excluded_on_cycles == 0 && unclassified == 0 &&
           catalogue_discrepancies == 0;
  }
};

/// Exhausts every non-repdigit base-4 index with 2 <= n <= n_max.
ReplayReport replay_exhaustion(Count n_max);

}  // namespace kaprekar::base4
