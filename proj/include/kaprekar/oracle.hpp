#pragma once

// Exhaustive census of the functional graph of T_{b,n} on Kaprekar indices.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kaprekar/classifier.hpp"
#include "kaprekar/core.hpp"
#include "kaprekar/enumeration.hpp"
#include "kaprekar/orbit.hpp"

namespace kaprekar {

class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

inline constexpr Count kDefaultBudget = 50'000'000;

/// KAPREKAR_BUDGET if set and valid, else kDefaultBudget.
Count budget_from_environment();

/// Number of compositions of n into b non-negative parts, saturating at
/// INT64_MAX.
Count composition_count(int b, Count n);

/// Position of k in colex order of compositions (repdigits included).
Count composition_rank(const KaprekarIndex& k);
KaprekarIndex composition_unrank(int b, Count n, Count rank);

/// Visits every non-repdigit index with rank in [begin, end) in colex order.
/// end < 0 means through the last composition.
void for_each_index(int b, Count n, const std::function<void(const KaprekarIndex&)>& visit, Count begin = 0,
                    Count end = -1);

std::vector<KaprekarIndex> enumerate_indices(int b, Count n);

struct SurveyOptions {
  Count budget = kDefaultBudget;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned workers = 0;
  MemberOrdering ordering = MemberOrdering::RealizedValue;
};

struct SurveyEntry {
  CycleRecord cycle;
  ClassLabel label;
  Count basin = 0;  // states whose orbit ends in this cycle, members included

  friend bool operator==(const SurveyEntry&, const SurveyEntry&) = default;
};

struct SurveyReport {
  int base = 0;
  Count digit_count = 0;
  /// Sorted by the realized value of each lead member.
  std::vector<SurveyEntry> entries;
  Count total_states = 0;
  /// States whose orbit reaches a repdigit and then zero; odd bases only.
  Count to_zero = 0;
  std::optional<CycleRecord> unanimous;
  Count unclassified_count = 0;

  friend bool operator==(const SurveyReport&, const SurveyReport&) = default;
};

SurveyReport survey(int b, Count n, const SurveyOptions& options = {});

struct CountMismatch {
  ClassTag tag;
  Count expected;
  Count observed;
};

struct LabelMismatch {
  CycleRecord cycle;
  ClassLabel expected;
  ClassLabel observed;
};

struct CatalogueDiff {
  int base = 0;
  Count digit_count = 0;
  std::vector<CycleRecord> missing;  // catalogued but not found
  std::vector<CycleRecord> extra;    // found but not catalogued
  std::vector<LabelMismatch> label_mismatches;
  std::vector<CountMismatch> count_mismatches;
  Count unclassified = 0;

  bool empty() const {
    return missing.empty() && extra.empty() && label_mismatches.empty() && count_mismatches.empty();
  }
};

CatalogueDiff verify_against_catalogue(int b, Count n, const SurveyOptions& options = {});
CatalogueDiff verify_against_catalogue(const SurveyReport& report);

/// Observed per-class counts.
ClassCounts class_counts(const SurveyReport& report);

struct Violation {
  std::string property;
  KaprekarIndex state;
  std::string detail;
};

/// Checks the successor identities on every state of an even base and the
/// cycle-level properties on every cycle. Empty when all hold.
std::vector<Violation> property_sweep(int b, Count n, const SurveyOptions& options = {});

}  // namespace kaprekar
