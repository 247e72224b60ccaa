#pragma once

// Taxonomy of fixed points and cycles in even bases, with generators for
// the catalogued families in bases 4, 6 and 8.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kaprekar/core.hpp"
#include "kaprekar/orbit.hpp"

namespace kaprekar {

struct SymmetryInfo {
  bool full = false;
  bool symmetric = false;
  bool almost_symmetric = false;
  Count alpha = 0;  // k_B - k_0, degree of asymmetry
  Count beta = 0;   // k_B + k_0
};

SymmetryInfo symmetry_info(const KaprekarIndex& k);

enum class ClassTag {
  SymmetricFP,
  AlmostSymmetricFP,
  UniformZeroFreeFP,
  TriadFP,
  OtherZeroFreeFP,
  SingleParameterFP,
  SpecialFP,
  SymmetricCycle,
  AlmostSymmetricCycle,
  NonSymmetricSigmaCycle,
  SingleParameterCycle,
  SpecialCycle,
  Unclassified,
};

inline constexpr ClassTag kAllClassTags[] = {
    ClassTag::SymmetricFP,          ClassTag::AlmostSymmetricFP,    ClassTag::UniformZeroFreeFP,
    ClassTag::TriadFP,              ClassTag::OtherZeroFreeFP,      ClassTag::SingleParameterFP,
    ClassTag::SpecialFP,            ClassTag::SymmetricCycle,       ClassTag::AlmostSymmetricCycle,
    ClassTag::NonSymmetricSigmaCycle, ClassTag::SingleParameterCycle, ClassTag::SpecialCycle,
    ClassTag::Unclassified,
};

/// Stable kebab-case name ("symmetric-fp", "special-cycle", ...).
std::string to_string(ClassTag tag);
std::optional<ClassTag> class_tag_from_string(const std::string& name);

using FamilyParams = std::vector<std::pair<std::string, Count>>;

struct ClassLabel {
  ClassTag tag = ClassTag::Unclassified;
  /// Sub-family within a tag, e.g. "a"/"b" for base-8 zero-free or "i".."viii"
  /// for base-8 single-parameter cycles. Empty when the tag has one family.
  std::string variant;
  FamilyParams params;
  /// False for [almost-]symmetric fixed points whose interior components are
  /// not all equal.
  bool uniform = true;

  std::optional<Count> param(const std::string& name) const;
  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

class NotAFixedPointError : public Error {
 public:
  using Error::Error;
};

class UnsupportedBaseError : public Error {
 public:
  using Error::Error;
};

ClassLabel classify_fixed_point(const KaprekarIndex& k);

/// Cycles of length >= 2.
ClassLabel classify_cycle(const CycleRecord& cycle);

/// Dispatches on cycle length.
ClassLabel classify(const CycleRecord& cycle);

struct FixedPointEntry {
  DigitString realized;
  KaprekarIndex index;
  ClassLabel label;
};

struct CycleEntry {
  CycleRecord cycle;
  ClassLabel label;
};

/// Every catalogued fixed point with digit-count n, b in {4, 6, 8}.
std::vector<FixedPointEntry> generate_fixed_points(int b, Count n);

/// Every catalogued cycle (length >= 2) with digit-count n, b in {4, 6, 8}.
std::vector<CycleEntry> generate_cycles(int b, Count n);

}  // namespace kaprekar
