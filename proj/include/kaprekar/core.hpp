#pragma once

// Digit strings, Kaprekar indices and the Kaprekar transformation T_{b,n}.
//
// A state of the dynamics is the multiset of digits of an n-digit base-b
// integer (leading zeros allowed). Two independent routes compute one step:
//   kaprekar_step             works on the index via run-length differences,
//   kaprekar_step_subtraction works on an explicit digit string by schoolbook
//                             subtraction of the ascending from the descending
//                             arrangement.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kaprekar {

using Count = std::int64_t;
using Digit = int;

// ---------------------------------------------------------------------------
// Errors

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidDigitError : public Error {
 public:
  using Error::Error;
};

/// Raised when the transformation is applied to a repdigit (T(x) = 0).
class RepdigitError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class MismatchError : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Types

class BaseConfig {
 public:
  explicit BaseConfig(int base);

  int b() const { return b_; }
  /// Top digit b-1.
  int top() const { return b_ - 1; }
  /// (b-2)/2 for even b, 0 for odd b.
  int half_width() const { return b_ % 2 == 0 ? (b_ - 2) / 2 : 0; }
  bool even() const { return b_ % 2 == 0; }

  friend bool operator==(const BaseConfig&, const BaseConfig&) = default;

 private:
  int b_;
};

/// Fixed-length digit string, most significant digit first.
class DigitString {
 public:
  DigitString(BaseConfig base, std::vector<Digit> digits);

  /// Parses "2022" (bases up to 10) or "31,5,0" (any base).
  static DigitString parse(BaseConfig base, const std::string& text);

  const BaseConfig& base() const { return base_; }
  const std::vector<Digit>& digits() const { return digits_; }
  std::size_t length() const { return digits_.size(); }

  /// Plain digits for b <= 10, comma-separated decimal values otherwise.
  std::string to_string() const;

  friend bool operator==(const DigitString&, const DigitString&) = default;

 private:
  BaseConfig base_;
  std::vector<Digit> digits_;
};

/// Digit counts (k_0, ..., k_{b-1}) of an n-digit string.
class KaprekarIndex {
 public:
  KaprekarIndex(BaseConfig base, std::vector<Count> counts);

  const BaseConfig& base() const { return base_; }
  const std::vector<Count>& counts() const { return counts_; }
  Count operator[](std::size_t i) const { return counts_[i]; }
  Count digit_count() const { return n_; }
  bool is_repdigit() const;

  /// "(1,0,3,1)"
  std::string to_string() const;

  friend bool operator==(const KaprekarIndex& a, const KaprekarIndex& b) {
    return a.base_ == b.base_ && a.counts_ == b.counts_;
  }
  /// Lexicographic on the count vector.
  friend std::strong_ordering operator<=>(const KaprekarIndex& a, const KaprekarIndex& b) {
    return a.counts_ <=> b.counts_;
  }

 private:
  BaseConfig base_;
  std::vector<Count> counts_;
  Count n_ = 0;
};

struct KaprekarIndexHash {
  std::size_t operator()(const KaprekarIndex& k) const noexcept;
};

struct DifferenceProfile {
  std::vector<Digit> d;  // d_0 >= d_1 >= ... >= d_nu
  Count mu = 0;          // last j with d_j > 0
  Count nu = 0;          // floor(n/2) - 1
};

// ---------------------------------------------------------------------------
// Operations

KaprekarIndex index_from_digits(const DigitString& s);

/// The arrangement of k's digits in descending (or ascending) order.
DigitString descending_string(const KaprekarIndex& k);
DigitString ascending_string(const KaprekarIndex& k);

DifferenceProfile difference_profile(const KaprekarIndex& k);

KaprekarIndex kaprekar_step(const KaprekarIndex& k);

DigitString kaprekar_step_subtraction(const DigitString& s);

Count digit_sum(const KaprekarIndex& k);

/// Numeric order of two equal-length strings in the same base.
std::strong_ordering compare_value(const DigitString& a, const DigitString& b);

}  // namespace kaprekar
