#pragma once

// OEIS b-file reader: "<index> <value>" lines, '#' comments, blank lines.

#include <iosfwd>
#include <string>
#include <vector>

#include "kaprekar/core.hpp"

namespace kaprekar {

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct BFileEntry {
  Count index;
  std::string value;  // decimal, possibly wider than 64 bits
};

struct BFile {
  std::vector<BFileEntry> entries;

  static BFile parse(std::istream& in);
  static BFile parse_text(const std::string& text);
  static BFile load(const std::string& path);
};

/// Decimal form of a base-b digit string (leading zeros dropped).
std::string to_decimal(const DigitString& s);

/// Digits of s with leading zeros dropped ("0" for zero).
std::string strip_leading_zeros(const DigitString& s);

}  // namespace kaprekar
