#include "kaprekar/bfile.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace kaprekar {

namespace {

bool is_integer(const std::string& token) {
  std::size_t start = token.size() > 1 && token[0] == '-' ? 1 : 0;
  if (start == token.size()) return false;
  return std::all_of(token.begin() + static_cast<std::ptrdiff_t>(start), token.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

BFile BFile::parse(std::istream& in) {
  BFile file;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string index, value, rest;
    fields >> index >> value;
    if (value.empty()) throw ParseError(number, "expected two fields");
    if (fields >> rest) throw ParseError(number, "unexpected trailing field '" + rest + "'");
    if (!is_integer(index)) throw ParseError(number, "index '" + index + "' is not an integer");
    if (!is_integer(value)) throw ParseError(number, "value '" + value + "' is not an integer");
    Count parsed = 0;
    try {
      parsed = std::stoll(index);
    } catch (const std::out_of_range&) {
      throw ParseError(number, "index out of range");
    }
    if (!file.entries.empty() && parsed <= file.entries.back().index) {
      throw ParseError(number, "index " + index + " does not increase");
    }
    file.entries.push_back(BFileEntry{parsed, value});
  }
  return file;
}

BFile BFile::parse_text(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

BFile BFile::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse(in);
}

std::string to_decimal(const DigitString& s) {
  // little-endian base-10^9 limbs
  constexpr std::uint64_t kLimb = 1'000'000'000;
  std::vector<std::uint64_t> limbs{0};
  const std::uint64_t b = static_cast<std::uint64_t>(s.base().b());
  for (Digit d : s.digits()) {
    std::uint64_t carry = static_cast<std::uint64_t>(d);
    for (auto& limb : limbs) {
      std::uint64_t v = limb * b + carry;
      limb = v % kLimb;
      carry = v / kLimb;
    }
    while (carry > 0) {
      limbs.push_back(carry % kLimb);
      carry /= kLimb;
    }
  }
  std::string out = std::to_string(limbs.back());
  for (auto it = limbs.rbegin() + 1; it != limbs.rend(); ++it) {
    std::string part = std::to_string(*it);
    out += std::string(9 - part.size(), '0') + part;
  }
  return out;
}

std::string strip_leading_zeros(const DigitString& s) {
  const auto& digits = s.digits();
  auto first = std::find_if(digits.begin(), digits.end(), [](Digit d) { return d != 0; });
  if (first == digits.end()) return "0";
  std::vector<Digit> kept(first, digits.end());
  return DigitString(s.base(), std::move(kept)).to_string();
}

}  // namespace kaprekar
