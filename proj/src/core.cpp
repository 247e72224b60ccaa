#include "kaprekar/core.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace kaprekar {

BaseConfig::BaseConfig(int base) : b_(base) {
  if (base < 2) throw DomainError("base must be at least 2, got " + std::to_string(base));
}

// ---------------------------------------------------------------------------

DigitString::DigitString(BaseConfig base, std::vector<Digit> digits)
    : base_(base), digits_(std::move(digits)) {
  if (digits_.empty()) throw DomainError("digit string must have at least one digit");
  for (Digit d : digits_) {
    if (d < 0 || d >= base_.b()) {
      throw InvalidDigitError("digit " + std::to_string(d) + " is not valid in base " +
                              std::to_string(base_.b()));
    }
  }
}

namespace {

Digit parse_digit_value(std::string_view token, int base) {
  auto first = token.find_first_not_of(" \t");
  auto last = token.find_last_not_of(" \t");
  if (first == std::string_view::npos) throw InvalidDigitError("empty digit in list");
  token = token.substr(first, last - first + 1);
  Digit value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw InvalidDigitError("not a digit: '" + std::string(token) + "'");
  }
  if (value < 0 || value >= base) {
    throw InvalidDigitError("digit " + std::to_string(value) + " is not valid in base " +
                            std::to_string(base));
  }
  return value;
}

}  // namespace

DigitString DigitString::parse(BaseConfig base, const std::string& text) {
  std::vector<Digit> digits;
  if (text.find(',') != std::string::npos) {
    std::string_view rest = text;
    while (true) {
      auto comma = rest.find(',');
      digits.push_back(parse_digit_value(rest.substr(0, comma), base.b()));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
  } else if (base.b() <= 10) {
    for (char c : text) {
      if (c == ' ' || c == '\t') continue;
      if (c < '0' || c > '9') throw InvalidDigitError(std::string("not a digit: '") + c + "'");
      Digit d = c - '0';
      if (d >= base.b()) {
        throw InvalidDigitError("digit " + std::to_string(d) + " is not valid in base " +
                                std::to_string(base.b()));
      }
      digits.push_back(d);
    }
  } else {
    // a single value; longer strings in large bases must be comma-separated
    digits.push_back(parse_digit_value(text, base.b()));
  }
  return DigitString(base, std::move(digits));
}

std::string DigitString::to_string() const {
  std::string out;
  if (base_.b() <= 10) {
    for (Digit d : digits_) out.push_back(static_cast<char>('0' + d));
    return out;
  }
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(digits_[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------

KaprekarIndex::KaprekarIndex(BaseConfig base, std::vector<Count> counts)
    : base_(base), counts_(std::move(counts)) {
  if (counts_.size() != static_cast<std::size_t>(base_.b())) {
    throw DomainError("index needs " + std::to_string(base_.b()) + " components, got " +
                      std::to_string(counts_.size()));
  }
  for (Count c : counts_) {
    if (c < 0) throw DomainError("index components must be non-negative");
    n_ += c;
  }
  if (n_ < 1) throw DomainError("index must describe at least one digit");
}

bool KaprekarIndex::is_repdigit() const {
  return std::count_if(counts_.begin(), counts_.end(), [](Count c) { return c > 0; }) == 1;
}

std::string KaprekarIndex::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(counts_[i]);
  }
  out.push_back(')');
  return out;
}

std::size_t KaprekarIndexHash::operator()(const KaprekarIndex& k) const noexcept {
  std::size_t h = static_cast<std::size_t>(k.base().b());
  for (Count c : k.counts()) {
    h ^= std::hash<Count>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------------------

KaprekarIndex index_from_digits(const DigitString& s) {
  std::vector<Count> counts(static_cast<std::size_t>(s.base().b()), 0);
  for (Digit d : s.digits()) ++counts[static_cast<std::size_t>(d)];
  return KaprekarIndex(s.base(), std::move(counts));
}

DigitString descending_string(const KaprekarIndex& k) {
  std::vector<Digit> digits;
  digits.reserve(static_cast<std::size_t>(k.digit_count()));
  for (int i = k.base().top(); i >= 0; --i) {
    digits.insert(digits.end(), static_cast<std::size_t>(k[static_cast<std::size_t>(i)]), i);
  }
  return DigitString(k.base(), std::move(digits));
}

DigitString ascending_string(const KaprekarIndex& k) {
  std::vector<Digit> digits;
  digits.reserve(static_cast<std::size_t>(k.digit_count()));
  for (int i = 0; i <= k.base().top(); ++i) {
    digits.insert(digits.end(), static_cast<std::size_t>(k[static_cast<std::size_t>(i)]), i);
  }
  return DigitString(k.base(), std::move(digits));
}

DifferenceProfile difference_profile(const KaprekarIndex& k) {
  if (k.is_repdigit()) throw RepdigitError("repdigit " + k.to_string() + " has no differences");
  const auto ascending = ascending_string(k).digits();
  const Count n = k.digit_count();
  DifferenceProfile p;
  p.nu = n / 2 - 1;
  p.d.reserve(static_cast<std::size_t>(p.nu + 1));
  for (Count j = 0; j <= p.nu; ++j) {
    Digit d = ascending[static_cast<std::size_t>(n - 1 - j)] - ascending[static_cast<std::size_t>(j)];
    p.d.push_back(d);
    if (d > 0) p.mu = j;
  }
  return p;
}

namespace {

struct Segment {
  Digit d;
  Count length;
};

// Differences d_j for j = 0..nu grouped into runs of equal value, taken from
// the run-length form of the ascending and descending arrangements.
std::vector<Segment> difference_runs(const KaprekarIndex& k) {
  const int top = k.base().top();
  Count positions = k.digit_count() / 2;
  std::vector<Segment> runs;
  int lo = 0;
  int hi = top;
  Count lo_left = k[0];
  Count hi_left = k[static_cast<std::size_t>(top)];
  while (positions > 0) {
    while (lo_left == 0) lo_left = k[static_cast<std::size_t>(++lo)];
    while (hi_left == 0) hi_left = k[static_cast<std::size_t>(--hi)];
    Count len = std::min({lo_left, hi_left, positions});
    Digit d = hi - lo;
    if (!runs.empty() && runs.back().d == d) {
      runs.back().length += len;
    } else {
      runs.push_back({d, len});
    }
    lo_left -= len;
    hi_left -= len;
    positions -= len;
  }
  return runs;
}

}  // namespace

KaprekarIndex kaprekar_step(const KaprekarIndex& k) {
  if (k.is_repdigit()) throw RepdigitError("repdigit " + k.to_string() + " maps to zero");
  const int b = k.base().b();
  const int top = k.base().top();
  const auto runs = difference_runs(k);

  std::vector<Count> next(static_cast<std::size_t>(b), 0);
  Count positive = 0;  // mu + 1
  Digit d_first = runs.front().d;
  Digit d_last = 0;
  for (const auto& run : runs) {
    if (run.d == 0) break;
    next[static_cast<std::size_t>(run.d)] += run.length;        // left section
    next[static_cast<std::size_t>(top - run.d)] += run.length;  // right section
    positive += run.length;
    d_last = run.d;
  }
  // d_mu - 1 replaces d_mu on the left, b - d_0 replaces B - d_0 on the right
  --next[static_cast<std::size_t>(d_last)];
  ++next[static_cast<std::size_t>(d_last - 1)];
  --next[static_cast<std::size_t>(top - d_first)];
  ++next[static_cast<std::size_t>(b - d_first)];
  next[static_cast<std::size_t>(top)] += k.digit_count() - 2 * positive;
  return KaprekarIndex(k.base(), std::move(next));
}

DigitString kaprekar_step_subtraction(const DigitString& s) {
  std::vector<Digit> descending = s.digits();
  std::sort(descending.begin(), descending.end(), std::greater<>());
  if (descending.front() == descending.back()) {
    throw RepdigitError("repdigit " + s.to_string() + " maps to zero");
  }
  std::vector<Digit> ascending(descending.rbegin(), descending.rend());
  const int b = s.base().b();
  std::vector<Digit> result(descending.size());
  int borrow = 0;
  for (std::size_t pos = descending.size(); pos-- > 0;) {
    int diff = descending[pos] - ascending[pos] - borrow;
    borrow = diff < 0 ? 1 : 0;
    result[pos] = diff + borrow * b;
  }
  return DigitString(s.base(), std::move(result));
}

Count digit_sum(const KaprekarIndex& k) {
  Count sum = 0;
  for (std::size_t i = 0; i < k.counts().size(); ++i) sum += static_cast<Count>(i) * k[i];
  return sum;
}

std::strong_ordering compare_value(const DigitString& a, const DigitString& b) {
  if (!(a.base() == b.base())) throw MismatchError("cannot compare strings in different bases");
  if (a.length() != b.length()) throw MismatchError("cannot compare strings of different lengths");
  return a.digits() <=> b.digits();
}

}  // namespace kaprekar
