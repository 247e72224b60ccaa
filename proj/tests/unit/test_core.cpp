#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "kaprekar/core.hpp"

using namespace kaprekar;
using testing::idx;

namespace {

DigitString str(int b, const std::string& text) { return DigitString::parse(BaseConfig(b), text); }

DigitString random_string(int b, std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<int> digit(0, b - 1);
  std::vector<Digit> d(n);
  do {
    for (auto& x : d) x = digit(rng);
  } while (std::all_of(d.begin(), d.end(), [&](int x) { return x == d[0]; }));
  return DigitString(BaseConfig(b), d);
}

}  // namespace

TEST_CASE("base config") {
  BaseConfig b6(6);
  CHECK(b6.top() == 5);
  CHECK(b6.half_width() == 2);
  CHECK(2 * b6.half_width() + 1 == b6.top());
  CHECK_THROWS_AS(BaseConfig(1), DomainError);
}

TEST_CASE("index from digits") {
  CHECK(index_from_digits(str(4, "03")) == idx(4, {1, 0, 0, 1}));
  CHECK(index_from_digits(str(8, "25")) == idx(8, {0, 0, 1, 0, 0, 1, 0, 0}));
  auto rep = index_from_digits(str(10, "555"));
  CHECK(rep[5] == 3);
  CHECK(rep.is_repdigit());
  CHECK_THROWS_AS(str(4, "0413"), InvalidDigitError);
  CHECK_THROWS_AS(DigitString(BaseConfig(4), {0, 4}), InvalidDigitError);
}

TEST_CASE("digit strings in large bases") {
  auto s = str(64, "63,0,17");
  CHECK(s.digits() == std::vector<Digit>{63, 0, 17});
  CHECK(s.to_string() == "63,0,17");
  CHECK(str(6, "31533").to_string() == "31533");
}

TEST_CASE("index rejects negative counts") {
  CHECK_THROWS_AS(idx(4, {1, -1, 0, 2}), DomainError);
  CHECK_THROWS_AS(idx(4, {1, 1, 1}), DomainError);
}

TEST_CASE("difference profile") {
  auto p = difference_profile(idx(4, {1, 0, 0, 1}));
  CHECK(p.d == std::vector<Digit>{3});
  CHECK(p.mu == 0);
  CHECK(p.nu == 0);

  auto q = difference_profile(idx(10, {1, 4, 3, 4, 4, 4, 4, 3, 4, 2}));
  for (std::size_t j = 1; j < q.d.size(); ++j) CHECK(q.d[j - 1] >= q.d[j]);
  CHECK(q.d[q.mu] == 1);
  CHECK_THROWS_AS(difference_profile(idx(4, {0, 0, 3, 0})), RepdigitError);
}

TEST_CASE("kaprekar step on indices") {
  CHECK(kaprekar_step(idx(4, {1, 0, 0, 1})) == idx(4, {0, 1, 1, 0}));
  CHECK(kaprekar_step(idx(4, {0, 1, 1, 0})) == idx(4, {1, 0, 0, 1}));
  CHECK(kaprekar_step(idx(10, {1, 4, 3, 4, 4, 4, 4, 3, 4, 2})) == idx(10, {1, 4, 4, 4, 3, 3, 4, 4, 4, 2}));
  CHECK(kaprekar_step(idx(4, {1, 1, 4, 2})) == idx(4, {0, 3, 0, 5}));
  CHECK_THROWS_AS(kaprekar_step(idx(4, {0, 0, 3, 0})), RepdigitError);
}

TEST_CASE("kaprekar step by subtraction") {
  CHECK(kaprekar_step_subtraction(str(4, "22033212")) == str(4, "31333311"));
  CHECK(kaprekar_step_subtraction(str(6, "31533")) == str(6, "35552"));
  CHECK(kaprekar_step_subtraction(str(10, "6174")) == str(10, "6174"));
  CHECK(kaprekar_step_subtraction(str(4, "03")) == str(4, "21"));
  CHECK_THROWS_AS(kaprekar_step_subtraction(str(10, "777")), RepdigitError);
}

TEST_CASE("two paths agree on random strings") {
  std::mt19937 rng(20240611);
  for (int b : {2, 3, 4, 5, 6, 8, 10, 12, 16, 64}) {
    for (int trial = 0; trial < 200; ++trial) {
      std::size_t n = 2 + trial % 23;
      auto s = random_string(b, n, rng);
      auto k = index_from_digits(s);
      auto via_digits = index_from_digits(kaprekar_step_subtraction(s));
      CHECK(via_digits == kaprekar_step(k));
      CHECK(via_digits.digit_count() == k.digit_count());
    }
  }
}

TEST_CASE("successor digit sums are divisible by the top digit") {
  std::mt19937 rng(7);
  CHECK(digit_sum(idx(4, {0, 1, 1, 0})) == 3);
  CHECK(digit_sum(idx(4, {1, 2, 2, 3})) == 15);
  for (int b : {4, 6, 8, 10, 16}) {
    for (int trial = 0; trial < 100; ++trial) {
      auto k = kaprekar_step(index_from_digits(random_string(b, 3 + trial % 17, rng)));
      CHECK(digit_sum(k) % (b - 1) == 0);
      Count interior = 0;
      for (int i = 1; i < b - 1; ++i) interior += i * k[i];
      CHECK(interior % (b - 1) == 0);
    }
  }
}

TEST_CASE("no non-repdigit reaches a repdigit in an even base") {
  std::mt19937 rng(11);
  for (int b : {4, 6, 8, 12}) {
    for (int trial = 0; trial < 200; ++trial) {
      CHECK_FALSE(kaprekar_step(index_from_digits(random_string(b, 2 + trial % 9, rng))).is_repdigit());
    }
  }
}

TEST_CASE("arrangements and value comparison") {
  auto k = idx(4, {1, 2, 0, 1});
  CHECK(descending_string(k) == str(4, "3110"));
  CHECK(ascending_string(k) == str(4, "0113"));
  CHECK(compare_value(str(4, "0312"), str(4, "2013")) == std::strong_ordering::less);
  CHECK(compare_value(str(6, "1554"), str(6, "3043")) == std::strong_ordering::less);
  CHECK(compare_value(str(6, "1554"), str(6, "1554")) == std::strong_ordering::equal);
  CHECK_THROWS_AS(compare_value(str(6, "15"), str(6, "155")), MismatchError);
  CHECK_THROWS_AS(compare_value(str(6, "15"), str(8, "15")), MismatchError);
}

TEST_CASE("index formatting and hashing") {
  auto k = idx(4, {1, 0, 3, 1});
  CHECK(k.to_string() == "(1,0,3,1)");
  CHECK(KaprekarIndexHash{}(k) == KaprekarIndexHash{}(idx(4, {1, 0, 3, 1})));
  CHECK(idx(4, {0, 1, 3, 1}) < k);
}
