#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "kaprekar/orbit.hpp"
#include "kaprekar/sigma.hpp"

using namespace kaprekar;
using testing::idx;

TEST_CASE("iterate to a fixed point") {
  auto r = iterate_to_cycle(idx(4, {1, 2, 2, 2}));
  CHECK(r.cycle.is_fixed_point());
  CHECK(r.trajectory.preperiod_length == 0);
  CHECK(r.cycle.lead() == idx(4, {1, 2, 2, 2}));
}

TEST_CASE("iterate through a pre-period") {
  auto r = iterate_to_cycle(idx(4, {1, 1, 1, 2}));
  CHECK(r.cycle.length() == 2);
  CHECK(r.trajectory.preperiod_length == 3);
  CHECK(r.trajectory.path[1] == idx(4, {0, 3, 0, 2}));
  CHECK(r.trajectory.path[2] == idx(4, {0, 2, 2, 1}));
  CHECK(r.trajectory.path[3] == idx(4, {1, 0, 3, 1}));
  CHECK(r.cycle.lead() == idx(4, {1, 0, 3, 1}));
  CHECK(r.cycle.members[1] == idx(4, {0, 1, 1, 3}));
  CHECK(r.cycle.realized.front().to_string() == "20322");
  CHECK(iterate_to_cycle(idx(4, {1, 1, 1, 2})).cycle == r.cycle);
}

TEST_CASE("cycle lengths of worked examples") {
  CHECK(cycle_length(idx(6, {0, 1, 0, 0, 1, 2})) == 6);
  CHECK(cycle_length(idx(10, {1, 4, 3, 4, 4, 4, 4, 3, 4, 2})) == 3);
  CHECK(cycle_length(idx(10, {1, 4, 4, 3, 4, 4, 3, 4, 4, 2})) == 1);
  CHECK(cycle_length(idx(8, {1, 0, 2, 2, 2, 1, 2, 2})) == 4);
  CHECK_THROWS_AS(cycle_length(idx(4, {0, 0, 0, 5})), RepdigitError);
}

TEST_CASE("canonicalize rotates to the least realized member") {
  auto c = canonicalize_cycle({idx(4, {0, 1, 1, 3}), idx(4, {1, 0, 3, 1})});
  CHECK(c.lead() == idx(4, {1, 0, 3, 1}));
  CHECK(c.realized[0].to_string() == "20322");
  CHECK(c.realized[1].to_string() == "23331");

  auto fp = canonicalize_cycle({idx(4, {1, 2, 2, 2})});
  CHECK(fp.is_fixed_point());

  auto special = iterate_to_cycle(idx(4, {0, 3, 0, 5})).cycle;
  CHECK(special.lead() == idx(4, {1, 1, 4, 2}));
  CHECK(special.realized.front().to_string() == "22033212");
}

TEST_CASE("canonicalize rejects non-cycles") {
  CHECK_THROWS_AS(canonicalize_cycle({}), NotACycleError);
  CHECK_THROWS_AS(canonicalize_cycle({idx(4, {1, 1, 1, 2})}), NotACycleError);
  CHECK_THROWS_AS(canonicalize_cycle({idx(4, {0, 1, 1, 0}), idx(4, {1, 0, 0, 1}), idx(4, {0, 1, 1, 0})}),
                  NotACycleError);
}

TEST_CASE("index ordering option") {
  auto by_value = iterate_to_cycle(idx(6, {0, 1, 0, 0, 1, 2}), MemberOrdering::RealizedValue).cycle;
  auto by_index = iterate_to_cycle(idx(6, {0, 1, 0, 0, 1, 2}), MemberOrdering::IndexLex).cycle;
  CHECK(by_value.realized.front().to_string() == "1554");
  for (const auto& m : by_index.members) CHECK_FALSE(m < by_index.lead());
}

TEST_CASE("symmetric starts stay in their class and respect sigma") {
  std::mt19937 rng(5);
  for (int b : {4, 6, 8, 10, 12, 14, 16, 64}) {
    for (int trial = 0; trial < 40; ++trial) {
      Count alpha = trial % 2 == 0 ? 0 : 1 + trial % 3;
      auto k = testing::random_mirror_index(b, rng, alpha);
      auto r = iterate_to_cycle(k);
      CHECK(r.trajectory.preperiod_length == 0);
      for (const auto& m : r.cycle.members) {
        CHECK(m[0] == k[0]);
        CHECK(m[b - 1] == k[b - 1]);
        for (int i = 1; i < b - 1; ++i) CHECK(m[i] == m[b - 1 - i]);
      }
      CHECK(static_cast<Count>(sigma(b - 1)) % static_cast<Count>(r.cycle.length()) == 0);
      CHECK(predicted_symmetric_cycle_length(k) == r.cycle.length());
    }
  }
}

TEST_CASE("large zero counts stay constant around cycles") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<Count> comp(0, 4);
  for (int b : {4, 6, 8}) {
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Count> k(b);
      for (auto& x : k) x = comp(rng);
      k[0] += 2;
      k[b - 1] += 1;
      auto c = iterate_to_cycle(idx(b, k)).cycle;
      bool big = std::any_of(c.members.begin(), c.members.end(), [](const KaprekarIndex& m) { return m[0] > 1; });
      if (!big) continue;
      for (const auto& m : c.members) CHECK(m[0] == c.lead()[0]);
    }
  }
}
