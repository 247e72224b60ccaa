#include <algorithm>
#include <functional>
#include <set>

#include "doctest.h"
#include "kaprekar/classifier.hpp"
#include "kaprekar/enumeration.hpp"

using namespace kaprekar;

namespace {

// Rotation classes of positive C-tuples summing to omega, constant class excluded.
Count brute_n_gamma(Count C, Count omega) {
  std::set<std::vector<Count>> classes;
  std::vector<Count> t(C);
  std::function<void(Count, Count)> fill = [&](Count pos, Count left) {
    if (pos == C - 1) {
      if (left < 1) return;
      t[pos] = left;
      if (std::all_of(t.begin(), t.end(), [&](Count x) { return x == t[0]; })) return;
      auto best = t;
      auto r = t;
      for (Count s = 1; s < C; ++s) {
        std::rotate(r.begin(), r.begin() + 1, r.end());
        best = std::min(best, r);
      }
      classes.insert(best);
      return;
    }
    for (Count v = 1; v <= left - (C - 1 - pos); ++v) {
      t[pos] = v;
      fill(pos + 1, left - v);
    }
  };
  fill(0, omega);
  return static_cast<Count>(classes.size());
}

Count tagged(const std::vector<FixedPointEntry>& fps, ClassTag tag, const std::string& variant = {}) {
  return std::count_if(fps.begin(), fps.end(), [&](const FixedPointEntry& e) {
    return e.label.tag == tag && (variant.empty() || e.label.variant == variant);
  });
}

}  // namespace

TEST_CASE("rotation class counts") {
  CHECK(n_gamma_tilde(4, 10) == 84);
  CHECK(n_gamma(4, 10) == 22);
  CHECK(n_gamma(3, 4) == 1);
  CHECK(n_k_gamma(3, 6) == 3);
  CHECK_THROWS_AS(n_gamma(0, 4), DomainError);
}

TEST_CASE("rotation class counts match brute force") {
  for (Count C = 1; C <= 6; ++C) {
    for (Count omega = 1; omega <= 30; ++omega) {
      CHECK_MESSAGE(n_gamma(C, omega) == brute_n_gamma(C, omega), "C=" << C << " omega=" << omega);
    }
  }
}

TEST_CASE("closed forms equal their defining sums") {
  for (int b : {4, 6, 8}) {
    for (Count n = 2; n <= 200; n += 2) {
      CHECK(count_sa_fp(b, n) == count_symmetric_fp(b, n) + count_almost_symmetric_fp(b, n));
      CHECK(count_sac_cycles_closed_form(b, n) == count_sac_cycles(b, n));
    }
  }
  CHECK_THROWS_AS(count_sa_fp(6, 7), DomainError);
  CHECK_THROWS_AS(count_sa_fp(10, 8), UnsupportedBaseError);
}

TEST_CASE("shift identities for odd digit-counts") {
  for (int b : {4, 6, 8}) {
    const Count B = b - 1;
    for (Count n = 1; n <= 200; n += 2) {
      CHECK(count_almost_symmetric_fp(b, n + B) == count_almost_symmetric_fp(b, n));
      if (n - B >= 1) {
        CHECK(count_sa_fp(b, n - B) == count_almost_symmetric_fp(b, n));
        CHECK(count_sac_cycles(b, n - B) == count_almost_symmetric_cycles(b, n));
      }
      CHECK(count_almost_symmetric_cycles(b, n + B) == count_almost_symmetric_cycles(b, n));
    }
  }
}

TEST_CASE("cycle formulas need a single i-cycle") {
  CHECK_THROWS_AS(count_sac_cycles(10, 12), UnsupportedBaseError);
  CHECK_NOTHROW(count_sac_cycles(12, 12));
  CHECK_THROWS_AS(count_symmetric_fp(7, 12), DomainError);
  CHECK(count_sac_cycles_closed_form(4, 20) == 0);
}

TEST_CASE("catalogue counts agree with the generators") {
  for (int b : {4, 6, 8}) {
    for (Count n = 2; n <= 30; ++n) {
      ClassCounts generated;
      for (const auto& fp : generate_fixed_points(b, n)) ++generated[fp.label.tag];
      for (const auto& c : generate_cycles(b, n)) ++generated[c.label.tag];
      CHECK_MESSAGE(count_catalogue(b, n) == generated, "b=" << b << " n=" << n);
    }
  }
}

TEST_CASE("family counts agree with the generators") {
  for (Count n = 2; n <= 40; ++n) {
    auto b4 = generate_fixed_points(4, n);
    CHECK(count_total_fixed_points_base4(n) == static_cast<Count>(b4.size()));
    CHECK(count_zero_free(4, n) == tagged(b4, ClassTag::TriadFP));

    auto b6 = generate_fixed_points(6, n);
    CHECK(count_zero_free(6, n) == tagged(b6, ClassTag::TriadFP) + tagged(b6, ClassTag::UniformZeroFreeFP) +
                                       tagged(b6, ClassTag::OtherZeroFreeFP));

    auto b8 = generate_fixed_points(8, n);
    CHECK(count_zero_free(8, n) ==
          tagged(b8, ClassTag::UniformZeroFreeFP) + tagged(b8, ClassTag::OtherZeroFreeFP, "a"));
    CHECK(count_zero_free_class_b(n) == tagged(b8, ClassTag::OtherZeroFreeFP, "b"));

    for (int b : {6, 8}) {
      auto cycles = generate_cycles(b, n);
      Count sigma_cycles = std::count_if(cycles.begin(), cycles.end(), [](const CycleEntry& c) {
        return c.label.tag == ClassTag::NonSymmetricSigmaCycle;
      });
      CHECK(count_nonsym_sigma(b, n) == sigma_cycles);
    }
  }
}

TEST_CASE("base-4 fixed point totals") {
  CHECK(count_total_fixed_points_base4(6) == 3);
  CHECK(count_total_fixed_points_base4(7) == 1);
  CHECK(count_total_fixed_points_base4(12) == 8);
}
