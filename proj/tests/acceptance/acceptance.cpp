// One line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <algorithm>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "kaprekar/base4proof.hpp"
#include "kaprekar/cli.hpp"
#include "kaprekar/enumeration.hpp"
#include "kaprekar/oracle.hpp"
#include "kaprekar/sigma.hpp"

using namespace kaprekar;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream note;

  void expect(bool condition, const std::string& what) {
    if (condition) return;
    if (!ok) note << "; ";
    ok = false;
    note << what;
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<void(Check&)>& body) {
  Check check;
  auto start = std::chrono::steady_clock::now();
  try {
    body(check);
  } catch (const std::exception& e) {
    check.expect(false, std::string("exception: ") + e.what());
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0) {
    std::ostringstream over;
    over << "took " << seconds << " s, limit " << limit_seconds << " s";
    check.expect(seconds < limit_seconds, over.str());
  }
  if (!check.ok) ++failures;
  std::cout << (check.ok ? "PASS" : "FAIL") << "  [" << id << "] " << title << "  (" << std::fixed
            << std::setprecision(2) << seconds << " s)";
  if (!check.ok || !check.note.str().empty()) std::cout << "  " << check.note.str();
  std::cout << std::endl;
}

// Runs `enumerate` through the CLI and returns the printed (n, value) pairs.
std::vector<std::pair<Count, Count>> enumerate_cli(int b, const std::string& family, const std::string& range) {
  std::ostringstream out, err;
  int code = cli::run({"enumerate", "-b", std::to_string(b), "--family", family, "-n", range}, out, err);
  if (code != cli::kOk) throw std::runtime_error("enumerate exited with " + std::to_string(code) + ": " + err.str());
  std::vector<std::pair<Count, Count>> rows;
  std::istringstream in(out.str());
  Count n, v;
  while (in >> n >> v) rows.emplace_back(n, v);
  return rows;
}

void table(Check& check, int b, const std::string& family, Count first, Count last, const std::vector<Count>& published) {
  auto rows = enumerate_cli(b, family, std::to_string(first) + ".." + std::to_string(last));
  check.expect(rows.size() == published.size(), "expected " + std::to_string(published.size()) + " rows, got " +
                                                    std::to_string(rows.size()));
  for (std::size_t j = 0; j < std::min(rows.size(), published.size()); ++j) {
    Count n = first + 2 * static_cast<Count>(j);
    check.expect(rows[j].first == n && rows[j].second == published[j],
                 "n=" + std::to_string(n) + ": got " + std::to_string(rows[j].second) + ", published " +
                     std::to_string(published[j]));
  }
}

KaprekarIndex idx(int b, std::vector<Count> counts) { return KaprekarIndex(BaseConfig(b), std::move(counts)); }

// Rotation-invariant form of an i-cycle.
std::vector<Count> rotate_to_min(std::vector<Count> c) {
  std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
  return c;
}

Count tagged(const SurveyReport& report, ClassTag tag) {
  return std::count_if(report.entries.begin(), report.entries.end(),
                       [tag](const SurveyEntry& e) { return e.label.tag == tag; });
}

std::set<Count> unanimous_digit_counts(int b, Count n_max) {
  std::set<Count> found;
  for (Count n = 2; n <= n_max; ++n) {
    if (survey(b, n).unanimous) found.insert(n);
  }
  return found;
}

std::string show(const std::set<Count>& s) {
  std::string out = "{";
  for (Count v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

}  // namespace

int main() {
  criterion(1, "base-6 N_SA table, n=6..40", 1.0, [](Check& c) {
    table(c, 6, "sa-fp", 6, 40, {1, 1, 2, 2, 3, 4, 5, 6, 7, 8, 10, 11, 13, 14, 16, 18, 20, 22});
  });

  criterion(2, "base-6 N_SAC table, n=8..40", 1.0, [](Check& c) {
    table(c, 6, "sac-cycles", 8, 40, {1, 2, 4, 6, 9, 13, 18, 24, 31, 39, 49, 60, 73, 87, 103, 121, 141});
  });

  criterion(3, "base-8 N_SA table, n=8..50", 1.0, [](Check& c) {
    table(c, 8, "sa-fp", 8, 50, {1, 1, 1, 2, 2, 2, 3, 4, 4, 5, 6, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 17});
  });

  criterion(4, "base-8 N_SAC table, n=10..50", 1.0, [](Check& c) {
    table(c, 8, "sac-cycles", 10, 50,
          {1, 3, 6, 11, 18, 27, 39, 55, 75, 100, 131, 168, 212, 264, 325, 396, 478, 572, 679, 800, 936});
  });

  criterion(5, "worked examples", 0, [](Check& c) {
    c.expect(n_gamma_tilde(4, 10) == 84, "ordered 4-tuples summing to 10");
    c.expect(n_gamma(4, 10) == 22, "rotation classes of 4-tuples summing to 10");
    c.expect(sigma(63) == 6, "sigma(63)");
    std::set<std::vector<Count>> expected = {{1, 2, 4, 8, 16, 31}, {5, 10, 20, 23, 17, 29}, {11, 22, 19, 25, 13, 26},
                                             {3, 6, 12, 24, 15, 30}, {7, 14, 28}, {9, 18, 27}, {21}};
    std::set<std::vector<Count>> got;
    for (const auto& cyc : i_cycles(63).cycles) got.insert(rotate_to_min(cyc));
    c.expect(got == expected && i_cycles(63).cycles.size() == 7, "base-64 i-cycles");
    auto start = idx(10, {1, 4, 3, 4, 4, 4, 4, 3, 4, 2});
    c.expect(kaprekar_step(start) == idx(10, {1, 4, 4, 4, 3, 3, 4, 4, 4, 2}), "base-10 cycle successor");
    c.expect(cycle_length(start) == 3 && iterate_to_cycle(start).trajectory.preperiod_length == 0,
             "base-10 cycle of length 3");
    auto fp = idx(10, {1, 4, 4, 3, 4, 4, 3, 4, 4, 2});
    c.expect(kaprekar_step(fp) == fp, "base-10 fixed point");
  });

  criterion(6, "base-4 oracle vs formulas and catalogue, n=2..16", 30.0, [](Check& c) {
    for (Count n = 2; n <= 16; ++n) {
      auto report = survey(4, n);
      auto tag = "n=" + std::to_string(n) + ": ";
      Count fixed = std::count_if(report.entries.begin(), report.entries.end(),
                                  [](const SurveyEntry& e) { return e.cycle.is_fixed_point(); });
      c.expect(fixed == count_total_fixed_points_base4(n), tag + "fixed-point count");
      c.expect(verify_against_catalogue(report).empty(), tag + "catalogue diff");
      c.expect(report.unclassified_count == 0, tag + "unclassified");
      bool special = n == 2 || n == 4 || n == 5 || n == 8;
      c.expect((tagged(report, ClassTag::SpecialCycle) > 0) == special, tag + "special cycles");
      Count single = (n % 3 == 2 && n >= 11) ? 1 : 0;
      c.expect(tagged(report, ClassTag::SingleParameterCycle) == single, tag + "single-parameter cycles");
    }
  });

  criterion(7, "base-6 (n<=12) and base-8 (n<=10) oracle vs catalogue", 120.0, [](Check& c) {
    std::ostringstream findings;
    for (auto [b, n_max] : {std::pair{6, 12}, {8, 10}}) {
      for (Count n = 2; n <= n_max; ++n) {
        auto diff = verify_against_catalogue(b, n);
        auto tag = "b=" + std::to_string(b) + " n=" + std::to_string(n) + ": ";
        c.expect(diff.missing.empty(), tag + "catalogued object not found");
        c.expect(diff.label_mismatches.empty(), tag + "label mismatch");
        for (const auto& m : diff.count_mismatches) {
          c.expect(m.tag == ClassTag::Unclassified, tag + "count mismatch for " + to_string(m.tag));
        }
        for (const auto& e : diff.extra) {
          findings << "finding: b=" << b << " n=" << n << " uncatalogued cycle " << e.lead().to_string()
                   << " l=" << e.length() << ' ';
        }
      }
    }
    c.note << findings.str();
  });

  criterion(8, "unanimous digit-counts (b4 {2,3,5,7}, b6 {2,3,4,7}, b8 {2,3})", 0, [](Check& c) {
    auto b4 = unanimous_digit_counts(4, 16);
    auto b6 = unanimous_digit_counts(6, 12);
    auto b8 = unanimous_digit_counts(8, 10);
    c.expect(b4 == std::set<Count>{2, 3, 5, 7}, "base 4 unanimous at " + show(b4));
    c.expect(b6 == std::set<Count>{2, 3, 4, 7}, "base 6 unanimous at " + show(b6));
    c.expect(b8 == std::set<Count>{2, 3}, "base 8 unanimous at " + show(b8));
  });

  criterion(9, "base-4 succession table replay, n<=40", 60.0, [](Check& c) {
    auto r = base4::replay_exhaustion(40);
    c.expect(r.formula_mismatches == 0, std::to_string(r.formula_mismatches) + " formula mismatches");
    c.expect(r.overlapping_guards == 0, std::to_string(r.overlapping_guards) + " overlapping guards");
    c.expect(r.uncovered == 0, std::to_string(r.uncovered) + " uncovered");
    c.expect(r.gap_violations == 0, std::to_string(r.gap_violations) + " successor gap violations");
    c.expect(r.ok(), "replay report not clean");
  });

  criterion(10, "property suites, even bases 4..12", 0, [](Check& c) {
    for (auto [b, n_max] : {std::pair{4, 20}, {6, 12}, {8, 10}, {10, 8}, {12, 7}}) {
      for (Count n = 2; n <= n_max; ++n) {
        auto v = property_sweep(b, n);
        if (!v.empty()) {
          c.expect(false, "b=" + std::to_string(b) + " n=" + std::to_string(n) + ": " + v.front().property + " at " +
                              v.front().state.to_string());
        }
      }
    }
  });

  criterion(11, "parity identities and closed forms, n<=200", 0, [](Check& c) {
    for (int b : {4, 6, 8}) {
      const Count B = b - 1;
      for (Count n = 1; n <= 200; ++n) {
        auto tag = "b=" + std::to_string(b) + " n=" + std::to_string(n) + ": ";
        if (n % 2 == 1) {
          c.expect(count_almost_symmetric_fp(b, n + B) == count_almost_symmetric_fp(b, n), tag + "N_A shift");
          c.expect(count_almost_symmetric_cycles(b, n + B) == count_almost_symmetric_cycles(b, n), tag + "N_AC shift");
          if (n > B) {
            c.expect(count_sa_fp(b, n - B) == count_almost_symmetric_fp(b, n), tag + "N_SA vs N_A");
            c.expect(count_sac_cycles(b, n - B) == count_almost_symmetric_cycles(b, n), tag + "N_SAC vs N_AC");
          }
        } else {
          c.expect(count_sa_fp(b, n) == count_symmetric_fp(b, n) + count_almost_symmetric_fp(b, n),
                   tag + "fixed-point closed form");
          c.expect(count_sac_cycles_closed_form(b, n) == count_sac_cycles(b, n), tag + "cycle closed form");
        }
      }
    }
  });

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criterion(s) failed") << std::endl;
  return failures;
}
