#include "kaprekar/base4proof.hpp"

#include "kaprekar/oracle.hpp"

namespace kaprekar::base4 {

namespace {

using C = Components;

bool excluded(const C& k) { return (k[0] > k[3] && k[3] > 0) || (k[0] > 1 && k[3] == 0); }

bool full(const C& k) { return k[0] >= 1 && k[1] >= 1 && k[2] >= 1 && k[3] >= 1; }

// Guards carry the table's inequalities and the exclusion; the raw
// two-zero guards G(xii)..G(xv) would otherwise admit excluded indices.
#define CASE(name, cond, f0, f1, f2, f3)                                     \
  SuccessionCase {                                                           \
    name, [](const C& k) { return !excluded(k) && (cond); },                 \
        [](const C& k) { return C{f0, f1, f2, f3}; }                         \
  }

}  // namespace

const std::vector<SuccessionCase>& succession_cases() {
  static const std::vector<SuccessionCase> cases = {
      CASE("A(i)", full(k) && k[0] == k[3] && k[1] > k[2], k[3], k[2], k[2], k[3] + k[1] - k[2]),
      CASE("A(ii)", full(k) && k[0] == k[3] && k[1] == k[2], k[3], k[2], k[2], k[3]),
      CASE("A(iii)", full(k) && k[0] == k[3] && k[1] < k[2], k[3], k[1], k[1], k[3] + k[2] - k[1]),

      CASE("B(i)", full(k) && k[0] < k[3] && k[3] < k[0] + k[1] && k[0] + k[1] < k[2] + k[3], k[0], k[1], k[1],
           k[3] + k[2] - k[1]),
      CASE("B(ii)", full(k) && k[0] < k[3] && k[0] + k[1] == k[2] + k[3], k[0], k[1], k[1], k[0]),
      CASE("B(iii)", full(k) && k[0] < k[3] && k[0] + k[1] > k[2] + k[3], k[0], k[3] + k[2] - k[0],
           k[3] + k[2] - k[0], 2 * k[0] + k[1] - k[2] - k[3]),
      CASE("B(iv)", full(k) && k[0] < k[3] && k[0] + k[1] == k[3], k[0] - 1, k[1] + 2, k[1] - 1, k[0] + k[2]),
      CASE("B(v)", full(k) && k[0] < k[3] && k[0] + k[1] < k[3] && k[3] < k[0] + k[1] + k[2], k[0], k[3] - k[0],
           k[3] - k[0], 2 * k[0] + k[1] + k[2] - k[3]),
      CASE("B(vi)", full(k) && k[0] < k[3] && k[3] == k[0] + k[1] + k[2], k[0], k[1] + k[2], k[1] + k[2], k[0]),
      CASE("B(vii)", full(k) && k[0] < k[3] && k[3] > k[0] + k[1] + k[2], k[0], k[1] + k[2], k[1] + k[2],
           k[3] - k[1] - k[2]),

      CASE("C(i)", k[0] == 0 && k[1] >= 1 && k[2] >= 1 && k[3] >= 1 && k[3] < k[1] && k[1] < k[2] + k[3], 1,
           k[1] - 2, k[1] + 1, k[3] + k[2] - k[1]),
      CASE("C(ii)", k[0] == 0 && k[1] >= 1 && k[2] >= 1 && k[3] >= 1 && k[1] == k[2] + k[3], 1, k[1] - 2,
           k[1] + 1, 0),
      CASE("C(iii)", k[0] == 0 && k[1] >= 1 && k[2] >= 1 && k[3] >= 1 && k[1] > k[2] + k[3], 1, k[2] + k[3] - 2,
           k[2] + k[3] + 1, k[1] - k[2] - k[3]),
      CASE("C(iv)", k[0] == 0 && k[1] >= 1 && k[2] >= 1 && k[3] >= 1 && k[1] == k[3], 0, k[3], k[3], k[2]),
      CASE("C(v)", k[0] == 0 && k[1] >= 1 && k[2] >= 1 && k[3] >= 1 && k[1] < k[3] && k[3] < k[1] + k[2], 1,
           k[3] - 2, k[3] + 1, k[1] + k[2] - k[3]),
      CASE("C(vi)", k[0] == 0 && k[1] >= 1 && k[2] >= 1 && k[3] >= 1 && k[1] + k[2] == k[3], 1, k[3] - 2,
           k[3] + 1, 0),
      CASE("C(vii)", k[0] == 0 && k[1] >= 1 && k[2] >= 1 && k[3] >= 1 && k[1] + k[2] < k[3], 1, k[1] + k[2] - 2,
           k[1] + k[2] + 1, k[3] - k[2] - k[1]),

      CASE("D(i)", k[1] == 0 && k[0] >= 1 && k[2] >= 1 && k[3] >= 1 && k[0] == k[3], k[0] - 1, 1, 1,
           k[0] + k[2] - 1),
      CASE("D(ii)", k[1] == 0 && k[0] >= 1 && k[2] >= 1 && k[3] >= 1 && k[0] < k[3] && k[3] < k[0] + k[2], k[0],
           k[3] - k[0], k[3] - k[0], 2 * k[0] + k[2] - k[3]),
      CASE("D(iii)", k[1] == 0 && k[0] >= 1 && k[2] >= 1 && k[3] >= 1 && k[0] + k[2] == k[3], k[0], k[2], k[2],
           k[0]),
      CASE("D(iv)", k[1] == 0 && k[0] >= 1 && k[2] >= 1 && k[3] >= 1 && k[0] + k[2] < k[3], k[0], k[2], k[2],
           k[3] - k[2]),

      CASE("E(i)", k[2] == 0 && k[0] >= 1 && k[1] >= 1 && k[3] >= 1 && k[0] == k[3], k[0] - 1, 1, 1,
           k[0] + k[1] - 1),
      CASE("E(ii)", k[2] == 0 && k[0] >= 1 && k[1] >= 1 && k[3] >= 1 && k[0] < k[3] && k[3] < k[0] + k[1],
           k[0] - 1, k[3] - k[0] + 2, k[3] - k[0] - 1, 2 * k[0] + k[1] - k[3]),
      CASE("E(iii)", k[2] == 0 && k[0] >= 1 && k[1] >= 1 && k[3] >= 1 && k[0] + k[1] == k[3], k[0] - 1, k[1] + 2,
           k[1] - 1, k[0]),
      CASE("E(iv)", k[2] == 0 && k[0] >= 1 && k[1] >= 1 && k[3] >= 1 && k[0] + k[1] < k[3], k[0] - 1, k[1] + 2,
           k[1] - 1, k[3] - k[1]),

      CASE("F(i)", k[3] == 0 && k[0] >= 1 && k[1] >= 1 && k[2] >= 1 && k[0] == k[2], 0, k[2], k[2], k[1]),
      CASE("F(ii)", k[3] == 0 && k[0] >= 1 && k[1] >= 1 && k[2] >= 1 && k[0] < k[2] && k[2] < k[0] + k[1], 1,
           k[2] - 2, k[2] + 1, k[0] + k[1] - k[2]),
      CASE("F(iii)", k[3] == 0 && k[0] >= 1 && k[1] >= 1 && k[2] >= 1 && k[0] + k[1] == k[2], 1, k[2] - 2,
           k[2] + 1, 0),
      CASE("F(iv)", k[3] == 0 && k[0] >= 1 && k[1] >= 1 && k[2] >= 1 && k[0] + k[1] < k[2], 1, k[0] + k[1] - 2,
           k[0] + k[1] + 1, k[2] - k[1] - k[0]),

      CASE("G(i)", k[0] == 0 && k[1] == 0 && 0 < k[2] && k[2] < k[3], 1, k[2] - 1, k[2] - 1, k[3] - k[2] + 1),
      CASE("G(ii)", k[0] == 0 && k[1] == 0 && 0 < k[2] && k[2] == k[3], 1, k[2] - 1, k[2] - 1, 1),
      CASE("G(iii)", k[0] == 0 && k[1] == 0 && 0 < k[3] && k[3] < k[2], 1, k[3] - 1, k[3] - 1, k[2] - k[3] + 1),
      CASE("G(iv)", k[0] == 0 && k[2] == 0 && 0 < k[1] && k[1] < k[3], 0, k[1], k[1], k[3] - k[1]),
      CASE("G(v)", k[0] == 0 && k[2] == 0 && 0 < k[1] && k[1] == k[3], 0, k[1], k[1], 0),
      CASE("G(vi)", k[0] == 0 && k[2] == 0 && 0 < k[3] && k[3] < k[1], 0, k[3], k[3], k[1] - k[3]),
      CASE("G(vii)", k[0] == 0 && k[3] == 0 && 0 < k[1] && k[1] < k[2], 1, k[1] - 1, k[1] - 1, k[2] - k[1] + 1),
      CASE("G(viii)", k[0] == 0 && k[3] == 0 && 0 < k[1] && k[1] == k[2], 1, k[1] - 1, k[1] - 1, 1),
      CASE("G(ix)", k[0] == 0 && k[3] == 0 && 0 < k[2] && k[2] < k[1], 1, k[2] - 1, k[2] - 1, k[1] - k[2] + 1),
      CASE("G(x)", k[1] == 0 && k[2] == 0 && 0 < k[0] && k[0] < k[3], k[0] - 1, 1, 1, k[3] - 1),
      CASE("G(xi)", k[1] == 0 && k[2] == 0 && 0 < k[0] && k[0] == k[3], k[0] - 1, 1, 1, k[0] - 1),
      CASE("G(xii)", k[1] == 0 && k[3] == 0 && 0 < k[0] && k[0] < k[2], 0, k[0], k[0], k[2] - k[0]),
      CASE("G(xiii)", k[1] == 0 && k[3] == 0 && 0 < k[0] && k[0] == k[2], 0, k[0], k[0], 0),
      CASE("G(xiv)", k[2] == 0 && k[3] == 0 && 0 < k[0] && k[0] < k[1], 1, k[0] - 1, k[0] - 1, k[1] - k[0] + 1),
      CASE("G(xv)", k[2] == 0 && k[3] == 0 && 0 < k[0] && k[0] == k[1], 1, k[0] - 1, k[0] - 1, 1),
  };
  return cases;
}

#undef CASE

namespace {

C components(const KaprekarIndex& k) {
  if (k.base().b() != 4) throw DomainError("succession table is for base 4");
  if (k.is_repdigit()) throw RepdigitError("repdigit " + k.to_string() + " has no successor");
  return {k[0], k[1], k[2], k[3]};
}

}  // namespace

bool is_excluded(const KaprekarIndex& k) { return excluded(components(k)); }

std::optional<SuccessionCase> match_case(const KaprekarIndex& k) {
  const C c = components(k);
  if (excluded(c)) return std::nullopt;
  for (const auto& sc : succession_cases()) {
    if (sc.guard(c)) return sc;
  }
  throw std::logic_error("no succession case covers " + k.to_string());
}

std::vector<std::string> matching_cases(const KaprekarIndex& k) {
  const C c = components(k);
  std::vector<std::string> ids;
  for (const auto& sc : succession_cases()) {
    if (sc.guard(c)) ids.push_back(sc.id);
  }
  return ids;
}

KaprekarIndex formula_successor(const KaprekarIndex& k) {
  auto sc = match_case(k);
  if (!sc) throw ExcludedIndexError(k.to_string() + " is outside the succession table");
  C next = sc->formula(components(k));
  return KaprekarIndex(k.base(), {next.begin(), next.end()});
}

ReplayReport replay_exhaustion(Count n_max) {
  ReplayReport report;
  report.n_max = n_max;
  for (Count n = 2; n <= n_max; ++n) {
    for_each_index(4, n, [&](const KaprekarIndex& k) {
      ++report.states;
      const auto next = kaprekar_step(k);
      const Count gap = next[1] - next[2];
      if (gap != 0 && gap != 3 && gap != -3) ++report.gap_violations;

      const auto ids = matching_cases(k);
      const bool excl = is_excluded(k);
      if (excl) ++report.excluded_states;
      if (ids.size() > 1 || (excl && !ids.empty())) ++report.overlapping_guards;
      if (ids.empty() && !excl) ++report.uncovered;
      if (!excl && !ids.empty() && !(formula_successor(k) == next)) ++report.formula_mismatches;
    });

    const auto census = survey(4, n);
    report.unclassified += census.unclassified_count;
    if (!verify_against_catalogue(census).empty()) ++report.catalogue_discrepancies;
    for (const auto& entry : census.entries) {
      Count full_members = 0;
      bool has_entry = false;
      for (const auto& member : entry.cycle.members) {
        auto sc = match_case(member);
        if (!sc) {
          ++report.excluded_on_cycles;
          continue;
        }
        ++report.cases_on_cycles[sc->id];
        if (member[0] >= 1 && member[1] >= 1 && member[2] >= 1 && member[3] >= 1) ++full_members;
        has_entry = has_entry || (sc->id == "B(iv)" && member[0] == 1);
      }
      if (entry.cycle.length() < 2) continue;
      if (full_members == static_cast<Count>(entry.cycle.length())) ++report.full_cycles;
      if (full_members > 0 && !has_entry) ++report.full_member_cycles_without_entry;
    }
  }
  return report;
}

}  // namespace kaprekar::base4
