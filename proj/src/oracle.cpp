#include "kaprekar/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <map>
#include <set>
#include <thread>

#include "kaprekar/sigma.hpp"

namespace kaprekar {

Count budget_from_environment() {
  const char* raw = std::getenv("KAPREKAR_BUDGET");
  if (raw == nullptr || *raw == '\0') return kDefaultBudget;
  char* end = nullptr;
  long long value = std::strtoll(raw, &end, 10);
  if (*end != '\0' || value <= 0) return kDefaultBudget;
  return static_cast<Count>(value);
}

Count composition_count(int b, Count n) {
  if (b < 1 || n < 0) return 0;
  constexpr Count kMax = std::numeric_limits<Count>::max();
  __int128 result = 1;
  for (Count i = 1; i <= b - 1; ++i) {
    result = result * (n + i) / i;
    if (result > kMax) return kMax;
  }
  return static_cast<Count>(result);
}

namespace {

// Compositions of n into b parts correspond to b-1 bar positions among
// n+b-1 slots; colex order on the positions gives the ranking.
class BinomialTable {
 public:
  BinomialTable(Count slots, int width) : width_(width + 1), table_(static_cast<std::size_t>((slots + 1) * width_), 0) {
    for (Count p = 0; p <= slots; ++p) {
      at(p, 0) = 1;
      for (int r = 1; r < width_ && r <= p; ++r) at(p, r) = at(p - 1, r - 1) + (r <= p - 1 ? at(p - 1, r) : 0);
    }
  }
  Count operator()(Count p, int r) const { return table_[static_cast<std::size_t>(p * width_ + r)]; }

 private:
  Count& at(Count p, int r) { return table_[static_cast<std::size_t>(p * width_ + r)]; }
  int width_;
  std::vector<Count> table_;
};

Count rank_with(const std::vector<Count>& counts, const BinomialTable& binom) {
  Count rank = 0;
  Count position = -1;
  for (std::size_t j = 0; j + 1 < counts.size(); ++j) {
    position += counts[j] + 1;
    rank += binom(position, static_cast<int>(j + 1));
  }
  return rank;
}

std::vector<Count> bars_from_rank(int b, Count n, Count rank, const BinomialTable& binom) {
  const int m = b - 1;
  std::vector<Count> bars(static_cast<std::size_t>(m));
  Count p = n + b - 2;
  for (int j = m - 1; j >= 0; --j) {
    while (binom(p, j + 1) > rank) --p;
    bars[static_cast<std::size_t>(j)] = p;
    rank -= binom(p, j + 1);
    --p;
  }
  return bars;
}

void counts_from_bars(const std::vector<Count>& bars, Count slots, std::vector<Count>& counts) {
  Count previous = -1;
  for (std::size_t j = 0; j < bars.size(); ++j) {
    counts[j] = bars[j] - previous - 1;
    previous = bars[j];
  }
  counts.back() = slots - 1 - previous;
}

bool next_bars(std::vector<Count>& bars, Count slots) {
  const std::size_t m = bars.size();
  for (std::size_t j = 0; j < m; ++j) {
    Count limit = j + 1 < m ? bars[j + 1] : slots;
    if (bars[j] + 1 < limit) {
      ++bars[j];
      for (std::size_t i = 0; i < j; ++i) bars[i] = static_cast<Count>(i);
      return true;
    }
  }
  return false;
}

bool is_repdigit_counts(const std::vector<Count>& counts, Count n) {
  return std::any_of(counts.begin(), counts.end(), [n](Count c) { return c == n; });
}

}  // namespace

Count composition_rank(const KaprekarIndex& k) {
  const int b = k.base().b();
  BinomialTable binom(k.digit_count() + b - 1, b - 1);
  return rank_with(k.counts(), binom);
}

KaprekarIndex composition_unrank(int b, Count n, Count rank) {
  if (rank < 0 || rank >= composition_count(b, n)) throw DomainError("rank out of range");
  BinomialTable binom(n + b - 1, b - 1);
  std::vector<Count> counts(static_cast<std::size_t>(b));
  counts_from_bars(bars_from_rank(b, n, rank, binom), n + b - 1, counts);
  return KaprekarIndex(BaseConfig(b), counts);
}

void for_each_index(int b, Count n, const std::function<void(const KaprekarIndex&)>& visit, Count begin, Count end) {
  if (b < 2) throw DomainError("base must be at least 2");
  if (n < 1) return;
  const Count total = composition_count(b, n);
  if (end < 0 || end > total) end = total;
  if (begin >= end) return;
  const Count slots = n + b - 1;
  BinomialTable binom(slots, b - 1);
  auto bars = bars_from_rank(b, n, begin, binom);
  std::vector<Count> counts(static_cast<std::size_t>(b));
  const BaseConfig base(b);
  for (Count rank = begin; rank < end; ++rank) {
    counts_from_bars(bars, slots, counts);
    if (!is_repdigit_counts(counts, n)) visit(KaprekarIndex(base, counts));
    next_bars(bars, slots);
  }
}

std::vector<KaprekarIndex> enumerate_indices(int b, Count n) {
  std::vector<KaprekarIndex> out;
  for_each_index(b, n, [&](const KaprekarIndex& k) { out.push_back(k); });
  return out;
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::uint32_t kNoSuccessor = std::numeric_limits<std::uint32_t>::max();

unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

Count checked_state_count(int b, Count n, Count budget) {
  if (b < 2) throw DomainError("base must be at least 2");
  if (n < 1) throw DomainError("digit-count must be at least 1");
  const Count total = composition_count(b, n);
  if (total > budget) {
    throw BudgetExceededError("base " + std::to_string(b) + ", n=" + std::to_string(n) + " has " +
                              std::to_string(total) + " states, over the budget of " + std::to_string(budget));
  }
  if (total >= static_cast<Count>(kNoSuccessor)) throw BudgetExceededError("state count exceeds 32-bit ranks");
  return total;
}

std::vector<std::uint32_t> successor_table(int b, Count n, Count total, unsigned workers) {
  std::vector<std::uint32_t> succ(static_cast<std::size_t>(total));
  const Count slots = n + b - 1;
  const BinomialTable binom(slots, b - 1);
  const BaseConfig base(b);

  auto work = [&](Count begin, Count end) {
    if (begin >= end) return;
    auto bars = bars_from_rank(b, n, begin, binom);
    std::vector<Count> counts(static_cast<std::size_t>(b));
    for (Count rank = begin; rank < end; ++rank) {
      counts_from_bars(bars, slots, counts);
      if (is_repdigit_counts(counts, n)) {
        succ[static_cast<std::size_t>(rank)] = kNoSuccessor;
      } else {
        auto next = kaprekar_step(KaprekarIndex(base, counts));
        succ[static_cast<std::size_t>(rank)] = static_cast<std::uint32_t>(rank_with(next.counts(), binom));
      }
      next_bars(bars, slots);
    }
  };

  workers = static_cast<unsigned>(std::min<Count>(workers, std::max<Count>(1, total / 1024)));
  if (workers <= 1) {
    work(0, total);
    return succ;
  }
  std::vector<std::thread> threads;
  const Count chunk = (total + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    Count begin = chunk * w;
    Count end = std::min(total, begin + chunk);
    threads.emplace_back(work, begin, end);
  }
  for (auto& t : threads) t.join();
  return succ;
}

struct RawCycle {
  std::vector<std::uint32_t> ranks;  // in succession order
  Count basin = 0;
};

struct Resolution {
  std::vector<RawCycle> cycles;
  Count to_zero = 0;
};

// Odd bases only: a state whose orbit hits a repdigit ends at zero.
Resolution resolve_cycles(const std::vector<std::uint32_t>& succ) {
  constexpr std::int32_t kUnvisited = -1;
  constexpr std::int32_t kOnPath = -2;
  constexpr std::int32_t kZero = -3;
  std::vector<std::int32_t> colour(succ.size(), kUnvisited);
  std::vector<RawCycle> cycles;
  Count to_zero = 0;
  std::vector<std::uint32_t> path;

  for (std::size_t start = 0; start < succ.size(); ++start) {
    if (succ[start] == kNoSuccessor || colour[start] != kUnvisited) continue;
    path.clear();
    std::uint32_t x = static_cast<std::uint32_t>(start);
    while (colour[x] == kUnvisited) {
      colour[x] = kOnPath;
      path.push_back(x);
      x = succ[x];
      if (succ[x] == kNoSuccessor) colour[x] = kZero;
    }
    std::int32_t id;
    if (colour[x] == kZero) {
      for (auto p : path) colour[p] = kZero;
      to_zero += static_cast<Count>(path.size());
      continue;
    }
    if (colour[x] == kOnPath) {
      id = static_cast<std::int32_t>(cycles.size());
      RawCycle cycle;
      std::uint32_t y = x;
      do {
        cycle.ranks.push_back(y);
        y = succ[y];
      } while (y != x);
      cycles.push_back(std::move(cycle));
    } else {
      id = colour[x];
    }
    for (auto p : path) colour[p] = id;
    cycles[static_cast<std::size_t>(id)].basin += static_cast<Count>(path.size());
  }
  return {std::move(cycles), to_zero};
}

}  // namespace

SurveyReport survey(int b, Count n, const SurveyOptions& options) {
  const Count total = checked_state_count(b, n, options.budget);
  const auto succ = successor_table(b, n, total, resolve_workers(options.workers));
  const auto [raw, to_zero] = resolve_cycles(succ);

  const BinomialTable binom(n + b - 1, b - 1);
  const BaseConfig base(b);
  SurveyReport report;
  report.base = b;
  report.digit_count = n;
  report.total_states = total - b;
  report.to_zero = to_zero;
  for (const auto& cycle : raw) {
    std::vector<KaprekarIndex> members;
    std::vector<Count> counts(static_cast<std::size_t>(b));
    for (auto r : cycle.ranks) {
      counts_from_bars(bars_from_rank(b, n, r, binom), n + b - 1, counts);
      members.emplace_back(base, counts);
    }
    auto record = canonicalize_cycle(std::move(members), options.ordering);
    auto label = classify(record);
    if (label.tag == ClassTag::Unclassified) ++report.unclassified_count;
    report.entries.push_back(SurveyEntry{std::move(record), std::move(label), cycle.basin});
  }
  std::sort(report.entries.begin(), report.entries.end(), [](const SurveyEntry& x, const SurveyEntry& y) {
    const auto& a = x.cycle.realized.front();
    const auto& c = y.cycle.realized.front();
    auto order = compare_value(a, c);
    if (order != 0) return order < 0;
    return x.cycle.lead() < y.cycle.lead();
  });
  if (report.entries.size() == 1 && to_zero == 0) report.unanimous = report.entries.front().cycle;
  return report;
}

// ---------------------------------------------------------------------------

ClassCounts class_counts(const SurveyReport& report) {
  ClassCounts counts;
  for (const auto& e : report.entries) ++counts[e.label.tag];
  return counts;
}

namespace {

std::vector<KaprekarIndex> member_set(const CycleRecord& c) {
  auto members = c.members;
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

CatalogueDiff verify_against_catalogue(const SurveyReport& report) {
  const int b = report.base;
  const Count n = report.digit_count;
  CatalogueDiff diff;
  diff.base = b;
  diff.digit_count = n;
  diff.unclassified = report.unclassified_count;

  std::map<std::vector<KaprekarIndex>, std::pair<CycleRecord, ClassLabel>> catalogue;
  for (auto& fp : generate_fixed_points(b, n)) {
    auto record = canonicalize_cycle({fp.index});
    catalogue.emplace(member_set(record), std::make_pair(record, fp.label));
  }
  for (auto& c : generate_cycles(b, n)) catalogue.emplace(member_set(c.cycle), std::make_pair(c.cycle, c.label));

  std::set<std::vector<KaprekarIndex>> found;
  for (const auto& e : report.entries) {
    auto key = member_set(e.cycle);
    found.insert(key);
    auto it = catalogue.find(key);
    if (it == catalogue.end()) {
      diff.extra.push_back(e.cycle);
    } else if (!(it->second.second == e.label)) {
      diff.label_mismatches.push_back(LabelMismatch{e.cycle, it->second.second, e.label});
    }
  }
  for (const auto& [key, value] : catalogue) {
    if (!found.contains(key)) diff.missing.push_back(value.first);
  }

  const auto expected = count_catalogue(b, n);
  const auto observed = class_counts(report);
  for (ClassTag tag : kAllClassTags) {
    auto e = expected.contains(tag) ? expected.at(tag) : 0;
    auto o = observed.contains(tag) ? observed.at(tag) : 0;
    if (e != o) diff.count_mismatches.push_back(CountMismatch{tag, e, o});
  }
  return diff;
}

CatalogueDiff verify_against_catalogue(int b, Count n, const SurveyOptions& options) {
  return verify_against_catalogue(survey(b, n, options));
}

// ---------------------------------------------------------------------------

namespace {

void check_successor(const KaprekarIndex& k, std::vector<Violation>& out) {
  const int b = k.base().b();
  const std::size_t B = static_cast<std::size_t>(b - 1);
  const Count n = k.digit_count();
  const auto next = kaprekar_step(k);
  auto fail = [&](const std::string& property, const std::string& detail) {
    out.push_back(Violation{property, k, detail});
  };

  if (digit_sum(next) % static_cast<Count>(B) != 0) fail("successor-digit-sum", "digit sum of successor not divisible by B");
  Count interior = 0;
  for (std::size_t i = 1; i < B; ++i) interior += static_cast<Count>(i) * next[i];
  if (interior % static_cast<Count>(B) != 0) fail("successor-interior-sum", "interior weighted sum not divisible by B");

  if (!(index_from_digits(kaprekar_step_subtraction(descending_string(k))) == next)) {
    fail("two-path", "subtraction and index step disagree");
  }

  const auto profile = difference_profile(k);
  const Digit d0 = profile.d.front();
  const Digit dmu = profile.d[static_cast<std::size_t>(profile.mu)];

  if (dmu == b - d0) {
    bool mirrored = true;
    for (std::size_t i = 1; i < B; ++i) mirrored = mirrored && next[i] == next[B - i];
    if (!(next[B] >= next[0] && mirrored)) fail("mirrored-successor", "d_mu = b - d_0 but successor is not mirrored");
  }

  for (std::size_t i = 1; i < B; ++i) {
    Count gap = next[i] > next[B - i] ? next[i] - next[B - i] : next[B - i] - next[i];
    if (gap > 3) fail("mirror-gap", "mirror gap above 3 at i=" + std::to_string(i));
    if (gap == 3) {
      bool position_ok = i == static_cast<std::size_t>(b / 2) || i == static_cast<std::size_t>(b / 2 - 1);
      bool cause_ok = d0 == b / 2 || dmu == b / 2;
      if (!position_ok || !cause_ok) fail("mirror-gap", "mirror gap 3 at i=" + std::to_string(i));
    }
  }

  if (next[B] < next[0]) {
    bool ok = n % 2 == 0 && profile.mu == profile.nu && profile.nu == n / 2 - 1 && dmu == 1 &&
              d0 < static_cast<Digit>(B) && next[B] == 0 && next[0] == 1;
    if (!ok) fail("end-inversion", "k'_B < k'_0 outside the permitted configuration");
  }

  if (next[0] > std::max<Count>(k[0], 1)) fail("zero-count-bound", "k'_0 exceeds max(k_0, 1)");

  const auto info = symmetry_info(k);
  if (info.symmetric || info.almost_symmetric) {
    const auto next_info = symmetry_info(next);
    if (next_info.symmetric != info.symmetric || next_info.almost_symmetric != info.almost_symmetric) {
      fail("symmetry-preserved", "successor changes symmetry type");
    }
    if (next[0] != k[0] || next[B] != k[B]) fail("ends-preserved", "end components change");
    for (std::size_t i = 1; 2 * i < B; ++i) {
      if (next[2 * i] != k[i] || next[B - 2 * i] != k[i]) fail("interior-shift", "k'_{2i} != k_i at i=" + std::to_string(i));
    }
    const auto actual = cycle_length(k);
    const auto predicted = predicted_symmetric_cycle_length(k);
    if (static_cast<std::size_t>(sigma(static_cast<Count>(B))) % actual != 0) {
      fail("cycle-length", "cycle length " + std::to_string(actual) + " does not divide sigma(B)");
    }
    if (predicted != actual) {
      fail("cycle-length", "predicted length " + std::to_string(predicted) + " but actual " + std::to_string(actual));
    }
  }

  if (b == 4) {
    Count gap = next[1] - next[2];
    if (gap != 0 && gap != 3 && gap != -3) fail("base4-gap", "k'_1 - k'_2 = " + std::to_string(gap));
  }
}

}  // namespace

std::vector<Violation> property_sweep(int b, Count n, const SurveyOptions& options) {
  if (b < 4 || b % 2 != 0) throw DomainError("property sweep needs an even base >= 4");
  checked_state_count(b, n, options.budget);
  std::vector<Violation> out;
  for_each_index(b, n, [&](const KaprekarIndex& k) { check_successor(k, out); });

  const auto report = survey(b, n, options);
  for (const auto& e : report.entries) {
    const auto& members = e.cycle.members;
    bool has_large = std::any_of(members.begin(), members.end(), [](const auto& m) { return m[0] > 1; });
    if (has_large) {
      bool constant = std::all_of(members.begin(), members.end(), [&](const auto& m) { return m[0] == members[0][0]; });
      if (!constant) out.push_back(Violation{"zero-count-constant", e.cycle.lead(), "k_0 varies on a cycle with k_0 > 1"});
    }
  }
  return out;
}

}  // namespace kaprekar
