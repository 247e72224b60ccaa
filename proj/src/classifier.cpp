#include "kaprekar/classifier.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "kaprekar/sigma.hpp"

namespace kaprekar {

SymmetryInfo symmetry_info(const KaprekarIndex& k) {
  SymmetryInfo info;
  const std::size_t top = static_cast<std::size_t>(k.base().top());
  info.alpha = k[top] - k[0];
  info.beta = k[top] + k[0];
  info.full = std::all_of(k.counts().begin(), k.counts().end(), [](Count c) { return c >= 1; });
  if (!info.full) return info;

  bool mirrored = true;
  Count interior_min = k[1];
  for (std::size_t i = 1; i < top; ++i) {
    mirrored = mirrored && k[i] == k[top - i];
    interior_min = std::min(interior_min, k[i]);
  }
  if (!mirrored) return info;
  info.symmetric = k[0] == k[top];
  // top >= 2 for b >= 3; base 2 has no interior and no almost-symmetry
  info.almost_symmetric = top >= 2 && k[0] < k[top] && k[top] < k[0] + interior_min;
  return info;
}

namespace {

constexpr std::pair<ClassTag, const char*> kTagNames[] = {
    {ClassTag::SymmetricFP, "symmetric-fp"},
    {ClassTag::AlmostSymmetricFP, "almost-symmetric-fp"},
    {ClassTag::UniformZeroFreeFP, "uniform-zero-free-fp"},
    {ClassTag::TriadFP, "triad-fp"},
    {ClassTag::OtherZeroFreeFP, "other-zero-free-fp"},
    {ClassTag::SingleParameterFP, "single-parameter-fp"},
    {ClassTag::SpecialFP, "special-fp"},
    {ClassTag::SymmetricCycle, "symmetric-cycle"},
    {ClassTag::AlmostSymmetricCycle, "almost-symmetric-cycle"},
    {ClassTag::NonSymmetricSigmaCycle, "non-symmetric-sigma-cycle"},
    {ClassTag::SingleParameterCycle, "single-parameter-cycle"},
    {ClassTag::SpecialCycle, "special-cycle"},
    {ClassTag::Unclassified, "unclassified"},
};

}  // namespace

std::string to_string(ClassTag tag) {
  for (const auto& [t, name] : kTagNames) {
    if (t == tag) return name;
  }
  return "unclassified";
}

std::optional<ClassTag> class_tag_from_string(const std::string& name) {
  for (const auto& [t, n] : kTagNames) {
    if (name == n) return t;
  }
  return std::nullopt;
}

std::optional<Count> ClassLabel::param(const std::string& name) const {
  for (const auto& [key, value] : params) {
    if (key == name) return value;
  }
  return std::nullopt;
}

namespace {

// ---------------------------------------------------------------------------
// Single-parameter templates: each component is coef * t + offset.

struct Term {
  Count coef;
  Count offset;
};

constexpr Term T(Count offset) { return {1, offset}; }
constexpr Term K(Count value) { return {0, value}; }
constexpr Term T2(Count offset) { return {2, offset}; }

using Template = std::vector<Term>;

struct SingleParameterFamily {
  int base;
  ClassTag tag;
  std::string variant;
  std::vector<Template> members;  // in succession order
  Count t_min;

  Count digit_count(Count t) const {
    Count n = 0;
    for (const auto& term : members.front()) n += term.coef * t + term.offset;
    return n;
  }
};

const std::vector<SingleParameterFamily>& single_parameter_families() {
  static const std::vector<SingleParameterFamily> families = {
      // base 4, length 3, n = 3t + 8
      {4, ClassTag::SingleParameterCycle, "", {
           {K(1), T(2), T(2), T(3)},
           {K(0), T(4), T(1), T(3)},
           {K(1), T(2), T(5), T(0)},
       }, 1},
      // base 6
      {6, ClassTag::SingleParameterFP, "", {{K(1), T(-1), T(1), T(0), T(1), K(0)}}, 1},
      {6, ClassTag::SingleParameterCycle, "", {
           {K(1), T(0), K(1), K(0), T(2), K(1)},
           {K(0), K(2), T(0), T(1), K(0), K(2)},
       }, 1},
      // base 8
      {8, ClassTag::SingleParameterFP, "", {{K(1), T(-1), T(0), T(0), T(0), T(-1), T(1), K(0)}}, 1},
      {8, ClassTag::SingleParameterCycle, "i", {
           {K(1), T(0), T(1), T(0), T(0), T(0), T(2), T(0)},
           {K(0), T(1), T(0), T(1), T(1), T(1), T(-1), T(1)},
       }, 1},
      {8, ClassTag::SingleParameterCycle, "ii", {
           {K(1), K(0), T2(2), K(0), K(0), T2(1), K(2), T(1)},
           {K(0), K(1), T(1), T(1), T(2), T(0), K(0), T(2)},
       }, 1},
      {8, ClassTag::SingleParameterCycle, "iii", {
           {K(1), T(-1), K(0), K(1), K(0), K(1), T(0), K(0)},
           {K(0), K(1), T(0), K(0), K(0), T(0), K(1), K(0)},
           {K(0), K(0), K(1), T(0), T(0), K(1), K(0), K(0)},
       }, 1},
      {8, ClassTag::SingleParameterCycle, "iv", {
           {K(1), T(-1), T(2), T(1), T(1), T(1), T(1), T(0)},
           {K(1), T(0), T(0), T(2), T(2), T(0), T(0), T(1)},
           {K(1), T(2), T(0), T(0), T(0), T(0), T(2), T(1)},
           {K(0), T(2), T(1), T(0), T(0), T(2), T(0), T(1)},
           {K(0), T(1), T(1), T(1), T(1), T(1), T(1), T(0)},
       }, 1},
      {8, ClassTag::SingleParameterCycle, "v", {
           {K(1), T(1), T(2), T(1), T(1), T(1), T(3), T(0)},
           {K(1), T(0), T(2), T(2), T(2), T(2), T(0), T(1)},
           {K(1), T(2), T(0), T(2), T(2), T(0), T(2), T(1)},
           {K(1), T(2), T(2), T(0), T(0), T(2), T(2), T(1)},
           {K(0), T(2), T(1), T(2), T(2), T(2), T(0), T(1)},
       }, 1},
      {8, ClassTag::SingleParameterCycle, "vi", {
           {K(1), T(-1), T(1), T(1), T(1), T(0), T(1), T(0)},
           {K(1), T(0), T(0), T(1), T(1), T(0), T(0), T(1)},
           {K(1), T(1), T(0), T(0), T(0), T(0), T(1), T(1)},
           {K(0), T(2), T(0), T(0), T(0), T(1), T(0), T(1)},
           {K(0), T(1), T(1), T(0), T(0), T(1), T(1), T(0)},
           {K(0), T(0), T(1), T(1), T(1), T(1), T(0), T(0)},
       }, 1},
      {8, ClassTag::SingleParameterCycle, "vii", {
           {K(1), T(1), T(1), T(0), T(0), T(0), T(3), T(0)},
           {K(0), T(1), T(1), T(1), T(1), T(2), T(-1), T(1)},
           {K(1), T(0), T(1), T(1), T(1), T(0), T(2), T(0)},
           {K(1), T(0), T(1), T(1), T(1), T(1), T(0), T(1)},
           {K(1), T(1), T(0), T(1), T(1), T(0), T(1), T(1)},
           {K(1), T(1), T(1), T(0), T(0), T(1), T(1), T(1)},
           {K(0), T(2), T(0), T(1), T(1), T(1), T(0), T(1)},
           {K(1), T(0), T(2), T(0), T(0), T(1), T(2), T(0)},
           {K(0), T(1), T(0), T(2), T(2), T(1), T(-1), T(1)},
       }, 1},
      {8, ClassTag::SingleParameterCycle, "viii", {
           {K(1), T(1), T(1), T(1), T(1), T(0), T(3), T(0)},
           {K(1), T(0), T(2), T(1), T(1), T(2), T(0), T(1)},
           {K(1), T(1), T(0), T(2), T(2), T(0), T(1), T(1)},
           {K(1), T(2), T(1), T(0), T(0), T(1), T(2), T(1)},
           {K(0), T(2), T(1), T(1), T(1), T(2), T(0), T(1)},
           {K(1), T(0), T(2), T(1), T(1), T(1), T(2), T(0)},
           {K(1), T(0), T(1), T(2), T(2), T(1), T(0), T(1)},
           {K(1), T(2), T(0), T(1), T(1), T(0), T(2), T(1)},
           {K(1), T(1), T(2), T(0), T(0), T(2), T(1), T(1)},
           {K(0), T(2), T(0), T(2), T(2), T(1), T(0), T(1)},
           {K(1), T(1), T(2), T(0), T(0), T(1), T(3), T(0)},
           {K(0), T(1), T(1), T(2), T(2), T(2), T(-1), T(1)},
       }, 1},
  };
  return families;
}

std::optional<KaprekarIndex> instantiate(const Template& tmpl, int base, Count t) {
  std::vector<Count> counts;
  counts.reserve(tmpl.size());
  for (const auto& term : tmpl) {
    Count value = term.coef * t + term.offset;
    if (value < 0) return std::nullopt;
    counts.push_back(value);
  }
  return KaprekarIndex(BaseConfig(base), std::move(counts));
}

std::vector<KaprekarIndex> instantiate_family(const SingleParameterFamily& family, Count t) {
  std::vector<KaprekarIndex> members;
  for (const auto& tmpl : family.members) {
    auto k = instantiate(tmpl, family.base, t);
    if (!k) return {};
    members.push_back(std::move(*k));
  }
  return members;
}

/// Parameter value for which some member of the family equals k.
std::optional<Count> solve_family(const SingleParameterFamily& family, const KaprekarIndex& k) {
  for (const auto& tmpl : family.members) {
    auto pivot = std::find_if(tmpl.begin(), tmpl.end(), [](const Term& term) { return term.coef != 0; });
    if (pivot == tmpl.end()) continue;
    Count numerator = k[static_cast<std::size_t>(pivot - tmpl.begin())] - pivot->offset;
    if (numerator % pivot->coef != 0) continue;
    Count t = numerator / pivot->coef;
    if (t < family.t_min) continue;
    auto candidate = instantiate(tmpl, family.base, t);
    if (candidate && *candidate == k) return t;
  }
  return std::nullopt;
}

std::vector<KaprekarIndex> sorted_members(std::vector<KaprekarIndex> members) {
  std::sort(members.begin(), members.end());
  return members;
}

// ---------------------------------------------------------------------------
// Special fixed points and cycles, listed in succession order.

struct SpecialEntry {
  int base;
  std::vector<std::vector<Count>> members;
};

const std::vector<SpecialEntry>& special_catalogue() {
  static const std::vector<SpecialEntry> entries = {
      {4, {{1, 0, 0, 1}, {0, 1, 1, 0}}},
      {4, {{1, 0, 3, 0}, {0, 1, 1, 2}}},
      {4, {{1, 0, 3, 1}, {0, 1, 1, 3}}},
      {4, {{1, 1, 4, 2}, {0, 3, 0, 5}, {0, 3, 3, 2}}},

      {6, {{1, 0, 0, 0, 0, 1}, {0, 1, 0, 0, 1, 0}, {0, 0, 1, 1, 0, 0}}},
      {6, {{0, 1, 0, 0, 1, 2}, {1, 0, 1, 0, 2, 0}, {0, 1, 1, 1, 1, 0},
           {1, 0, 0, 2, 1, 0}, {0, 0, 1, 1, 0, 2}, {0, 1, 0, 3, 0, 0}}},
      {6, {{0, 1, 0, 3, 0, 1}, {0, 0, 1, 1, 0, 3}}},
      {6, {{1, 0, 1, 0, 2, 2}, {0, 1, 2, 0, 0, 3}, {0, 0, 4, 1, 1, 0}}},
      {6, {{1, 2, 0, 2, 3, 0}, {0, 0, 4, 1, 1, 2}, {1, 0, 2, 4, 1, 0}, {1, 1, 1, 0, 3, 2},
           {0, 3, 0, 1, 1, 3}, {1, 2, 1, 0, 4, 0}, {0, 1, 3, 3, 1, 0}}},

      {8, {{0, 0, 1, 0, 0, 1, 0, 0}}},
      {8, {{0, 1, 0, 0, 0, 0, 1, 2}, {1, 0, 1, 0, 0, 0, 2, 0}, {0, 0, 1, 2, 0, 0, 1, 0},
           {0, 0, 0, 1, 1, 0, 0, 2}, {0, 0, 1, 0, 3, 0, 0, 0}}},
      {8, {{0, 0, 1, 0, 3, 0, 0, 1}, {0, 0, 0, 1, 1, 0, 0, 3}}},
      {8, {{0, 1, 0, 1, 0, 2, 0, 1}, {0, 1, 1, 0, 0, 1, 1, 1}, {0, 0, 1, 2, 0, 0, 1, 1},
           {0, 0, 1, 1, 1, 1, 0, 1}}},
      {8, {{1, 0, 1, 1, 1, 0, 2, 1}, {0, 1, 1, 1, 2, 0, 0, 2}, {1, 0, 2, 0, 0, 1, 2, 1},
           {0, 1, 0, 3, 1, 0, 0, 2}}},
      {8, {{1, 0, 0, 2, 1, 1, 1, 1}, {0, 2, 0, 1, 1, 1, 0, 2}, {0, 2, 1, 0, 0, 1, 2, 1},
           {0, 0, 2, 2, 0, 1, 1, 1}, {0, 1, 0, 2, 1, 2, 0, 1}, {0, 1, 2, 0, 0, 2, 1, 1},
           {0, 0, 2, 1, 2, 0, 1, 1}}},
      {8, {{1, 1, 2, 0, 0, 1, 3, 1}, {0, 1, 1, 3, 1, 1, 0, 2}, {1, 0, 3, 0, 0, 2, 2, 1},
           {0, 1, 1, 2, 3, 0, 0, 2}}},
      {8, {{1, 0, 0, 3, 2, 1, 1, 1}, {1, 1, 1, 1, 1, 1, 1, 2}, {0, 3, 0, 1, 1, 1, 1, 2},
           {0, 2, 2, 0, 0, 2, 2, 1}, {0, 0, 3, 1, 2, 1, 1, 1}}},
      {8, {{1, 0, 1, 2, 2, 0, 2, 1}, {1, 1, 0, 2, 2, 0, 1, 2}, {1, 2, 0, 1, 1, 0, 2, 2},
           {0, 2, 2, 0, 1, 1, 1, 2}, {0, 1, 2, 1, 2, 0, 2, 1}}},
      {8, {{1, 0, 3, 1, 1, 2, 2, 1}, {0, 2, 0, 3, 3, 1, 0, 2}, {1, 2, 2, 0, 0, 1, 4, 1},
           {0, 1, 2, 3, 1, 2, 0, 2}}},
      {8, {{1, 0, 2, 2, 2, 1, 2, 2}, {0, 2, 1, 2, 2, 2, 0, 3}, {0, 2, 3, 0, 0, 3, 2, 2},
           {0, 1, 2, 2, 3, 0, 2, 2}}},
  };
  return entries;
}

std::vector<KaprekarIndex> special_members(const SpecialEntry& entry) {
  std::vector<KaprekarIndex> members;
  for (const auto& counts : entry.members) members.emplace_back(BaseConfig(entry.base), counts);
  return members;
}

bool is_special(const std::vector<KaprekarIndex>& sorted) {
  const int b = sorted.front().base().b();
  for (const auto& entry : special_catalogue()) {
    if (entry.base != b || entry.members.size() != sorted.size()) continue;
    if (sorted_members(special_members(entry)) == sorted) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Multi-parameter templates.

bool is_uniform_zero_free(const KaprekarIndex& k) {
  if (k[0] != 0 || k[1] < 1) return false;
  for (std::size_t i = 2; i < k.counts().size(); ++i) {
    if (k[i] != k[1]) return false;
  }
  return true;
}

bool is_triad(const KaprekarIndex& k) {
  const int b = k.base().b();
  if (b % 2 != 0 || b < 4) return false;
  const auto lo = static_cast<std::size_t>(b / 2 - 1);
  const auto hi = static_cast<std::size_t>(b / 2);
  const auto top = static_cast<std::size_t>(b - 1);
  const Count t = k[top];
  if (t < 1 || k[lo] != t || k[hi] != t) return false;
  for (std::size_t i = 0; i < top; ++i) {
    if (i != lo && i != hi && k[i] != 0) return false;
  }
  return true;
}

std::optional<ClassLabel> match_other_zero_free(const KaprekarIndex& k) {
  const int b = k.base().b();
  if (k[0] != 0) return std::nullopt;
  if (b == 6) {
    // (0,u,t,t,u,t), 1 <= u < t
    Count u = k[1], t = k[2];
    if (k[3] == t && k[4] == u && k[5] == t && u >= 1 && u < t) {
      return ClassLabel{ClassTag::OtherZeroFreeFP, "", {{"t", t}, {"u", u}}, true};
    }
  } else if (b == 8) {
    // (a) (0,t,u,t,t,u,t,t), 1 <= u < t
    {
      Count t = k[1], u = k[2];
      if (k[3] == t && k[4] == t && k[5] == u && k[6] == t && k[7] == t && u >= 1 && u < t) {
        return ClassLabel{ClassTag::OtherZeroFreeFP, "a", {{"t", t}, {"u", u}}, true};
      }
    }
    // (b) (0,t-e,t+e,t,t,t+e,t-e,t), 1 <= e < t
    {
      Count t = k[3], e = k[2] - k[3];
      if (k[4] == t && k[7] == t && k[1] == t - e && k[5] == t + e && k[6] == t - e && e >= 1 && e < t) {
        return ClassLabel{ClassTag::OtherZeroFreeFP, "b", {{"t", t}, {"epsilon", e}}, true};
      }
    }
  }
  return std::nullopt;
}

// Non-symmetric sigma-cycle member in template form; returns its parameters.
std::optional<FamilyParams> match_sigma_member(const KaprekarIndex& k) {
  const int b = k.base().b();
  if (b == 6) {
    // (1,t,u+1,u,t+2,0), t >= 0, u >= 1, u != t+1
    Count t = k[1], u = k[3];
    if (k[0] == 1 && k[5] == 0 && k[2] == u + 1 && k[4] == t + 2 && u >= 1 && u != t + 1) {
      return FamilyParams{{"t", t}, {"u", u}};
    }
  } else if (b == 8) {
    // (1,t,u,v,v,u-1,t+2,0), t >= 0, u >= 1, v >= 1, (t+1,u,v) not all equal
    Count t = k[1], u = k[2], v = k[3];
    if (k[0] == 1 && k[7] == 0 && k[4] == v && k[5] == u - 1 && k[6] == t + 2 && u >= 1 && v >= 1 &&
        !(t + 1 == u && u == v)) {
      return FamilyParams{{"t", t}, {"u", u}, {"v", v}};
    }
  }
  return std::nullopt;
}

std::vector<KaprekarIndex> sigma_cycle_members(int b, const FamilyParams& p) {
  const BaseConfig base(b);
  if (b == 6) {
    Count t = p[0].second, u = p[1].second;
    return {KaprekarIndex(base, {1, t, u + 1, u, t + 2, 0}),
            KaprekarIndex(base, {1, u - 1, t + 2, t + 1, u + 1, 0})};
  }
  Count t = p[0].second, u = p[1].second, v = p[2].second;
  return {KaprekarIndex(base, {1, t, u, v, v, u - 1, t + 2, 0}),
          KaprekarIndex(base, {1, v - 1, t + 1, u, u, t, v + 1, 0}),
          KaprekarIndex(base, {1, u - 1, v, t + 1, t + 1, v - 1, u + 1, 0})};
}

// Interior parameters of an [almost-]symmetric cycle, named t,u,v for
// C <= 3 and t1..tC beyond.
FamilyParams symmetric_cycle_params(const CycleRecord& cycle, Count alpha) {
  const int C = cycle.base.half_width();
  std::vector<std::vector<Count>> tuples;
  for (const auto& m : cycle.members) {
    tuples.emplace_back(m.counts().begin() + 1, m.counts().begin() + 1 + C);
  }
  std::vector<Count> chosen;
  if (C == 3) {
    // minimum in the last position
    for (const auto& tuple : tuples) {
      if (tuple[2] == *std::min_element(tuple.begin(), tuple.end()) && (chosen.empty() || tuple < chosen)) {
        chosen = tuple;
      }
    }
  }
  if (chosen.empty()) chosen = *std::min_element(tuples.begin(), tuples.end());

  const auto& lead = cycle.lead();
  FamilyParams params{{"k0", lead[0]}, {"kB", lead[static_cast<std::size_t>(cycle.base.top())]}};
  if (alpha > 0) params.emplace_back("alpha", alpha);
  static const char* names[] = {"t", "u", "v"};
  for (int c = 0; c < C; ++c) {
    params.emplace_back(C <= 3 ? names[c] : "t" + std::to_string(c + 1), chosen[static_cast<std::size_t>(c)]);
  }
  return params;
}

bool interior_uniform(const KaprekarIndex& k) {
  const std::size_t top = static_cast<std::size_t>(k.base().top());
  for (std::size_t i = 2; i < top; ++i) {
    if (k[i] != k[1]) return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------

ClassLabel classify_fixed_point(const KaprekarIndex& k) {
  if (!(kaprekar_step(k) == k)) throw NotAFixedPointError(k.to_string() + " is not a fixed point");
  const int b = k.base().b();
  const std::size_t top = static_cast<std::size_t>(k.base().top());

  if (b % 2 == 0 && b >= 4) {
    const auto info = symmetry_info(k);
    const bool uniform = interior_uniform(k);
    if (info.symmetric) {
      FamilyParams params{{"k0", k[0]}};
      if (uniform) params.emplace_back("k1", k[1]);
      return ClassLabel{ClassTag::SymmetricFP, "", params, uniform};
    }
    if (info.almost_symmetric) {
      FamilyParams params{{"k0", k[0]}};
      if (uniform) params.emplace_back("k1", k[1]);
      params.emplace_back("kB", k[top]);
      params.emplace_back("alpha", info.alpha);
      return ClassLabel{ClassTag::AlmostSymmetricFP, "", params, uniform};
    }
    // base 4 has no distinct uniform zero-free class; (0,t,t,t) is the triad
    if (b >= 6 && is_uniform_zero_free(k)) {
      return ClassLabel{ClassTag::UniformZeroFreeFP, "", {{"t", k[1]}}, true};
    }
    if (is_triad(k)) return ClassLabel{ClassTag::TriadFP, "", {{"t", k[top]}}, true};
    if (auto label = match_other_zero_free(k)) return *label;
  }

  for (const auto& family : single_parameter_families()) {
    if (family.base != b || family.tag != ClassTag::SingleParameterFP) continue;
    if (auto t = solve_family(family, k)) return ClassLabel{family.tag, family.variant, {{"t", *t}}, true};
  }
  if (is_special({k})) return ClassLabel{ClassTag::SpecialFP, "", {}, true};
  return ClassLabel{};
}

ClassLabel classify_cycle(const CycleRecord& cycle) {
  if (cycle.length() < 2) throw DomainError("fixed points are classified by classify_fixed_point");
  const int b = cycle.base.b();

  if (b % 2 == 0 && b >= 4) {
    bool all_symmetric = true;
    bool all_almost = true;
    for (const auto& m : cycle.members) {
      auto info = symmetry_info(m);
      all_symmetric = all_symmetric && info.symmetric;
      all_almost = all_almost && info.almost_symmetric;
    }
    if (all_symmetric) return ClassLabel{ClassTag::SymmetricCycle, "", symmetric_cycle_params(cycle, 0), true};
    if (all_almost) {
      Count alpha = symmetry_info(cycle.lead()).alpha;
      return ClassLabel{ClassTag::AlmostSymmetricCycle, "", symmetric_cycle_params(cycle, alpha), true};
    }
  }

  if (b == 6 || b == 8) {
    if (cycle.length() == static_cast<std::size_t>(sigma(b - 1))) {
      bool all_match = true;
      for (const auto& m : cycle.members) all_match = all_match && match_sigma_member(m).has_value();
      if (all_match) {
        return ClassLabel{ClassTag::NonSymmetricSigmaCycle, "", *match_sigma_member(cycle.lead()), true};
      }
    }
  }

  const auto members = sorted_members(cycle.members);
  for (const auto& family : single_parameter_families()) {
    if (family.base != b || family.tag != ClassTag::SingleParameterCycle) continue;
    if (family.members.size() != cycle.length()) continue;
    auto t = solve_family(family, cycle.lead());
    if (t && sorted_members(instantiate_family(family, *t)) == members) {
      return ClassLabel{family.tag, family.variant, {{"t", *t}}, true};
    }
  }
  if (is_special(members)) return ClassLabel{ClassTag::SpecialCycle, "", {}, true};
  return ClassLabel{};
}

ClassLabel classify(const CycleRecord& cycle) {
  return cycle.is_fixed_point() ? classify_fixed_point(cycle.lead()) : classify_cycle(cycle);
}

// ---------------------------------------------------------------------------
// Generators

namespace {

void require_catalogued_base(int b) {
  if (b != 4 && b != 6 && b != 8) {
    throw UnsupportedBaseError("catalogue covers bases 4, 6 and 8, not " + std::to_string(b));
  }
}

struct Run {
  Digit digit;
  Count count;
};

DigitString from_runs(int b, std::initializer_list<Run> runs) {
  std::vector<Digit> digits;
  for (const auto& run : runs) {
    if (run.count < 0) throw std::logic_error("negative run length in digit template");
    digits.insert(digits.end(), static_cast<std::size_t>(run.count), run.digit);
  }
  return DigitString(BaseConfig(b), std::move(digits));
}

void emit_fixed_point(std::vector<FixedPointEntry>& out, DigitString s, ClassLabel label) {
  if (!(kaprekar_step_subtraction(s) == s)) {
    throw std::logic_error("template string " + s.to_string() + " is not fixed by the subtraction");
  }
  auto k = index_from_digits(s);
  if (!(kaprekar_step(k) == k)) throw std::logic_error("template index " + k.to_string() + " is not fixed");
  out.push_back(FixedPointEntry{std::move(s), std::move(k), std::move(label)});
}

DigitString symmetric_fp_string(int b, Count k0, Count k1) {
  switch (b) {
    case 4: return from_runs(4, {{3, k0}, {1, k1 - 1}, {0, 1}, {2, k1}, {0, k0 - 1}, {1, 1}});
    case 6: return from_runs(6, {{5, k0}, {3, k1}, {1, k1 - 1}, {0, 1}, {4, k1}, {2, k1}, {0, k0 - 1}, {1, 1}});
    default:
      return from_runs(8, {{7, k0}, {5, k1}, {3, k1}, {1, k1 - 1}, {0, 1},
                           {6, k1}, {4, k1}, {2, k1}, {0, k0 - 1}, {1, 1}});
  }
}

DigitString almost_symmetric_fp_string(int b, Count k0, Count k1, Count a) {
  switch (b) {
    case 4:
      return from_runs(4, {{3, k0}, {2, a}, {1, k1 - a - 1}, {0, 1}, {3, a}, {2, k1 - a}, {1, a},
                           {0, k0 - 1}, {1, 1}});
    case 6:
      return from_runs(6, {{5, k0}, {4, a}, {3, k1 - a}, {2, a}, {1, k1 - a - 1}, {0, 1}, {5, a},
                           {4, k1 - a}, {3, a}, {2, k1 - a}, {1, a}, {0, k0 - 1}, {1, 1}});
    default:
      return from_runs(8, {{7, k0}, {6, a}, {5, k1 - a}, {4, a}, {3, k1 - a}, {2, a}, {1, k1 - a - 1},
                           {0, 1}, {7, a}, {6, k1 - a}, {5, a}, {4, k1 - a}, {3, a}, {2, k1 - a},
                           {1, a}, {0, k0 - 1}, {1, 1}});
  }
}

DigitString triad_string(int b, Count t) {
  switch (b) {
    case 4: return from_runs(4, {{2, t - 1}, {1, 1}, {3, t}, {1, t - 1}, {2, 1}});
    case 6: return from_runs(6, {{3, t - 1}, {2, 1}, {5, t}, {2, t - 1}, {3, 1}});
    default: return from_runs(8, {{4, t - 1}, {3, 1}, {7, t}, {3, t - 1}, {4, 1}});
  }
}

}  // namespace

std::vector<FixedPointEntry> generate_fixed_points(int b, Count n) {
  require_catalogued_base(b);
  std::vector<FixedPointEntry> out;
  const Count width = b - 2;

  // symmetric: n = 2 k0 + (b-2) k1
  for (Count k1 = 1; width * k1 <= n - 2; ++k1) {
    Count rest = n - width * k1;
    if (rest % 2 != 0) continue;
    Count k0 = rest / 2;
    emit_fixed_point(out, symmetric_fp_string(b, k0, k1),
                     {ClassTag::SymmetricFP, "", {{"k0", k0}, {"k1", k1}}, true});
  }
  // almost-symmetric: n = 2 k0 + alpha + (b-2) k1, 1 <= alpha < k1
  for (Count k1 = 2; width * k1 < n; ++k1) {
    for (Count a = 1; a < k1; ++a) {
      Count rest = n - width * k1 - a;
      if (rest < 2 || rest % 2 != 0) continue;
      Count k0 = rest / 2;
      emit_fixed_point(out, almost_symmetric_fp_string(b, k0, k1, a),
                       {ClassTag::AlmostSymmetricFP, "", {{"k0", k0}, {"k1", k1}, {"kB", k0 + a}, {"alpha", a}},
                        true});
    }
  }
  // uniform zero-free: n = (b-1) t
  if (b >= 6 && n % (b - 1) == 0) {
    Count t = n / (b - 1);
    DigitString s = b == 6 ? from_runs(6, {{4, t}, {2, t - 1}, {1, 1}, {5, t}, {3, t}, {1, t - 1}, {2, 1}})
                           : from_runs(8, {{6, t}, {4, t}, {2, t - 1}, {1, 1}, {7, t}, {5, t}, {3, t},
                                           {1, t - 1}, {2, 1}});
    emit_fixed_point(out, std::move(s), {ClassTag::UniformZeroFreeFP, "", {{"t", t}}, true});
  }
  // triad: n = 3t
  if (n % 3 == 0 && n >= 3) {
    emit_fixed_point(out, triad_string(b, n / 3), {ClassTag::TriadFP, "", {{"t", n / 3}}, true});
  }
  // other zero-free
  if (b == 6) {
    for (Count u = 1; 5 * u < n; ++u) {
      if ((n - 2 * u) % 3 != 0) continue;
      Count t = (n - 2 * u) / 3;
      if (u >= t) continue;
      emit_fixed_point(out,
                       from_runs(6, {{4, u}, {3, t - u}, {2, u - 1}, {1, 1}, {5, t}, {3, u}, {2, t - u},
                                     {1, u - 1}, {2, 1}}),
                       {ClassTag::OtherZeroFreeFP, "", {{"t", t}, {"u", u}}, true});
    }
  } else if (b == 8) {
    for (Count u = 1; 7 * u < n; ++u) {
      if ((n - 2 * u) % 5 != 0) continue;
      Count t = (n - 2 * u) / 5;
      if (u >= t) continue;
      emit_fixed_point(out,
                       from_runs(8, {{6, t}, {4, u}, {3, t - u}, {2, u - 1}, {1, 1}, {7, t}, {5, u},
                                     {4, t - u}, {3, u}, {1, t - 1}, {2, 1}}),
                       {ClassTag::OtherZeroFreeFP, "a", {{"t", t}, {"u", u}}, true});
    }
    if (n % 7 == 0) {
      Count t = n / 7;
      for (Count e = 1; e < t; ++e) {
        emit_fixed_point(out,
                         from_runs(8, {{6, t - e}, {5, e}, {4, t - e}, {3, e}, {2, t - 1}, {1, 1}, {7, t},
                                       {5, t}, {4, e}, {3, t - e}, {2, e}, {1, t - e - 1}, {2, 1}}),
                         {ClassTag::OtherZeroFreeFP, "b", {{"t", t}, {"epsilon", e}}, true});
      }
    }
  }
  // single-parameter
  if (b == 6 && n % 4 == 2 && n >= 6) {
    Count t = (n - 2) / 4;
    emit_fixed_point(out, from_runs(6, {{4, 1}, {3, t - 1}, {2, 1}, {1, t - 1}, {0, 1}, {4, t}, {3, 1}, {2, t}}),
                     {ClassTag::SingleParameterFP, "", {{"t", t}}, true});
  } else if (b == 8 && n % 6 == 0 && n >= 6) {
    Count t = n / 6;
    emit_fixed_point(out,
                     from_runs(8, {{6, 1}, {5, t - 1}, {4, 1}, {3, t - 1}, {1, t - 1}, {0, 1}, {6, t},
                                   {4, t - 1}, {3, 1}, {2, t}}),
                     {ClassTag::SingleParameterFP, "", {{"t", t}}, true});
  }
  // special
  if (b == 8 && n == 2) emit_fixed_point(out, from_runs(8, {{2, 1}, {5, 1}}), {ClassTag::SpecialFP, "", {}, true});

  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return compare_value(x.realized, y.realized) < 0; });
  return out;
}

std::vector<CycleEntry> generate_cycles(int b, Count n) {
  require_catalogued_base(b);
  std::vector<CycleEntry> out;
  std::set<std::vector<KaprekarIndex>> seen;
  auto emit = [&](std::vector<KaprekarIndex> members, ClassLabel label) {
    auto record = canonicalize_cycle(std::move(members));
    if (record.length() < 2) throw std::logic_error("catalogued cycle collapsed to a fixed point");
    if (!seen.insert(sorted_members(record.members)).second) return;
    out.push_back(CycleEntry{std::move(record), std::move(label)});
  };
  const BaseConfig base(b);
  const int C = base.half_width();
  const std::size_t top = static_cast<std::size_t>(b - 1);

  // [almost-]symmetric cycles: interior components t_1..t_C, not all equal
  if (C >= 2) {
    for (Count k0 = 1; k0 < n; ++k0) {
      for (Count alpha = 0; 2 * k0 + alpha < n; ++alpha) {
        Count rest = n - 2 * k0 - alpha;  // 2 * sum(t)
        if (rest % 2 != 0) continue;
        Count total = rest / 2;
        Count t_min = alpha + 1;
        std::vector<Count> t(static_cast<std::size_t>(C), t_min);
        // enumerate compositions of total into C parts >= t_min
        std::function<void(int, Count)> place = [&](int c, Count remaining) {
          if (c == C - 1) {
            if (remaining < t_min) return;
            t[static_cast<std::size_t>(c)] = remaining;
            if (std::all_of(t.begin(), t.end(), [&](Count x) { return x == t[0]; })) return;
            std::vector<Count> counts(static_cast<std::size_t>(b), 0);
            counts[0] = k0;
            counts[top] = k0 + alpha;
            for (std::size_t i = 1; i <= static_cast<std::size_t>(C); ++i) {
              counts[i] = counts[top - i] = t[i - 1];
            }
            KaprekarIndex start(base, counts);
            auto record = iterate_to_cycle(start).cycle;
            if (record.length() < 2) return;
            emit(record.members, {alpha == 0 ? ClassTag::SymmetricCycle : ClassTag::AlmostSymmetricCycle, "",
                                  symmetric_cycle_params(record, alpha), true});
            return;
          }
          for (Count v = t_min; v + t_min * (C - 1 - c) <= remaining; ++v) {
            t[static_cast<std::size_t>(c)] = v;
            place(c + 1, remaining - v);
          }
        };
        if (total >= t_min * C) place(0, total);
      }
    }
  }

  // non-symmetric sigma-cycles
  if (b == 6 && n % 2 == 0) {
    Count sum = (n - 4) / 2;  // t + u
    for (Count t = 0; t < sum; ++t) {
      Count u = sum - t;
      if (u < 1 || u == t + 1) continue;
      FamilyParams p{{"t", t}, {"u", u}};
      auto members = sigma_cycle_members(6, p);
      auto record = canonicalize_cycle(members);
      emit(members, {ClassTag::NonSymmetricSigmaCycle, "", *match_sigma_member(record.lead()), true});
    }
  } else if (b == 8 && n % 2 == 0) {
    Count sum = (n - 2) / 2;  // t + u + v
    for (Count t = 0; t <= sum - 2; ++t) {
      for (Count u = 1; t + u <= sum - 1; ++u) {
        Count v = sum - t - u;
        if (t + 1 == u && u == v) continue;
        FamilyParams p{{"t", t}, {"u", u}, {"v", v}};
        auto members = sigma_cycle_members(8, p);
        auto record = canonicalize_cycle(members);
        emit(members, {ClassTag::NonSymmetricSigmaCycle, "", *match_sigma_member(record.lead()), true});
      }
    }
  }

  // single-parameter cycles
  for (const auto& family : single_parameter_families()) {
    if (family.base != b || family.tag != ClassTag::SingleParameterCycle) continue;
    for (Count t = family.t_min; family.digit_count(t) <= n; ++t) {
      if (family.digit_count(t) != n) continue;
      emit(instantiate_family(family, t), {family.tag, family.variant, {{"t", t}}, true});
    }
  }

  // special cycles
  for (const auto& entry : special_catalogue()) {
    if (entry.base != b || entry.members.size() < 2) continue;
    auto members = special_members(entry);
    if (members.front().digit_count() != n) continue;
    emit(std::move(members), {ClassTag::SpecialCycle, "", {}, true});
  }

  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return compare_value(x.cycle.realized.front(), y.cycle.realized.front()) < 0;
  });
  return out;
}

}  // namespace kaprekar
