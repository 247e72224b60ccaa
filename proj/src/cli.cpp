#include "kaprekar/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "kaprekar/base4proof.hpp"
#include "kaprekar/bfile.hpp"
#include "kaprekar/enumeration.hpp"
#include "kaprekar/oracle.hpp"
#include "kaprekar/report.hpp"
#include "kaprekar/sigma.hpp"

namespace kaprekar::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

long long parse_integer(const std::string& text) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw UsageError("'" + text + "' is not an integer");
  }
  if (used != text.size()) throw UsageError("'" + text + "' is not an integer");
  return value;
}

}  // namespace

Range parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    long long v = parse_integer(text);
    return {v, v};
  }
  Range r{parse_integer(text.substr(0, dots)), parse_integer(text.substr(dots + 2))};
  if (r.first > r.last) throw UsageError("empty range " + text);
  return r;
}

namespace {

KaprekarIndex parse_index(int b, std::string text) {
  std::erase_if(text, [](char c) { return c == '(' || c == ')' || c == ' '; });
  std::vector<Count> counts;
  std::stringstream fields(text);
  std::string field;
  while (std::getline(fields, field, ',')) counts.push_back(parse_integer(field));
  return KaprekarIndex(BaseConfig(b), counts);
}

Count resolve_budget(std::optional<Count> flag) { return flag ? *flag : budget_from_environment(); }

std::string describe(const ClassLabel& label) {
  std::string out = to_string(label.tag);
  if (!label.variant.empty()) out += "(" + label.variant + ")";
  if (!label.params.empty()) out += " " + format_params(label.params);
  if (!label.uniform) out += " non-uniform";
  return out;
}

// ---------------------------------------------------------------------------

int cmd_step(int b, const std::string& digits, const std::string& index_text, Count count, std::ostream& out) {
  const BaseConfig base(b);
  DigitString s = !digits.empty() ? DigitString::parse(base, digits) : descending_string(parse_index(b, index_text));
  KaprekarIndex k = index_from_digits(s);
  if (k.is_repdigit()) throw RepdigitError("repdigit " + s.to_string() + " maps to zero");
  out << "0  " << s.to_string() << "  " << k.to_string() << '\n';
  for (Count m = 1; m <= count; ++m) {
    s = kaprekar_step_subtraction(s);
    k = kaprekar_step(k);
    if (!(index_from_digits(s) == k)) throw std::logic_error("index step disagrees with subtraction");
    out << m << "  " << s.to_string() << "  " << k.to_string() << '\n';
  }
  return kOk;
}

int cmd_survey(int b, Count n, const SurveyOptions& options, bool json, bool csv, std::ostream& out) {
  const auto report = survey(b, n, options);
  if (json) {
    out << envelope("survey", Json{{"base", b}, {"n", n}}, to_json(report)).dump(2) << '\n';
    return kOk;
  }
  if (csv) {
    write_csv(out, report);
    return kOk;
  }
  out << "base " << b << ", n=" << n << ": " << report.total_states << " states, " << report.entries.size()
      << " fixed point(s)/cycle(s)" << (report.unanimous ? ", unanimous" : "") << '\n';
  for (const auto& e : report.entries) {
    out << "  l=" << e.cycle.length() << "  " << e.cycle.realized.front().to_string() << "  "
        << e.cycle.lead().to_string() << "  " << describe(e.label) << "  basin " << e.basin << '\n';
  }
  if (report.to_zero > 0) out << "  reaching zero: " << report.to_zero << '\n';
  if (report.unclassified_count > 0) out << "  unclassified: " << report.unclassified_count << '\n';
  return kOk;
}

// ---------------------------------------------------------------------------

const std::vector<std::string> kFamilies = {"sym-fp",     "as-fp",         "sa-fp",     "sym-cycles", "as-cycles",
                                            "sac-cycles", "zero-free",     "nonsym-sigma", "total-fp",
                                            "catalogue"};

std::optional<Count> formula_value(const std::string& family, int b, Count n) {
  if (family == "sym-fp") return count_symmetric_fp(b, n);
  if (family == "as-fp") return count_almost_symmetric_fp(b, n);
  if (family == "sa-fp") return n % 2 == 0 ? std::optional<Count>(count_sa_fp(b, n)) : std::nullopt;
  if (family == "sym-cycles") return count_symmetric_cycles(b, n);
  if (family == "as-cycles") return count_almost_symmetric_cycles(b, n);
  if (family == "sac-cycles") {
    if (n % 2 != 0) return std::nullopt;
    return b == 4 || b == 6 || b == 8 ? count_sac_cycles_closed_form(b, n) : count_sac_cycles(b, n);
  }
  if (family == "zero-free") return count_zero_free(b, n);
  if (family == "nonsym-sigma") return count_nonsym_sigma(b, n);
  if (family == "total-fp") {
    if (b != 4) throw UnsupportedBaseError("total-fp is available for base 4 only");
    return count_total_fixed_points_base4(n);
  }
  throw UsageError("unknown family " + family);
}

Count oracle_value(const std::string& family, const SurveyReport& report) {
  auto count = [&](auto pred) {
    return static_cast<Count>(std::count_if(report.entries.begin(), report.entries.end(), pred));
  };
  auto tagged = [&](ClassTag tag) { return count([tag](const SurveyEntry& e) { return e.label.tag == tag; }); };
  if (family == "sym-fp") return tagged(ClassTag::SymmetricFP);
  if (family == "as-fp") return tagged(ClassTag::AlmostSymmetricFP);
  if (family == "sa-fp") return tagged(ClassTag::SymmetricFP) + tagged(ClassTag::AlmostSymmetricFP);
  if (family == "sym-cycles") return tagged(ClassTag::SymmetricCycle);
  if (family == "as-cycles") return tagged(ClassTag::AlmostSymmetricCycle);
  if (family == "sac-cycles") return tagged(ClassTag::SymmetricCycle) + tagged(ClassTag::AlmostSymmetricCycle);
  if (family == "zero-free") {
    switch (report.base) {
      case 4: return tagged(ClassTag::TriadFP);
      case 6:
        return tagged(ClassTag::TriadFP) + tagged(ClassTag::UniformZeroFreeFP) + tagged(ClassTag::OtherZeroFreeFP);
      default:
        return tagged(ClassTag::UniformZeroFreeFP) + count([](const SurveyEntry& e) {
                 return e.label.tag == ClassTag::OtherZeroFreeFP && e.label.variant == "a";
               });
    }
  }
  if (family == "nonsym-sigma") return tagged(ClassTag::NonSymmetricSigmaCycle);
  if (family == "total-fp") return count([](const SurveyEntry& e) { return e.cycle.is_fixed_point(); });
  throw UsageError("unknown family " + family);
}

int cmd_enumerate(int b, const std::string& family, Range range, bool check_oracle, bool json,
                  const SurveyOptions& options, std::ostream& out) {
  if (std::find(kFamilies.begin(), kFamilies.end(), family) == kFamilies.end()) {
    throw UsageError("unknown family " + family);
  }
  if (range.first < 1) throw UsageError("digit-counts start at 1");
  bool mismatch = false;
  Json rows = Json::array();

  for (Count n = range.first; n <= range.last; ++n) {
    if (family == "catalogue") {
      const auto expected = count_catalogue(b, n);
      std::optional<ClassCounts> observed;
      if (check_oracle) observed = class_counts(survey(b, n, options));
      Json classes = Json::object();
      for (ClassTag tag : kAllClassTags) {
        Count e = expected.contains(tag) ? expected.at(tag) : 0;
        Count o = observed && observed->contains(tag) ? observed->at(tag) : 0;
        if (e == 0 && o == 0) continue;
        bool diff = observed && e != o;
        mismatch = mismatch || diff;
        if (json) {
          classes[to_string(tag)] = observed ? Json{{"formula", e}, {"oracle", o}} : Json(e);
        } else {
          out << n << "  " << to_string(tag) << "  " << e;
          if (observed) out << "  oracle " << o << (diff ? "  MISMATCH" : "");
          out << '\n';
        }
      }
      if (json) rows.push_back(Json{{"n", n}, {"classes", classes}});
      continue;
    }

    auto value = formula_value(family, b, n);
    if (!value) continue;
    Json row{{"n", n}, {"value", *value}};
    if (!json) out << n << "  " << *value;
    if (check_oracle) {
      Count o = oracle_value(family, survey(b, n, options));
      bool diff = o != *value;
      mismatch = mismatch || diff;
      row["oracle"] = o;
      if (!json) out << "  oracle " << o << (diff ? "  MISMATCH" : "");
    }
    if (!json) out << '\n';
    rows.push_back(row);
  }

  if (json) {
    Json params{{"base", b}, {"family", family}, {"n", Json{range.first, range.last}}, {"check_oracle", check_oracle}};
    out << envelope("enumerate", params, rows).dump(2) << '\n';
  }
  return mismatch ? kVerificationFailed : kOk;
}

// ---------------------------------------------------------------------------

int cmd_sigma(Range range, std::ostream& out) {
  if (range.first == range.last && (range.first % 2 == 0 || range.first < 3)) {
    throw DomainError("sigma is defined for odd r >= 3, got " + std::to_string(range.first));
  }
  for (long long r = std::max(3LL, range.first); r <= range.last; ++r) {
    if (r % 2 == 0) continue;
    out << r << "  " << sigma(r) << '\n';
  }
  return kOk;
}

int cmd_icycles(Count top, std::ostream& out) {
  const auto partition = i_cycles(top);
  out << "B=" << top << "  sigma(B)=" << sigma(top) << '\n';
  for (const auto& cycle : partition.cycles) {
    out << '(';
    for (std::size_t j = 0; j < cycle.size(); ++j) out << (j ? "," : "") << cycle[j];
    out << ")\n";
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct CompareSettings {
  std::string kind = "kaprekar";
  int base = 4;
  std::string values_path;
  std::string lengths_path;
  std::optional<Count> offset;
  std::string format = "digits";
  Count n_min = 2;
  Count n_max = 0;  // 0: until the b-file is consumed or the budget stops us
};

int compare_sigma(const CompareSettings& settings, std::ostream& out) {
  const auto file = BFile::load(settings.values_path);
  const Count offset = settings.offset.value_or(0);
  Count mismatches = 0;
  for (const auto& e : file.entries) {
    Count r = 2 * (e.index - offset) + 1;
    if (r < 1) throw UsageError("index " + std::to_string(e.index) + " precedes the offset");
    std::string mine = std::to_string(r == 1 ? 1 : sigma(r));
    if (mine != e.value) {
      ++mismatches;
      out << "MISMATCH index " << e.index << " (r=" << r << "): file " << e.value << ", computed " << mine << '\n';
    }
  }
  out << "compared " << file.entries.size() << " entries: " << mismatches << " mismatch(es)\n";
  return mismatches == 0 ? kOk : kVerificationFailed;
}

int compare_kaprekar(const CompareSettings& settings, const SurveyOptions& options, std::ostream& out) {
  const auto values = BFile::load(settings.values_path);
  std::optional<BFile> lengths;
  if (!settings.lengths_path.empty()) lengths = BFile::load(settings.lengths_path);
  if (settings.format != "digits" && settings.format != "decimal") {
    throw UsageError("format must be digits or decimal");
  }

  std::size_t pos = 0;
  if (settings.offset) {
    while (pos < values.entries.size() && values.entries[pos].index < *settings.offset) ++pos;
  }
  std::map<Count, std::string> length_by_index;
  if (lengths) {
    for (const auto& e : lengths->entries) length_by_index[e.index] = e.value;
  }

  const std::size_t start = pos;
  Count mismatches = 0;
  Count warnings = 0;
  Count n = settings.n_min;
  Count last_n = n - 1;
  int status = kOk;
  while (pos < values.entries.size() && (settings.n_max == 0 || n <= settings.n_max)) {
    if (composition_count(settings.base, n) > options.budget) {
      out << "stopped at n=" << n << ": state count exceeds the budget\n";
      status = kBudgetExceeded;
      break;
    }
    const auto report = survey(settings.base, n, options);
    using Item = std::pair<std::string, std::string>;  // value, length
    std::vector<Item> ours;
    for (const auto& e : report.entries) {
      const auto& lead = e.cycle.realized.front();
      ours.emplace_back(settings.format == "decimal" ? to_decimal(lead) : strip_leading_zeros(lead),
                        std::to_string(e.cycle.length()));
    }
    const std::size_t take = std::min(ours.size(), values.entries.size() - pos);
    std::vector<Item> theirs;
    for (std::size_t j = 0; j < take; ++j) {
      const auto& entry = values.entries[pos + j];
      std::string len = ours[j].second;
      if (lengths) {
        auto it = length_by_index.find(entry.index);
        len = it == length_by_index.end() ? "?" : it->second;
      }
      theirs.emplace_back(entry.value, len);
    }

    std::vector<Item> head(ours.begin(), ours.begin() + static_cast<std::ptrdiff_t>(take));
    if (theirs != head) {
      auto sorted_ours = ours;
      auto sorted_theirs = theirs;
      std::sort(sorted_ours.begin(), sorted_ours.end());
      std::sort(sorted_theirs.begin(), sorted_theirs.end());
      bool contained = std::includes(sorted_ours.begin(), sorted_ours.end(), sorted_theirs.begin(), sorted_theirs.end());
      if (contained) {
        ++warnings;
        out << "WARNING n=" << n << ": same entries in a different order\n";
      } else {
        ++mismatches;
        out << "MISMATCH n=" << n << ": file";
        for (const auto& [v, l] : theirs) out << ' ' << v << "(l=" << l << ')';
        out << "; computed";
        for (const auto& [v, l] : ours) out << ' ' << v << "(l=" << l << ')';
        out << '\n';
      }
    }
    pos += take;
    last_n = n;
    ++n;
  }
  out << "compared " << (pos - start) << " entries over n=" << settings.n_min << ".." << last_n << ": " << mismatches
      << " mismatch(es), " << warnings << " ordering warning(s)\n";
  if (mismatches > 0) return kVerificationFailed;
  return status;
}

// ---------------------------------------------------------------------------

int cmd_verify(int b, Range range, const SurveyOptions& options, std::ostream& out) {
  if (b < 4 || b % 2 != 0) throw UsageError("verify needs an even base >= 4");
  if (range.first < 2) throw UsageError("digit-counts start at 2");
  const bool catalogued = b == 4 || b == 6 || b == 8;
  bool clean = true;
  for (Count n = range.first; n <= range.last; ++n) {
    const auto violations = property_sweep(b, n, options);
    const auto report = survey(b, n, options);
    out << "n=" << n << ": " << violations.size() << " property violation(s), " << report.unclassified_count
        << " unclassified";
    clean = clean && violations.empty() && report.unclassified_count == 0;
    for (const auto& v : violations) out << "\n  " << v.property << " at " << v.state.to_string() << ": " << v.detail;
    if (catalogued) {
      const auto diff = verify_against_catalogue(report);
      out << ", catalogue " << (diff.empty() ? "matches" : "differs");
      clean = clean && diff.empty();
      for (const auto& c : diff.missing) out << "\n  missing " << c.lead().to_string() << " l=" << c.length();
      for (const auto& c : diff.extra) out << "\n  uncatalogued " << c.lead().to_string() << " l=" << c.length();
      for (const auto& m : diff.label_mismatches) {
        out << "\n  label " << m.cycle.lead().to_string() << ": expected " << describe(m.expected) << ", found "
            << describe(m.observed);
      }
      for (const auto& m : diff.count_mismatches) {
        out << "\n  count " << to_string(m.tag) << ": expected " << m.expected << ", found " << m.observed;
      }
    }
    out << '\n';
  }
  if (b == 4) {
    const auto replay = base4::replay_exhaustion(range.last);
    out << "succession table replay to n=" << range.last << ": " << replay.states << " states, "
        << replay.formula_mismatches << " formula mismatch(es), " << replay.overlapping_guards << " overlap(s), "
        << replay.uncovered << " uncovered, " << replay.full_cycles << " full cycle(s)\n";
    clean = clean && replay.ok();
  }
  out << (clean ? "verified" : "verification FAILED") << '\n';
  return clean ? kOk : kVerificationFailed;
}

}  // namespace

// ---------------------------------------------------------------------------

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kaprekar transformation on digit multisets in arbitrary bases", "kaprekar"};
  app.require_subcommand(1);

  std::optional<Count> budget;
  unsigned workers = 0;
  app.add_option("--budget", budget, "maximum number of states per survey (default $KAPREKAR_BUDGET or 50000000)");
  app.add_option("--workers", workers, "threads for surveys (0: hardware concurrency)");

  int base = 10;
  Count n = 0;
  std::string n_text;

  auto* step = app.add_subcommand("step", "apply the transformation to a digit string or index");
  std::string digits, index_text;
  Count count = 1;
  step->add_option("-b,--base", base, "base")->required();
  auto* x_opt = step->add_option("-x,--digits", digits, "digits, e.g. 2022 or 31,5,0");
  step->add_option("--index", index_text, "Kaprekar index, e.g. 1,0,0,1")->excludes(x_opt);
  step->add_option("-m,--count", count, "number of steps")->check(CLI::NonNegativeNumber);

  auto* survey_cmd = app.add_subcommand("survey", "census of every fixed point and cycle for one digit-count");
  bool json = false, csv = false;
  std::string order = "value";
  survey_cmd->add_option("-b,--base", base, "base")->required();
  survey_cmd->add_option("-n,--digits", n, "digit-count")->required();
  auto* json_flag = survey_cmd->add_flag("--json", json, "JSON envelope");
  survey_cmd->add_flag("--csv", csv, "CSV rows")->excludes(json_flag);
  survey_cmd->add_option("--order", order, "lead member by realized value or index")
      ->check(CLI::IsMember({"value", "index"}));

  auto* enumerate = app.add_subcommand("enumerate", "evaluate counting formulas over a range of digit-counts");
  std::string family;
  bool check_oracle = false;
  enumerate->add_option("-b,--base", base, "base")->required();
  enumerate->add_option("--family", family, "family")->required()->check(CLI::IsMember(kFamilies));
  enumerate->add_option("-n,--digits", n_text, "digit-count or range a..b")->required();
  enumerate->add_flag("--check-oracle", check_oracle, "compare with exhaustive surveys");
  enumerate->add_flag("--json", json, "JSON envelope");

  auto* sigma_cmd = app.add_subcommand("sigma", "least m with 2^m = +-1 mod r, for odd r");
  std::string r_text;
  sigma_cmd->add_option("range", r_text, "r or a..b")->required();

  auto* icycles = app.add_subcommand("icycles", "partition of 1..(B-1)/2 under doubling with reflection");
  Count top = 0;
  icycles->add_option("B", top, "odd modulus")->required();

  auto* compare = app.add_subcommand("compare-bfile", "compare regenerated sequences with OEIS b-files");
  CompareSettings cmp;
  compare->add_option("--kind", cmp.kind, "kaprekar or sigma")->check(CLI::IsMember({"kaprekar", "sigma"}));
  compare->add_option("-b,--base", cmp.base, "base (kaprekar kind)");
  compare->add_option("--values", cmp.values_path, "fixed points and least cycle members, or sigma values")
      ->required();
  compare->add_option("--lengths", cmp.lengths_path, "cycle lengths (kaprekar kind)");
  compare->add_option("--offset", cmp.offset, "b-file index of the first compared entry");
  compare->add_option("--format", cmp.format, "value format")->check(CLI::IsMember({"digits", "decimal"}));
  compare->add_option("--n-min", cmp.n_min, "first digit-count");
  compare->add_option("--n-max", cmp.n_max, "last digit-count");

  auto* verify = app.add_subcommand("verify", "property sweep, catalogue check and (base 4) table replay");
  verify->add_option("-b,--base", base, "base")->required();
  verify->add_option("-n,--digits", n_text, "digit-count or range a..b")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  SurveyOptions options;
  options.workers = workers;
  try {
    options.budget = resolve_budget(budget);
    if (*step) {
      if (digits.empty() && index_text.empty()) throw UsageError("step needs -x or --index");
      return cmd_step(base, digits, index_text, count, out);
    }
    if (*survey_cmd) {
      options.ordering = order == "index" ? MemberOrdering::IndexLex : MemberOrdering::RealizedValue;
      return cmd_survey(base, n, options, json, csv, out);
    }
    if (*enumerate) return cmd_enumerate(base, family, parse_range(n_text), check_oracle, json, options, out);
    if (*sigma_cmd) return cmd_sigma(parse_range(r_text), out);
    if (*icycles) return cmd_icycles(top, out);
    if (*compare) return cmp.kind == "sigma" ? compare_sigma(cmp, out) : compare_kaprekar(cmp, options, out);
    if (*verify) return cmd_verify(base, parse_range(n_text), options, out);
  } catch (const BudgetExceededError& e) {
    err << "error: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace kaprekar::cli
