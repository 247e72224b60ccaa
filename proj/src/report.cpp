#include "kaprekar/report.hpp"

#include <ostream>

namespace kaprekar {

Json to_json(const ClassLabel& label) {
  Json params = Json::object();
  for (const auto& [name, value] : label.params) params[name] = value;
  return Json{{"class", to_string(label.tag)}, {"variant", label.variant}, {"params", params},
              {"uniform", label.uniform}};
}

ClassLabel label_from_json(const Json& j) {
  ClassLabel label;
  auto tag = class_tag_from_string(j.at("class").get<std::string>());
  if (!tag) throw Error("unknown class " + j.at("class").get<std::string>());
  label.tag = *tag;
  label.variant = j.at("variant").get<std::string>();
  for (const auto& [name, value] : j.at("params").items()) label.params.emplace_back(name, value.get<Count>());
  label.uniform = j.at("uniform").get<bool>();
  return label;
}

Json to_json(const SurveyReport& report) {
  Json cycles = Json::array();
  for (const auto& e : report.entries) {
    Json members = Json::array();
    Json realized = Json::array();
    for (const auto& m : e.cycle.members) members.push_back(m.counts());
    for (const auto& s : e.cycle.realized) realized.push_back(s.to_string());
    cycles.push_back(Json{{"length", e.cycle.length()},
                          {"label", to_json(e.label)},
                          {"members", members},
                          {"realized", realized},
                          {"basin", e.basin}});
  }
  return Json{{"base", report.base},
              {"digit_count", report.digit_count},
              {"total_states", report.total_states},
              {"to_zero", report.to_zero},
              {"unanimous", report.unanimous.has_value()},
              {"unclassified_count", report.unclassified_count},
              {"cycles", cycles}};
}

SurveyReport survey_from_json(const Json& j) {
  SurveyReport report;
  report.base = j.at("base").get<int>();
  report.digit_count = j.at("digit_count").get<Count>();
  report.total_states = j.at("total_states").get<Count>();
  report.unclassified_count = j.at("unclassified_count").get<Count>();
  report.to_zero = j.value("to_zero", Count{0});
  const BaseConfig base(report.base);
  for (const auto& c : j.at("cycles")) {
    CycleRecord record{base, report.digit_count, {}, {}};
    for (const auto& m : c.at("members")) record.members.emplace_back(base, m.get<std::vector<Count>>());
    for (const auto& s : c.at("realized")) record.realized.push_back(DigitString::parse(base, s.get<std::string>()));
    report.entries.push_back(SurveyEntry{std::move(record), label_from_json(c.at("label")), c.at("basin").get<Count>()});
  }
  if (j.at("unanimous").get<bool>()) {
    if (report.entries.size() != 1) throw Error("unanimous report must hold exactly one cycle");
    report.unanimous = report.entries.front().cycle;
  }
  return report;
}

Json envelope(const std::string& command, Json parameters, Json results) {
  return Json{{"schema_version", kSchemaVersion},
              {"command", command},
              {"parameters", std::move(parameters)},
              {"results", std::move(results)}};
}

std::string format_params(const FamilyParams& params) {
  std::string out;
  for (const auto& [name, value] : params) {
    if (!out.empty()) out += ';';
    out += name + "=" + std::to_string(value);
  }
  return out;
}

void write_csv(std::ostream& out, const SurveyReport& report) {
  out << "base,n,length,class,variant,params,basin,lead_index,lead_value,unanimous\n";
  for (const auto& e : report.entries) {
    std::string index = e.cycle.lead().to_string();
    out << report.base << ',' << report.digit_count << ',' << e.cycle.length() << ',' << to_string(e.label.tag)
        << ',' << e.label.variant << ',' << format_params(e.label.params) << ',' << e.basin << ",\"" << index
        << "\",\"" << e.cycle.realized.front().to_string() << "\"," << (report.unanimous ? 1 : 0) << '\n';
  }
}

}  // namespace kaprekar
