#include <sstream>

#include "doctest.h"
#include "kaprekar/bfile.hpp"
#include "kaprekar/report.hpp"

using namespace kaprekar;

TEST_CASE("labels round trip through JSON") {
  ClassLabel label{ClassTag::OtherZeroFreeFP, "b", {{"t", 3}, {"epsilon", 1}}, true};
  auto j = to_json(label);
  CHECK(j["class"] == "other-zero-free-fp");
  CHECK(j["params"]["epsilon"] == 1);
  CHECK(label_from_json(j) == label);
  CHECK_THROWS_AS(label_from_json(Json{{"class", "bogus"}, {"variant", ""}, {"params", Json::object()}}), Error);
}

TEST_CASE("surveys round trip through JSON") {
  for (auto [b, n] : {std::pair{4, 9}, {6, 7}, {8, 5}, {10, 4}}) {
    auto report = survey(b, n);
    auto text = to_json(report).dump();
    CHECK(survey_from_json(Json::parse(text)) == report);
  }
}

TEST_CASE("envelope") {
  auto e = envelope("survey", Json{{"base", 4}}, Json::array());
  CHECK(e["schema_version"] == kSchemaVersion);
  CHECK(e["command"] == "survey");
  CHECK(e["parameters"]["base"] == 4);
  CHECK(e["results"].is_array());
}

TEST_CASE("csv rows") {
  std::ostringstream out;
  write_csv(out, survey(4, 5));
  CHECK(out.str() ==
        "base,n,length,class,variant,params,basin,lead_index,lead_value,unanimous\n"
        "4,5,2,special-cycle,,,52,\"(1,0,3,1)\",\"20322\",1\n");
  CHECK(format_params({{"k0", 1}, {"k1", 2}}) == "k0=1;k1=2");
}

TEST_CASE("b-file parsing") {
  auto f = BFile::parse_text("# A003558\n\n0 1\n1 1\n2 2\n3 123456789012345678901234567890\n");
  REQUIRE(f.entries.size() == 4);
  CHECK(f.entries[2].index == 2);
  CHECK(f.entries[3].value == "123456789012345678901234567890");
}

TEST_CASE("b-file parse errors carry line numbers") {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      BFile::parse_text(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("1 2\n2\n") == 2);
  CHECK(line_of("1 2\n2 x\n") == 2);
  CHECK(line_of("# c\n1 2\n1 3\n") == 3);
  CHECK(line_of("1 2 3\n") == 1);
  CHECK(line_of("a 2\n") == 1);
  CHECK_THROWS_AS(BFile::load("/nonexistent/b-file.txt"), Error);
}

TEST_CASE("decimal conversion") {
  auto s = DigitString::parse(BaseConfig(4), "0032");
  CHECK(to_decimal(s) == "14");
  CHECK(strip_leading_zeros(s) == "32");
  CHECK(strip_leading_zeros(DigitString::parse(BaseConfig(4), "000")) == "0");
  std::vector<Digit> wide(40, 7);
  CHECK(to_decimal(DigitString(BaseConfig(8), wide)) == "1329227995784915872903807060280344575");
}
