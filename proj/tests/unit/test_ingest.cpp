#include "metabel/errors.hpp"
#include "metabel/ingest.hpp"
#include "metabel/report.hpp"

#include "corpus.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace metabel;

namespace {

const std::filesystem::path kSamples = METABEL_SAMPLES_DIR;

std::string parse_error_location(std::string_view text, bool csv = false) {
  try {
    csv ? parse_knot_csv(text) : parse_knot_json(text);
  } catch (const ParseError& e) {
    return e.location();
  }
  FAIL("expected a ParseError");
  return {};
}

}  // namespace

TEST_SUITE("ingest") {
  TEST_CASE("bundled samples file") {
    const auto records = parse_knot_file(kSamples / "knots.json");
    REQUIRE(records.size() == 3);
    CHECK(records[0].name == "3_1");
    CHECK(records[1].name == "4_1");
    CHECK(records[2].name == "10_99");
    CHECK(records[0].seifert == corpus::kTrefoil);
    CHECK(records[1].seifert == corpus::kFigureEight);
    CHECK(records[2].seifert == corpus::k10_99);
    for (const auto& r : records) CHECK(r.expected.has_value());
  }

  TEST_CASE("embedded corpus matches the samples file") {
    const auto embedded = bundled_corpus();
    const auto file = parse_knot_file(kSamples / "knots.json");
    REQUIRE(embedded.size() == file.size());
    for (std::size_t i = 0; i < file.size(); ++i) {
      CHECK(embedded[i].name == file[i].name);
      CHECK(embedded[i].seifert == file[i].seifert);
    }
    CHECK(find_knot(embedded, "10_99") != nullptr);
    CHECK(find_knot(embedded, "5_2") == nullptr);
  }

  TEST_CASE("expected decompositions in the corpus agree with the oracle") {
    for (const auto& r : bundled_corpus()) {
      PipelineOptions o;
      o.with_oracle = true;
      const KnotReport rep = analyze_knot(r, o);
      REQUIRE(rep.oracle.has_value());
      CHECK(equivalent(rep.oracle->decomposition, *r.expected));
    }
  }

  TEST_CASE("CSV samples with both minus signs") {
    const auto csv = parse_knot_file(kSamples / "knots.csv");
    const auto json = parse_knot_file(kSamples / "knots.json");
    REQUIRE(csv.size() == json.size());
    for (std::size_t i = 0; i < csv.size(); ++i) {
      CHECK(csv[i].name == json[i].name);
      CHECK(csv[i].seifert == json[i].seifert);
    }
  }

  TEST_CASE("empty inputs") {
    CHECK(parse_knot_json("[]").empty());
    CHECK(parse_knot_json("  [ ]\n").empty());
    CHECK(parse_knot_csv("name,seifert\n").empty());
  }

  TEST_CASE("whitespace and unicode minus in JSON") {
    const auto r = parse_knot_json("[ {\"name\" : \"k\",\n \"seifert\": [[ \xE2\x88\x92" "1, 1 ],[0,\xE2\x88\x92" "1]] } ]");
    REQUIRE(r.size() == 1);
    CHECK(r[0].seifert == corpus::kTrefoil);
  }

  TEST_CASE("headerless CSV with spaces") {
    const auto r = parse_knot_csv("3_1 ,  \"[[-1, 1], [0, -1]]\"\n\n4_1,[[1,1],[0,-1]]\n");
    REQUIRE(r.size() == 2);
    CHECK(r[1].seifert == corpus::kFigureEight);
  }

  TEST_CASE("errors carry locations") {
    CHECK(parse_error_location(R"([{"name": "a", "seifert": [[1]]}, {"name": "b", "seifert": [[1, 2], [3]]}])") ==
          "record 1 (b)");
    CHECK(parse_error_location(R"([{"name": "a", "seifert": [[1.5]]}])") == "record 0 (a)");
    CHECK(parse_error_location(R"([{"seifert": [[1]]}])") == "record 0");
    CHECK(parse_error_location("[{\"name\": ").rfind("byte", 0) == 0);
    CHECK(parse_error_location(R"({"name": "a"})") == "document");
    CHECK(parse_error_location("name,seifert\na,\"[[1,2],[3]]\"\n", true) == "line 2");
    CHECK(parse_error_location("name,seifert\na,\"[[1,x]]\"\n", true) == "line 2");
    CHECK(parse_error_location("name,seifert\na,\"[[1]]\n", true) == "line 2");
    CHECK_THROWS_AS(parse_knot_file(kSamples / "missing.json"), ParseError);
  }

  TEST_CASE("bracket matrices") {
    CHECK(parse_bracket_matrix("[[-1,1],[0,-1]]") == corpus::kTrefoil);
    CHECK(parse_bracket_matrix(" [ [ 1 , 1 ] , [ 0 , -1 ] ] ") == corpus::kFigureEight);
    CHECK(parse_bracket_matrix("[]").empty());
    CHECK_THROWS_AS(parse_bracket_matrix("[[1,2]"), std::invalid_argument);
    CHECK(format_matrix(corpus::kTrefoil) == "[[-1, 1], [0, -1]]");
  }
}

TEST_SUITE("report") {
  TEST_CASE("JSON round trip") {
    PipelineOptions o;
    o.with_oracle = true;
    for (const auto& r : bundled_corpus()) {
      const KnotReport rep = analyze_knot(r, o);
      const nlohmann::json j = to_json(rep);
      const KnotReport back = knot_report_from_json(nlohmann::json::parse(j.dump()));
      CHECK(to_json(back) == j);
      CHECK(back.alexander.delta == rep.alexander.delta);
      CHECK(back.decomposition.classes.size() == rep.decomposition.classes.size());
      CHECK(back.agreement == rep.agreement);
    }
  }

  TEST_CASE("reports are deterministic without timing") {
    PipelineOptions o;
    o.with_oracle = true;
    const auto records = bundled_corpus();
    std::vector<KnotReport> a, b;
    for (const auto& r : records) a.push_back(analyze_knot(r, o));
    for (const auto& r : records) b.push_back(analyze_knot(r, o));
    CHECK(report_document("verify", a, false).dump(2) == report_document("verify", b, false).dump(2));
    CHECK_FALSE(report_document("verify", a, false).dump().find("elapsed_ms") != std::string::npos);
    CHECK(report_document("verify", a, true).dump().find("elapsed_ms") != std::string::npos);
  }

  TEST_CASE("10_99 report content") {
    PipelineOptions o;
    o.with_oracle = true;
    const KnotReport rep = analyze_knot(*find_knot(bundled_corpus(), "10_99"), o);
    const nlohmann::json j = to_json(rep, false);
    CHECK(j["alexander"]["delta"] == "1 - 4*t + 10*t^2 - 16*t^3 + 19*t^4 - 16*t^5 + 10*t^6 - 4*t^7 + t^8");
    CHECK(j["decomposition"]["classes"][0]["factor"] == "1 - t + t^2");
    CHECK(j["decomposition"]["classes"][0]["exponents"] == nlohmann::json::array({2, 2}));
    CHECK(j["decomposition"]["classes"][0]["over_complex"] ==
          nlohmann::json::array({"Lambda/(t - a)^2", "Lambda/(t - a)^2", "Lambda/(t - a^-1)^2", "Lambda/(t - a^-1)^2"}));
    CHECK(j["agreement"] == true);
    CHECK(j["expected_match"] == true);
    CHECK(j["genus"] == 4);

    const std::string text = to_text(rep, false);
    CHECK(text.find("t^2 - t + 1, multiplicity 4") != std::string::npos);
    CHECK(text.find("filtration exponents: {2, 2}") != std::string::npos);
  }

  TEST_CASE("schema violations are parse errors") {
    nlohmann::json j = to_json(analyze_knot(bundled_corpus()[0], {}));
    j.erase("decomposition");
    CHECK_THROWS_AS(knot_report_from_json(j), ParseError);
    j = to_json(analyze_knot(bundled_corpus()[0], {}));
    j["alexander"]["delta"] = "1 + x";
    CHECK_THROWS_AS(knot_report_from_json(j), ParseError);
  }

  TEST_CASE("representation reports") {
    const SeifertData s = validate_seifert("3_1", corpus::kTrefoil);
    const RepresentationReport r = build_representations(s, 3, 50, 9);
    REQUIRE(r.entries.size() == 1);
    CHECK(r.all_passed());
    const nlohmann::json j = to_json(r);
    CHECK(j["representations"][0]["meridian"] ==
          nlohmann::json::parse(R"([["a", "0", "0"], ["0", "1", "1"], ["0", "0", "1"]])"));
    CHECK(to_json(build_representations(s, 3, 50, 9)).dump() == j.dump());
  }
}
