#include "nsbound/ideal_file.hpp"
#include "nsbound/report.hpp"

#include "corpus.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <regex>

using namespace nsbound;

namespace {

IdealPresentation load(const std::string& name) {
  return load_ideal_file(std::string(NSBOUND_DATA_DIR) + "/" + name);
}

} // namespace

TEST(IdealFile, ParsesHeaderCommentsAndGenerators) {
  const IdealPresentation ideal =
      parse_ideal_file("# a comment\n\nvars 4   # P^3\nx0*x3 - x1*x2\n  \n# end\n");
  EXPECT_EQ(ideal.r(), 3u);
  ASSERT_EQ(ideal.generators().size(), 1u);
  EXPECT_EQ(ideal.generators()[0], parse_polynomial("x0*x3 - x1*x2", 3));
}

TEST(IdealFile, ErrorsNameTheLine) {
  const auto expect_line = [](const std::string& text, std::size_t line) {
    try {
      parse_ideal_file(text, "f.ideal");
      ADD_FAILURE() << "no error for: " << text;
    } catch (const IdealFileError& e) {
      EXPECT_EQ(e.line(), line) << e.what();
      EXPECT_EQ(std::string(e.what()).rfind("f.ideal:" + std::to_string(line) + ":", 0), 0u);
    }
  };
  expect_line("x0\n", 1);
  expect_line("vars 1\nx0\n", 1);
  expect_line("vars 3\nx0\nx0^2 + x1\n", 3);
  expect_line("vars 3\n\nx7\n", 3);
  expect_line("vars 3\nx0 - x0\n", 2);
  // Reported at end of input.
  expect_line("vars 3\n# nothing\n", 3);
}

TEST(IdealFile, BundledDataLoads) {
  EXPECT_EQ(invariants(load("quadric.ideal")).hp.to_string(), "t^2+2t+1");
  EXPECT_EQ(invariants(load("twisted_cubic.ideal")).hp.to_string(), "3t+1");
  EXPECT_EQ(invariants(load("complete_intersection.ideal")).degree, 6);
  EXPECT_EQ(invariants(load("cubic_threefold.ideal")).dim, 3u);
  EXPECT_TRUE(invariants(load("hyperplane.ideal")).contained_in_hyperplane);
  EXPECT_THROW(load_ideal_file("/nonexistent/file.ideal"), std::runtime_error);
}

TEST(JsonEncoding, Integers) {
  EXPECT_TRUE(integer_to_json(mpz_class(42)).is_number_integer());
  const mpz_class big = oracle::ipow(56, 18);
  const Json j = integer_to_json(big);
  EXPECT_TRUE(j.is_string());
  EXPECT_EQ(integer_from_json(j), big);
  EXPECT_EQ(integer_from_json(integer_to_json(mpz_class(-7))), -7);
}

TEST(JsonEncoding, TowerRoundTrip) {
  TowerContext small;
  small.exact_bit_limit = 32;
  const std::vector<TowerNumber> values = {
      TowerNumber::exact(0),
      TowerNumber::exact(oracle::ipow(3, 100)),
      power(mpz_class(3), mpz_class(1000), small),
      TowerNumber::tower(2, BigFloat::from_int(216)),
      effective_divisor_bound(2, 3),
  };
  for (const auto& v : values) {
    const TowerNumber back = tower_from_json(tower_to_json(v));
    EXPECT_EQ(back, v) << v.to_string();
  }
  EXPECT_EQ(tower_to_json(values[3])["kind"], "tower");
}

TEST(JsonEncoding, HilbertPolynomialRoundTrip) {
  for (const auto& e : corpus::varieties()) {
    const VarietyInvariants inv = invariants(corpus::ideal(e));
    EXPECT_EQ(hilbert_polynomial_from_json(hilbert_polynomial_to_json(inv.hp)), inv.hp);
    EXPECT_EQ(invariants_from_json(invariants_to_json(inv)), inv) << e.name;
  }
}

TEST(JsonEncoding, ReportRoundTrip) {
  PipelineOptions smooth;
  smooth.check_smooth = true;
  PipelineOptions faithful;
  faithful.closed_form_only = true;
  const std::vector<BoundReport> reports = {
      full_pipeline(load("quadric.ideal"), smooth),
      full_pipeline(load("twisted_cubic.ideal")),
      full_pipeline(load("cubic_threefold.ideal")),
      full_pipeline(load("hyperplane.ideal")),
      full_pipeline(load("quadric.ideal"), faithful),
  };
  for (const auto& rep : reports) {
    const Json j = report_to_json(rep);
    EXPECT_EQ(j["schema"], report_schema);
    EXPECT_EQ(report_from_json(j), rep) << j.dump(2);
    // Serialization is a pure function of the report.
    EXPECT_EQ(report_to_json(report_from_json(j)).dump(), j.dump());
  }
}

TEST(JsonEncoding, ReportFields) {
  const Json j = report_to_json(full_pipeline(load("quadric.ideal")));
  for (const char* key : {"schema", "input", "invariants", "smoothness", "hypotheses",
                          "degenerate", "closed_form", "sharpened", "warnings"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["invariants"]["hp"], "t^2+2t+1");
  EXPECT_EQ(j["closed_form"]["t"]["value"], 429981696);
  EXPECT_EQ(j["sharpened"]["t"]["value"], 24);
  // Formula descriptions stay self-contained.
  const std::regex citation("(Thm|Theorem|Lemma|Section|§)");
  for (const char* section : {"closed_form", "sharpened"})
    for (const auto& [key, field] : j[section].items())
      if (field.is_object() && field.contains("formula"))
        EXPECT_FALSE(std::regex_search(field["formula"].get<std::string>(), citation)) << key;
}

TEST(JsonEncoding, GotzmannAndOutcome) {
  const HilbertPolynomial q = parse_hilbert_polynomial("3t+1");
  const Json g = gotzmann_to_json(q, gotzmann_decomposition(q));
  EXPECT_EQ(g["phi"], 4);
  EXPECT_EQ(g["decomposition"], Json::parse("[1,1,1,0]"));
  const Json o = outcome_to_json(check_binom_lt_power(2, 16));
  EXPECT_EQ(o["check"], "binom_lt_power");
  EXPECT_EQ(o["holds"], true);
  EXPECT_EQ(o["params"]["t"], 16);
}

TEST(TextRendering, MentionsKeyQuantities) {
  const BoundReport rep = full_pipeline(load("quadric.ideal"));
  const std::string text = render_report(rep, false);
  EXPECT_NE(text.find("429981696"), std::string::npos);
  EXPECT_NE(text.find("2^(2^216)"), std::string::npos);
  EXPECT_NE(render_invariants(rep.invariants, std::nullopt).find("t^2+2t+1"), std::string::npos);
  const std::string degenerate = render_report(full_pipeline(load("twisted_cubic.ideal")), false);
  EXPECT_NE(degenerate.find("curve"), std::string::npos);
}
