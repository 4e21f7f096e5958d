#include "doctest.h"

#include "g2root/suites.hpp"

using namespace g2root;
using namespace g2root::report;

namespace {

const char* kExample = R"({"P": ["1/4", "5/2", "-5/4", "-5/2", "5/4", "1"]})";

Json place(const Json& report, const std::string& id) {
  for (const auto& p : report["places"])
    if (p["place"] == id) return p;
  return nullptr;
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("curve input parsing") {
  auto in = parse_curve_input(R"({"P": ["1/4", "5/2", "-5/4", "-5/2", "5/4", "1"], "assertions": {"2": "+1"}, "precision": 60})");
  CHECK(in.equation.degree() == 5);
  CHECK(in.assertions.at(2) == Sign::plus);
  CHECK(in.precision == 60u);
  CHECK(parse_curve_input(R"({"P": [1, "2", 0, 0, 0, 1]})").equation.poly()[0] == 1);
  CHECK_THROWS_AS(parse_curve_input("{"), DomainError);
  CHECK_THROWS_AS(parse_curve_input(R"({"Q": []})"), DomainError);
  CHECK_THROWS_AS(parse_curve_input(R"({"P": "x"})"), DomainError);
  CHECK_THROWS_AS(parse_curve_input(R"({"P": ["1", "1/0", "0", "0", "0", "1"]})"), DomainError);
  CHECK_THROWS_AS(parse_curve_input(R"({"P": ["0", "0", "1", "0", "0", "1"]})"), genus2::SingularCurveError);
  CHECK_THROWS_AS(parse_curve_input(R"({"P": ["1", "0", "0", "0", "0", "1"], "assertions": {"2": "0"}})"),
                  DomainError);
}

TEST_CASE("assertion parsing") {
  CHECK(parse_assertion("2=+1") == std::pair<long, Sign>{2, Sign::plus});
  CHECK(parse_assertion("7=-1") == std::pair<long, Sign>{7, Sign::minus});
  CHECK(parse_assertion("3=1").second == Sign::plus);
  CHECK_THROWS_AS(parse_assertion("4=+1"), DomainError);
  CHECK_THROWS_AS(parse_assertion("2=0"), DomainError);
  CHECK_THROWS_AS(parse_assertion("2"), DomainError);
  CHECK_THROWS_AS(parse_assertion("=+1"), DomainError);
}

TEST_CASE("analyze report of the worked example") {
  auto eq = parse_curve_input(kExample).equation;
  auto opts = genus2::default_normalize_options();
  Json r = analyze_report(eq, {{2, Sign::plus}}, opts);
  CHECK(r["report"] == "analyze");
  CHECK(r["discriminant"] == "-896875");
  CHECK(r["global"] == 1);
  CHECK(place(r, "5")["root_number"] == -1);
  CHECK(place(r, "7")["root_number"] == -1);
  CHECK(place(r, "41")["root_number"] == 1);
  CHECK(place(r, "inf")["root_number"] == 1);
  CHECK(place(r, "2")["kind"] == "asserted");
  // byte-identical on repeat
  CHECK(r.dump() == analyze_report(eq, {{2, Sign::plus}}, opts).dump());
  Json partial = analyze_report(eq, {}, opts);
  CHECK(partial["global"] == "PARTIAL");
  std::string text = render_text(r);
  CHECK(text.find("global root number: +1") != std::string::npos);
  CHECK(render_text(partial).find("PARTIAL") != std::string::npos);
}

TEST_CASE("disc, normalize and classify reports") {
  auto eq = parse_curve_input(kExample).equation;
  auto opts = genus2::default_normalize_options();
  Json d = disc_report(eq);
  CHECK(d["discriminant"] == "-896875");
  CHECK(d["valuations"]["5"] == 5);
  Json n = normalize_report(eq, opts);
  CHECK(n["wild5"]["status"] == "proved");
  CHECK(n["normalization"]["special_form"]["a6"] == "5/4");
  CHECK(n["normalization"]["special_form"]["v6"] == 1);
  Json c = classify_report(eq, opts);
  CHECK(c["classification"]["nu"] == 5);
  CHECK(c["classification"]["inertia_type"] == "C5xC8");
  CHECK(c["classification"]["maximal"] == true);
  CHECK(c["special_form"]["a6"] == "5/4");
  Json tame = classify_report(parse_curve_input(R"({"P": ["1", "1", "0", "0", "0", "1"]})").equation, opts);
  CHECK(tame["wild5"]["status"] == "not-detected");
  CHECK(tame["wild5"].contains("diagnostic"));
  CHECK(change_json(genus2::VariableChange::translation(1))["b"] == "-1");
  CHECK(curve_json(eq)["P"][0] == "1/4");
}

TEST_CASE("non-maximal curve reports unsupported at 5") {
  auto eq = parse_curve_input(R"({"P": ["5", "0", "5", "0", "0", "1"]})").equation;
  Json r = analyze_report(eq, {{2, Sign::plus}}, genus2::default_normalize_options());
  CHECK(r["global"] == "PARTIAL");
  CHECK(place(r, "5")["kind"] == "unsupported");
  CHECK(r["classification"]["inertia_type"] == "Dic5");
}

}  // TEST_SUITE

TEST_SUITE("suites") {

TEST_CASE("small suite runs pass") {
  suites::SuiteParams p;
  p.samples = 100;
  p.unif_steps = 4;
  p.fmax = 2;
  for (const char* name : {"traces", "epsilon", "symbols", "discriminant"}) {
    Json r = suites::run_suite(name, p);
    CAPTURE(name);
    CHECK(r["report"] == "verify");
    CHECK(r["pass"] == true);
    CHECK_FALSE(render_text(r).empty());
  }
}

TEST_CASE("suite parameters are validated") {
  suites::SuiteParams p;
  CHECK_THROWS_AS(suites::run_suite("nonsense", p), DomainError);
  p.p = 7;
  CHECK_THROWS_AS(suites::verify_traces(p), DomainError);
  p = {};
  p.max_conductor = 9;
  CHECK_THROWS_AS(suites::verify_epsilon(p), DomainError);
}

TEST_CASE("suites are deterministic for a fixed seed") {
  suites::SuiteParams p;
  p.samples = 50;
  CHECK(suites::verify_discriminant(p).dump() == suites::verify_discriminant(p).dump());
  CHECK(suites::verify_symbols(p).dump() == suites::verify_symbols(p).dump());
}

}  // TEST_SUITE
