// This file is part of lingtuple.
// Copyright 2026 the lingtuple authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <cmath>
#include <random>

#include <doctest.h>

#include "lingtuple/fcl.hpp"
#include "testutil.hpp"

using namespace lingtuple;
using namespace lingtuple::fcl;

namespace {

std::string data_file(const std::string& name) {
  return testutil::slurp(std::string(LINGTUPLE_DATA_DIR) + "/" + name);
}

}  // namespace

TEST_CASE("the pair-form script parses into one LING input with five pairs") {
  const FclModel model = parse(data_file("bac.fcl"));
  REQUIRE(model.inputs.size() == 1);
  CHECK(model.inputs[0].name == "BloodAlcoholConcentration");
  CHECK(model.inputs[0].type == "LING");

  REQUIRE(model.fuzzify_blocks.size() == 1);
  const FuzzifyBlock& block = model.fuzzify_blocks[0];
  CHECK(block.variable == "BloodAlcoholConcentration");
  REQUIRE(block.terms.size() == 1);
  CHECK(block.terms[0].name == "S");

  const auto& pairs = std::get<LingPairsDecl>(block.terms[0].body).pairs;
  const std::vector<TermPair> expected{{"NoAlcohol", 0.0},
                                       {"YoungLegalLimit", 0.05},
                                       {"Intermediate", 0.065},
                                       {"LegalLimit", 0.08},
                                       {"RiskOfDeath", 0.3}};
  CHECK(pairs == expected);
}

TEST_CASE("the density-form script parses into the structured description") {
  const FclModel model = parse(data_file("bac_density.fcl"));
  REQUIRE(model.fuzzify_blocks.size() == 1);
  const auto& density =
      std::get<LingDensityDecl>(model.fuzzify_blocks[0].terms[0].body);
  CHECK(density.left_terms ==
        std::vector<std::string>{"NoAlcohol", "YoungLegalLimit", "Intermediate"});
  CHECK(density.center_term == "LegalLimit");
  CHECK(density.right_terms == std::vector<std::string>{"RiskOfDeath"});
  CHECK(density.left_density == Density::extreme);
  CHECK(density.right_density == Density::extreme);
}

TEST_CASE("comments, whitespace and number notations are accepted") {
  const FclModel model = parse(
      "// header comment\n"
      "VAR_INPUT x : LING; END_VAR\n"
      "FUZZIFY x // trailing comment\n"
      "  TERM S := ling (a,.5) (b,1e0) (c,+2.5e0) (d,30.0e-1);\n"
      "END_FUZZIFY\n");
  const auto& pairs = std::get<LingPairsDecl>(
      model.fuzzify_blocks[0].terms[0].body).pairs;
  REQUIRE(pairs.size() == 4);
  CHECK(pairs[0].v == 0.5);
  CHECK(pairs[1].v == 1.0);
  CHECK(pairs[2].v == 2.5);
  CHECK(pairs[3].v == 3.0);
}

TEST_CASE("an empty model parses and an empty fuzzify block is semantic") {
  CHECK(parse("") == FclModel{});
  CHECK(parse("   // nothing but a comment\n") == FclModel{});

  try {
    parse("VAR_INPUT x : LING; END_VAR FUZZIFY x END_FUZZIFY");
    FAIL("unreachable");
  } catch (const parse_error& e) {
    CHECK(e.kind() == DiagKind::semantic);
  }
}

TEST_CASE("fuzzify over an undeclared variable is semantic with a position") {
  try {
    parse("FUZZIFY nope\n  TERM S := ling (a,0) (b,1);\nEND_FUZZIFY");
    FAIL("unreachable");
  } catch (const parse_error& e) {
    CHECK(e.kind() == DiagKind::semantic);
    CHECK(e.line() == 1);
    CHECK(e.column() == 9);
  }
}

TEST_CASE("syntax errors point inside the offending token") {
  try {
    parse("VAR_INPUT\n  x :: LING;\nEND_VAR");
    FAIL("unreachable");
  } catch (const parse_error& e) {
    CHECK(e.kind() == DiagKind::syntax);
    CHECK(e.line() == 2);
    CHECK(e.column() == 6);  // the second ':' where LING was expected
  }

  try {
    parse("BOGUS");
    FAIL("unreachable");
  } catch (const parse_error& e) {
    CHECK(e.kind() == DiagKind::syntax);
    CHECK(e.line() == 1);
    CHECK(e.column() == 1);
  }

  try {
    parse("VAR_INPUT x : LING; END_VAR\nFUZZIFY x\n  TERM S := ling (a,0@);\nEND_FUZZIFY");
    FAIL("unreachable");
  } catch (const parse_error& e) {
    CHECK(e.kind() == DiagKind::syntax);
    CHECK(e.line() == 3);
  }
}

TEST_CASE("density declarations need two pipes and one center term") {
  const std::string header = "VAR_INPUT x : LING; END_VAR\nFUZZIFY x\n";
  const std::string footer = "\nEND_FUZZIFY";

  try {
    parse(header + "  TERM S := ling a b c, extreme extreme;" + footer);
    FAIL("unreachable");
  } catch (const parse_error& e) {
    CHECK(e.kind() == DiagKind::syntax);  // zero '|'
  }
  try {
    parse(header + "  TERM S := ling a | b c, extreme extreme;" + footer);
    FAIL("unreachable");
  } catch (const parse_error& e) {
    CHECK(e.kind() == DiagKind::syntax);  // one '|'
  }
  try {
    parse(header + "  TERM S := ling a | b c | d, extreme extreme;" + footer);
    FAIL("unreachable");
  } catch (const parse_error& e) {
    CHECK(e.kind() == DiagKind::semantic);  // two center terms
  }
  try {
    parse(header + "  TERM S := ling a | b | c, extreme sideways;" + footer);
    FAIL("unreachable");
  } catch (const parse_error& e) {
    CHECK(e.kind() == DiagKind::syntax);  // bad density word
  }
}

TEST_CASE("unterminated blocks and duplicate declarations are rejected") {
  CHECK_THROWS_AS(parse("VAR_INPUT x : LING;"), parse_error);
  CHECK_THROWS_AS(parse("VAR_INPUT x : LING; END_VAR FUZZIFY x"), parse_error);
  CHECK_THROWS_AS(
      parse("VAR_INPUT x : LING; x : LING; END_VAR"), parse_error);
  CHECK_THROWS_AS(
      parse("VAR_INPUT x : LING; END_VAR"
            " FUZZIFY x TERM S := ling (a,0); END_FUZZIFY"
            " FUZZIFY x TERM T := ling (a,0); END_FUZZIFY"),
      parse_error);
  // a second ling declaration for the same variable
  CHECK_THROWS_AS(
      parse("VAR_INPUT x : LING; END_VAR"
            " FUZZIFY x TERM S := ling (a,0); TERM T := ling (b,1);"
            " END_FUZZIFY"),
      parse_error);
}

TEST_CASE("parsing never crashes on fuzz input") {
  std::mt19937_64 rng(7501);
  const std::string alphabet =
      "ABCXYZabcxyz0123456789 \t\n()|,;:=.+-_/\"eE";
  std::uniform_int_distribution<std::size_t> char_dist(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> length_dist(0, 120);
  for (int run = 0; run < 2000; ++run) {
    std::string text;
    const int length = length_dist(rng);
    for (int i = 0; i < length; ++i) text.push_back(alphabet[char_dist(rng)]);
    try {
      (void)parse(text);
    } catch (const parse_error& e) {
      CHECK(e.line() >= 1);
      CHECK(e.column() >= 1);
    }
  }
}

TEST_CASE("serialize round-trips the example scripts") {
  for (const char* name : {"bac.fcl", "bac_density.fcl"}) {
    const FclModel model = parse(data_file(name));
    const FclModel again = parse(serialize(model));
    CHECK(again == model);
    CHECK(serialize(again) == serialize(model));
  }
  CHECK(serialize(FclModel{}) == "");
}

TEST_CASE("serialize round-trips generated models") {
  std::mt19937_64 rng(7502);
  for (int run = 0; run < 100; ++run) {
    const FclModel model = testutil::random_fcl_model(rng);
    const std::string text = serialize(model);
    const FclModel parsed = parse(text);
    CHECK(parsed == model);
    CHECK(serialize(parsed) == text);
  }
}

TEST_CASE("to_partition builds the published partition from the pair script") {
  const FclModel model = parse(data_file("bac.fcl"));
  const UnbalancedPartition partition =
      to_partition(model, "BloodAlcoholConcentration");
  CHECK(partition.terms().size() == 5);
  CHECK(std::fabs(partition.epsilon() - 0.2) <= 1e-9);
  CHECK(partition.gap_levels() == std::vector<int>{3, 5, 5, 1});
}

TEST_CASE("to_partition rejects the density form as not supported") {
  const FclModel model = parse(data_file("bac_density.fcl"));
  try {
    to_partition(model, "BloodAlcoholConcentration");
    FAIL("unreachable");
  } catch (const domain_error& e) {
    CHECK(e.code() == errc::not_supported);
  }
}

TEST_CASE("to_partition propagates pair validation errors") {
  const FclModel decreasing = parse(
      "VAR_INPUT x : LING; END_VAR\n"
      "FUZZIFY x\n  TERM S := ling (a,1.0) (b,0.5);\nEND_FUZZIFY");
  try {
    to_partition(decreasing, "x");
    FAIL("unreachable");
  } catch (const domain_error& e) {
    CHECK(e.code() == errc::unordered_input);
  }

  const FclModel single = parse(
      "VAR_INPUT x : LING; END_VAR\n"
      "FUZZIFY x\n  TERM S := ling (a,1.0);\nEND_FUZZIFY");
  try {
    to_partition(single, "x");
    FAIL("unreachable");
  } catch (const domain_error& e) {
    CHECK(e.code() == errc::too_few_terms);
  }

  try {
    to_partition(single, "unheard_of");
    FAIL("unreachable");
  } catch (const domain_error& e) {
    CHECK(e.code() == errc::unknown_variable);
  }
}
