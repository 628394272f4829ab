// This file is part of lingtuple.
// Copyright 2026 the lingtuple authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <sstream>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "testutil.hpp"

namespace {

const std::string kCli = LINGTUPLE_CLI_PATH;
const std::string kData = LINGTUPLE_DATA_DIR;

testutil::CommandResult cli(const std::string& args, bool merge_stderr = false) {
  return testutil::run_command(kCli + " " + args, merge_stderr);
}

std::string bac_args() { return "--fcl " + kData + "/bac.fcl"; }

std::size_t count_lines(const std::string& text) {
  std::size_t lines = 0;
  for (char c : text) lines += c == '\n';
  return lines;
}

}  // namespace

TEST_CASE("partition json reports the epsilon and sides") {
  const auto result = cli("partition " + bac_args());
  REQUIRE(result.exit_code == 0);
  const auto doc = nlohmann::json::parse(result.output);
  CHECK(std::fabs(doc["epsilon"].get<double>() - 0.2) <= 1e-9);
  CHECK(doc["terms"].size() == 5);
  CHECK(result.output.find("\"epsilon\": 0.2") != std::string::npos);
}

TEST_CASE("partition accepts an explicit --var and rejects unknown ones") {
  CHECK(cli("partition " + bac_args() + " --var BloodAlcoholConcentration")
            .exit_code == 0);
  CHECK(cli("partition " + bac_args() + " --var Nope").exit_code == 2);
}

TEST_CASE("partition csv emits header plus samples rows") {
  const auto result = cli("partition " + bac_args() + " --format csv --samples 4");
  REQUIRE(result.exit_code == 0);
  CHECK(count_lines(result.output) == 5);
  std::istringstream stream(result.output);
  std::string header;
  std::getline(stream, header);
  CHECK(header == "u,NoAlcohol,YoungLegalLimit,Intermediate,LegalLimit,RiskOfDeath");
}

TEST_CASE("partition svg is structurally sound") {
  const auto result = cli("partition " + bac_args() + " --format svg");
  REQUIRE(result.exit_code == 0);
  std::size_t polylines = 0;
  for (std::size_t pos = result.output.find("<polyline");
       pos != std::string::npos;
       pos = result.output.find("<polyline", pos + 1)) {
    ++polylines;
  }
  CHECK(polylines == 8);
}

TEST_CASE("partition on a missing file fails as an input error") {
  CHECK(cli("partition --fcl /nonexistent.fcl").exit_code == 1);
}

TEST_CASE("partition on the density script is a domain error") {
  const auto result =
      cli("partition --fcl " + kData + "/bac_density.fcl", true);
  CHECK(result.exit_code == 2);
  CHECK(result.output.find("not-supported") != std::string::npos);
}

TEST_CASE("partition on a syntactically broken script points at the source") {
  const auto result = cli("partition --fcl " + kData + "/bac_broken.fcl", true);
  CHECK(result.exit_code == 1);
  CHECK(result.output.find("bac_broken.fcl:") != std::string::npos);
  CHECK(result.output.find("error:") != std::string::npos);
}

TEST_CASE("aggregate add reproduces the worked example") {
  const auto result =
      cli("aggregate " + bac_args() + " add YoungLegalLimit LegalLimit");
  REQUIRE(result.exit_code == 0);
  const auto doc = nlohmann::json::parse(result.output);
  CHECK(doc["beta"].get<double>() == 0.13);
  CHECK(doc["lh_tuple"]["level"] == 5);
  CHECK(doc["lh_tuple"]["index"] == 14);
  CHECK(doc["value"]["term"] == "LegalLimit");
  CHECK(doc["value"]["residual"].get<double>() == 0.05);
}

TEST_CASE("aggregate mean of a term with itself is that term") {
  const auto result =
      cli("aggregate " + bac_args() + " mean Intermediate Intermediate");
  REQUIRE(result.exit_code == 0);
  const auto doc = nlohmann::json::parse(result.output);
  CHECK(doc["value"]["term"] == "Intermediate");
  CHECK(doc["value"]["residual"].get<double>() == 0.0);
}

TEST_CASE("aggregate supports residual suffixes") {
  const auto result =
      cli("aggregate " + bac_args() + " mean LegalLimit+0.01 LegalLimit-0.01");
  REQUIRE(result.exit_code == 0);
  const auto doc = nlohmann::json::parse(result.output);
  CHECK(std::fabs(doc["beta"].get<double>() - 0.08) <= 1e-9);
}

TEST_CASE("aggregate add beyond the span exits 2") {
  CHECK(cli("aggregate " + bac_args() + " add LegalLimit RiskOfDeath")
            .exit_code == 2);
  CHECK(cli("aggregate " + bac_args() + " mean NoSuchTerm").exit_code == 2);
}

TEST_CASE("aggregate wavg uses the weights table") {
  const auto result = cli("aggregate " + bac_args() +
                          " wavg YoungLegalLimit LegalLimit --weights " +
                          kData + "/wavg_weights.json");
  REQUIRE(result.exit_code == 0);
  const auto doc = nlohmann::json::parse(result.output);
  CHECK(std::fabs(doc["beta"].get<double>() - 0.0725) <= 1e-9);
  CHECK(doc["value"]["term"] == "Intermediate");

  CHECK(cli("aggregate " + bac_args() + " wavg YoungLegalLimit LegalLimit")
            .exit_code == 1);  // missing --weights
}

TEST_CASE("membership emits the fuzzified terms") {
  const auto at_zero = cli("membership " + bac_args() + " 0");
  REQUIRE(at_zero.exit_code == 0);
  const auto doc = nlohmann::json::parse(at_zero.output);
  REQUIRE(doc.size() == 1);
  CHECK(doc[0]["term"] == "NoAlcohol");
  CHECK(doc[0]["degree"].get<double>() == 1.0);
  CHECK(at_zero.output.find("\"degree\": 1") != std::string::npos);

  const auto crossing = cli("membership " + bac_args() + " 0.19");
  const auto two = nlohmann::json::parse(crossing.output);
  REQUIRE(two.size() == 2);
  for (const auto& entry : two) {
    CHECK(std::fabs(entry["degree"].get<double>() - 0.2667) <= 1e-4);
  }

  CHECK(cli("membership " + bac_args() + " 0.5").exit_code == 2);
  CHECK(cli("membership " + bac_args() + " -- -0.05").exit_code == 2);
  CHECK(cli("membership " + bac_args() + " pi").exit_code == 1);
}

TEST_CASE("flatten prints the example tuples in level order") {
  const auto result = cli("flatten " + kData + "/seven_node_tree.json");
  REQUIRE(result.exit_code == 0);
  const auto doc = nlohmann::json::parse(result.output);
  REQUIRE(doc.size() == 7);
  CHECK(doc[0]["name"] == "a");
  CHECK(doc[0]["level"] == 1);
  CHECK(doc[0]["index"] == 1);
  CHECK(doc[0]["position"].get<double>() == 0.5);
  CHECK(doc[6]["name"] == "g");
  CHECK(doc[6]["index"] == 11);

  const auto csv = cli("flatten " + kData + "/seven_node_tree.json --format csv");
  CHECK(count_lines(csv.output) == 8);  // header + 7 nodes
}

TEST_CASE("flatten maps malformed json to 1 and non-strict trees to 2") {
  CHECK(cli("flatten /nonexistent.json").exit_code == 1);
  CHECK(cli("flatten " + kData + "/bac.fcl").exit_code == 1);  // not JSON
  CHECK(cli("flatten " + kData + "/bad_one_child_tree.json").exit_code == 2);
  CHECK(cli("flatten " + kData + "/seven_node_tree.json --format svg").exit_code == 1);
}

TEST_CASE("stretch resolves the grades example") {
  const auto result = cli("stretch " + kData + "/grades.stretch");
  REQUIRE(result.exit_code == 0);
  const auto doc = nlohmann::json::parse(result.output);
  REQUIRE(doc["pairs"].size() == 5);
  CHECK(doc["pairs"][0]["v"].get<double>() == 0.0);
  CHECK(std::fabs(doc["pairs"][1]["v"].get<double>() - 1.0 / 15.0) <= 1e-6);
  CHECK(std::fabs(doc["pairs"][2]["v"].get<double>() - 0.6) <= 1e-6);
  CHECK(std::fabs(doc["pairs"][3]["v"].get<double>() - 11.0 / 15.0) <= 1e-6);
  CHECK(doc["pairs"][4]["v"].get<double>() == 1.0);
  CHECK(!doc.contains("partition"));
}

TEST_CASE("stretch --partition embeds the built partition") {
  const auto result = cli("stretch " + kData + "/grades.stretch --partition");
  REQUIRE(result.exit_code == 0);
  const auto doc = nlohmann::json::parse(result.output);
  CHECK(doc["partition"]["epsilon"].get<double>() > 0.0);
  CHECK(doc["partition"]["terms"].size() == 5);
}

TEST_CASE("stretch rejects a misplaced N/A with exit 2") {
  CHECK(cli("stretch " + kData + "/na_first.stretch").exit_code == 2);
}

TEST_CASE("outputs are byte-stable across runs") {
  for (const std::string& args :
       {"partition " + bac_args(),
        "partition " + bac_args() + " --format csv --samples 11",
        "aggregate " + bac_args() + " add YoungLegalLimit LegalLimit",
        "membership " + bac_args() + " 0.19",
        "flatten " + kData + "/seven_node_tree.json",
        "stretch " + kData + "/grades.stretch --partition"}) {
    const auto first = cli(args);
    const auto second = cli(args);
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);
  }
}
