// This file is part of lingtuple.
// Copyright 2026 the lingtuple authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "lingtuple/json_io.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "lingtuple/format.hpp"

namespace lingtuple {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json side_to_json(const SideSemantics& side, double span, int digits) {
  return ordered_json{
      {"level", side.two_tuple.level().number()},
      {"index", side.two_tuple.index()},
      {"alpha_abs", round_to_digits(side.two_tuple.alpha(), digits)},
      {"alpha_norm", round_to_digits(side.two_tuple.alpha() / span, digits)},
  };
}

}  // namespace

std::string partition_to_json(const UnbalancedPartition& partition,
                              int significant_digits) {
  const int digits = std::max(12, significant_digits);
  const double span = partition.universe().span();

  ordered_json doc;
  doc["universe"] = {
      {"v_min", round_to_digits(partition.universe().v_min(), digits)},
      {"span", round_to_digits(span, digits)},
  };
  doc["epsilon"] = round_to_digits(partition.epsilon(), digits);
  doc["terms"] = ordered_json::array();
  for (const TermSemantics& term : partition.terms()) {
    ordered_json entry;
    entry["name"] = term.name;
    entry["kernel"] = round_to_digits(term.kernel, digits);
    if (term.upside) {
      entry["upside"] = side_to_json(*term.upside, span, digits);
    }
    if (term.downside) {
      entry["downside"] = side_to_json(*term.downside, span, digits);
    }
    doc["terms"].push_back(std::move(entry));
  }
  doc["gap_levels"] = partition.gap_levels();
  return doc.dump(2) + "\n";
}

namespace {

BinaryNode node_from_json(const nlohmann::json& value, int depth) {
  if (depth > 64) {
    // flattening tops out at level 62 anyway
    throw input_error("tree nesting deeper than 64 levels");
  }
  if (!value.is_object()) {
    throw input_error("tree node must be a JSON object");
  }
  const auto name = value.find("name");
  if (name == value.end() || !name->is_string()) {
    throw input_error("tree node needs a string \"name\"");
  }
  BinaryNode node{name->get<std::string>(), nullptr, nullptr};
  for (const char* key : {"left", "right"}) {
    const auto child = value.find(key);
    if (child == value.end() || child->is_null()) continue;
    auto parsed = std::make_unique<BinaryNode>(node_from_json(*child, depth + 1));
    (key[0] == 'l' ? node.left : node.right) = std::move(parsed);
  }
  return node;
}

}  // namespace

BinaryNode tree_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error(std::string("malformed tree JSON: ") + e.what());
  }
  return node_from_json(doc, 1);
}

}  // namespace lingtuple
