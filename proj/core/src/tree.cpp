// This file is part of lingtuple.
// Copyright 2026 the lingtuple authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "lingtuple/tree.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>
#include <utility>

namespace lingtuple {

BinaryNode leaf(std::string name) { return BinaryNode{std::move(name), nullptr, nullptr}; }

BinaryNode branch(std::string name, BinaryNode left, BinaryNode right) {
  BinaryNode node{std::move(name), nullptr, nullptr};
  node.left = std::make_unique<BinaryNode>(std::move(left));
  node.right = std::make_unique<BinaryNode>(std::move(right));
  return node;
}

namespace {

void flatten_into(const BinaryNode& node, int level, std::int64_t index,
                  std::vector<NodeTuple>& out,
                  std::unordered_set<std::string_view>& names) {
  if (static_cast<bool>(node.left) != static_cast<bool>(node.right)) {
    throw domain_error(errc::not_strict_binary,
                       "node '" + node.name + "' has exactly one child");
  }
  if (!names.insert(node.name).second) {
    throw domain_error(errc::duplicate_node,
                       "node name '" + node.name + "' repeats");
  }
  out.push_back({node.name, TwoTuple(Level(level), index, 0.0)});
  if (node.left) {
    flatten_into(*node.left, level + 1, 2 * index - 1, out, names);
    flatten_into(*node.right, level + 1, 2 * index + 1, out, names);
  }
}

}  // namespace

std::vector<NodeTuple> flatten(const BinaryNode& root) {
  std::vector<NodeTuple> out;
  std::unordered_set<std::string_view> names;
  flatten_into(root, 1, 1, out, names);
  std::sort(out.begin(), out.end(), [](const NodeTuple& a, const NodeTuple& b) {
    if (a.two_tuple.level() != b.two_tuple.level()) {
      return a.two_tuple.level() < b.two_tuple.level();
    }
    return a.two_tuple.index() < b.two_tuple.index();
  });
  return out;
}

double normalized_position(const NodeTuple& node) {
  return position(node.two_tuple, 1.0);
}

double node_distance(const NodeTuple& a, const NodeTuple& b) {
  return std::abs(normalized_position(a) - normalized_position(b));
}

}  // namespace lingtuple
