// This file is part of lingtuple.
// Copyright 2026 the lingtuple authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "lingtuple/hierarchy.hpp"

namespace lingtuple {

/// Node of a strict binary tree: exactly 0 or 2 children.
struct BinaryNode {
  std::string name;
  std::unique_ptr<BinaryNode> left;
  std::unique_ptr<BinaryNode> right;
};

BinaryNode leaf(std::string name);
BinaryNode branch(std::string name, BinaryNode left, BinaryNode right);

/// A node rendered as a 2-tuple with alpha = 0: the level is depth + 1,
/// the index encodes the horizontal position (always odd).
struct NodeTuple {
  std::string name;
  TwoTuple two_tuple;
};

/// Flattens a strict binary tree into 2-tuples, one per node, ordered by
/// level then index. The root maps to (s_1^3, 0); a parent at (s_i^j, 0)
/// sends its left child to (s_{2i-1}^{2j-1}, 0) and its right child to
/// (s_{2i+1}^{2j-1}, 0). All normalized positions are distinct and sorting
/// by position reproduces the in-order traversal.
std::vector<NodeTuple> flatten(const BinaryNode& root);

/// Node position on the normalized [0, 1] axis.
double normalized_position(const NodeTuple& node);

/// Distance between two flattened nodes on the normalized axis.
double node_distance(const NodeTuple& a, const NodeTuple& b);

}  // namespace lingtuple
