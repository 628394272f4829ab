// This file is part of lingtuple.
// Copyright 2026 the lingtuple authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <string>
#include <string_view>

#include "lingtuple/partition.hpp"
#include "lingtuple/tree.hpp"

namespace lingtuple {

/// Partition as JSON:
///   { "universe": {"v_min", "span"}, "epsilon",
///     "terms": [{"name", "kernel",
///                "upside"?: {"level", "index", "alpha_abs", "alpha_norm"},
///                "downside"?: {...}}, ...],
///     "gap_levels": [...] }
/// Numbers carry at least 12 significant digits.
std::string partition_to_json(const UnbalancedPartition& partition,
                              int significant_digits = 12);

/// Reads { "name": string, "left": node|null, "right": node|null }.
/// Missing children count as null. Throws input_error on malformed text.
BinaryNode tree_from_json(std::string_view text);

}  // namespace lingtuple
