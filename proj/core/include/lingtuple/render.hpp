// This file is part of lingtuple.
// Copyright 2026 the lingtuple authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <string>

#include "lingtuple/partition.hpp"

namespace lingtuple {

struct RenderOptions {
  int samples = 1001;   // membership sampling resolution, >= 2
  int precision = 6;    // significant digits in emitted numbers
};

/// Membership table: header "u,<term>,..." then `samples` rows sampled
/// uniformly over the universe (u printed in input coordinates).
std::string partition_to_csv(const UnbalancedPartition& partition,
                             const RenderOptions& options = {});

/// Figure-style vector plot: two axis lines plus exactly one polyline per
/// term side.
std::string partition_to_svg(const UnbalancedPartition& partition,
                             const RenderOptions& options = {});

}  // namespace lingtuple
