// This file is part of lingtuple.
// Copyright 2026 the lingtuple authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "lingtuple/partition.hpp"

namespace lingtuple {

/// A term of the original set plus an absolute offset from its kernel.
/// Bare terms carry residual 0; aggregation results keep their residual so
/// they can be fed back in.
struct LinguisticValue {
  std::string term;
  double residual = 0.0;

  bool operator==(const LinguisticValue&) const = default;
};

/// Outcome of the three-step pipeline: the raw numeric result, its 2-tuple
/// at the finest relevant level, and the back-translated pair. The 2-tuple's
/// position and the pair's kernel + residual both reproduce beta.
struct AggregationResult {
  double beta = 0.0;
  TwoTuple lh_tuple;
  LinguisticValue value;
};

/// Combines the operand positions into one number on [0, span].
using Combiner = std::function<double(std::span<const double>)>;

/// Finest (largest) level number among the side levels of the given terms.
int finest_level(const UnbalancedPartition& partition,
                 std::span<const std::string> terms);

/// Back-translation to the original term set: the term whose kernel is
/// nearest to beta (ties go to the lower kernel), residual = beta - kernel.
LinguisticValue lh_inverse(const UnbalancedPartition& partition, double beta);

/// The generic pipeline: resolve operand positions, combine, represent at
/// the operands' finest level, back-translate. Results outside [0, span]
/// raise out-of-universe (no silent clamping; callers wanting saturation
/// can pass a clamping combiner).
AggregationResult apply_operator(const UnbalancedPartition& partition,
                                 const Combiner& combiner,
                                 std::span<const LinguisticValue> operands);

/// Arithmetic mean of the operand positions.
AggregationResult mean(const UnbalancedPartition& partition,
                       std::span<const LinguisticValue> operands);
inline AggregationResult mean(const UnbalancedPartition& partition,
                              const std::vector<LinguisticValue>& operands) {
  return mean(partition, std::span<const LinguisticValue>(operands));
}

/// Position addition. The sum must stay inside the universe.
AggregationResult add(const UnbalancedPartition& partition,
                      const LinguisticValue& a, const LinguisticValue& b);

/// Weighted average with one positive weight per operand.
AggregationResult weighted_average(const UnbalancedPartition& partition,
                                   std::span<const LinguisticValue> operands,
                                   std::span<const double> operand_weights);

}  // namespace lingtuple
