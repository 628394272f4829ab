// This file is part of lingtuple.
// Copyright 2026 the lingtuple authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "lingtuple/aggregate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace lingtuple {

namespace {

// Accumulation noise can push a combiner's result a few ulps past the
// universe edge (e.g. the mean of n copies of span); genuine overshoots
// stay errors.
double clamp_roundoff(double beta, double span) {
  const double slack = 4.0 * std::numeric_limits<double>::epsilon() * span;
  if (beta > span && beta <= span + slack) return span;
  if (beta < 0.0 && beta >= -slack) return 0.0;
  return beta;
}

std::vector<double> operand_positions(const UnbalancedPartition& partition,
                                      std::span<const LinguisticValue> operands) {
  const double span = partition.universe().span();
  std::vector<double> positions;
  positions.reserve(operands.size());
  for (const LinguisticValue& operand : operands) {
    const double p = partition.term(operand.term).kernel + operand.residual;
    if (!(p >= 0.0 && p <= span)) {
      throw domain_error(errc::out_of_universe,
                         "operand '" + operand.term + "' with residual " +
                             std::to_string(operand.residual) +
                             " leaves the universe");
    }
    positions.push_back(p);
  }
  return positions;
}

}  // namespace

int finest_level(const UnbalancedPartition& partition,
                 std::span<const std::string> terms) {
  if (terms.empty()) {
    throw domain_error(errc::invalid_argument, "no terms given");
  }
  int finest = 0;
  for (const std::string& name : terms) {
    const TermSemantics& term = partition.term(name);
    if (term.upside) {
      finest = std::max(finest, term.upside->two_tuple.level().number());
    }
    if (term.downside) {
      finest = std::max(finest, term.downside->two_tuple.level().number());
    }
  }
  return finest;
}

LinguisticValue lh_inverse(const UnbalancedPartition& partition, double beta) {
  const double span = partition.universe().span();
  if (!(beta >= 0.0 && beta <= span)) {
    throw domain_error(errc::out_of_universe,
                       "value " + std::to_string(beta) + " outside [0, " +
                           std::to_string(span) + "]");
  }
  const TermSemantics* nearest = nullptr;
  double best = std::numeric_limits<double>::infinity();
  for (const TermSemantics& term : partition.terms()) {
    const double distance = std::abs(beta - term.kernel);
    if (distance < best) {  // strict: ties keep the lower kernel
      best = distance;
      nearest = &term;
    }
  }
  return {nearest->name, beta - nearest->kernel};
}

AggregationResult apply_operator(const UnbalancedPartition& partition,
                                 const Combiner& combiner,
                                 std::span<const LinguisticValue> operands) {
  if (operands.empty()) {
    throw domain_error(errc::empty_aggregation, "no operands to aggregate");
  }
  const double span = partition.universe().span();
  const std::vector<double> positions = operand_positions(partition, operands);

  const double beta = clamp_roundoff(combiner(positions), span);
  if (!(beta >= 0.0 && beta <= span)) {
    throw domain_error(errc::out_of_universe,
                       "aggregated value " + std::to_string(beta) +
                           " leaves the universe [0, " + std::to_string(span) +
                           "]");
  }

  std::vector<std::string> names;
  names.reserve(operands.size());
  for (const LinguisticValue& operand : operands) names.push_back(operand.term);

  const TwoTuple lh = represent(beta, finest_level(partition, names), span);
  return {beta, lh, lh_inverse(partition, beta)};
}

AggregationResult mean(const UnbalancedPartition& partition,
                       std::span<const LinguisticValue> operands) {
  return apply_operator(
      partition,
      [](std::span<const double> positions) {
        return std::accumulate(positions.begin(), positions.end(), 0.0) /
               static_cast<double>(positions.size());
      },
      operands);
}

AggregationResult add(const UnbalancedPartition& partition,
                      const LinguisticValue& a, const LinguisticValue& b) {
  const LinguisticValue operands[] = {a, b};
  return apply_operator(
      partition,
      [](std::span<const double> positions) {
        return positions[0] + positions[1];
      },
      operands);
}

AggregationResult weighted_average(const UnbalancedPartition& partition,
                                   std::span<const LinguisticValue> operands,
                                   std::span<const double> operand_weights) {
  if (operand_weights.size() != operands.size()) {
    throw domain_error(errc::invalid_argument,
                       "need one weight per operand");
  }
  for (double w : operand_weights) {
    if (!(w > 0.0)) {
      throw domain_error(errc::invalid_argument,
                         "operand weights must be positive");
    }
  }
  std::vector<double> weights(operand_weights.begin(), operand_weights.end());
  return apply_operator(
      partition,
      [weights](std::span<const double> positions) {
        double weighted = 0.0;
        double total = 0.0;
        for (std::size_t i = 0; i < positions.size(); ++i) {
          weighted += weights[i] * positions[i];
          total += weights[i];
        }
        return weighted / total;
      },
      operands);
}

}  // namespace lingtuple
