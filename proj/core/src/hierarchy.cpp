// This file is part of lingtuple.
// Copyright 2026 the lingtuple authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "lingtuple/hierarchy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lingtuple {

namespace {

void require_span(double span) {
  if (!(span > 0.0)) {
    throw domain_error(errc::invalid_argument, "universe span must be positive");
  }
}

}  // namespace

std::int64_t level_count(int t) {
  if (t < 0) {
    throw domain_error(errc::invalid_argument, "level number must be non-negative");
  }
  if (t > 62) {
    // n(t) = 2^t + 1 no longer fits in 64 bits.
    throw domain_error(errc::invalid_argument,
                       "hierarchy level " + std::to_string(t) + " is too deep");
  }
  if (t == 0) return 2;
  return (std::int64_t{1} << t) + 1;
}

double grain(int t, double span) {
  require_span(span);
  return span / static_cast<double>(level_count(t) - 1);
}

Level::Level(int number) : number_(number) {
  level_count(number);  // validates the range
}

TwoTuple::TwoTuple(Level level, std::int64_t index, double alpha)
    : level_(level), index_(index), alpha_(alpha) {
  if (index < 0 || index > level.label_count() - 1) {
    throw domain_error(errc::invalid_argument,
                       "label index " + std::to_string(index) +
                           " outside level with " +
                           std::to_string(level.label_count()) + " labels");
  }
}

double position(const TwoTuple& tuple, double span) {
  return static_cast<double>(tuple.index()) * tuple.level().grain(span) +
         tuple.alpha();
}

TwoTuple represent(double beta, int t, double span) {
  const double g = grain(t, span);
  if (!(beta >= 0.0 && beta <= span)) {
    throw domain_error(errc::out_of_universe,
                       "value " + std::to_string(beta) + " outside [0, " +
                           std::to_string(span) + "]");
  }
  // llround ties away from zero, which for beta >= 0 is the required
  // half-up convention (exact halves go to the larger index).
  auto index = static_cast<std::int64_t>(std::llround(beta / g));
  index = std::clamp<std::int64_t>(index, 0, level_count(t) - 1);
  return TwoTuple(Level(t), index, beta - static_cast<double>(index) * g);
}

Universe::Universe(double v_min, double span) : v_min_(v_min), span_(span) {
  require_span(span);
}

}  // namespace lingtuple
