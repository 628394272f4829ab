// This file is part of lingtuple.
// Copyright 2026 the lingtuple authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <compare>
#include <cstdint>

#include "lingtuple/errors.hpp"

namespace lingtuple {

/// Number of labels n(t) of hierarchy level t: n(0) = 2, n(1) = 3, and
/// n(t+1) = 2 n(t) - 1, i.e. n(t) = 2^t + 1 for t >= 1.
/// Throws invalid_argument for t < 0 or t > 62 (label count would overflow).
std::int64_t level_count(int t);

/// Distance between adjacent label kernels of level t on a universe of the
/// given width: span / (n(t) - 1). Halves at each deeper level.
double grain(int t, double span);

/// A hierarchy level l(t, n(t)).
class Level {
 public:
  explicit Level(int number);

  int number() const noexcept { return number_; }
  std::int64_t label_count() const { return level_count(number_); }
  double grain(double span) const { return lingtuple::grain(number_, span); }

  auto operator<=>(const Level&) const = default;

 private:
  int number_;
};

/// A label of a level plus a symbolic translation, (s_i^{n(t)}, alpha).
/// alpha is kept in absolute universe units; divide by the span for the
/// normalized view.
class TwoTuple {
 public:
  TwoTuple(Level level, std::int64_t index, double alpha = 0.0);

  Level level() const noexcept { return level_; }
  std::int64_t index() const noexcept { return index_; }
  double alpha() const noexcept { return alpha_; }

  bool operator==(const TwoTuple&) const = default;

 private:
  Level level_;
  std::int64_t index_;
  double alpha_;
};

/// Numeric position of a 2-tuple on [0, span]: index * grain + alpha.
double position(const TwoTuple& tuple, double span);

/// Inverse of position at level t: nearest label with exact halves rounding
/// toward the larger index, alpha = beta - index * grain. The result always
/// satisfies position(represent(beta, t, span), span) == beta.
/// Throws out_of_universe unless 0 <= beta <= span.
TwoTuple represent(double beta, int t, double span);

/// The numeric universe after shifting: internal positions live on
/// [0, span], v_min records the shift back to input coordinates.
class Universe {
 public:
  Universe(double v_min, double span);

  double v_min() const noexcept { return v_min_; }
  double span() const noexcept { return span_; }

  bool contains(double p) const noexcept { return p >= 0.0 && p <= span_; }
  double shift(double input) const noexcept { return input - v_min_; }
  double unshift(double p) const noexcept { return p + v_min_; }

  bool operator==(const Universe&) const = default;

 private:
  double v_min_;
  double span_;
};

}  // namespace lingtuple
