// This file is part of lingtuple.
// Copyright 2026 the lingtuple authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <string>

namespace lingtuple {

/// Shortest decimal form that parses back to exactly the same double.
std::string format_roundtrip(double value);

/// printf %.*g with the given number of significant digits (clamped to 1..17).
std::string format_significant(double value, int significant_digits);

/// The double nearest to value rounded to the given significant digits.
double round_to_digits(double value, int significant_digits);

}  // namespace lingtuple
