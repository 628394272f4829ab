// This file is part of lingtuple.
// Copyright 2026 the lingtuple authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "lingtuple/format.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>

namespace lingtuple {

std::string format_roundtrip(double value) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, end);
}

std::string format_significant(double value, int significant_digits) {
  const int digits = std::clamp(significant_digits, 1, 17);
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", digits, value);
  return buffer;
}

double round_to_digits(double value, int significant_digits) {
  return std::strtod(format_significant(value, significant_digits).c_str(),
                     nullptr);
}

}  // namespace lingtuple
