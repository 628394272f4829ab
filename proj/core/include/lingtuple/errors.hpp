// This file is part of lingtuple.
// Copyright 2026 the lingtuple authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lingtuple {

/// Domain-rule violations. One code per named error condition so callers
/// (and the CLI exit-code mapping) can dispatch without string matching.
enum class errc {
  invalid_argument,
  out_of_universe,
  degenerate_gap,
  too_few_terms,
  unordered_input,
  duplicate_term,
  unknown_term,
  misplaced_na,
  unknown_stretch,
  empty_aggregation,
  not_strict_binary,
  duplicate_node,
  unknown_variable,
  not_supported,
};

std::string_view errc_name(errc code) noexcept;

class domain_error : public std::runtime_error {
 public:
  domain_error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

/// Unusable input from the outside world (unreadable file, malformed JSON,
/// bad weights table). Distinct from domain_error: the CLI reports these
/// as input failures (exit 1), not domain-rule violations (exit 2).
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lingtuple
