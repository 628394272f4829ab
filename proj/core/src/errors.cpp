// This file is part of lingtuple.
// Copyright 2026 the lingtuple authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "lingtuple/errors.hpp"

namespace lingtuple {

std::string_view errc_name(errc code) noexcept {
  switch (code) {
    case errc::invalid_argument: return "invalid-argument";
    case errc::out_of_universe: return "out-of-universe";
    case errc::degenerate_gap: return "degenerate-gap";
    case errc::too_few_terms: return "too-few-terms";
    case errc::unordered_input: return "unordered-input";
    case errc::duplicate_term: return "duplicate-term";
    case errc::unknown_term: return "unknown-term";
    case errc::misplaced_na: return "misplaced-na";
    case errc::unknown_stretch: return "unknown-stretch";
    case errc::empty_aggregation: return "empty-aggregation";
    case errc::not_strict_binary: return "not-strict-binary";
    case errc::duplicate_node: return "duplicate-node";
    case errc::unknown_variable: return "unknown-variable";
    case errc::not_supported: return "not-supported";
  }
  return "unknown-error";
}

}  // namespace lingtuple
