// This file is part of lingtuple.
// Copyright 2026 the lingtuple authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lingtuple/partition.hpp"

// Parser and serializer for the Fuzzy Control Language subset with LING
// variables:
//
//   VAR_INPUT
//       Name : LING;
//   END_VAR
//
//   FUZZIFY Name
//       TERM S := ling (TermA,0.0) (TermB,0.5) ... ;      pair form
//       TERM S := ling A B | C | D E, extreme middle ;    density form
//   END_FUZZIFY
//
// Keywords are case-sensitive; identifiers are letters/digits/underscore
// starting with a letter; numbers are plain decimals with optional sign,
// leading dot and exponent; '//' starts a line comment.

namespace lingtuple::fcl {

enum class Density { middle, extreme };

std::string_view density_name(Density density) noexcept;

/// Term declaration in (term, value) pair form.
struct LingPairsDecl {
  std::vector<TermPair> pairs;

  bool operator==(const LingPairsDecl&) const = default;
};

/// Term declaration in the legacy density form: left terms | center | right
/// terms, plus one density word per side.
struct LingDensityDecl {
  std::vector<std::string> left_terms;
  std::string center_term;
  std::vector<std::string> right_terms;
  Density left_density = Density::middle;
  Density right_density = Density::middle;

  bool operator==(const LingDensityDecl&) const = default;
};

struct TermDecl {
  std::string name;
  std::variant<LingPairsDecl, LingDensityDecl> body;

  bool operator==(const TermDecl&) const = default;
};

struct FuzzifyBlock {
  std::string variable;
  std::vector<TermDecl> terms;

  bool operator==(const FuzzifyBlock&) const = default;
};

struct VarDecl {
  std::string name;
  std::string type;  // "LING"

  bool operator==(const VarDecl&) const = default;
};

struct FclModel {
  std::vector<VarDecl> inputs;
  std::vector<FuzzifyBlock> fuzzify_blocks;

  bool operator==(const FclModel&) const = default;
};

enum class DiagKind { syntax, semantic };

/// Parse failure with a 1-based source position inside the offending token.
class parse_error : public std::runtime_error {
 public:
  parse_error(DiagKind kind, int line, int column, const std::string& message);

  DiagKind kind() const noexcept { return kind_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  DiagKind kind_;
  int line_;
  int column_;
  std::string message_;
};

/// Parses a script into its model. Total: any non-grammar input raises a
/// parse_error, never undefined behavior. Reentrant and stateless.
FclModel parse(std::string_view text);

/// Canonical text form; parse(serialize(m)) is structurally equal to m for
/// every model produced by parse.
std::string serialize(const FclModel& model);

/// Builds the partition declared for a variable. Pair declarations run the
/// partitioning; density declarations are rejected as not-supported (their
/// conversion needs the Herrera-Martinez representation algorithm, which
/// this library does not implement).
UnbalancedPartition to_partition(const FclModel& model,
                                 std::string_view variable);

}  // namespace lingtuple::fcl
