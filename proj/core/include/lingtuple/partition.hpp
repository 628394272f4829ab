// This file is part of lingtuple.
// Copyright 2026 the lingtuple authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lingtuple/hierarchy.hpp"

namespace lingtuple {

/// A linguistic term bound to its numeric position on the universe.
struct TermPair {
  std::string name;
  double v = 0.0;

  bool operator==(const TermPair&) const = default;
};

enum class Side { upside, downside };

/// One flank of a term's triangle. The two flanks of a term may live in
/// different hierarchy levels (a bridge unbalanced label).
struct SideSemantics {
  Side side;
  TwoTuple two_tuple;
};

/// A term's full semantics: both flanks peak at the kernel. The first term
/// has no upside and the last term has no downside.
struct TermSemantics {
  std::string name;
  double kernel = 0.0;  // shifted position, in [0, span]
  std::optional<SideSemantics> upside;
  std::optional<SideSemantics> downside;
};

struct TermDegree {
  std::string term;
  double degree = 0.0;
};

/// Covering built from ordered (term, position) pairs: one hierarchy level
/// per gap, side 2-tuples with symbolic translations, and the certified
/// minimal-covering epsilon. Immutable after construction; all queries are
/// pure and safe for concurrent use.
class UnbalancedPartition {
 public:
  const Universe& universe() const noexcept { return universe_; }
  const std::vector<TermSemantics>& terms() const noexcept { return terms_; }
  const std::vector<int>& gap_levels() const noexcept { return gap_levels_; }
  double epsilon() const noexcept { return epsilon_; }

  bool has_term(std::string_view name) const noexcept;
  const TermSemantics& term(std::string_view name) const;  // unknown-term
  std::size_t term_index(std::string_view name) const;     // unknown-term

  /// Triangular membership of one term at u in [0, span]. A missing flank
  /// contributes nothing beyond the kernel, where the degree is exactly 1.
  double membership(std::string_view name, double u) const;

  /// All terms with a strictly positive degree at u, sorted by descending
  /// degree (ties keep term order). Never empty: the minimal covering
  /// guarantees at least one entry.
  std::vector<TermDegree> fuzzify(double u) const;

 private:
  UnbalancedPartition(Universe universe, std::vector<TermSemantics> terms,
                      std::vector<int> gap_levels, double epsilon)
      : universe_(universe),
        terms_(std::move(terms)),
        gap_levels_(std::move(gap_levels)),
        epsilon_(epsilon) {}

  friend UnbalancedPartition build_partition(std::span<const TermPair> pairs);

  Universe universe_;
  std::vector<TermSemantics> terms_;
  std::vector<int> gap_levels_;
  double epsilon_;
};

/// Coarsest (smallest) level t whose grain fits inside the gap:
/// grain(t, span) <= d < grain(t-1, span). Levels extend automatically
/// until a satisfying t exists.
int select_level(double d, double span);

/// Label of level t nearest to v, ties toward the lower index; second
/// member is the translation v - index * grain, with |alpha| <= grain / 2.
std::pair<std::int64_t, double> nearest_label(double v, int t, double span);

/// Runs the partitioning over >= 2 strictly increasing, uniquely named
/// pairs. Positions are shifted so the first kernel is 0; per gap k the
/// downside of term k and the upside of term k+1 get consecutive labels
/// j, j+1 of level select_level(d_k).
UnbalancedPartition build_partition(std::span<const TermPair> pairs);
inline UnbalancedPartition build_partition(const std::vector<TermPair>& pairs) {
  return build_partition(std::span<const TermPair>(pairs));
}

/// Exact minimum over the universe of the max membership: the closed form
/// min over gaps of 1 - d_k / (2 grain(t_k)), attained at gap midpoints.
/// Strictly positive for every partition this library builds.
double coverage_epsilon(const UnbalancedPartition& partition);

// --- stretch factors -------------------------------------------------------

/// Linguistic surrogate for the numeric gap to the next term; the last term
/// carries not_applicable.
enum class Stretch {
  very_stuck,
  stuck,
  moderately_stuck,
  far,
  very_far,
  not_applicable,
};

std::string_view stretch_name(Stretch stretch) noexcept;
std::optional<Stretch> try_parse_stretch(std::string_view text) noexcept;
Stretch parse_stretch(std::string_view text);  // unknown-stretch

struct StretchEntry {
  std::string name;
  Stretch stretch = Stretch::not_applicable;
};

/// Relative gap widths per stretch term. Defaults double per step
/// (1, 2, 4, 8, 16), one step per hierarchy-level grain doubling.
class StretchWeights {
 public:
  StretchWeights() : weights_{1.0, 2.0, 4.0, 8.0, 16.0} {}

  double weight(Stretch stretch) const;
  void set(Stretch stretch, double weight);  // must be > 0, not N/A

 private:
  std::array<double, 5> weights_;
};

/// Turns (term, stretch) entries into positioned pairs on [0, 1]: gap k is
/// weight(stretch_k) wide, cumulative sums normalized to the unit span.
/// Output always satisfies build_partition's preconditions.
std::vector<TermPair> resolve_stretch(std::span<const StretchEntry> entries,
                                      const StretchWeights& weights = {});

}  // namespace lingtuple
