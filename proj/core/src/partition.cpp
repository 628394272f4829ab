// This file is part of lingtuple.
// Copyright 2026 the lingtuple authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "lingtuple/partition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_set>

namespace lingtuple {

namespace {

void require_in_universe(double u, double span) {
  if (!(u >= 0.0 && u <= span)) {
    throw domain_error(errc::out_of_universe,
                       "position " + std::to_string(u) + " outside [0, " +
                           std::to_string(span) + "]");
  }
}

double side_grain(const SideSemantics& side, double span) {
  return side.two_tuple.level().grain(span);
}

}  // namespace

int select_level(double d, double span) {
  if (!(span > 0.0)) {
    throw domain_error(errc::invalid_argument, "universe span must be positive");
  }
  if (!(d > 0.0)) {
    throw domain_error(errc::degenerate_gap,
                       "gap distance must be positive, got " + std::to_string(d));
  }
  if (d > span) {
    throw domain_error(errc::invalid_argument,
                       "gap distance exceeds the universe span");
  }
  int t = 0;
  while (grain(t, span) > d) ++t;  // level_count caps runaway depth
  return t;
}

std::pair<std::int64_t, double> nearest_label(double v, int t, double span) {
  const double g = grain(t, span);
  require_in_universe(v, span);
  // ceil(x - 0.5) rounds to nearest with exact halves toward the lower index.
  auto index = static_cast<std::int64_t>(std::ceil(v / g - 0.5));
  index = std::clamp<std::int64_t>(index, 0, level_count(t) - 1);
  return {index, v - static_cast<double>(index) * g};
}

UnbalancedPartition build_partition(std::span<const TermPair> pairs) {
  if (pairs.size() < 2) {
    throw domain_error(errc::too_few_terms,
                       "need at least 2 terms, got " + std::to_string(pairs.size()));
  }
  std::unordered_set<std::string_view> seen;
  for (const TermPair& pair : pairs) {
    if (!seen.insert(pair.name).second) {
      throw domain_error(errc::duplicate_term, "term '" + pair.name + "' repeats");
    }
  }
  for (std::size_t k = 0; k + 1 < pairs.size(); ++k) {
    if (pairs[k + 1].v < pairs[k].v) {
      throw domain_error(errc::unordered_input,
                         "positions must be strictly increasing ('" +
                             pairs[k + 1].name + "' goes backwards)");
    }
    if (pairs[k + 1].v == pairs[k].v) {
      throw domain_error(errc::degenerate_gap,
                         "terms '" + pairs[k].name + "' and '" + pairs[k + 1].name +
                             "' share one position");
    }
  }

  const double v_min = pairs.front().v;
  const Universe universe(v_min, pairs.back().v - v_min);
  const double span = universe.span();

  std::vector<TermSemantics> terms(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    terms[k].name = pairs[k].name;
    terms[k].kernel = universe.shift(pairs[k].v);
  }

  std::vector<int> gap_levels;
  gap_levels.reserve(pairs.size() - 1);
  for (std::size_t k = 0; k + 1 < pairs.size(); ++k) {
    const double d = terms[k + 1].kernel - terms[k].kernel;
    const int t = select_level(d, span);
    const double g = grain(t, span);
    const auto [j, alpha_down] = nearest_label(terms[k].kernel, t, span);

    terms[k].downside =
        SideSemantics{Side::downside, TwoTuple(Level(t), j, alpha_down)};
    // The upside label is the downside's successor; its translation places
    // the peak at the next kernel.
    const double alpha_up =
        terms[k + 1].kernel - static_cast<double>(j + 1) * g;
    terms[k + 1].upside =
        SideSemantics{Side::upside, TwoTuple(Level(t), j + 1, alpha_up)};
    gap_levels.push_back(t);
  }

  UnbalancedPartition partition(universe, std::move(terms),
                                std::move(gap_levels), 0.0);
  partition.epsilon_ = coverage_epsilon(partition);
  return partition;
}

bool UnbalancedPartition::has_term(std::string_view name) const noexcept {
  for (const TermSemantics& term : terms_) {
    if (term.name == name) return true;
  }
  return false;
}

std::size_t UnbalancedPartition::term_index(std::string_view name) const {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].name == name) return i;
  }
  throw domain_error(errc::unknown_term,
                     "no term named '" + std::string(name) + "'");
}

const TermSemantics& UnbalancedPartition::term(std::string_view name) const {
  return terms_[term_index(name)];
}

double UnbalancedPartition::membership(std::string_view name, double u) const {
  require_in_universe(u, universe_.span());
  const TermSemantics& t = term(name);
  if (u == t.kernel) return 1.0;
  const auto& side = (u < t.kernel) ? t.upside : t.downside;
  if (!side) return 0.0;
  const double g = side_grain(*side, universe_.span());
  return std::max(0.0, 1.0 - std::abs(u - t.kernel) / g);
}

std::vector<TermDegree> UnbalancedPartition::fuzzify(double u) const {
  require_in_universe(u, universe_.span());
  std::vector<TermDegree> result;
  for (const TermSemantics& t : terms_) {
    const double degree = membership(t.name, u);
    if (degree > 0.0) result.push_back({t.name, degree});
  }
  std::stable_sort(result.begin(), result.end(),
                   [](const TermDegree& a, const TermDegree& b) {
                     return a.degree > b.degree;
                   });
  return result;
}

double coverage_epsilon(const UnbalancedPartition& partition) {
  const auto& terms = partition.terms();
  const double span = partition.universe().span();
  double epsilon = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k + 1 < terms.size(); ++k) {
    const double d = terms[k + 1].kernel - terms[k].kernel;
    const double g = grain(partition.gap_levels()[k], span);
    epsilon = std::min(epsilon, 1.0 - d / (2.0 * g));
  }
  return epsilon;
}

std::string_view stretch_name(Stretch stretch) noexcept {
  switch (stretch) {
    case Stretch::very_stuck: return "VeryStuck";
    case Stretch::stuck: return "Stuck";
    case Stretch::moderately_stuck: return "ModeratelyStuck";
    case Stretch::far: return "Far";
    case Stretch::very_far: return "VeryFar";
    case Stretch::not_applicable: return "N/A";
  }
  return "?";
}

std::optional<Stretch> try_parse_stretch(std::string_view text) noexcept {
  std::string lowered(text);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lowered == "verystuck") return Stretch::very_stuck;
  if (lowered == "stuck") return Stretch::stuck;
  if (lowered == "moderatelystuck") return Stretch::moderately_stuck;
  if (lowered == "far") return Stretch::far;
  if (lowered == "veryfar") return Stretch::very_far;
  if (lowered == "n/a" || lowered == "na" || lowered == "notapplicable") {
    return Stretch::not_applicable;
  }
  return std::nullopt;
}

Stretch parse_stretch(std::string_view text) {
  if (auto stretch = try_parse_stretch(text)) return *stretch;
  throw domain_error(errc::unknown_stretch,
                     "unknown stretch term '" + std::string(text) + "'");
}

double StretchWeights::weight(Stretch stretch) const {
  if (stretch == Stretch::not_applicable) {
    throw domain_error(errc::invalid_argument, "N/A carries no gap weight");
  }
  return weights_[static_cast<std::size_t>(stretch)];
}

void StretchWeights::set(Stretch stretch, double weight) {
  if (stretch == Stretch::not_applicable) {
    throw domain_error(errc::invalid_argument, "N/A carries no gap weight");
  }
  if (!(weight > 0.0)) {
    throw domain_error(errc::invalid_argument,
                       "stretch weight must be positive");
  }
  weights_[static_cast<std::size_t>(stretch)] = weight;
}

std::vector<TermPair> resolve_stretch(std::span<const StretchEntry> entries,
                                      const StretchWeights& weights) {
  if (entries.size() < 2) {
    throw domain_error(errc::too_few_terms,
                       "need at least 2 entries, got " +
                           std::to_string(entries.size()));
  }
  for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
    if (entries[i].stretch == Stretch::not_applicable) {
      throw domain_error(errc::misplaced_na,
                         "N/A is only valid on the last entry ('" +
                             entries[i].name + "')");
    }
  }
  if (entries.back().stretch != Stretch::not_applicable) {
    throw domain_error(errc::misplaced_na,
                       "the last entry must carry N/A, got '" +
                           std::string(stretch_name(entries.back().stretch)) +
                           "'");
  }
  std::unordered_set<std::string_view> seen;
  for (const StretchEntry& entry : entries) {
    if (!seen.insert(entry.name).second) {
      throw domain_error(errc::duplicate_term,
                         "term '" + entry.name + "' repeats");
    }
  }

  std::vector<double> cumulative(entries.size(), 0.0);
  for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
    cumulative[i + 1] = cumulative[i] + weights.weight(entries[i].stretch);
  }
  const double total = cumulative.back();

  std::vector<TermPair> pairs(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    pairs[i] = {entries[i].name, cumulative[i] / total};
  }
  return pairs;
}

}  // namespace lingtuple
