// This file is part of lingtuple.
// Copyright 2026 the lingtuple authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "lingtuple/render.hpp"

#include <algorithm>
#include <array>

#include "lingtuple/format.hpp"

namespace lingtuple {

namespace {

void require_samples(int samples) {
  if (samples < 2) {
    throw domain_error(errc::invalid_argument,
                       "samples must be at least 2, got " +
                           std::to_string(samples));
  }
}

}  // namespace

std::string partition_to_csv(const UnbalancedPartition& partition,
                             const RenderOptions& options) {
  require_samples(options.samples);
  const Universe& universe = partition.universe();

  std::string out = "u";
  for (const TermSemantics& term : partition.terms()) {
    out += "," + term.name;
  }
  out += "\n";

  for (int i = 0; i < options.samples; ++i) {
    const double u = universe.span() * static_cast<double>(i) /
                     static_cast<double>(options.samples - 1);
    out += format_significant(universe.unshift(u), options.precision);
    for (const TermSemantics& term : partition.terms()) {
      out += "," + format_significant(partition.membership(term.name, u),
                                      options.precision);
    }
    out += "\n";
  }
  return out;
}

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 320.0;
constexpr double kMargin = 48.0;

constexpr std::array<std::string_view, 6> kPalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf",
};

struct Mapper {
  double span;
  double x(double u) const {
    return kMargin + (kWidth - 2 * kMargin) * (u / span);
  }
  double y(double degree) const {
    return kHeight - kMargin - (kHeight - 2 * kMargin) * degree;
  }
};

std::string svg_point(const Mapper& m, double u, double degree, int precision) {
  return format_significant(m.x(u), precision) + "," +
         format_significant(m.y(degree), precision);
}

}  // namespace

std::string partition_to_svg(const UnbalancedPartition& partition,
                             const RenderOptions& options) {
  require_samples(options.samples);
  const Universe& universe = partition.universe();
  const double span = universe.span();
  const Mapper m{span};
  const int p = options.precision;

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" "
         "height=\"320\" viewBox=\"0 0 640 320\">\n";
  // axes
  out += "  <line x1=\"" + format_significant(m.x(0), p) + "\" y1=\"" +
         format_significant(m.y(0), p) + "\" x2=\"" +
         format_significant(m.x(span), p) + "\" y2=\"" +
         format_significant(m.y(0), p) + "\" stroke=\"black\"/>\n";
  out += "  <line x1=\"" + format_significant(m.x(0), p) + "\" y1=\"" +
         format_significant(m.y(0), p) + "\" x2=\"" +
         format_significant(m.x(0), p) + "\" y2=\"" +
         format_significant(m.y(1), p) + "\" stroke=\"black\"/>\n";
  out += "  <text x=\"" + format_significant(m.x(0), p) + "\" y=\"" +
         format_significant(m.y(0) + 18, p) + "\" font-size=\"12\">" +
         format_significant(universe.v_min(), p) + "</text>\n";
  out += "  <text x=\"" + format_significant(m.x(span) - 12, p) + "\" y=\"" +
         format_significant(m.y(0) + 18, p) + "\" font-size=\"12\">" +
         format_significant(universe.unshift(span), p) + "</text>\n";

  for (std::size_t i = 0; i < partition.terms().size(); ++i) {
    const TermSemantics& term = partition.terms()[i];
    const std::string_view color = kPalette[i % kPalette.size()];
    // one straight flank per side, clipped at the universe edge
    if (term.upside) {
      const double g = term.upside->two_tuple.level().grain(span);
      const double u0 = std::max(0.0, term.kernel - g);
      const double d0 = std::max(0.0, 1.0 - (term.kernel - u0) / g);
      out += "  <polyline points=\"" + svg_point(m, u0, d0, p) + " " +
             svg_point(m, term.kernel, 1.0, p) + "\" fill=\"none\" stroke=\"" +
             std::string(color) + "\"/>\n";
    }
    if (term.downside) {
      const double g = term.downside->two_tuple.level().grain(span);
      const double u1 = std::min(span, term.kernel + g);
      const double d1 = std::max(0.0, 1.0 - (u1 - term.kernel) / g);
      out += "  <polyline points=\"" + svg_point(m, term.kernel, 1.0, p) + " " +
             svg_point(m, u1, d1, p) + "\" fill=\"none\" stroke=\"" +
             std::string(color) + "\"/>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace lingtuple
