// This file is part of lingtuple.
// Copyright 2026 the lingtuple authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)
//
// Command-line front end: partition construction, aggregation, membership
// queries, tree flattening and stretch resolution over FCL term sets.
//
// Exit codes: 0 success, 1 input or parse failure, 2 domain-rule violation.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lingtuple/aggregate.hpp"
#include "lingtuple/fcl.hpp"
#include "lingtuple/format.hpp"
#include "lingtuple/json_io.hpp"
#include "lingtuple/partition.hpp"
#include "lingtuple/render.hpp"
#include "lingtuple/tree.hpp"

namespace {

using nlohmann::ordered_json;

struct CommonOptions {
  std::string fcl_path;
  std::string variable;
  std::string format = "json";
  std::string out_path;
  std::string weights_path;
  int samples = 1001;
  int precision = 6;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw lingtuple::input_error("cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const CommonOptions& options, const std::string& text) {
  if (options.out_path.empty() || options.out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(options.out_path, std::ios::binary);
  if (!out) {
    throw lingtuple::input_error("cannot write '" + options.out_path + "'");
  }
  out << text;
}

/// JSON number rounded to the requested significant digits; integral values
/// become JSON integers so a full degree prints as 1, not 1.0.
ordered_json number(double value, int precision) {
  const double rounded = lingtuple::round_to_digits(value, precision);
  if (rounded == std::floor(rounded) && std::fabs(rounded) < 1e15) {
    return static_cast<std::int64_t>(rounded);
  }
  return rounded;
}

lingtuple::UnbalancedPartition load_partition(const CommonOptions& options) {
  const lingtuple::fcl::FclModel model =
      lingtuple::fcl::parse(read_file(options.fcl_path));
  std::string variable = options.variable;
  if (variable.empty()) {
    if (model.inputs.size() != 1) {
      throw lingtuple::input_error(
          "the script declares " + std::to_string(model.inputs.size()) +
          " variables; pick one with --var");
    }
    variable = model.inputs[0].name;
  }
  return lingtuple::fcl::to_partition(model, variable);
}

// --- subcommands -------------------------------------------------------------

int run_partition(const CommonOptions& options) {
  const lingtuple::UnbalancedPartition partition = load_partition(options);
  const lingtuple::RenderOptions render{options.samples, options.precision};
  if (options.format == "json") {
    write_output(options, lingtuple::partition_to_json(
                              partition, std::max(12, options.precision)));
  } else if (options.format == "csv") {
    write_output(options, lingtuple::partition_to_csv(partition, render));
  } else {
    write_output(options, lingtuple::partition_to_svg(partition, render));
  }
  return 0;
}

lingtuple::LinguisticValue parse_operand(const std::string& text) {
  const std::size_t split = text.find_first_of("+-");
  if (split == std::string::npos) return {text, 0.0};
  const std::string name = text.substr(0, split);
  const std::string offset = text.substr(split);
  try {
    std::size_t used = 0;
    const double residual = std::stod(offset, &used);
    if (used != offset.size() || name.empty()) {
      throw std::invalid_argument(offset);
    }
    return {name, residual};
  } catch (const std::exception&) {
    throw lingtuple::input_error("malformed operand '" + text +
                                 "' (expected term or term+offset)");
  }
}

int run_aggregate(const CommonOptions& options, const std::string& op,
                  const std::vector<std::string>& operand_texts) {
  const lingtuple::UnbalancedPartition partition = load_partition(options);
  std::vector<lingtuple::LinguisticValue> operands;
  operands.reserve(operand_texts.size());
  for (const std::string& text : operand_texts) {
    operands.push_back(parse_operand(text));
  }

  lingtuple::AggregationResult result = [&] {
    if (op == "add") {
      if (operands.size() != 2) {
        throw lingtuple::input_error("add takes exactly two operands");
      }
      return lingtuple::add(partition, operands[0], operands[1]);
    }
    if (op == "wavg") {
      if (options.weights_path.empty()) {
        throw lingtuple::input_error("wavg needs --weights <json map>");
      }
      nlohmann::json table;
      try {
        table = nlohmann::json::parse(read_file(options.weights_path));
      } catch (const nlohmann::json::parse_error& e) {
        throw lingtuple::input_error(std::string("malformed weights JSON: ") +
                                     e.what());
      }
      std::vector<double> weights;
      for (const auto& operand : operands) {
        if (!table.contains(operand.term) || !table[operand.term].is_number()) {
          throw lingtuple::input_error("weights JSON has no number for '" +
                                       operand.term + "'");
        }
        weights.push_back(table[operand.term].get<double>());
      }
      return lingtuple::weighted_average(partition, operands, weights);
    }
    return lingtuple::mean(partition, operands);
  }();

  const double span = partition.universe().span();
  ordered_json doc;
  doc["op"] = op;
  doc["beta"] = number(result.beta, options.precision);
  doc["lh_tuple"] = {
      {"level", result.lh_tuple.level().number()},
      {"index", result.lh_tuple.index()},
      {"alpha_abs", number(result.lh_tuple.alpha(), options.precision)},
      {"alpha_norm", number(result.lh_tuple.alpha() / span, options.precision)},
  };
  doc["value"] = {
      {"term", result.value.term},
      {"residual", number(result.value.residual, options.precision)},
  };
  write_output(options, doc.dump(2) + "\n");
  return 0;
}

int run_membership(const CommonOptions& options, const std::string& u_text) {
  double u = 0.0;
  try {
    std::size_t used = 0;
    u = std::stod(u_text, &used);
    if (used != u_text.size()) throw std::invalid_argument(u_text);
  } catch (const std::exception&) {
    throw lingtuple::input_error("malformed position '" + u_text + "'");
  }
  const lingtuple::UnbalancedPartition partition = load_partition(options);
  const auto entries = partition.fuzzify(partition.universe().shift(u));
  ordered_json doc = ordered_json::array();
  for (const auto& entry : entries) {
    doc.push_back({{"term", entry.term},
                   {"degree", number(entry.degree, options.precision)}});
  }
  write_output(options, doc.dump(2) + "\n");
  return 0;
}

int run_flatten(const CommonOptions& options, const std::string& tree_path) {
  if (options.format == "svg") {
    throw lingtuple::input_error("flatten renders json or csv, not svg");
  }
  const lingtuple::BinaryNode root =
      lingtuple::tree_from_json(read_file(tree_path));
  const auto tuples = lingtuple::flatten(root);

  if (options.format == "csv") {
    std::string out = "name,level,index,position\n";
    for (const auto& node : tuples) {
      out += node.name + "," +
             std::to_string(node.two_tuple.level().number()) + "," +
             std::to_string(node.two_tuple.index()) + "," +
             lingtuple::format_significant(lingtuple::normalized_position(node),
                                           options.precision) +
             "\n";
    }
    write_output(options, out);
    return 0;
  }
  ordered_json doc = ordered_json::array();
  for (const auto& node : tuples) {
    doc.push_back({{"name", node.name},
                   {"level", node.two_tuple.level().number()},
                   {"index", node.two_tuple.index()},
                   {"position",
                    number(lingtuple::normalized_position(node),
                           options.precision)}});
  }
  write_output(options, doc.dump(2) + "\n");
  return 0;
}

std::vector<lingtuple::StretchEntry> parse_stretch_file(const std::string& text) {
  std::vector<lingtuple::StretchEntry> entries;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (const auto comment = line.find("//"); comment != std::string::npos) {
      line.erase(comment);
    }
    if (const auto comment = line.find('#'); comment != std::string::npos) {
      line.erase(comment);
    }
    for (char& c : line) {
      if (c == ',' || c == '\t') c = ' ';
    }
    std::istringstream fields(line);
    std::string name, stretch, extra;
    if (!(fields >> name)) continue;  // blank line
    if (!(fields >> stretch) || (fields >> extra)) {
      throw lingtuple::input_error("stretch entries are 'term stretch' lines, got '" +
                                   line + "'");
    }
    entries.push_back({name, lingtuple::parse_stretch(stretch)});
  }
  return entries;
}

lingtuple::StretchWeights load_stretch_weights(const std::string& path) {
  lingtuple::StretchWeights weights;
  if (path.empty()) return weights;
  nlohmann::json table;
  try {
    table = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw lingtuple::input_error(std::string("malformed weights JSON: ") +
                                 e.what());
  }
  if (!table.is_object()) {
    throw lingtuple::input_error("weights JSON must map stretch names to numbers");
  }
  for (const auto& [key, value] : table.items()) {
    const auto stretch = lingtuple::try_parse_stretch(key);
    if (!stretch || *stretch == lingtuple::Stretch::not_applicable) {
      throw lingtuple::input_error("weights JSON has no stretch named '" + key + "'");
    }
    if (!value.is_number() || !(value.get<double>() > 0.0)) {
      throw lingtuple::input_error("weight for '" + key + "' must be a positive number");
    }
    weights.set(*stretch, value.get<double>());
  }
  return weights;
}

int run_stretch(const CommonOptions& options, const std::string& entries_path,
                bool with_partition) {
  const auto entries = parse_stretch_file(read_file(entries_path));
  const auto weights = load_stretch_weights(options.weights_path);
  const auto pairs =
      lingtuple::resolve_stretch(std::span<const lingtuple::StretchEntry>(entries),
                                 weights);

  const bool build = with_partition || options.format == "svg";
  if (options.format == "csv") {
    std::string out = "name,v\n";
    for (const auto& pair : pairs) {
      out += pair.name + "," +
             lingtuple::format_significant(pair.v, options.precision) + "\n";
    }
    write_output(options, out);
    return 0;
  }
  if (options.format == "svg") {
    const auto partition = lingtuple::build_partition(pairs);
    write_output(options, lingtuple::partition_to_svg(
                              partition, {options.samples, options.precision}));
    return 0;
  }

  ordered_json doc;
  doc["pairs"] = ordered_json::array();
  for (const auto& pair : pairs) {
    doc["pairs"].push_back(
        {{"name", pair.name}, {"v", number(pair.v, options.precision)}});
  }
  if (build) {
    const auto partition = lingtuple::build_partition(pairs);
    doc["partition"] = ordered_json::parse(lingtuple::partition_to_json(
        partition, std::max(12, options.precision)));
  }
  write_output(options, doc.dump(2) + "\n");
  return 0;
}

void add_render_flags(CLI::App* cmd, CommonOptions& options, bool with_svg) {
  const std::string formats = with_svg ? "json|csv|svg" : "json|csv";
  cmd->add_option("--format", options.format, "Output format: " + formats)
      ->check(with_svg ? CLI::IsMember({"json", "csv", "svg"})
                       : CLI::IsMember({"json", "csv"}));
  cmd->add_option("--samples", options.samples,
                  "Membership sampling resolution (default 1001)")
      ->check(CLI::Range(2, 10000000));
  cmd->add_option("--out", options.out_path, "Output path (default stdout)");
  cmd->add_option("--precision", options.precision,
                  "Significant digits in numeric output (default 6)")
      ->check(CLI::Range(1, 17));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-tuple modeling of unbalanced linguistic term sets"};
  app.require_subcommand(1);

  CommonOptions options;

  auto* partition_cmd =
      app.add_subcommand("partition", "Build a term-set partition from an FCL script");
  partition_cmd->add_option("--fcl", options.fcl_path, "FCL script path")->required();
  partition_cmd->add_option("--var", options.variable, "LING variable name");
  add_render_flags(partition_cmd, options, true);

  std::string op;
  std::vector<std::string> operands;
  auto* aggregate_cmd =
      app.add_subcommand("aggregate", "Aggregate term positions and back-translate");
  aggregate_cmd->add_option("--fcl", options.fcl_path, "FCL script path")->required();
  aggregate_cmd->add_option("--var", options.variable, "LING variable name");
  aggregate_cmd->add_option("op", op, "Operator")
      ->required()
      ->check(CLI::IsMember({"mean", "add", "wavg"}));
  aggregate_cmd->add_option("operands", operands, "Terms, optionally term+offset")
      ->required()
      ->expected(-1);
  aggregate_cmd->add_option("--weights", options.weights_path,
                            "JSON map term -> weight (wavg)");
  aggregate_cmd->add_option("--out", options.out_path, "Output path");
  aggregate_cmd->add_option("--precision", options.precision, "Significant digits")
      ->check(CLI::Range(1, 17));

  std::string membership_u;
  auto* membership_cmd =
      app.add_subcommand("membership", "Fuzzify a position against every term");
  membership_cmd->add_option("--fcl", options.fcl_path, "FCL script path")->required();
  membership_cmd->add_option("--var", options.variable, "LING variable name");
  membership_cmd->add_option("u", membership_u, "Position on the universe")->required();
  membership_cmd->add_option("--out", options.out_path, "Output path");
  membership_cmd->add_option("--precision", options.precision, "Significant digits")
      ->check(CLI::Range(1, 17));

  std::string tree_path;
  auto* flatten_cmd =
      app.add_subcommand("flatten", "Flatten a strict binary tree into 2-tuples");
  flatten_cmd->add_option("tree", tree_path, "Tree JSON path")->required();
  add_render_flags(flatten_cmd, options, false);

  std::string entries_path;
  bool with_partition = false;
  auto* stretch_cmd =
      app.add_subcommand("stretch", "Resolve stretch factors into (term, v) pairs");
  stretch_cmd->add_option("entries", entries_path, "Entries file, 'term stretch' lines")
      ->required();
  stretch_cmd->add_option("--weights", options.weights_path,
                          "JSON map stretch name -> positive gap weight");
  stretch_cmd->add_flag("--partition", with_partition,
                        "Also emit the partition built from the pairs");
  add_render_flags(stretch_cmd, options, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (partition_cmd->parsed()) return run_partition(options);
    if (aggregate_cmd->parsed()) return run_aggregate(options, op, operands);
    if (membership_cmd->parsed()) return run_membership(options, membership_u);
    if (flatten_cmd->parsed()) return run_flatten(options, tree_path);
    if (stretch_cmd->parsed()) return run_stretch(options, entries_path, with_partition);
  } catch (const lingtuple::fcl::parse_error& e) {
    std::cerr << options.fcl_path << ":" << e.line() << ":" << e.column()
              << ": error: " << e.message() << "\n";
    return 1;
  } catch (const lingtuple::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const lingtuple::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
