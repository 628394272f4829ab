// This file is part of lingtuple.
// Copyright 2026 the lingtuple authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "lingtuple/aggregate.hpp"
#include "lingtuple/fcl.hpp"
#include "lingtuple/partition.hpp"
#include "lingtuple/tree.hpp"

namespace {

using namespace lingtuple;

std::vector<TermPair> example_pairs() {
  return {{"NoAlcohol", 0.0},
          {"YoungLegalLimit", 0.05},
          {"Intermediate", 0.065},
          {"LegalLimit", 0.08},
          {"RiskOfDeath", 0.3}};
}

std::vector<TermPair> wide_pairs(int count) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> gap(1e-3, 1.0);
  std::vector<TermPair> pairs(count);
  double v = 0.0;
  for (int i = 0; i < count; ++i) {
    pairs[i] = {"term" + std::to_string(i), v};
    v += gap(rng);
  }
  return pairs;
}

void BM_BuildPartition(benchmark::State& state) {
  const auto pairs = wide_pairs(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_partition(pairs));
  }
}
BENCHMARK(BM_BuildPartition)->Arg(5)->Arg(12)->Arg(64);

void BM_Membership(benchmark::State& state) {
  const UnbalancedPartition partition = build_partition(example_pairs());
  double u = 0.0;
  for (auto _ : state) {
    u += 0.0003;
    if (u > 0.3) u = 0.0;
    benchmark::DoNotOptimize(partition.membership("LegalLimit", u));
  }
}
BENCHMARK(BM_Membership);

void BM_Fuzzify(benchmark::State& state) {
  const UnbalancedPartition partition = build_partition(example_pairs());
  double u = 0.0;
  for (auto _ : state) {
    u += 0.0003;
    if (u > 0.3) u = 0.0;
    benchmark::DoNotOptimize(partition.fuzzify(u));
  }
}
BENCHMARK(BM_Fuzzify);

void BM_Represent(benchmark::State& state) {
  double beta = 0.0;
  for (auto _ : state) {
    beta += 0.00007;
    if (beta > 0.3) beta = 0.0;
    benchmark::DoNotOptimize(represent(beta, 5, 0.3));
  }
}
BENCHMARK(BM_Represent);

void BM_Mean(benchmark::State& state) {
  const UnbalancedPartition partition = build_partition(example_pairs());
  const std::vector<LinguisticValue> operands{{"YoungLegalLimit", 0.0},
                                              {"LegalLimit", 0.0}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(mean(partition, operands));
  }
}
BENCHMARK(BM_Mean);

void BM_ParseFcl(benchmark::State& state) {
  const std::string script =
      "VAR_INPUT\n"
      "    BloodAlcoholConcentration : LING;\n"
      "END_VAR\n"
      "FUZZIFY BloodAlcoholConcentration\n"
      "    TERM S := ling (NoAlcohol,0.0) (YoungLegalLimit,0.05)\n"
      "        (Intermediate,0.065) (LegalLimit,0.08) (RiskOfDeath,0.3);\n"
      "END_FUZZIFY\n";
  for (auto _ : state) {
    benchmark::DoNotOptimize(fcl::parse(script));
  }
}
BENCHMARK(BM_ParseFcl);

BinaryNode complete_tree(int depth, int& counter) {
  const std::string name = "n" + std::to_string(counter++);
  if (depth == 0) return leaf(name);
  return branch(name, complete_tree(depth - 1, counter),
                complete_tree(depth - 1, counter));
}

void BM_FlattenTree(benchmark::State& state) {
  int counter = 0;
  const BinaryNode root = complete_tree(static_cast<int>(state.range(0)), counter);
  for (auto _ : state) {
    benchmark::DoNotOptimize(flatten(root));
  }
}
BENCHMARK(BM_FlattenTree)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
