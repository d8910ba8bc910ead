// Copyright 2026 The satlcp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Stage microbenchmarks at desk scale (10 variables, 40 clauses unless the
// benchmark says otherwise). All inputs are seed-fixed so numbers compare
// across runs and machines.

#include <benchmark/benchmark.h>

#include "satlcp/encode.hpp"
#include "satlcp/formula.hpp"
#include "satlcp/lcp.hpp"
#include "satlcp/lp.hpp"
#include "satlcp/reduce3sat.hpp"
#include "satlcp/verify.hpp"

namespace {

satlcp::CnfFormula desk_formula() { return satlcp::random_cnf(10, 40, 3, 7); }

void BM_Reduce(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const satlcp::CnfFormula f = satlcp::random_cnf(10, 40, k, 7);
  for (auto _ : state) {
    auto reduced = satlcp::reduce_to_3sat(f);
    benchmark::DoNotOptimize(reduced);
  }
}
BENCHMARK(BM_Reduce)->Arg(1)->Arg(3)->Arg(5);

void BM_Encode(benchmark::State& state) {
  const auto [f3, trace] = satlcp::reduce_to_3sat(desk_formula());
  for (auto _ : state) {
    satlcp::InequalitySystem sys = satlcp::encode_clauses(f3);
    benchmark::DoNotOptimize(sys);
  }
}
BENCHMARK(BM_Encode);

void BM_AssembleAndCertify(benchmark::State& state) {
  const auto [f3, trace] = satlcp::reduce_to_3sat(desk_formula());
  const satlcp::InequalitySystem sys = satlcp::encode_clauses(f3);
  const satlcp::ClausePartition part = satlcp::partition_clauses(sys);
  const satlcp::AuxiliaryVectors aux = satlcp::compute_auxiliary(sys);
  for (auto _ : state) {
    satlcp::LcpInstance inst = satlcp::assemble_extended_lcp(sys, part, aux);
    satlcp::MangasarianCertificate cert =
        satlcp::build_certificate(inst, aux);
    satlcp::ConditionReport report = satlcp::check_conditions(inst, cert);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_AssembleAndCertify);

void BM_Simplex(benchmark::State& state) {
  const auto [f3, trace] = satlcp::reduce_to_3sat(desk_formula());
  const satlcp::InequalitySystem sys = satlcp::encode_clauses(f3);
  const satlcp::ClausePartition part = satlcp::partition_clauses(sys);
  const satlcp::AuxiliaryVectors aux = satlcp::compute_auxiliary(sys);
  const satlcp::LcpInstance inst =
      satlcp::assemble_extended_lcp(sys, part, aux);
  const satlcp::LpInstance lp =
      satlcp::build_lp(inst, satlcp::build_certificate(inst, aux));
  for (auto _ : state) {
    satlcp::LpOutcome outcome = satlcp::solve_simplex(lp);
    benchmark::DoNotOptimize(outcome);
  }
}
BENCHMARK(BM_Simplex);

void BM_FullPipeline(benchmark::State& state) {
  const satlcp::CnfFormula f = desk_formula();
  for (auto _ : state) {
    satlcp::PipelineResult result = satlcp::run_pipeline(f);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_FullPipeline);

void BM_AssignmentOracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const satlcp::CnfFormula f = satlcp::random_cnf(n, 5 * n, 3, 3);
  for (auto _ : state) {
    auto witness = satlcp::brute_force_sat(f);
    benchmark::DoNotOptimize(witness);
  }
}
BENCHMARK(BM_AssignmentOracle)->Arg(10)->Arg(14)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
