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

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "satlcp/encode.hpp"
#include "satlcp/formula.hpp"
#include "satlcp/lcp.hpp"
#include "satlcp/lp.hpp"
#include "satlcp/sizing.hpp"

namespace satlcp {

// Why a pipeline run could not commit to satisfiable/falsifiable.
enum class IndeterminateReason {
  FractionalX,      // some x component of the optimum is not 0/1
  MixedSignal,      // fractional x with positive slack y, or a witness that
                    // failed re-validation
  SolverUnbounded,  // the solver reported an unbounded program
};

// The pipeline's answer about the source formula. A Satisfiable verdict
// always carries an assignment over the original variables that has been
// re-checked against the source formula.
struct Verdict {
  enum class Kind { Satisfiable, Falsifiable, Indeterminate };
  Kind kind = Kind::Indeterminate;
  std::optional<Assignment> assignment;
  std::optional<IndeterminateReason> reason;
};

// Wall-clock stage durations. Volatile by nature: excluded from the
// canonical campaign report so reruns stay byte-identical.
struct StageTimings {
  double reduce_ms = 0, encode_ms = 0, assemble_ms = 0, certify_ms = 0,
         solve_ms = 0, extract_ms = 0, total_ms = 0;
};

// Everything one end-to-end run produces. Optional fields are absent on the
// trivial fast path, which skips the extended construction entirely.
struct PipelineResult {
  Verdict verdict;
  TrivialityVerdict::Kind triviality = TrivialityVerdict::Kind::NonTrivial;
  bool fast_path = false;
  std::optional<ConditionReport> conditions;
  std::optional<Rational> objective;
  std::optional<bool> optimum_complementary;
  // The canonical feasible point (0_N, e_K, 0, ...) was checked against the
  // derived program. Always true on non-fast-path runs; a failure throws
  // InternalError instead of proceeding.
  bool feasibility_witness_ok = false;
  // check_outcome re-validated the solver's certificate from scratch.
  bool outcome_verified = false;
  // A satisfiable verdict whose assignment failed re-validation was demoted
  // to Indeterminate(MixedSignal). Never expected; recorded if it happens.
  bool downgraded = false;
  std::optional<LpOutcome> lp_outcome;
  SizeReport sizing;
  StageTimings timings;
};

struct InstanceDescriptor {
  std::string source;  // "random" | "exhaustive3" | "file"
  int n = 0, m = 0, k = 0;
  std::uint64_t seed = 0;
  std::string label;
};

struct VerificationRecord {
  InstanceDescriptor descriptor;
  PipelineResult pipeline;
  std::optional<bool> oracle_satisfiable;
  bool agreement = false;
};

struct CampaignConfig {
  std::string family = "mixed";  // "random" | "exhaustive3" | "mixed"
  int count = 500;               // random instances (exhaustive3 adds its own)
  std::uint64_t seed = 1;
  int n_min = 3, n_max = 10;
  int ratio_min = 1, ratio_max = 6;  // m drawn uniformly from [n*min, n*max]
  int k = 3;
  // Fixed overrides; when >= 0 they replace the sampled n and m.
  int fixed_n = -1, fixed_m = -1;
  int oracle_cap = kDefaultOracleCap;

  friend bool operator==(const CampaignConfig&,
                         const CampaignConfig&) = default;
};

// Instances flagged for replay: every disagreement and every indeterminate
// verdict, stored as self-contained DIMACS text.
struct CounterexampleEntry {
  int record_index = 0;
  std::string reason;  // "disagreement" | "indeterminate"
  std::string dimacs;
};

struct CampaignReport {
  CampaignConfig config;
  std::vector<VerificationRecord> records;
  // [pipeline: Satisfiable, Falsifiable, Indeterminate] x [oracle: sat, unsat]
  std::array<std::array<long long, 2>, 3> matrix{};
  std::vector<CounterexampleEntry> counterexamples;
  long long sizing_lower_le_upper = 0;  // count of records with the flag set
  long long sizing_within_C_b = 0;
  long long sizing_within_Mqc = 0;
};

// Maps a solver outcome to a verdict: binary x with zero y is a satisfying
// assignment (lifted through the trace); binary x with positive y reads as
// falsifiable; anything fractional or unbounded is indeterminate. An
// infeasible outcome throws UnexpectedInfeasible (the program is feasible by
// construction).
Verdict extract_solution(const LpOutcome& outcome, const LcpInstance& inst,
                         const ReductionTrace& trace);

// One formula end to end: rewrite to width 3, encode, partition, fast-path
// trivial instances, otherwise assemble the extended instance, certify,
// solve, and extract. Satisfiable verdicts are re-validated against f.
PipelineResult run_pipeline(const CnfFormula& f);

// Pipeline verdict next to the exhaustive oracle's answer. Agreement means
// Satisfiable vs sat, or Falsifiable vs unsat; an Indeterminate verdict never
// counts as agreement.
VerificationRecord compare_with_oracle(const CnfFormula& f,
                                       int oracle_cap = kDefaultOracleCap);

// Deterministic batch. The "exhaustive3" family is every nonempty subset
// (255) of the eight sign-pattern width-3 clauses over variables {1,2,3};
// "random" draws config.count formulas; "mixed" runs both, family first.
CampaignReport run_campaign(const CampaignConfig& config);

std::vector<CnfFormula> exhaustive3_family();

// The canonical feasible point u0 = (0_N, e_K, 0_L, 0_Q, 0_R, 0, 0) checked
// against M u0 + q >= 0. Exposed for tests; run_pipeline asserts it.
bool pipeline_feasibility_witness(const LcpInstance& inst);

}  // namespace satlcp
