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

#include "satlcp/verify.hpp"

#include <chrono>
#include <random>
#include <string>
#include <utility>

#include "internal_rng.hpp"
#include "satlcp/errors.hpp"
#include "satlcp/reduce3sat.hpp"

namespace satlcp {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

int verdict_row(Verdict::Kind kind) {
  switch (kind) {
    case Verdict::Kind::Satisfiable: return 0;
    case Verdict::Kind::Falsifiable: return 1;
    default: return 2;
  }
}

}  // namespace

Verdict extract_solution(const LpOutcome& outcome, const LcpInstance& inst,
                         const ReductionTrace& trace) {
  if (std::holds_alternative<LpUnbounded>(outcome)) {
    return Verdict{Verdict::Kind::Indeterminate, std::nullopt,
                   IndeterminateReason::SolverUnbounded};
  }
  if (std::holds_alternative<LpInfeasible>(outcome)) {
    throw UnexpectedInfeasible(
        "the derived program is feasible by construction");
  }
  const LpOptimal& opt = std::get<LpOptimal>(outcome);
  const int n = inst.blocks.n;
  const int dim = inst.dimension();
  if (static_cast<int>(opt.u.size()) != dim) {
    throw DimensionMismatch("optimum has wrong length");
  }

  bool integral = true;
  for (int j = 0; j < n && integral; ++j) {
    integral = (opt.u[j] == 0 || opt.u[j] == 1);
  }
  bool slack_free = true;
  for (int j = n; j < dim && slack_free; ++j) {
    slack_free = (sgn(opt.u[j]) == 0);
  }

  if (integral && slack_free) {
    Assignment a3(n, false);
    for (int j = 0; j < n; ++j) a3[j] = (opt.u[j] == 1);
    return Verdict{Verdict::Kind::Satisfiable, lift_assignment(trace, a3),
                   std::nullopt};
  }
  if (integral) return Verdict{Verdict::Kind::Falsifiable, std::nullopt,
                               std::nullopt};
  if (slack_free) return Verdict{Verdict::Kind::Indeterminate, std::nullopt,
                                 IndeterminateReason::FractionalX};
  return Verdict{Verdict::Kind::Indeterminate, std::nullopt,
                 IndeterminateReason::MixedSignal};
}

bool pipeline_feasibility_witness(const LcpInstance& inst) {
  const int dim = inst.dimension();
  std::vector<Rational> u0(dim, Rational(0));
  for (int t = 0; t < inst.blocks.nk; ++t) u0[inst.blocks.n + t] = 1;
  for (int i = 0; i < dim; ++i) {
    Rational acc = rat(inst.q[i]);
    for (int j = 0; j < dim; ++j) {
      if (inst.M(i, j) != 0 && sgn(u0[j]) != 0) acc += rat(inst.M(i, j)) * u0[j];
    }
    if (sgn(acc) < 0) return false;
  }
  return true;
}

PipelineResult run_pipeline(const CnfFormula& f) {
  PipelineResult result;
  const auto t_total = Clock::now();

  auto t_stage = Clock::now();
  const auto [f3, trace] = reduce_to_3sat(f);
  result.timings.reduce_ms = ms_since(t_stage);

  t_stage = Clock::now();
  const InequalitySystem sys = encode_clauses(f3);
  const ClausePartition part = partition_clauses(sys);
  const TrivialityVerdict trivial = detect_trivial(part);
  result.timings.encode_ms = ms_since(t_stage);
  result.triviality = trivial.kind;

  const int n = f.num_vars;
  const int m = static_cast<int>(f.clauses.size());

  if (trivial.kind != TrivialityVerdict::Kind::NonTrivial) {
    result.fast_path = true;
    result.verdict.kind = Verdict::Kind::Satisfiable;
    result.verdict.assignment = lift_assignment(trace, *trivial.witness);
    result.sizing = check_bounds(n, m, sys, nullptr, nullptr);
  } else {
    t_stage = Clock::now();
    const AuxiliaryVectors aux = compute_auxiliary(sys);
    const LcpInstance inst = assemble_extended_lcp(sys, part, aux);
    result.timings.assemble_ms = ms_since(t_stage);

    t_stage = Clock::now();
    const MangasarianCertificate cert = build_certificate(inst, aux);
    result.conditions = check_conditions(inst, cert);
    result.timings.certify_ms = ms_since(t_stage);

    const LpInstance lp = build_lp(inst, cert);
    result.feasibility_witness_ok = pipeline_feasibility_witness(inst);
    if (!result.feasibility_witness_ok) {
      throw InternalError("canonical feasible point violates the program");
    }

    t_stage = Clock::now();
    const LpOutcome outcome = solve_simplex(lp);
    result.timings.solve_ms = ms_since(t_stage);
    result.outcome_verified = check_outcome(lp, outcome);
    if (!result.outcome_verified) {
      throw InternalError("solver certificate failed re-validation");
    }

    t_stage = Clock::now();
    if (const auto* opt = std::get_if<LpOptimal>(&outcome)) {
      result.objective = opt->value;
      result.optimum_complementary = verify_complementarity(inst, opt->u);
    }
    result.verdict = extract_solution(outcome, inst, trace);
    result.lp_outcome = outcome;
    result.timings.extract_ms = ms_since(t_stage);

    result.sizing = check_bounds(n, m, sys, &inst, &cert);
  }

  if (result.verdict.kind == Verdict::Kind::Satisfiable) {
    // The witness must satisfy the source formula, not just the rewrite.
    if (!evaluate(f, *result.verdict.assignment)) {
      result.verdict = Verdict{Verdict::Kind::Indeterminate, std::nullopt,
                               IndeterminateReason::MixedSignal};
      result.downgraded = true;
    }
  }
  result.timings.total_ms = ms_since(t_total);
  return result;
}

VerificationRecord compare_with_oracle(const CnfFormula& f, int oracle_cap) {
  VerificationRecord record;
  record.descriptor.source = "file";
  record.descriptor.n = f.num_vars;
  record.descriptor.m = static_cast<int>(f.clauses.size());
  record.pipeline = run_pipeline(f);
  record.oracle_satisfiable = brute_force_sat(f, oracle_cap).has_value();
  const Verdict::Kind kind = record.pipeline.verdict.kind;
  record.agreement =
      (kind == Verdict::Kind::Satisfiable && *record.oracle_satisfiable) ||
      (kind == Verdict::Kind::Falsifiable && !*record.oracle_satisfiable);
  return record;
}

std::vector<CnfFormula> exhaustive3_family() {
  std::vector<CnfFormula> out;
  out.reserve(255);
  for (int mask = 1; mask < 256; ++mask) {
    CnfFormula f;
    f.num_vars = 3;
    for (int pattern = 0; pattern < 8; ++pattern) {
      if ((mask >> pattern & 1) == 0) continue;
      Clause c;
      for (int v = 1; v <= 3; ++v) {
        c.literals.push_back(Literal{v, (pattern >> (v - 1) & 1) != 0});
      }
      f.clauses.push_back(std::move(c));
    }
    out.push_back(std::move(f));
  }
  return out;
}

CampaignReport run_campaign(const CampaignConfig& config) {
  const bool want_family =
      config.family == "exhaustive3" || config.family == "mixed";
  const bool want_random =
      config.family == "random" || config.family == "mixed";
  if (!want_family && !want_random) {
    throw InvalidShape("unknown campaign family '" + config.family + "'");
  }
  if (config.n_min < 1 || config.n_min > config.n_max ||
      config.ratio_min < 1 || config.ratio_min > config.ratio_max ||
      config.count < 0) {
    throw InvalidShape("campaign ranges are inconsistent");
  }

  CampaignReport report;
  report.config = config;

  std::vector<std::pair<CnfFormula, InstanceDescriptor>> instances;
  if (want_family) {
    int mask = 1;
    for (CnfFormula& f : exhaustive3_family()) {
      InstanceDescriptor desc;
      desc.source = "exhaustive3";
      desc.n = f.num_vars;
      desc.m = static_cast<int>(f.clauses.size());
      desc.k = 3;
      desc.label = "exhaustive3/mask=" + std::to_string(mask++);
      instances.emplace_back(std::move(f), std::move(desc));
    }
  }
  if (want_random) {
    for (int i = 0; i < config.count; ++i) {
      const std::uint64_t iseed =
          internal::splitmix64(config.seed + static_cast<std::uint64_t>(i));
      std::mt19937_64 rng(iseed);
      int n = config.n_min +
              static_cast<int>(internal::uniform_below(
                  rng, std::uint64_t(config.n_max - config.n_min + 1)));
      if (config.fixed_n >= 0) n = config.fixed_n;
      const int m_lo = n * config.ratio_min, m_hi = n * config.ratio_max;
      int m = m_lo + static_cast<int>(internal::uniform_below(
                         rng, std::uint64_t(m_hi - m_lo + 1)));
      if (config.fixed_m >= 0) m = config.fixed_m;
      const int k = config.k <= n ? config.k : n;
      const std::uint64_t formula_seed = rng();
      InstanceDescriptor desc;
      desc.source = "random";
      desc.n = n;
      desc.m = m;
      desc.k = k;
      desc.seed = iseed;
      desc.label = "random/i=" + std::to_string(i);
      instances.emplace_back(random_cnf(n, m, k, formula_seed),
                             std::move(desc));
    }
  }

  report.records.reserve(instances.size());
  for (auto& [f, desc] : instances) {
    VerificationRecord record = compare_with_oracle(f, config.oracle_cap);
    record.descriptor = desc;
    const int row = verdict_row(record.pipeline.verdict.kind);
    const int col = *record.oracle_satisfiable ? 0 : 1;
    ++report.matrix[row][col];
    if (record.pipeline.sizing.lower_le_upper) ++report.sizing_lower_le_upper;
    if (record.pipeline.sizing.size_C_b_within_bounds)
      ++report.sizing_within_C_b;
    if (record.pipeline.sizing.size_Mqc_within_bound)
      ++report.sizing_within_Mqc;
    const int index = static_cast<int>(report.records.size());
    if (record.pipeline.verdict.kind == Verdict::Kind::Indeterminate) {
      report.counterexamples.push_back(
          CounterexampleEntry{index, "indeterminate", to_dimacs(f)});
    } else if (!record.agreement) {
      report.counterexamples.push_back(
          CounterexampleEntry{index, "disagreement", to_dimacs(f)});
    }
    report.records.push_back(std::move(record));
  }
  return report;
}

}  // namespace satlcp
