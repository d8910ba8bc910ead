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

#include "satlcp/json_io.hpp"

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "satlcp/errors.hpp"

namespace satlcp {

using nlohmann::json;

namespace {

json triplets(const IntMatrix& m) {
  json out = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 0) out.push_back({i + 1, j + 1, m(i, j)});
    }
  }
  return out;
}

json rational_triplets(const RationalMatrix& m) {
  json out = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (sgn(m(i, j)) != 0) out.push_back({i + 1, j + 1, to_string(m(i, j))});
    }
  }
  return out;
}

json rational_array(const std::vector<Rational>& v) {
  json out = json::array();
  for (const Rational& r : v) out.push_back(to_string(r));
  return out;
}

json one_based(const std::vector<int>& v) {
  json out = json::array();
  for (int x : v) out.push_back(x + 1);
  return out;
}

json assignment_to_json(const Assignment& a) {
  json out = json::array();
  for (bool bit : a) out.push_back(bit ? 1 : 0);
  return out;
}

json clauses_to_json(const std::vector<Clause>& clauses) {
  json out = json::array();
  for (const Clause& c : clauses) {
    json lits = json::array();
    for (const Literal& lit : c.literals) {
      lits.push_back(lit.negated ? -lit.variable : lit.variable);
    }
    out.push_back(std::move(lits));
  }
  return out;
}

json witness_to_json(const std::optional<ConditionWitness>& w) {
  if (!w) return nullptr;
  return json{{"row", w->row}, {"col", w->col}, {"value", w->value}};
}

const char* triviality_name(TrivialityVerdict::Kind kind) {
  switch (kind) {
    case TrivialityVerdict::Kind::TrivialAllFalse: return "trivial_all_false";
    case TrivialityVerdict::Kind::TrivialAllTrue: return "trivial_all_true";
    default: return "non_trivial";
  }
}

const char* verdict_name(Verdict::Kind kind) {
  switch (kind) {
    case Verdict::Kind::Satisfiable: return "satisfiable";
    case Verdict::Kind::Falsifiable: return "falsifiable";
    default: return "indeterminate";
  }
}

const char* reason_name(IndeterminateReason reason) {
  switch (reason) {
    case IndeterminateReason::FractionalX: return "fractional_x";
    case IndeterminateReason::MixedSignal: return "mixed_signal";
    default: return "solver_unbounded";
  }
}

json conditions_to_json(const ConditionReport& r) {
  return json{
      {"condition_a", r.condition_a},
      {"condition_b", r.condition_b},
      {"condition_c", r.condition_c},
      {"condition_d", r.condition_d},
      {"z_matrix_z1", r.z_matrix_z1},
      {"z_matrix_z2", r.z_matrix_z2},
      {"witnesses",
       json{{"a", witness_to_json(r.witness_a)},
            {"b", witness_to_json(r.witness_b)},
            {"c", witness_to_json(r.witness_c)},
            {"d", witness_to_json(r.witness_d)},
            {"z1", witness_to_json(r.witness_z1)},
            {"z2", witness_to_json(r.witness_z2)}}},
  };
}

Rational rational_field(const json& j) {
  if (!j.is_string()) throw MalformedToken("rational fields are strings");
  return rational_from_string(j.get<std::string>());
}

}  // namespace

json formula_to_json(const CnfFormula& f) {
  return json{{"schema", kSchemaFormula},
              {"num_vars", f.num_vars},
              {"num_clauses", f.clauses.size()},
              {"clauses", clauses_to_json(f.clauses)}};
}

json reduction_to_json(const ThreeSatFormula& f3, const ReductionTrace& trace) {
  return json{
      {"schema", kSchemaReduction},
      {"three_sat",
       json{{"num_vars", f3.num_vars},
            {"original_vars", f3.original_vars},
            {"num_clauses", f3.clauses.size()},
            {"clauses", clauses_to_json(f3.clauses)}}},
      {"trace",
       json{{"original_vars", trace.original_vars},
            {"reduced_vars", trace.reduced_vars},
            {"clause_origin", one_based(trace.clause_origin)},
            {"auxiliary_vars", trace.auxiliary_vars},
            {"dropped_tautologies", one_based(trace.dropped_tautologies)}}},
  };
}

json encode_to_json(const InequalitySystem& sys, const ClausePartition& part,
                    const TrivialityVerdict& trivial) {
  return json{
      {"schema", kSchemaEncode},
      {"num_vars", sys.num_vars},
      {"num_clauses", sys.num_clauses},
      {"C", triplets(sys.C)},
      {"b", sys.b},
      {"partition",
       json{{"K", one_based(part.K)},
            {"L", one_based(part.L)},
            {"Q", one_based(part.Q)},
            {"R", one_based(part.R)}}},
      {"triviality", triviality_name(trivial.kind)},
      {"witness",
       trivial.witness ? assignment_to_json(*trivial.witness) : json(nullptr)},
  };
}

json lcp_to_json(const LcpInstance& inst) {
  return json{
      {"schema", kSchemaLcp},
      {"dimension", inst.dimension()},
      {"blocks",
       json{{"n", inst.blocks.n},
            {"k", inst.blocks.nk},
            {"l", inst.blocks.nl},
            {"q", inst.blocks.nq},
            {"r", inst.blocks.nr}}},
      {"M", triplets(inst.M)},
      {"q_vector", inst.q},
      {"row_to_clause", one_based(inst.row_to_clause)},
  };
}

json certificate_to_json(const LcpInstance& inst,
                         const MangasarianCertificate& cert,
                         const ConditionReport& report) {
  return json{
      {"schema", kSchemaCertificate},
      {"dimension", inst.dimension()},
      {"Z1", triplets(cert.Z1)},
      {"Z2", triplets(cert.Z2)},
      {"r", cert.r},
      {"c", cert.c},
      {"s", cert.s},
      {"conditions", conditions_to_json(report)},
  };
}

json lp_to_json(const LpInstance& lp) {
  return json{
      {"schema", kSchemaLpInstance},
      {"rows", lp.A.rows()},
      {"cols", lp.A.cols()},
      {"A", rational_triplets(lp.A)},
      {"b", rational_array(lp.b)},
      {"cost", rational_array(lp.cost)},
  };
}

LpInstance lp_from_json(const json& j) {
  if (!j.is_object() || j.value("schema", "") != kSchemaLpInstance) {
    throw MalformedToken("expected a " + std::string(kSchemaLpInstance) +
                         " document");
  }
  const int rows = j.at("rows").get<int>();
  const int cols = j.at("cols").get<int>();
  if (rows < 0 || cols < 0 ||
      static_cast<int>(j.at("b").size()) != rows ||
      static_cast<int>(j.at("cost").size()) != cols) {
    throw DimensionMismatch("instance shapes disagree");
  }
  LpInstance lp;
  lp.A = RationalMatrix(rows, cols);
  for (const json& t : j.at("A")) {
    if (!t.is_array() || t.size() != 3) {
      throw MalformedToken("matrix triplets are [row, col, value]");
    }
    const int r = t[0].get<int>(), c = t[1].get<int>();
    if (r < 1 || r > rows || c < 1 || c > cols) {
      throw DimensionMismatch("triplet index out of range");
    }
    lp.A(r - 1, c - 1) = rational_field(t[2]);
  }
  for (const json& x : j.at("b")) lp.b.push_back(rational_field(x));
  for (const json& x : j.at("cost")) lp.cost.push_back(rational_field(x));
  return lp;
}

json lp_outcome_to_json(const LpOutcome& outcome) {
  json out{{"schema", kSchemaLpOutcome}};
  if (const auto* opt = std::get_if<LpOptimal>(&outcome)) {
    out["status"] = "optimal";
    out["u"] = rational_array(opt->u);
    out["value"] = to_string(opt->value);
    out["basis"] = one_based(opt->basis);
    out["dual"] = rational_array(opt->dual);
  } else if (const auto* inf = std::get_if<LpInfeasible>(&outcome)) {
    out["status"] = "infeasible";
    out["y"] = rational_array(inf->y);
  } else {
    out["status"] = "unbounded";
    out["ray"] = rational_array(std::get<LpUnbounded>(outcome).ray);
  }
  return out;
}

LpOutcome lp_outcome_from_json(const json& j) {
  if (!j.is_object() || j.value("schema", "") != kSchemaLpOutcome) {
    throw MalformedToken("expected a " + std::string(kSchemaLpOutcome) +
                         " document");
  }
  const std::string status = j.at("status").get<std::string>();
  auto vec = [](const json& arr) {
    std::vector<Rational> out;
    for (const json& x : arr) out.push_back(rational_field(x));
    return out;
  };
  if (status == "optimal") {
    LpOptimal opt;
    opt.u = vec(j.at("u"));
    opt.value = rational_field(j.at("value"));
    for (const json& x : j.at("basis")) opt.basis.push_back(x.get<int>() - 1);
    opt.dual = vec(j.at("dual"));
    return opt;
  }
  if (status == "infeasible") return LpInfeasible{vec(j.at("y"))};
  if (status == "unbounded") return LpUnbounded{vec(j.at("ray"))};
  throw MalformedToken("unknown outcome status '" + status + "'");
}

json size_report_to_json(const SizeReport& report) {
  return json{
      {"schema", kSchemaSizeReport},
      {"measured_size_C_b", report.measured_size_C_b},
      {"paper_lower", report.paper_lower},
      {"paper_upper", report.paper_upper},
      {"assembled", report.assembled},
      {"measured_size_M_q_c", report.measured_size_M_q_c},
      {"paper_bound_Mqc", report.paper_bound_Mqc},
      {"ratio_bound", report.ratio_bound},
      {"operation_bound", report.operation_bound.get_str()},
      {"flags",
       json{{"lower_le_upper", report.lower_le_upper},
            {"size_C_b_within_bounds", report.size_C_b_within_bounds},
            {"size_Mqc_within_bound", report.size_Mqc_within_bound},
            {"ratio_within_bound", report.ratio_within_bound}}},
  };
}

namespace {

json verdict_to_json(const Verdict& verdict) {
  json out{{"kind", verdict_name(verdict.kind)}};
  out["assignment"] = verdict.assignment
                          ? assignment_to_json(*verdict.assignment)
                          : json(nullptr);
  out["reason"] =
      verdict.reason ? json(reason_name(*verdict.reason)) : json(nullptr);
  return out;
}

json descriptor_to_json(const InstanceDescriptor& desc) {
  return json{{"source", desc.source}, {"n", desc.n},       {"m", desc.m},
              {"k", desc.k},           {"seed", desc.seed}, {"label", desc.label}};
}

}  // namespace

json record_to_json(const VerificationRecord& record, bool include_timings) {
  const PipelineResult& p = record.pipeline;
  json out{
      {"schema", kSchemaRecord},
      {"descriptor", descriptor_to_json(record.descriptor)},
      {"verdict", verdict_to_json(p.verdict)},
      {"triviality", triviality_name(p.triviality)},
      {"fast_path", p.fast_path},
      {"conditions",
       p.conditions ? conditions_to_json(*p.conditions) : json(nullptr)},
      {"objective", p.objective ? json(to_string(*p.objective)) : json(nullptr)},
      {"optimum_complementary", p.optimum_complementary
                                    ? json(*p.optimum_complementary)
                                    : json(nullptr)},
      {"feasibility_witness_ok", p.feasibility_witness_ok},
      {"outcome_verified", p.outcome_verified},
      {"downgraded", p.downgraded},
      {"sizing", size_report_to_json(p.sizing)},
      {"oracle_satisfiable", record.oracle_satisfiable
                                 ? json(*record.oracle_satisfiable)
                                 : json(nullptr)},
      {"agreement", record.agreement},
  };
  if (include_timings) {
    out["timings"] = json{{"reduce_ms", p.timings.reduce_ms},
                          {"encode_ms", p.timings.encode_ms},
                          {"assemble_ms", p.timings.assemble_ms},
                          {"certify_ms", p.timings.certify_ms},
                          {"solve_ms", p.timings.solve_ms},
                          {"extract_ms", p.timings.extract_ms},
                          {"total_ms", p.timings.total_ms}};
  }
  return out;
}

json campaign_to_json(const CampaignReport& report) {
  json records = json::array();
  for (const VerificationRecord& r : report.records) {
    records.push_back(record_to_json(r, /*include_timings=*/false));
  }
  json counterexamples = json::array();
  for (const CounterexampleEntry& c : report.counterexamples) {
    counterexamples.push_back(json{{"record_index", c.record_index + 1},
                                   {"reason", c.reason},
                                   {"dimacs", c.dimacs}});
  }
  return json{
      {"schema", kSchemaCampaign},
      {"config",
       json{{"family", report.config.family},
            {"count", report.config.count},
            {"seed", report.config.seed},
            {"n_min", report.config.n_min},
            {"n_max", report.config.n_max},
            {"ratio_min", report.config.ratio_min},
            {"ratio_max", report.config.ratio_max},
            {"k", report.config.k},
            {"fixed_n", report.config.fixed_n},
            {"fixed_m", report.config.fixed_m},
            {"oracle_cap", report.config.oracle_cap}}},
      {"total_records", report.records.size()},
      {"matrix",
       json{{"satisfiable", {report.matrix[0][0], report.matrix[0][1]}},
            {"falsifiable", {report.matrix[1][0], report.matrix[1][1]}},
            {"indeterminate", {report.matrix[2][0], report.matrix[2][1]}}}},
      {"sizing",
       json{{"lower_le_upper", report.sizing_lower_le_upper},
            {"within_C_b", report.sizing_within_C_b},
            {"within_Mqc", report.sizing_within_Mqc}}},
      {"records", std::move(records)},
      {"counterexamples", std::move(counterexamples)},
  };
}

namespace {

std::string csv_escape(const std::string& s) {
  // Labels and reasons contain no commas or quotes by construction; keep the
  // escape anyway so the format stays well-formed for arbitrary file labels.
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace

std::string campaign_to_csv(const CampaignReport& report) {
  std::ostringstream out;
  out << "index,source,label,n,m,k,seed,verdict,reason,oracle,agreement,"
         "fast_path,triviality,cond_a,cond_b,cond_c,cond_d,zmat_z1,zmat_z2,"
         "objective,complementary,outcome_verified,size_C_b,paper_lower,"
         "paper_upper,size_Mqc,paper_bound_Mqc,ratio_bound,operation_bound,"
         "lower_le_upper,within_C_b,within_Mqc,ratio_within\n";
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    const VerificationRecord& r = report.records[i];
    const PipelineResult& p = r.pipeline;
    out << (i + 1) << ',' << csv_escape(r.descriptor.source) << ','
        << csv_escape(r.descriptor.label) << ',' << r.descriptor.n << ','
        << r.descriptor.m << ',' << r.descriptor.k << ',' << r.descriptor.seed
        << ',' << verdict_name(p.verdict.kind) << ','
        << (p.verdict.reason ? reason_name(*p.verdict.reason) : "") << ','
        << (r.oracle_satisfiable
                ? (*r.oracle_satisfiable ? "satisfiable" : "falsifiable")
                : "")
        << ',' << (r.agreement ? 1 : 0) << ',' << (p.fast_path ? 1 : 0) << ','
        << triviality_name(p.triviality) << ',';
    if (p.conditions) {
      out << (p.conditions->condition_a ? 1 : 0) << ','
          << (p.conditions->condition_b ? 1 : 0) << ','
          << (p.conditions->condition_c ? 1 : 0) << ','
          << (p.conditions->condition_d ? 1 : 0) << ','
          << (p.conditions->z_matrix_z1 ? 1 : 0) << ','
          << (p.conditions->z_matrix_z2 ? 1 : 0) << ',';
    } else {
      out << ",,,,,,";
    }
    out << (p.objective ? to_string(*p.objective) : "") << ','
        << (p.optimum_complementary ? (*p.optimum_complementary ? "1" : "0")
                                    : "")
        << ',' << (p.outcome_verified ? 1 : 0) << ','
        << p.sizing.measured_size_C_b << ',' << p.sizing.paper_lower << ','
        << p.sizing.paper_upper << ',' << p.sizing.measured_size_M_q_c << ','
        << p.sizing.paper_bound_Mqc << ',' << p.sizing.ratio_bound << ','
        << p.sizing.operation_bound.get_str() << ','
        << (p.sizing.lower_le_upper ? 1 : 0) << ','
        << (p.sizing.size_C_b_within_bounds ? 1 : 0) << ','
        << (p.sizing.size_Mqc_within_bound ? 1 : 0) << ','
        << (p.sizing.ratio_within_bound ? 1 : 0) << '\n';
  }
  return out.str();
}

std::string timings_to_csv(const CampaignReport& report) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3);
  out << "index,label,reduce_ms,encode_ms,assemble_ms,certify_ms,solve_ms,"
         "extract_ms,total_ms\n";
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    const StageTimings& t = report.records[i].pipeline.timings;
    out << (i + 1) << ',' << csv_escape(report.records[i].descriptor.label)
        << ',' << t.reduce_ms << ',' << t.encode_ms << ',' << t.assemble_ms
        << ',' << t.certify_ms << ',' << t.solve_ms << ',' << t.extract_ms
        << ',' << t.total_ms << '\n';
  }
  return out.str();
}

}  // namespace satlcp
