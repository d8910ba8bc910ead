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

// Command line front end. Subcommands mirror the pipeline stages:
//
//   parse      read or generate a CNF formula and echo it
//   reduce     rewrite to width-3 clauses
//   encode     integer inequality system plus clause partition
//   build-lcp  assembled complementarity instance
//   certify    certificate data and exact condition checks
//   solve      simplex run (on the pipeline program or a standalone LP file)
//   verify     full pipeline next to the exhaustive oracle
//   campaign   batch of verify runs with a deterministic report
//   size       measured encoding sizes next to the nominal bounds
//
// Exit codes: 0 success, 1 input or configuration error, 2 internal
// invariant violation, 3 disagreement when --fail-on-disagreement is set.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "satlcp/encode.hpp"
#include "satlcp/errors.hpp"
#include "satlcp/formula.hpp"
#include "satlcp/json_io.hpp"
#include "satlcp/lcp.hpp"
#include "satlcp/lp.hpp"
#include "satlcp/reduce3sat.hpp"
#include "satlcp/sizing.hpp"
#include "satlcp/verify.hpp"

namespace {

using nlohmann::json;

struct SourceOptions {
  std::string input;
  long long n = -1;
  long long m = -1;
  int k = 3;
  std::uint64_t seed = 1;
};

void add_source_flags(CLI::App* cmd, SourceOptions* src) {
  cmd->add_option("--input", src->input, "DIMACS CNF file to read");
  cmd->add_option("--n", src->n, "generator: variable count");
  cmd->add_option("--m", src->m, "generator: clause count");
  cmd->add_option("--k", src->k, "generator: literals per clause")
      ->capture_default_str();
  cmd->add_option("--seed", src->seed, "generator seed")
      ->capture_default_str();
}

satlcp::CnfFormula load_formula(const SourceOptions& src) {
  const bool from_file = !src.input.empty();
  const bool from_generator = src.n >= 0 || src.m >= 0;
  if (from_file == from_generator) {
    throw satlcp::InvalidShape(
        "provide exactly one input source: --input, or --n with --m");
  }
  if (from_file) {
    std::ifstream in(src.input);
    if (!in) throw satlcp::Error("cannot open " + src.input);
    return satlcp::parse_dimacs(in);
  }
  if (src.n < 0 || src.m < 0) {
    throw satlcp::InvalidShape("generator needs both --n and --m");
  }
  return satlcp::random_cnf(static_cast<int>(src.n),
                            static_cast<int>(src.m), src.k, src.seed);
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

json fast_path_note(const char* schema, const satlcp::TrivialityVerdict& t) {
  json j;
  j["schema"] = schema;
  j["fast_path"] = true;
  j["triviality"] = t.kind == satlcp::TrivialityVerdict::Kind::TrivialAllFalse
                        ? "all_false"
                        : "all_true";
  json w = json::array();
  if (t.witness) {
    for (bool b : *t.witness) w.push_back(b ? 1 : 0);
  }
  j["witness"] = w;
  return j;
}

// Stages shared by encode/build-lcp/certify/solve/size.
struct Stages {
  satlcp::ThreeSatFormula f3;
  satlcp::ReductionTrace trace;
  satlcp::InequalitySystem sys;
  satlcp::ClausePartition part;
  satlcp::TrivialityVerdict trivial;
};

Stages run_front(const satlcp::CnfFormula& f) {
  Stages s;
  auto reduced = satlcp::reduce_to_3sat(f);
  s.f3 = std::move(reduced.first);
  s.trace = std::move(reduced.second);
  s.sys = satlcp::encode_clauses(s.f3);
  s.part = satlcp::partition_clauses(s.sys);
  s.trivial = satlcp::detect_trivial(s.part);
  return s;
}

int cmd_parse(const SourceOptions& src, const std::string& format) {
  auto f = load_formula(src);
  if (format == "json") {
    print_json(satlcp::formula_to_json(f));
  } else {
    std::cout << satlcp::to_dimacs(f);
  }
  return 0;
}

int cmd_reduce(const SourceOptions& src, const std::string& format) {
  auto f = load_formula(src);
  auto [f3, trace] = satlcp::reduce_to_3sat(f);
  if (format == "json") {
    print_json(satlcp::reduction_to_json(f3, trace));
  } else {
    std::cout << satlcp::to_dimacs(satlcp::as_cnf(f3));
  }
  return 0;
}

int cmd_encode(const SourceOptions& src) {
  auto s = run_front(load_formula(src));
  print_json(satlcp::encode_to_json(s.sys, s.part, s.trivial));
  return 0;
}

int cmd_build_lcp(const SourceOptions& src) {
  auto s = run_front(load_formula(src));
  if (s.trivial.kind != satlcp::TrivialityVerdict::Kind::NonTrivial) {
    print_json(fast_path_note(satlcp::kSchemaLcp, s.trivial));
    return 0;
  }
  auto aux = satlcp::compute_auxiliary(s.sys);
  auto inst = satlcp::assemble_extended_lcp(s.sys, s.part, aux);
  print_json(satlcp::lcp_to_json(inst));
  return 0;
}

int cmd_certify(const SourceOptions& src) {
  auto s = run_front(load_formula(src));
  if (s.trivial.kind != satlcp::TrivialityVerdict::Kind::NonTrivial) {
    print_json(fast_path_note(satlcp::kSchemaCertificate, s.trivial));
    return 0;
  }
  auto aux = satlcp::compute_auxiliary(s.sys);
  auto inst = satlcp::assemble_extended_lcp(s.sys, s.part, aux);
  auto cert = satlcp::build_certificate(inst, aux);
  auto report = satlcp::check_conditions(inst, cert);
  print_json(satlcp::certificate_to_json(inst, cert, report));
  return 0;
}

bool looks_like_json_file(const std::string& path) {
  return path.size() >= 5 && path.substr(path.size() - 5) == ".json";
}

int cmd_solve(const SourceOptions& src) {
  satlcp::LpInstance lp;
  if (!src.input.empty() && looks_like_json_file(src.input)) {
    std::ifstream in(src.input);
    if (!in) throw satlcp::Error("cannot open " + src.input);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw satlcp::MalformedToken(std::string("invalid JSON: ") + e.what());
    }
    lp = satlcp::lp_from_json(j);
  } else {
    auto s = run_front(load_formula(src));
    if (s.trivial.kind != satlcp::TrivialityVerdict::Kind::NonTrivial) {
      print_json(fast_path_note(satlcp::kSchemaLpOutcome, s.trivial));
      return 0;
    }
    auto aux = satlcp::compute_auxiliary(s.sys);
    auto inst = satlcp::assemble_extended_lcp(s.sys, s.part, aux);
    auto cert = satlcp::build_certificate(inst, aux);
    lp = satlcp::build_lp(inst, cert);
  }
  auto outcome = satlcp::solve_simplex(lp);
  print_json(satlcp::lp_outcome_to_json(outcome));
  return 0;
}

int cmd_verify(const SourceOptions& src, int oracle_cap,
               bool fail_on_disagreement) {
  auto f = load_formula(src);
  auto record = satlcp::compare_with_oracle(f, oracle_cap);
  if (src.input.empty()) {
    record.descriptor.source = "random";
    record.descriptor.k = src.k;
    record.descriptor.seed = src.seed;
  } else {
    record.descriptor.label = src.input;
  }
  print_json(satlcp::record_to_json(record, /*include_timings=*/true));
  if (fail_on_disagreement && !record.agreement) return 3;
  return 0;
}

int cmd_size(const SourceOptions& src) {
  auto f = load_formula(src);
  auto s = run_front(f);
  const int n = f.num_vars;
  const int m = static_cast<int>(f.clauses.size());
  satlcp::SizeReport report;
  if (s.trivial.kind != satlcp::TrivialityVerdict::Kind::NonTrivial) {
    report = satlcp::check_bounds(n, m, s.sys, nullptr, nullptr);
  } else {
    auto aux = satlcp::compute_auxiliary(s.sys);
    auto inst = satlcp::assemble_extended_lcp(s.sys, s.part, aux);
    auto cert = satlcp::build_certificate(inst, aux);
    report = satlcp::check_bounds(n, m, s.sys, &inst, &cert);
  }
  print_json(satlcp::size_report_to_json(report));
  return 0;
}

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw satlcp::Error("cannot write " + path.string());
  out << body;
}

int cmd_campaign(const satlcp::CampaignConfig& config,
                 const std::string& out_dir, const std::string& format,
                 bool fail_on_disagreement) {
  auto report = satlcp::run_campaign(config);
  if (!out_dir.empty()) {
    std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);
    write_file(dir / "report.json",
               satlcp::campaign_to_json(report).dump(2) + "\n");
    write_file(dir / "summary.csv", satlcp::campaign_to_csv(report));
    write_file(dir / "timings.csv", satlcp::timings_to_csv(report));
    if (!report.counterexamples.empty()) {
      auto bundle = dir / "counterexamples";
      std::filesystem::create_directories(bundle);
      for (const auto& ce : report.counterexamples) {
        // Same 1-based index the report records carry.
        std::ostringstream name;
        name << "instance_" << (ce.record_index + 1) << ".cnf";
        write_file(bundle / name.str(), ce.dimacs);
      }
    }
    std::cout << "campaign: " << report.records.size() << " records, "
              << report.counterexamples.size() << " counterexamples -> "
              << dir.string() << "\n";
  } else if (format == "csv") {
    std::cout << satlcp::campaign_to_csv(report);
  } else {
    print_json(satlcp::campaign_to_json(report));
  }
  if (fail_on_disagreement) {
    for (const auto& r : report.records) {
      if (!r.agreement) return 3;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact-arithmetic pipeline from CNF satisfiability to linear "
      "programming, with built-in oracle verification"};
  app.require_subcommand(1);

  SourceOptions src;
  std::string format = "dimacs";
  std::string json_format = "json";
  int oracle_cap = satlcp::kDefaultOracleCap;
  bool fail_on_disagreement = false;
  std::string out_dir;
  satlcp::CampaignConfig config;

  auto* parse = app.add_subcommand("parse", "read or generate a formula");
  add_source_flags(parse, &src);
  parse->add_option("--format", format, "dimacs | json")
      ->capture_default_str()
      ->check(CLI::IsMember({"dimacs", "json"}));

  auto* reduce = app.add_subcommand("reduce", "rewrite to width-3 clauses");
  add_source_flags(reduce, &src);
  reduce->add_option("--format", format, "dimacs | json")
      ->capture_default_str()
      ->check(CLI::IsMember({"dimacs", "json"}));

  auto* encode =
      app.add_subcommand("encode", "inequality system and clause partition");
  add_source_flags(encode, &src);

  auto* build =
      app.add_subcommand("build-lcp", "assembled complementarity instance");
  add_source_flags(build, &src);

  auto* certify =
      app.add_subcommand("certify", "certificate and exact condition checks");
  add_source_flags(certify, &src);

  auto* solve = app.add_subcommand(
      "solve", "simplex run (CNF pipeline or standalone LP .json)");
  add_source_flags(solve, &src);

  auto* verify =
      app.add_subcommand("verify", "pipeline verdict next to the oracle");
  add_source_flags(verify, &src);
  verify->add_option("--oracle-cap", oracle_cap,
                     "largest variable count the oracle enumerates")
      ->capture_default_str();
  verify->add_flag("--fail-on-disagreement", fail_on_disagreement,
                   "exit 3 when the verdict disagrees with the oracle");

  auto* campaign =
      app.add_subcommand("campaign", "batch verification with a report");
  campaign->add_option("--family", config.family,
                       "random | exhaustive3 | mixed")
      ->capture_default_str()
      ->check(CLI::IsMember({"random", "exhaustive3", "mixed"}));
  campaign->add_option("--count", config.count, "random instances")
      ->capture_default_str();
  campaign->add_option("--seed", config.seed, "campaign seed")
      ->capture_default_str();
  campaign->add_option("--k", config.k, "literals per clause")
      ->capture_default_str();
  campaign->add_option("--n", config.fixed_n, "fix the variable count");
  campaign->add_option("--m", config.fixed_m, "fix the clause count");
  campaign->add_option("--oracle-cap", config.oracle_cap,
                       "largest variable count the oracle enumerates")
      ->capture_default_str();
  campaign->add_option("--out-dir", out_dir,
                       "write report.json, summary.csv, timings.csv here");
  campaign->add_option("--format", json_format, "json | csv (stdout mode)")
      ->capture_default_str()
      ->check(CLI::IsMember({"json", "csv"}));
  campaign->add_flag("--fail-on-disagreement", fail_on_disagreement,
                     "exit 3 when any record disagrees with the oracle");

  auto* size =
      app.add_subcommand("size", "measured sizes next to nominal bounds");
  add_source_flags(size, &src);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (parse->parsed()) return cmd_parse(src, format);
    if (reduce->parsed()) return cmd_reduce(src, format);
    if (encode->parsed()) return cmd_encode(src);
    if (build->parsed()) return cmd_build_lcp(src);
    if (certify->parsed()) return cmd_certify(src);
    if (solve->parsed()) return cmd_solve(src);
    if (verify->parsed())
      return cmd_verify(src, oracle_cap, fail_on_disagreement);
    if (campaign->parsed())
      return cmd_campaign(config, out_dir, json_format, fail_on_disagreement);
    if (size->parsed()) return cmd_size(src);
    std::cerr << "error: no subcommand\n";
    return 1;
  } catch (const satlcp::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const satlcp::UnexpectedInfeasible& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const satlcp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
