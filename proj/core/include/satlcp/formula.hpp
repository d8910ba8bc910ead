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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace satlcp {

// A reference to propositional variable `variable` (1-based), possibly negated.
struct Literal {
  int variable = 0;
  bool negated = false;

  friend bool operator==(const Literal&, const Literal&) = default;
};

// A disjunction of literals. Normalized clauses carry no duplicate
// (variable, negated) pair; tautologies (v and not-v together) are legal here
// and are only removed by the width-3 rewriter.
struct Clause {
  std::vector<Literal> literals;

  friend bool operator==(const Clause&, const Clause&) = default;
};

// A conjunction of clauses over variables 1..num_vars.
struct CnfFormula {
  int num_vars = 0;
  std::vector<Clause> clauses;

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

// values[i] is the truth value of variable i+1.
using Assignment = std::vector<bool>;

inline constexpr int kDefaultOracleCap = 25;

// Reads DIMACS CNF. Comment lines start with 'c'; clauses are zero-terminated
// and may span lines; duplicate literals within a clause are dropped (first
// occurrence kept); tautological clauses are preserved. Throws MissingHeader,
// ClauseCountMismatch, VariableOutOfRange, or MalformedToken.
CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs(const std::string& text);

// Emits "p cnf <n> <m>" plus one zero-terminated clause per line. Parsing the
// output reproduces the formula exactly.
std::string to_dimacs(const CnfFormula& f);

// True when every clause contains at least one satisfied literal. An empty
// clause list is satisfied. Throws LengthMismatch on a wrong-size assignment.
bool evaluate(const CnfFormula& f, const Assignment& a);

// Exhaustive satisfiability oracle. Tries all 2^n assignments in counter
// order (variable 1 is the fastest-moving bit, false before true) and returns
// the first satisfying assignment, or nullopt. Throws CapExceeded when
// num_vars > max_vars.
std::optional<Assignment> brute_force_sat(const CnfFormula& f,
                                          int max_vars = kDefaultOracleCap);

// Seed-deterministic random formula: num_clauses clauses, each over
// clause_size distinct variables (sorted ascending) with independent uniform
// polarity. Throws InvalidShape when clause_size < 1 or when num_clauses > 0
// and clause_size > num_vars; num_clauses == 0 is a valid empty formula.
CnfFormula random_cnf(int num_vars, int num_clauses, int clause_size,
                      std::uint64_t seed);

}  // namespace satlcp
