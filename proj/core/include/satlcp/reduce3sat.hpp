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

#include <utility>
#include <vector>

#include "satlcp/formula.hpp"

namespace satlcp {

// A CNF formula in strict width-3 form: every clause has exactly three
// literals over three distinct variables. Variables 1..original_vars are the
// source formula's variables, unchanged; the rest are fresh.
struct ThreeSatFormula {
  int num_vars = 0;
  std::vector<Clause> clauses;
  int original_vars = 0;

  friend bool operator==(const ThreeSatFormula&,
                         const ThreeSatFormula&) = default;
};

// Bookkeeping that makes the rewrite auditable and invertible on the
// variable prefix.
struct ReductionTrace {
  int original_vars = 0;
  int reduced_vars = 0;
  // Output clause index -> source clause index (both 0-based).
  std::vector<int> clause_origin;
  // Fresh variable indices, ascending: original_vars+1 .. reduced_vars.
  std::vector<int> auxiliary_vars;
  // Source clause indices dropped because they contain v and not-v.
  std::vector<int> dropped_tautologies;

  friend bool operator==(const ReductionTrace&,
                         const ReductionTrace&) = default;
};

// Equisatisfiable width-3 rewrite. Duplicate literals are dropped first and
// tautological clauses removed. Per distinct-literal count k:
//   k=1: four clauses padding the literal with every sign pattern over two
//        fresh variables; k=2: two clauses over one fresh variable; k=3:
//        copied; k>3: a chain of k-2 clauses over k-3 fresh variables.
// Fresh variables are appended in clause order. Throws EmptyClause when a
// clause has no literals.
std::pair<ThreeSatFormula, ReductionTrace> reduce_to_3sat(const CnfFormula& f);

// Restricts an assignment over reduced_vars to the original prefix.
// Throws LengthMismatch on a wrong-size input.
Assignment lift_assignment(const ReductionTrace& trace, const Assignment& a3);

// View of a width-3 formula as plain CNF (for evaluation and oracles).
CnfFormula as_cnf(const ThreeSatFormula& f);

// Validates that a CNF formula is already in strict width-3 form and wraps
// it with original_vars = num_vars. Throws NotThreeSat otherwise.
ThreeSatFormula as_three_sat(const CnfFormula& f);

}  // namespace satlcp
