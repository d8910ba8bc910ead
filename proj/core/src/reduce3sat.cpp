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

#include "satlcp/reduce3sat.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "satlcp/errors.hpp"

namespace satlcp {

namespace {

Literal pos(int var) { return Literal{var, false}; }
Literal neg(int var) { return Literal{var, true}; }

bool is_tautology(const Clause& c) {
  for (const Literal& lit : c.literals) {
    if (std::find(c.literals.begin(), c.literals.end(),
                  Literal{lit.variable, !lit.negated}) != c.literals.end()) {
      return true;
    }
  }
  return false;
}

Clause deduplicated(const Clause& c) {
  Clause out;
  for (const Literal& lit : c.literals) {
    if (std::find(out.literals.begin(), out.literals.end(), lit) ==
        out.literals.end()) {
      out.literals.push_back(lit);
    }
  }
  return out;
}

}  // namespace

std::pair<ThreeSatFormula, ReductionTrace> reduce_to_3sat(const CnfFormula& f) {
  ThreeSatFormula out;
  ReductionTrace trace;
  out.original_vars = f.num_vars;
  trace.original_vars = f.num_vars;
  int next_var = f.num_vars;  // fresh variables are next_var+1, next_var+2, ...

  auto fresh = [&next_var, &trace]() {
    ++next_var;
    trace.auxiliary_vars.push_back(next_var);
    return next_var;
  };
  auto emit = [&out, &trace](Clause c, int source) {
    out.clauses.push_back(std::move(c));
    trace.clause_origin.push_back(source);
  };

  for (int ci = 0; ci < static_cast<int>(f.clauses.size()); ++ci) {
    const Clause c = deduplicated(f.clauses[ci]);
    if (c.literals.empty()) {
      throw EmptyClause("clause " + std::to_string(ci + 1) + " is empty");
    }
    if (is_tautology(c)) {
      trace.dropped_tautologies.push_back(ci);
      continue;
    }
    const auto& lits = c.literals;
    const int k = static_cast<int>(lits.size());
    switch (k) {
      case 1: {
        // All four sign patterns over two fresh variables: the padding is
        // satisfiable only when the original literal is true.
        const int y1 = fresh(), y2 = fresh();
        emit(Clause{{lits[0], pos(y1), pos(y2)}}, ci);
        emit(Clause{{lits[0], neg(y1), pos(y2)}}, ci);
        emit(Clause{{lits[0], pos(y1), neg(y2)}}, ci);
        emit(Clause{{lits[0], neg(y1), neg(y2)}}, ci);
        break;
      }
      case 2: {
        const int y = fresh();
        emit(Clause{{lits[0], lits[1], pos(y)}}, ci);
        emit(Clause{{lits[0], lits[1], neg(y)}}, ci);
        break;
      }
      case 3: {
        emit(c, ci);
        break;
      }
      default: {
        // Chain: fresh z_i carries "some literal beyond position i+1 holds".
        std::vector<int> z(k - 3);
        for (int& v : z) v = fresh();
        emit(Clause{{lits[0], lits[1], pos(z[0])}}, ci);
        for (int i = 0; i + 1 < k - 3; ++i) {
          emit(Clause{{neg(z[i]), lits[i + 2], pos(z[i + 1])}}, ci);
        }
        emit(Clause{{neg(z[k - 4]), lits[k - 2], lits[k - 1]}}, ci);
        break;
      }
    }
  }

  out.num_vars = next_var;
  trace.reduced_vars = next_var;
  return {std::move(out), std::move(trace)};
}

Assignment lift_assignment(const ReductionTrace& trace, const Assignment& a3) {
  if (static_cast<int>(a3.size()) != trace.reduced_vars) {
    throw LengthMismatch("assignment has " + std::to_string(a3.size()) +
                         " values for " + std::to_string(trace.reduced_vars) +
                         " reduced variables");
  }
  return Assignment(a3.begin(), a3.begin() + trace.original_vars);
}

CnfFormula as_cnf(const ThreeSatFormula& f) {
  return CnfFormula{f.num_vars, f.clauses};
}

ThreeSatFormula as_three_sat(const CnfFormula& f) {
  for (int ci = 0; ci < static_cast<int>(f.clauses.size()); ++ci) {
    const Clause& c = f.clauses[ci];
    if (c.literals.size() != 3) {
      throw NotThreeSat("clause " + std::to_string(ci + 1) +
                        " does not have exactly 3 literals");
    }
    std::set<int> vars;
    for (const Literal& lit : c.literals) vars.insert(lit.variable);
    if (vars.size() != 3) {
      throw NotThreeSat("clause " + std::to_string(ci + 1) +
                        " repeats a variable");
    }
  }
  return ThreeSatFormula{f.num_vars, f.clauses, f.num_vars};
}

}  // namespace satlcp
