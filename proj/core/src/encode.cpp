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

#include "satlcp/encode.hpp"

#include <set>
#include <string>

#include "satlcp/errors.hpp"

namespace satlcp {

InequalitySystem encode_clauses(const ThreeSatFormula& f) {
  InequalitySystem sys;
  sys.num_vars = f.num_vars;
  sys.num_clauses = static_cast<int>(f.clauses.size());
  sys.C = IntMatrix(sys.num_clauses, sys.num_vars);
  sys.b.assign(sys.num_clauses, 0);

  for (int i = 0; i < sys.num_clauses; ++i) {
    const Clause& c = f.clauses[i];
    if (c.literals.size() != 3) {
      throw NotThreeSat("clause " + std::to_string(i + 1) +
                        " does not have exactly 3 literals");
    }
    std::set<int> vars;
    int negatives = 0;
    for (const Literal& lit : c.literals) {
      if (lit.variable < 1 || lit.variable > sys.num_vars) {
        throw NotThreeSat("clause " + std::to_string(i + 1) +
                          " references variable " +
                          std::to_string(lit.variable) + " outside 1.." +
                          std::to_string(sys.num_vars));
      }
      if (!vars.insert(lit.variable).second) {
        throw NotThreeSat("clause " + std::to_string(i + 1) +
                          " repeats a variable");
      }
      sys.C(i, lit.variable - 1) = lit.negated ? -1 : 1;
      if (lit.negated) ++negatives;
    }
    sys.b[i] = negatives - 1;
  }
  return sys;
}

ClausePartition partition_clauses(const InequalitySystem& sys) {
  ClausePartition part;
  part.num_rows = sys.num_clauses;
  part.num_vars = sys.num_vars;
  if (sys.C.rows() != sys.num_clauses || sys.C.cols() != sys.num_vars ||
      static_cast<int>(sys.b.size()) != sys.num_clauses) {
    throw UnclassifiableRow("system shape is inconsistent");
  }

  for (int i = 0; i < sys.num_clauses; ++i) {
    int negatives = 0, nonzeros = 0;
    for (int j = 0; j < sys.num_vars; ++j) {
      const long long e = sys.C(i, j);
      if (e == 0) continue;
      if (e != 1 && e != -1) {
        throw UnclassifiableRow("row " + std::to_string(i + 1) +
                                " has entry " + std::to_string(e));
      }
      ++nonzeros;
      if (e == -1) ++negatives;
    }
    if (nonzeros != 3) {
      throw UnclassifiableRow("row " + std::to_string(i + 1) + " has " +
                              std::to_string(nonzeros) + " nonzeros");
    }
    if (sys.b[i] != negatives - 1) {
      throw UnclassifiableRow("row " + std::to_string(i + 1) +
                              " has b = " + std::to_string(sys.b[i]) +
                              " but " + std::to_string(negatives) +
                              " negative entries");
    }
    switch (negatives) {
      case 0: part.K.push_back(i); break;
      case 3: part.L.push_back(i); break;
      case 2: part.Q.push_back(i); break;
      default: part.R.push_back(i); break;  // exactly 1
    }
  }
  return part;
}

TrivialityVerdict detect_trivial(const ClausePartition& part) {
  TrivialityVerdict verdict;
  if (part.K.empty()) {
    // Every row has a negated literal, so the all-false point satisfies all.
    verdict.kind = TrivialityVerdict::Kind::TrivialAllFalse;
    verdict.witness = Assignment(part.num_vars, false);
  } else if (part.L.empty()) {
    // Every row has an affirmative literal.
    verdict.kind = TrivialityVerdict::Kind::TrivialAllTrue;
    verdict.witness = Assignment(part.num_vars, true);
  }
  return verdict;
}

bool feasibility_check(const InequalitySystem& sys,
                       const std::vector<int>& x) {
  if (static_cast<int>(x.size()) != sys.num_vars) {
    throw DimensionMismatch("x has " + std::to_string(x.size()) +
                            " entries for " + std::to_string(sys.num_vars) +
                            " variables");
  }
  for (int i = 0; i < sys.num_clauses; ++i) {
    long long lhs = sys.b[i];
    for (int j = 0; j < sys.num_vars; ++j) {
      lhs += sys.C(i, j) * x[j];
    }
    if (lhs < 0) return false;
  }
  return true;
}

}  // namespace satlcp
