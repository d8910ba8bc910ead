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

#include <optional>
#include <vector>

#include "satlcp/formula.hpp"
#include "satlcp/matrix.hpp"
#include "satlcp/reduce3sat.hpp"

namespace satlcp {

// The linear view of a width-3 formula: row i holds +1 for an affirmative
// literal, -1 for a negated one (three nonzeros), and b[i] is the row's
// negative count minus one. A binary x satisfies clause i exactly when
// C_i x + b[i] >= 0.
struct InequalitySystem {
  int num_vars = 0;    // N, columns
  int num_clauses = 0; // M, rows
  IntMatrix C;
  std::vector<long long> b;

  friend bool operator==(const InequalitySystem&,
                         const InequalitySystem&) = default;
};

// Row indices (0-based, original order) grouped by b value:
// K: b = -1 (all-affirmative rows), L: b = 2 (all-negated rows),
// Q: b = 1 (one affirmative), R: b = 0 (two affirmative).
struct ClausePartition {
  std::vector<int> K, L, Q, R;
  int num_rows = 0;
  int num_vars = 0;

  friend bool operator==(const ClausePartition&,
                         const ClausePartition&) = default;
};

// Instances where one constant assignment already wins. With no K rows the
// all-false point satisfies every row; otherwise with no L rows all-true does.
struct TrivialityVerdict {
  enum class Kind { NonTrivial, TrivialAllFalse, TrivialAllTrue };
  Kind kind = Kind::NonTrivial;
  std::optional<Assignment> witness;
};

// Throws NotThreeSat when a clause does not have exactly three literals over
// three distinct variables.
InequalitySystem encode_clauses(const ThreeSatFormula& f);

// Re-validates every row (entries in {-1,0,1}, three nonzeros, b consistent
// with the negative count) and groups them. Throws UnclassifiableRow.
ClausePartition partition_clauses(const InequalitySystem& sys);

TrivialityVerdict detect_trivial(const ClausePartition& part);

// True when C x + b >= 0 componentwise. Callers pass binary x; the check is
// evaluated as given. Throws DimensionMismatch on a wrong-size x.
bool feasibility_check(const InequalitySystem& sys, const std::vector<int>& x);

}  // namespace satlcp
