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

#include <variant>
#include <vector>

#include "satlcp/lcp.hpp"
#include "satlcp/matrix.hpp"
#include "satlcp/rational.hpp"

namespace satlcp {

// min cost^T u  subject to  A u >= b, u >= 0. All data exact rationals.
struct LpInstance {
  RationalMatrix A;
  std::vector<Rational> b;
  std::vector<Rational> cost;
};

// basis holds the final simplex basis as column indices over [structurals,
// slacks): j < cols() is u_j, cols() <= j < cols()+rows() is the slack of row
// j - cols(). dual[i] is the multiplier of row i (nonnegative at optimality).
struct LpOptimal {
  std::vector<Rational> u;
  Rational value;
  std::vector<int> basis;
  std::vector<Rational> dual;
};

// Farkas certificate: y >= 0, y^T A <= 0, y^T b > 0.
struct LpInfeasible {
  std::vector<Rational> y;
};

// Recession direction: ray >= 0, A ray >= 0, cost^T ray < 0.
struct LpUnbounded {
  std::vector<Rational> ray;
};

using LpOutcome = std::variant<LpOptimal, LpInfeasible, LpUnbounded>;

// The derived program: A = M, b = -q, cost = s^T M (as a column vector).
// Any z with z >= 0 and M z + q >= 0 is feasible here, so the pipeline's
// instances are feasible by construction.
LpInstance build_lp(const LcpInstance& inst, const MangasarianCertificate& cert);

// Exact two-phase primal simplex on the full tableau with Bland's rule
// (lowest eligible column enters; ratio ties break to the lowest basic
// variable index). Terminates on every input, including degenerate cycling
// fixtures, and is deterministic. Throws DimensionMismatch on inconsistent
// shapes.
LpOutcome solve_simplex(const LpInstance& lp);

// Re-validates an outcome against the instance from scratch: feasibility,
// complementary slackness and dual feasibility for optima, the Farkas
// inequalities for infeasibility, the ray inequalities for unboundedness.
// Returns false rather than throwing when a certificate fails; throws
// DimensionMismatch only when shapes disagree.
bool check_outcome(const LpInstance& lp, const LpOutcome& outcome);

}  // namespace satlcp
