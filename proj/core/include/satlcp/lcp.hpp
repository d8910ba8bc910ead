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

#include "satlcp/encode.hpp"
#include "satlcp/matrix.hpp"
#include "satlcp/rational.hpp"

namespace satlcp {

// The direct complementarity form of an inequality system: find z >= 0 with
// M z + q >= 0 and z^T (M z + q) = 0, where
//   M = [[-I, 0], [C, 0]]  ((N+M) x (N+M)),  q = (e_N, b).
// The zero column block makes the trailing M components of z inert, so the
// instance is decided by binary x alone.
struct BasicLcpInstance {
  int num_vars = 0;
  int num_clauses = 0;
  IntMatrix C;
  std::vector<long long> b;

  int dimension() const { return num_vars + num_clauses; }
  IntMatrix matrix() const;
  std::vector<long long> affine() const;
};

// Column sums of C and derived vectors, all indexed by variable:
//   g = column sums of C;  v_i = -g_i when g_i < 0, else 0 (so g + v >= 0);
//   P = entrywise min(C, 0);  h = column sums of (C - P) + v;  w = h.
struct AuxiliaryVectors {
  std::vector<long long> g, v, h, w;
  IntMatrix P;

  friend bool operator==(const AuxiliaryVectors&,
                         const AuxiliaryVectors&) = default;
};

// Row/column block sizes of the extended instance, in layout order:
// x-block (n), clause blocks grouped K, L, Q, R, then the two scalar rows
// built from v and w.
struct LcpBlocks {
  int n = 0, nk = 0, nl = 0, nq = 0, nr = 0;

  int dimension() const { return n + nk + nl + nq + nr + 2; }

  friend bool operator==(const LcpBlocks&, const LcpBlocks&) = default;
};

// The extended complementarity instance of dimension D = N + M + 2:
//
//        x-cols   y-cols            q
//   M =  [ -I       0   ]       ( e_N  )
//        [ C_K              ]   ( -e_K )
//        [ C_L      I       ]   ( 2e_L )
//        [ C_Q              ]   ( e_Q  )
//        [ C_R              ]   ( 0_R  )
//        [ v^T             ]    (  0   )
//        [ w^T             ]    (  0   )
//
// where each clause/scalar row carries a +1 diagonal in its own y column and
// zeros elsewhere in the y block. Clause rows are grouped K, L, Q, R but keep
// their relative order; row_to_clause maps grouped position to the original
// row index.
struct LcpInstance {
  LcpBlocks blocks;
  IntMatrix M;
  std::vector<long long> q;
  std::vector<int> row_to_clause;

  int dimension() const { return blocks.dimension(); }
};

// Solvability certificate data in the format
//   M Z1 = Z2 + q c^T,  r^T Z1 + s^T Z2 >= 0 (> 0 with c^T added),
//   r + s > 0,  Z1 and Z2 Z-matrices (off-diagonals <= 0),
// instantiated with r = 0, c = 0,
//   Z1 = [[-I, 0], [P_grouped, I]]  (v/w rows carry only their diagonal 1),
//   s = (e + g - colsum(P) + v, e_{M+2}).
// With c = 0 the first identity reduces to Z2 = M Z1, which is what
// check_conditions verifies.
struct MangasarianCertificate {
  IntMatrix Z1, Z2;
  std::vector<long long> r, c;
  std::vector<long long> s;
};

// Location of the first violation of a certificate condition. For matrix
// conditions row/col are the entry (1-based); for row-vector conditions row
// is 0 and col is the component (1-based).
struct ConditionWitness {
  int row = 0;
  int col = 0;
  long long value = 0;
};

struct ConditionReport {
  bool condition_a = false;  // M Z1 - Z2 - q c^T == 0 entrywise
  bool condition_b = false;  // r^T Z1 + s^T Z2 >= 0 componentwise
  bool condition_c = false;  // r^T Z1 + s^T Z2 + c^T > 0 componentwise
  bool condition_d = false;  // r + s > 0 componentwise
  bool z_matrix_z1 = false;  // off-diagonal entries of Z1 all <= 0
  bool z_matrix_z2 = false;
  std::optional<ConditionWitness> witness_a, witness_b, witness_c, witness_d,
      witness_z1, witness_z2;
};

BasicLcpInstance build_basic_lcp(const InequalitySystem& sys);

// Decides the basic instance by enumerating binary x (complete because the
// inert columns never bind). Returns a satisfying x or nullopt. Throws
// CapExceeded when num_vars > max_vars.
std::optional<std::vector<int>> lcp_has_binary_solution(
    const BasicLcpInstance& inst, int max_vars = 20);

AuxiliaryVectors compute_auxiliary(const InequalitySystem& sys);

// Requires a non-trivial partition (K and L both non-empty); Q and R may be
// empty. Throws TrivialInstance otherwise, DimensionMismatch on inconsistent
// inputs.
LcpInstance assemble_extended_lcp(const InequalitySystem& sys,
                                  const ClausePartition& part,
                                  const AuxiliaryVectors& aux);

MangasarianCertificate build_certificate(const LcpInstance& inst,
                                         const AuxiliaryVectors& aux);

// Evaluates every condition exactly over the integers and records the first
// violation of each failed one. Nothing here is assumed; condition (a) is
// recomputed from M and Z1, not read back from the certificate.
ConditionReport check_conditions(const LcpInstance& inst,
                                 const MangasarianCertificate& cert);

// True when u >= 0, M u + q >= 0, and u^T (M u + q) = 0, evaluated exactly.
bool verify_complementarity(const LcpInstance& inst,
                            const std::vector<Rational>& u);

}  // namespace satlcp
