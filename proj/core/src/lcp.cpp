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

#include "satlcp/lcp.hpp"

#include <cstdint>
#include <string>

#include "satlcp/errors.hpp"

namespace satlcp {

BasicLcpInstance build_basic_lcp(const InequalitySystem& sys) {
  return BasicLcpInstance{sys.num_vars, sys.num_clauses, sys.C, sys.b};
}

IntMatrix BasicLcpInstance::matrix() const {
  const int n = num_vars, m = num_clauses;
  IntMatrix out(n + m, n + m);
  for (int i = 0; i < n; ++i) out(i, i) = -1;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) out(n + i, j) = C(i, j);
  return out;
}

std::vector<long long> BasicLcpInstance::affine() const {
  std::vector<long long> out(num_vars, 1);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::optional<std::vector<int>> lcp_has_binary_solution(
    const BasicLcpInstance& inst, int max_vars) {
  // The trailing components of z multiply zero columns, so z = (x, anything)
  // is complementary iff the binary x satisfies every row. Enumeration over
  // x is therefore a complete decision procedure.
  if (inst.num_vars > max_vars) {
    throw CapExceeded("binary enumeration over " +
                      std::to_string(inst.num_vars) +
                      " variables exceeds cap " + std::to_string(max_vars));
  }
  const std::uint64_t total = std::uint64_t{1} << inst.num_vars;
  std::vector<int> x(inst.num_vars, 0);
  for (std::uint64_t counter = 0; counter < total; ++counter) {
    for (int j = 0; j < inst.num_vars; ++j) x[j] = (counter >> j) & 1;
    bool ok = true;
    for (int i = 0; i < inst.num_clauses && ok; ++i) {
      long long lhs = inst.b[i];
      for (int j = 0; j < inst.num_vars; ++j) lhs += inst.C(i, j) * x[j];
      ok = lhs >= 0;
    }
    if (ok) return x;
  }
  return std::nullopt;
}

AuxiliaryVectors compute_auxiliary(const InequalitySystem& sys) {
  const int n = sys.num_vars, m = sys.num_clauses;
  AuxiliaryVectors aux;
  aux.g.assign(n, 0);
  aux.v.assign(n, 0);
  aux.h.assign(n, 0);
  aux.w.assign(n, 0);
  aux.P = IntMatrix(m, n);

  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      const long long e = sys.C(i, j);
      aux.g[j] += e;
      if (e < 0) aux.P(i, j) = e;
    }
  }
  for (int j = 0; j < n; ++j) {
    if (aux.g[j] < 0) aux.v[j] = -aux.g[j];
    long long positive_part = 0;  // column sum of C - P
    for (int i = 0; i < m; ++i) positive_part += sys.C(i, j) - aux.P(i, j);
    aux.h[j] = positive_part + aux.v[j];
    aux.w[j] = aux.h[j];
  }
  return aux;
}

LcpInstance assemble_extended_lcp(const InequalitySystem& sys,
                                  const ClausePartition& part,
                                  const AuxiliaryVectors& aux) {
  const int n = sys.num_vars, m = sys.num_clauses;
  if (part.num_rows != m || part.num_vars != n ||
      static_cast<int>(part.K.size() + part.L.size() + part.Q.size() +
                       part.R.size()) != m ||
      static_cast<int>(aux.g.size()) != n ||
      static_cast<int>(aux.v.size()) != n ||
      static_cast<int>(aux.h.size()) != n ||
      static_cast<int>(aux.w.size()) != n || aux.P.rows() != m ||
      aux.P.cols() != n) {
    throw DimensionMismatch("partition or auxiliary shapes disagree");
  }
  if (part.K.empty() || part.L.empty()) {
    throw TrivialInstance(
        "a constant assignment already decides this instance");
  }

  LcpInstance inst;
  inst.blocks = LcpBlocks{n, static_cast<int>(part.K.size()),
                          static_cast<int>(part.L.size()),
                          static_cast<int>(part.Q.size()),
                          static_cast<int>(part.R.size())};
  const int dim = inst.blocks.dimension();
  inst.M = IntMatrix(dim, dim);
  inst.q.assign(dim, 0);

  inst.row_to_clause.reserve(m);
  for (int i : part.K) inst.row_to_clause.push_back(i);
  for (int i : part.L) inst.row_to_clause.push_back(i);
  for (int i : part.Q) inst.row_to_clause.push_back(i);
  for (int i : part.R) inst.row_to_clause.push_back(i);

  for (int j = 0; j < n; ++j) {
    inst.M(j, j) = -1;
    inst.q[j] = 1;
  }
  // Clause rows keep their K, L, Q, R grouping; each carries a +1 diagonal
  // in its own slack column, and q repeats the row's affine term.
  for (int t = 0; t < m; ++t) {
    const int row = n + t;
    const int clause = inst.row_to_clause[t];
    for (int j = 0; j < n; ++j) inst.M(row, j) = sys.C(clause, j);
    inst.M(row, row) = 1;
    inst.q[row] = sys.b[clause];
  }
  const int vrow = n + m, wrow = n + m + 1;
  for (int j = 0; j < n; ++j) {
    inst.M(vrow, j) = aux.v[j];
    inst.M(wrow, j) = aux.w[j];
  }
  inst.M(vrow, vrow) = 1;
  inst.M(wrow, wrow) = 1;
  return inst;
}

MangasarianCertificate build_certificate(const LcpInstance& inst,
                                         const AuxiliaryVectors& aux) {
  const int n = inst.blocks.n;
  const int m = static_cast<int>(inst.row_to_clause.size());
  const int dim = inst.dimension();
  if (static_cast<int>(aux.g.size()) != n ||
      static_cast<int>(aux.v.size()) != n || aux.P.rows() != m ||
      aux.P.cols() != n) {
    throw DimensionMismatch("auxiliary shapes disagree with the instance");
  }

  MangasarianCertificate cert;
  cert.Z1 = IntMatrix(dim, dim);
  for (int j = 0; j < n; ++j) cert.Z1(j, j) = -1;
  for (int d = n; d < dim; ++d) cert.Z1(d, d) = 1;
  for (int t = 0; t < m; ++t) {
    const int clause = inst.row_to_clause[t];
    for (int j = 0; j < n; ++j) cert.Z1(n + t, j) = aux.P(clause, j);
  }
  cert.Z2 = multiply(inst.M, cert.Z1);

  cert.r.assign(dim, 0);
  cert.c.assign(dim, 0);
  cert.s.assign(dim, 1);
  // First block: e + g - colsum(P) + v, componentwise >= 1 because
  // g - colsum(P) = colsum(C - P) >= 0 and v >= 0.
  for (int j = 0; j < n; ++j) {
    long long colsum_p = 0;
    for (int i = 0; i < aux.P.rows(); ++i) colsum_p += aux.P(i, j);
    cert.s[j] = 1 + aux.g[j] - colsum_p + aux.v[j];
  }
  return cert;
}

namespace {

void record_failure(bool* flag, std::optional<ConditionWitness>* witness,
                    int row, int col, long long value) {
  if (*flag) {
    *flag = false;
    *witness = ConditionWitness{row, col, value};
  }
}

}  // namespace

ConditionReport check_conditions(const LcpInstance& inst,
                                 const MangasarianCertificate& cert) {
  const int dim = inst.dimension();
  if (cert.Z1.rows() != dim || cert.Z2.rows() != dim ||
      static_cast<int>(cert.s.size()) != dim ||
      static_cast<int>(cert.r.size()) != dim ||
      static_cast<int>(cert.c.size()) != dim) {
    throw DimensionMismatch("certificate shapes disagree with the instance");
  }
  ConditionReport report;
  report.condition_a = report.condition_b = report.condition_c = true;
  report.condition_d = report.z_matrix_z1 = report.z_matrix_z2 = true;

  // (a) M Z1 - Z2 - q c^T = 0, recomputed from scratch.
  const IntMatrix product = multiply(inst.M, cert.Z1);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const long long residual =
          product(i, j) - cert.Z2(i, j) - inst.q[i] * cert.c[j];
      if (residual != 0) {
        record_failure(&report.condition_a, &report.witness_a, i + 1, j + 1,
                       residual);
      }
    }
  }

  // (b), (c): the row vector r^T Z1 + s^T Z2.
  for (int j = 0; j < dim; ++j) {
    long long entry = 0;
    for (int i = 0; i < dim; ++i) {
      entry += cert.r[i] * cert.Z1(i, j) + cert.s[i] * cert.Z2(i, j);
    }
    if (entry < 0) {
      record_failure(&report.condition_b, &report.witness_b, 0, j + 1, entry);
    }
    if (entry + cert.c[j] <= 0) {
      record_failure(&report.condition_c, &report.witness_c, 0, j + 1,
                     entry + cert.c[j]);
    }
  }

  // (d) r + s > 0.
  for (int j = 0; j < dim; ++j) {
    const long long entry = cert.r[j] + cert.s[j];
    if (entry <= 0) {
      record_failure(&report.condition_d, &report.witness_d, 0, j + 1, entry);
    }
  }

  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      if (i == j) continue;
      if (cert.Z1(i, j) > 0) {
        record_failure(&report.z_matrix_z1, &report.witness_z1, i + 1, j + 1,
                       cert.Z1(i, j));
      }
      if (cert.Z2(i, j) > 0) {
        record_failure(&report.z_matrix_z2, &report.witness_z2, i + 1, j + 1,
                       cert.Z2(i, j));
      }
    }
  }
  return report;
}

bool verify_complementarity(const LcpInstance& inst,
                            const std::vector<Rational>& u) {
  const int dim = inst.dimension();
  if (static_cast<int>(u.size()) != dim) {
    throw DimensionMismatch("point has " + std::to_string(u.size()) +
                            " entries for dimension " + std::to_string(dim));
  }
  std::vector<Rational> slack(dim);
  for (int i = 0; i < dim; ++i) {
    Rational acc = rat(inst.q[i]);
    for (int j = 0; j < dim; ++j) {
      if (inst.M(i, j) == 0) continue;
      acc += rat(inst.M(i, j)) * u[j];
    }
    slack[i] = acc;
  }
  Rational dot(0);
  for (int i = 0; i < dim; ++i) {
    if (sgn(u[i]) < 0 || sgn(slack[i]) < 0) return false;
    dot += u[i] * slack[i];
  }
  return sgn(dot) == 0;
}

}  // namespace satlcp
