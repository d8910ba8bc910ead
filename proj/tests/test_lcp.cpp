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

#include "doctest.h"

#include <cstdint>
#include <vector>

#include "satlcp/encode.hpp"
#include "satlcp/errors.hpp"
#include "satlcp/formula.hpp"
#include "satlcp/lcp.hpp"
#include "satlcp/rational.hpp"
#include "satlcp/reduce3sat.hpp"

using namespace satlcp;

namespace {

InequalitySystem encode_text(const char* dimacs) {
  return encode_clauses(as_three_sat(parse_dimacs(dimacs)));
}

// One all-affirmative and one all-negated clause over x1..x3; the smallest
// instance that survives the triviality fast path.
InequalitySystem mixed_pair() {
  return encode_text("p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n");
}

LcpInstance assemble(const InequalitySystem& sys) {
  return assemble_extended_lcp(sys, partition_clauses(sys),
                               compute_auxiliary(sys));
}

std::vector<long long> row_of(const IntMatrix& m, int i) {
  std::vector<long long> out;
  for (int j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
  return out;
}

}  // namespace

TEST_SUITE("lcp") {

TEST_CASE("the direct form pairs sign rows with clause rows") {
  InequalitySystem sys = encode_text("p cnf 3 1\n1 2 3 0\n");
  BasicLcpInstance inst = build_basic_lcp(sys);
  CHECK(inst.dimension() == 4);
  IntMatrix m = inst.matrix();
  CHECK(row_of(m, 0) == std::vector<long long>{-1, 0, 0, 0});
  CHECK(row_of(m, 1) == std::vector<long long>{0, -1, 0, 0});
  CHECK(row_of(m, 2) == std::vector<long long>{0, 0, -1, 0});
  CHECK(row_of(m, 3) == std::vector<long long>{1, 1, 1, 0});
  CHECK(inst.affine() == std::vector<long long>{1, 1, 1, -1});
}

TEST_CASE("binary search finds the first satisfying point in counter order") {
  InequalitySystem sys = encode_text("p cnf 3 1\n1 2 3 0\n");
  auto x = lcp_has_binary_solution(build_basic_lcp(sys));
  REQUIRE(x.has_value());
  CHECK(*x == std::vector<int>{1, 0, 0});
}

TEST_CASE("binary search certifies unsolvable instances") {
  // (x1) and (not x1), rewritten to width 3, has no binary solution.
  CnfFormula f = parse_dimacs("p cnf 1 2\n1 0\n-1 0\n");
  auto [f3, trace] = reduce_to_3sat(f);
  auto x = lcp_has_binary_solution(build_basic_lcp(encode_clauses(f3)));
  CHECK_FALSE(x.has_value());
}

TEST_CASE("binary search presence matches the assignment oracle") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const int n = 3 + static_cast<int>(seed % 6);
    const int m = 2 + static_cast<int>((seed * 11) % 10);
    CnfFormula f = random_cnf(n, m, 3, seed);
    CAPTURE(to_dimacs(f));
    ThreeSatFormula f3 = as_three_sat(f);
    auto sat = brute_force_sat(f);
    auto x = lcp_has_binary_solution(build_basic_lcp(encode_clauses(f3)));
    CHECK(sat.has_value() == x.has_value());
    if (x) CHECK(feasibility_check(encode_clauses(f3), *x));
  }
}

TEST_CASE("binary search refuses instances beyond its cap") {
  InequalitySystem sys = encode_text("p cnf 3 1\n1 2 3 0\n");
  CHECK_THROWS_AS(lcp_has_binary_solution(build_basic_lcp(sys), 2),
                  CapExceeded);
}

TEST_CASE("auxiliary vectors follow their definitions") {
  AuxiliaryVectors aux = compute_auxiliary(mixed_pair());
  CHECK(aux.g == std::vector<long long>{0, 0, 0});
  CHECK(aux.v == std::vector<long long>{0, 0, 0});
  CHECK(row_of(aux.P, 0) == std::vector<long long>{0, 0, 0});
  CHECK(row_of(aux.P, 1) == std::vector<long long>{-1, -1, -1});
  CHECK(aux.h == std::vector<long long>{1, 1, 1});
  CHECK(aux.w == aux.h);

  // Negative column sums are compensated by v so that g + v >= 0.
  InequalitySystem sys2 = encode_text(
      "p cnf 3 3\n1 2 3 0\n-1 -2 -3 0\n-1 -2 3 0\n");
  AuxiliaryVectors aux2 = compute_auxiliary(sys2);
  CHECK(aux2.g == std::vector<long long>{-1, -1, 1});
  CHECK(aux2.v == std::vector<long long>{1, 1, 0});
  CHECK(aux2.h == std::vector<long long>{2, 2, 2});
}

TEST_CASE("assembly lays out blocks, diagonals, and the affine vector") {
  LcpInstance inst = assemble(mixed_pair());
  CHECK(inst.dimension() == 7);
  CHECK(inst.blocks == LcpBlocks{3, 1, 1, 0, 0});
  CHECK(inst.q == std::vector<long long>{1, 1, 1, -1, 2, 0, 0});
  CHECK(inst.row_to_clause == std::vector<int>{0, 1});
  CHECK(row_of(inst.M, 0) == std::vector<long long>{-1, 0, 0, 0, 0, 0, 0});
  CHECK(row_of(inst.M, 1) == std::vector<long long>{0, -1, 0, 0, 0, 0, 0});
  CHECK(row_of(inst.M, 2) == std::vector<long long>{0, 0, -1, 0, 0, 0, 0});
  CHECK(row_of(inst.M, 3) == std::vector<long long>{1, 1, 1, 1, 0, 0, 0});
  CHECK(row_of(inst.M, 4) == std::vector<long long>{-1, -1, -1, 0, 1, 0, 0});
  CHECK(row_of(inst.M, 5) == std::vector<long long>{0, 0, 0, 0, 0, 1, 0});
  CHECK(row_of(inst.M, 6) == std::vector<long long>{1, 1, 1, 0, 0, 0, 1});
}

TEST_CASE("assembly groups clause rows as K, L, Q, R keeping relative order") {
  InequalitySystem sys = encode_text(
      "p cnf 4 6\n"
      "-1 2 3 0\n"
      "1 2 3 0\n"
      "-1 -2 -3 0\n"
      "2 3 4 0\n"
      "-2 -3 4 0\n"
      "-1 -2 -4 0\n");
  LcpInstance inst = assemble(sys);
  CHECK(inst.blocks == LcpBlocks{4, 2, 2, 1, 1});
  CHECK(inst.row_to_clause == std::vector<int>{1, 3, 2, 5, 4, 0});
  CHECK(inst.q ==
        std::vector<long long>{1, 1, 1, 1, -1, -1, 2, 2, 1, 0, 0, 0});
}

TEST_CASE("assembly requires both clause kinds") {
  InequalitySystem sys = encode_text("p cnf 3 1\n1 2 3 0\n");
  CHECK_THROWS_AS(assemble(sys), TrivialInstance);
}

TEST_CASE("assembly validates auxiliary shapes") {
  InequalitySystem sys = mixed_pair();
  AuxiliaryVectors aux = compute_auxiliary(sys);
  aux.g.pop_back();
  CHECK_THROWS_AS(assemble_extended_lcp(sys, partition_clauses(sys), aux),
                  DimensionMismatch);
}

TEST_CASE("certificate blocks satisfy the product identity by construction") {
  InequalitySystem sys = mixed_pair();
  LcpInstance inst = assemble(sys);
  MangasarianCertificate cert =
      build_certificate(inst, compute_auxiliary(sys));
  CHECK(cert.Z1.rows() == 7);
  CHECK(row_of(cert.Z1, 0) == std::vector<long long>{-1, 0, 0, 0, 0, 0, 0});
  CHECK(row_of(cert.Z1, 3) == std::vector<long long>{0, 0, 0, 1, 0, 0, 0});
  CHECK(row_of(cert.Z1, 4) == std::vector<long long>{-1, -1, -1, 0, 1, 0, 0});
  CHECK(row_of(cert.Z1, 5) == std::vector<long long>{0, 0, 0, 0, 0, 1, 0});
  CHECK(cert.Z2 == multiply(inst.M, cert.Z1));
  CHECK(cert.r == std::vector<long long>(7, 0));
  CHECK(cert.c == std::vector<long long>(7, 0));
  CHECK(cert.s == std::vector<long long>{2, 2, 2, 1, 1, 1, 1});
}

TEST_CASE("condition checks pass where construction guarantees them") {
  InequalitySystem sys = mixed_pair();
  LcpInstance inst = assemble(sys);
  MangasarianCertificate cert =
      build_certificate(inst, compute_auxiliary(sys));
  ConditionReport report = check_conditions(inst, cert);
  CHECK(report.condition_a);
  CHECK(report.condition_d);
  CHECK(report.z_matrix_z1);
  CHECK(report.z_matrix_z2);
  CHECK_FALSE(report.witness_a.has_value());
  CHECK_FALSE(report.witness_d.has_value());
  // Every variable occurs once per sign here, so the row vector
  // s^T Z2 is exactly zero on x columns: nonnegative but not positive.
  CHECK(report.condition_b);
  CHECK_FALSE(report.condition_c);
  REQUIRE(report.witness_c.has_value());
  CHECK(report.witness_c->row == 0);
  CHECK(report.witness_c->col == 1);
  CHECK(report.witness_c->value == 0);
}

TEST_CASE("a variable used twice with one sign breaks the row-vector bound") {
  InequalitySystem sys = encode_text(
      "p cnf 5 3\n1 2 3 0\n1 4 5 0\n-1 -2 -3 0\n");
  LcpInstance inst = assemble(sys);
  MangasarianCertificate cert =
      build_certificate(inst, compute_auxiliary(sys));
  ConditionReport report = check_conditions(inst, cert);
  CHECK(report.condition_a);
  CHECK(report.condition_d);
  CHECK_FALSE(report.condition_b);
  REQUIRE(report.witness_b.has_value());
  CHECK(report.witness_b->col == 1);
  CHECK(report.witness_b->value == -1);
  CHECK_FALSE(report.condition_c);
}

TEST_CASE("tampered certificates are caught entrywise") {
  InequalitySystem sys = mixed_pair();
  LcpInstance inst = assemble(sys);
  MangasarianCertificate cert =
      build_certificate(inst, compute_auxiliary(sys));
  MangasarianCertificate bad = cert;
  bad.Z2(3, 0) += 1;
  ConditionReport report = check_conditions(inst, bad);
  CHECK_FALSE(report.condition_a);
  REQUIRE(report.witness_a.has_value());
  CHECK(report.witness_a->row == 4);
  CHECK(report.witness_a->col == 1);

  MangasarianCertificate off_diag = cert;
  off_diag.Z1(4, 0) = 1;
  report = check_conditions(inst, off_diag);
  CHECK_FALSE(report.z_matrix_z1);
  REQUIRE(report.witness_z1.has_value());
  CHECK(report.witness_z1->row == 5);
  CHECK(report.witness_z1->col == 1);
  CHECK(report.witness_z1->value == 1);
}

TEST_CASE("complementarity verification is exact") {
  LcpInstance inst = assemble(mixed_pair());
  // x = (1,1,0), all slack variables zero: M u + q = (0,0,1,1,0,0,2) and
  // the inner product vanishes on the support.
  std::vector<Rational> good = to_rational(std::vector<long long>{1, 1, 0, 0, 0, 0, 0});
  CHECK(verify_complementarity(inst, good));
  // Feasible but with a paid slack on an active row: u3 * w3 = 1.
  std::vector<Rational> uncomplementary = to_rational(std::vector<long long>{1, 0, 0, 1, 0, 0, 0});
  CHECK_FALSE(verify_complementarity(inst, uncomplementary));
  // Infeasible: the all-negated row drops to -1.
  std::vector<Rational> infeasible = to_rational(std::vector<long long>{1, 1, 1, 0, 0, 0, 0});
  CHECK_FALSE(verify_complementarity(inst, infeasible));
  // Negative component.
  std::vector<Rational> negative = to_rational(std::vector<long long>{-1, 0, 0, 0, 0, 0, 0});
  CHECK_FALSE(verify_complementarity(inst, negative));
  CHECK_THROWS_AS(verify_complementarity(inst, to_rational(std::vector<long long>{1, 0})),
                  DimensionMismatch);
}

}  // TEST_SUITE
