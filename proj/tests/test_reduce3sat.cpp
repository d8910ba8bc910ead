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

#include "satlcp/errors.hpp"
#include "satlcp/formula.hpp"
#include "satlcp/reduce3sat.hpp"

using namespace satlcp;

namespace {

std::vector<int> signed_clause(const Clause& c) {
  std::vector<int> out;
  for (const Literal& l : c.literals) {
    out.push_back(l.negated ? -l.variable : l.variable);
  }
  return out;
}

}  // namespace

TEST_SUITE("reduce3sat") {

TEST_CASE("a unit clause expands to four clauses over two fresh variables") {
  CnfFormula f = parse_dimacs("p cnf 1 1\n1 0\n");
  auto [f3, trace] = reduce_to_3sat(f);
  CHECK(f3.num_vars == 3);
  CHECK(f3.original_vars == 1);
  REQUIRE(f3.clauses.size() == 4);
  CHECK(signed_clause(f3.clauses[0]) == std::vector<int>{1, 2, 3});
  CHECK(signed_clause(f3.clauses[1]) == std::vector<int>{1, -2, 3});
  CHECK(signed_clause(f3.clauses[2]) == std::vector<int>{1, 2, -3});
  CHECK(signed_clause(f3.clauses[3]) == std::vector<int>{1, -2, -3});
  CHECK(trace.auxiliary_vars == std::vector<int>{2, 3});
  CHECK(trace.clause_origin == std::vector<int>{0, 0, 0, 0});
}

TEST_CASE("a two-literal clause expands to two clauses over one fresh variable") {
  CnfFormula f = parse_dimacs("p cnf 2 1\n1 -2 0\n");
  auto [f3, trace] = reduce_to_3sat(f);
  CHECK(f3.num_vars == 3);
  REQUIRE(f3.clauses.size() == 2);
  CHECK(signed_clause(f3.clauses[0]) == std::vector<int>{1, -2, 3});
  CHECK(signed_clause(f3.clauses[1]) == std::vector<int>{1, -2, -3});
  CHECK(trace.auxiliary_vars == std::vector<int>{3});
}

TEST_CASE("width-3 clauses pass through unchanged") {
  CnfFormula f = parse_dimacs("p cnf 3 2\n1 -2 3 0\n-1 2 -3 0\n");
  auto [f3, trace] = reduce_to_3sat(f);
  CHECK(as_cnf(f3) == CnfFormula{3, f.clauses});
  CHECK(trace.auxiliary_vars.empty());
  CHECK(trace.dropped_tautologies.empty());
}

TEST_CASE("a five-literal clause becomes a chain with two fresh variables") {
  CnfFormula f = parse_dimacs("p cnf 5 1\n1 2 3 4 5 0\n");
  auto [f3, trace] = reduce_to_3sat(f);
  CHECK(f3.num_vars == 7);
  REQUIRE(f3.clauses.size() == 3);
  CHECK(signed_clause(f3.clauses[0]) == std::vector<int>{1, 2, 6});
  CHECK(signed_clause(f3.clauses[1]) == std::vector<int>{-6, 3, 7});
  CHECK(signed_clause(f3.clauses[2]) == std::vector<int>{-7, 4, 5});
  CHECK(trace.auxiliary_vars == std::vector<int>{6, 7});
  CHECK(trace.clause_origin == std::vector<int>{0, 0, 0});
}

TEST_CASE("tautologies are dropped and counted") {
  CnfFormula f = parse_dimacs("p cnf 3 3\n1 -1 2 0\n1 2 3 0\n3 -3 0\n");
  auto [f3, trace] = reduce_to_3sat(f);
  REQUIRE(f3.clauses.size() == 1);
  CHECK(signed_clause(f3.clauses[0]) == std::vector<int>{1, 2, 3});
  CHECK(trace.dropped_tautologies == std::vector<int>{0, 2});
  CHECK(trace.clause_origin == std::vector<int>{1});
}

TEST_CASE("repeated clauses are kept, with per-clause origins") {
  CnfFormula f = parse_dimacs("p cnf 3 3\n1 2 3 0\n1 2 3 0\n-1 2 3 0\n");
  auto [f3, trace] = reduce_to_3sat(f);
  CHECK(f3.clauses.size() == 3);
  CHECK(trace.clause_origin == std::vector<int>{0, 1, 2});
}

TEST_CASE("an empty clause is rejected") {
  CnfFormula f;
  f.num_vars = 1;
  f.clauses.push_back(Clause{});
  CHECK_THROWS_AS(reduce_to_3sat(f), EmptyClause);
}

TEST_CASE("reduction preserves satisfiability on exhaustive small inputs") {
  // Mixed widths, satisfiable and unsatisfiable, checked against full
  // enumeration on both sides.
  const char* inputs[] = {
      "p cnf 1 2\n1 0\n-1 0\n",
      "p cnf 2 4\n1 2 0\n-1 2 0\n1 -2 0\n-1 -2 0\n",
      "p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n",
      "p cnf 4 3\n1 2 3 4 0\n-1 -2 0\n-3 0\n",
      "p cnf 3 1\n1 0\n",
      "p cnf 5 2\n1 2 3 4 5 0\n-1 -2 -3 -4 -5 0\n",
      "p cnf 4 5\n1 2 0\n-1 3 0\n-2 -3 0\n3 4 0\n-4 1 0\n",
  };
  for (const char* text : inputs) {
    CAPTURE(text);
    CnfFormula f = parse_dimacs(text);
    auto [f3, trace] = reduce_to_3sat(f);
    auto original = brute_force_sat(f);
    auto reduced = brute_force_sat(as_cnf(f3));
    CHECK(original.has_value() == reduced.has_value());
    if (reduced) {
      Assignment lifted = lift_assignment(trace, *reduced);
      CHECK(lifted.size() == static_cast<std::size_t>(f.num_vars));
      CHECK(evaluate(f, lifted));
    }
  }
}

TEST_CASE("reduction preserves satisfiability on seeded random inputs") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const int n = 3 + static_cast<int>(seed % 3);
    const int m = 1 + static_cast<int>((seed * 7) % 5);
    const int k = 1 + static_cast<int>(seed % static_cast<std::uint64_t>(n));
    CnfFormula f = random_cnf(n, m, std::min(k, n), seed);
    CAPTURE(to_dimacs(f));
    auto [f3, trace] = reduce_to_3sat(f);
    auto original = brute_force_sat(f);
    auto reduced = brute_force_sat(as_cnf(f3));
    CHECK(original.has_value() == reduced.has_value());
    if (reduced) CHECK(evaluate(f, lift_assignment(trace, *reduced)));
  }
}

TEST_CASE("every output clause has three distinct variables") {
  CnfFormula f = parse_dimacs("p cnf 6 3\n1 0\n1 2 3 4 5 6 0\n-2 4 0\n");
  auto [f3, trace] = reduce_to_3sat(f);
  for (const Clause& c : f3.clauses) {
    REQUIRE(c.literals.size() == 3);
    CHECK(c.literals[0].variable != c.literals[1].variable);
    CHECK(c.literals[0].variable != c.literals[2].variable);
    CHECK(c.literals[1].variable != c.literals[2].variable);
  }
}

TEST_CASE("output sizes respect the n*m growth bounds for n >= 4") {
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    const int n = 4 + static_cast<int>(seed % 3);
    const int m = 1 + static_cast<int>(seed % 8);
    const int k = 1 + static_cast<int>((seed / 3) % 4);
    CnfFormula f = random_cnf(n, m, k, seed);
    auto [f3, trace] = reduce_to_3sat(f);
    CHECK(static_cast<long long>(f3.clauses.size()) <=
          static_cast<long long>(n) * m);
    CHECK(f3.num_vars <= n + n * m);
  }
}

TEST_CASE("lift rejects assignments of the wrong length") {
  CnfFormula f = parse_dimacs("p cnf 2 1\n1 -2 0\n");
  auto [f3, trace] = reduce_to_3sat(f);
  CHECK_THROWS_AS(lift_assignment(trace, Assignment{true}), LengthMismatch);
}

TEST_CASE("as_three_sat accepts exactly width-3 distinct-variable clauses") {
  CnfFormula good = parse_dimacs("p cnf 3 1\n1 -2 3 0\n");
  CHECK(as_three_sat(good).clauses.size() == 1);
  CnfFormula narrow = parse_dimacs("p cnf 3 1\n1 -2 0\n");
  CHECK_THROWS_AS(as_three_sat(narrow), NotThreeSat);
  CnfFormula repeated = parse_dimacs("p cnf 3 1\n1 -1 3 0\n");
  CHECK_THROWS_AS(as_three_sat(repeated), NotThreeSat);
}

}  // TEST_SUITE
