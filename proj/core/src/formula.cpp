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

#include "satlcp/formula.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "internal_rng.hpp"
#include "satlcp/errors.hpp"

namespace satlcp {

using internal::uniform_below;

namespace {

bool parse_int_token(const std::string& tok, long long* out) {
  if (tok.empty()) return false;
  std::size_t i = (tok[0] == '-') ? 1 : 0;
  if (i == tok.size()) return false;
  long long value = 0;
  for (; i < tok.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
    if (value > (std::numeric_limits<long long>::max() - 9) / 10) return false;
    value = value * 10 + (tok[i] - '0');
  }
  *out = (tok[0] == '-') ? -value : value;
  return true;
}

// Duplicate (variable, sign) pairs collapse to the first occurrence.
Clause normalized(std::vector<Literal> literals) {
  Clause c;
  for (const Literal& lit : literals) {
    if (std::find(c.literals.begin(), c.literals.end(), lit) ==
        c.literals.end()) {
      c.literals.push_back(lit);
    }
  }
  return c;
}

void skip_rest_of_line(std::istream& in) {
  in.ignore(std::numeric_limits<std::streamsize>::max(), '\n');
}

}  // namespace

CnfFormula parse_dimacs(std::istream& in) {
  std::string tok;
  long long declared_vars = -1, declared_clauses = -1;

  while (in >> tok) {
    if (tok[0] == 'c') {
      skip_rest_of_line(in);
      continue;
    }
    if (tok == "p") {
      std::string fmt;
      if (!(in >> fmt) || fmt != "cnf") {
        throw MalformedToken("header must read 'p cnf <vars> <clauses>'");
      }
      std::string ntok, mtok;
      if (!(in >> ntok >> mtok) || !parse_int_token(ntok, &declared_vars) ||
          !parse_int_token(mtok, &declared_clauses) || declared_vars < 0 ||
          declared_clauses < 0) {
        throw MalformedToken("header must read 'p cnf <vars> <clauses>'");
      }
      break;
    }
    throw MissingHeader("clause data before 'p cnf' header: '" + tok + "'");
  }
  if (declared_vars < 0) throw MissingHeader("no 'p cnf' header");

  CnfFormula f;
  f.num_vars = static_cast<int>(declared_vars);
  std::vector<Literal> current;

  while (in >> tok) {
    if (tok[0] == 'c') {
      skip_rest_of_line(in);
      continue;
    }
    long long lit = 0;
    if (!parse_int_token(tok, &lit)) {
      throw MalformedToken("not a literal: '" + tok + "'");
    }
    if (lit == 0) {
      // "-0" is an index-0 literal, not a clause terminator.
      if (tok[0] == '-') {
        throw VariableOutOfRange("literal references variable 0");
      }
      if (current.empty()) {
        throw MalformedToken("empty clause (terminator with no literals)");
      }
      f.clauses.push_back(normalized(std::move(current)));
      current.clear();
      continue;
    }
    const long long var = lit < 0 ? -lit : lit;
    if (var > declared_vars) {
      throw VariableOutOfRange("literal " + tok + " exceeds declared " +
                               std::to_string(declared_vars) + " variables");
    }
    current.push_back(Literal{static_cast<int>(var), lit < 0});
  }
  if (!current.empty()) {
    throw MalformedToken("unterminated clause at end of input");
  }
  if (static_cast<long long>(f.clauses.size()) != declared_clauses) {
    throw ClauseCountMismatch(
        "header declared " + std::to_string(declared_clauses) +
        " clauses, found " + std::to_string(f.clauses.size()));
  }
  return f;
}

CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

std::string to_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars << " " << f.clauses.size() << "\n";
  for (const Clause& c : f.clauses) {
    for (const Literal& lit : c.literals) {
      out << (lit.negated ? -lit.variable : lit.variable) << " ";
    }
    out << "0\n";
  }
  return out.str();
}

bool evaluate(const CnfFormula& f, const Assignment& a) {
  if (static_cast<int>(a.size()) != f.num_vars) {
    throw LengthMismatch("assignment has " + std::to_string(a.size()) +
                         " values for " + std::to_string(f.num_vars) +
                         " variables");
  }
  for (const Clause& c : f.clauses) {
    bool satisfied = false;
    for (const Literal& lit : c.literals) {
      if (a[lit.variable - 1] != lit.negated) {
        satisfied = true;
        break;
      }
    }
    if (!satisfied) return false;
  }
  return true;
}

std::optional<Assignment> brute_force_sat(const CnfFormula& f, int max_vars) {
  if (f.num_vars > max_vars) {
    throw CapExceeded("brute force over " + std::to_string(f.num_vars) +
                      " variables exceeds cap " + std::to_string(max_vars));
  }
  const std::uint64_t total = std::uint64_t{1} << f.num_vars;
  Assignment a(f.num_vars, false);
  for (std::uint64_t counter = 0; counter < total; ++counter) {
    for (int i = 0; i < f.num_vars; ++i) a[i] = (counter >> i) & 1;
    if (evaluate(f, a)) return a;
  }
  return std::nullopt;
}

CnfFormula random_cnf(int num_vars, int num_clauses, int clause_size,
                      std::uint64_t seed) {
  if (num_vars < 0 || num_clauses < 0 || clause_size < 1 ||
      (num_clauses > 0 && clause_size > num_vars)) {
    throw InvalidShape("cannot draw " + std::to_string(num_clauses) +
                       " clauses of width " + std::to_string(clause_size) +
                       " over " + std::to_string(num_vars) + " variables");
  }
  std::mt19937_64 rng(seed);
  CnfFormula f;
  f.num_vars = num_vars;
  std::vector<int> pool(num_vars);
  std::iota(pool.begin(), pool.end(), 1);
  for (int c = 0; c < num_clauses; ++c) {
    // Partial Fisher-Yates: the first clause_size entries become the draw.
    for (int j = 0; j < clause_size; ++j) {
      const int pick =
          j + static_cast<int>(uniform_below(rng, std::uint64_t(num_vars - j)));
      std::swap(pool[j], pool[pick]);
    }
    std::vector<int> vars(pool.begin(), pool.begin() + clause_size);
    std::sort(vars.begin(), vars.end());
    Clause clause;
    for (int v : vars) {
      clause.literals.push_back(Literal{v, (rng() & 1) != 0});
    }
    f.clauses.push_back(std::move(clause));
  }
  return f;
}

}  // namespace satlcp
