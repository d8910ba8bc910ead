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

#include <stdexcept>

namespace satlcp {

// Base class for every error this library raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// DIMACS input has no "p cnf" header before clause data.
class MissingHeader : public Error {
 public:
  using Error::Error;
};

// Header promised a different number of clauses than the body contains.
class ClauseCountMismatch : public Error {
 public:
  using Error::Error;
};

// A literal references variable 0 or a variable above the declared count.
class VariableOutOfRange : public Error {
 public:
  using Error::Error;
};

// Any other malformed input: junk tokens, empty clause, unterminated clause.
class MalformedToken : public Error {
 public:
  using Error::Error;
};

// An assignment's length does not match the formula's variable count.
class LengthMismatch : public Error {
 public:
  using Error::Error;
};

// An exhaustive enumeration was requested beyond its configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Generator parameters are inconsistent (e.g. clause width above variable count).
class InvalidShape : public Error {
 public:
  using Error::Error;
};

// A clause with no literals reached the width-3 rewriter.
class EmptyClause : public Error {
 public:
  using Error::Error;
};

// A formula handed to the inequality encoder is not in strict width-3 form.
class NotThreeSat : public Error {
 public:
  using Error::Error;
};

// A coefficient row violates the encoding invariants and cannot be classified.
class UnclassifiableRow : public Error {
 public:
  using Error::Error;
};

// Operand shapes disagree.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// The extended system was requested for an instance the fast path already decides.
class TrivialInstance : public Error {
 public:
  using Error::Error;
};

// The pipeline's linear program came back infeasible, which the construction
// guarantees cannot happen; indicates an internal defect, not bad input.
class UnexpectedInfeasible : public Error {
 public:
  using Error::Error;
};

// An internal invariant failed.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace satlcp
