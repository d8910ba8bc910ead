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

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace satlcp {

// Exact rational arithmetic. GMP keeps values canonical (gcd 1, positive
// denominator) under the arithmetic operators.
using Rational = mpq_class;
using BigInt = mpz_class;

// gmpxx has no long long overloads; this platform's long is 64-bit.
inline Rational rat(long long x) { return Rational(static_cast<long>(x)); }
inline BigInt big(long long x) { return BigInt(static_cast<long>(x)); }

// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& r);

// Parses "p" or "p/q" (optionally signed). Throws MalformedToken on junk or
// a zero denominator. The result is canonicalized.
Rational rational_from_string(std::string_view text);

std::vector<Rational> to_rational(const std::vector<long long>& v);

}  // namespace satlcp
