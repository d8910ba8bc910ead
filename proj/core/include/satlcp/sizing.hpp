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

#include "satlcp/encode.hpp"
#include "satlcp/lcp.hpp"
#include "satlcp/rational.hpp"

namespace satlcp {

// Bit-size accounting for an instance, against the nominal bounds stated in
// terms of the source formula's n variables and m clauses. The bounds are
// observations to report, not hard assertions; only lower <= upper is relied
// on by callers.
struct SizeReport {
  long long measured_size_C_b = 0;   // exact bits, per size_of_system
  long long paper_lower = 0;         // 3m(n+1)
  long long paper_upper = 0;         // 3m(3n+4)
  bool assembled = false;            // extended instance was measured too
  long long measured_size_M_q_c = 0; // entry-size sum over (M, q, cost)
  long long paper_bound_Mqc = 0;     // 2(n + nm + 5)^2
  long long ratio_bound = 0;         // n + nm + 5
  BigInt operation_bound;            // ceil((n+nm+5)^3.5) * measured_size_C_b
  bool lower_le_upper = false;
  bool size_C_b_within_bounds = false;
  bool size_Mqc_within_bound = false;
  bool ratio_within_bound = false;   // measured_Mqc <= ratio_bound * measured_Cb
};

// Bits to store (C, b) with sign-pattern rows: 2MN for C (sign + mask),
// 2M for b (four values), plus ceil(log2(N+1)) + ceil(log2(M+1)) header bits.
long long size_of_system(const InequalitySystem& sys);

// ceil(B^3.5) * size_C_b with B = n + n*m + 5, computed exactly over big
// integers (B^3.5 = sqrt(B^7), rounded up before the product).
BigInt operation_bound(long long n, long long m, long long size_C_b);

// inst and cert may be null (trivial fast path); the extended measurements
// are then zero and assembled = false.
SizeReport check_bounds(int n, int m, const InequalitySystem& sys,
                        const LcpInstance* inst,
                        const MangasarianCertificate* cert);

}  // namespace satlcp
