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

#include "satlcp/sizing.hpp"

#include <cstdlib>

#include "satlcp/errors.hpp"

namespace satlcp {

namespace {

// Smallest t with 2^t >= x, for x >= 1.
long long ceil_log2(long long x) {
  long long t = 0;
  unsigned long long p = 1;
  while (p < static_cast<unsigned long long>(x)) {
    p <<= 1;
    ++t;
  }
  return t;
}

// Bits for one signed integer entry: sign plus magnitude.
long long entry_bits(long long a) {
  return 1 + ceil_log2(std::llabs(a) + 1);
}

}  // namespace

long long size_of_system(const InequalitySystem& sys) {
  const long long n = sys.num_vars, m = sys.num_clauses;
  // Two bits per C entry (sign and mask), two per b entry (four values),
  // plus the two dimension headers.
  return 2 * m * n + 2 * m + ceil_log2(n + 1) + ceil_log2(m + 1);
}

BigInt operation_bound(long long n, long long m, long long size_C_b) {
  const BigInt base = big(n) + big(n) * big(m) + 5;
  BigInt seventh = 1;
  for (int i = 0; i < 7; ++i) seventh *= base;
  BigInt root = sqrt(seventh);  // floor
  if (root * root < seventh) root += 1;
  return root * big(size_C_b);
}

SizeReport check_bounds(int n, int m, const InequalitySystem& sys,
                        const LcpInstance* inst,
                        const MangasarianCertificate* cert) {
  SizeReport report;
  report.measured_size_C_b = size_of_system(sys);
  report.paper_lower = 3LL * m * (n + 1);
  report.paper_upper = 3LL * m * (3LL * n + 4);
  const long long growth = n + static_cast<long long>(n) * m + 5;
  report.paper_bound_Mqc = 2 * growth * growth;
  report.ratio_bound = growth;
  report.operation_bound = operation_bound(n, m, report.measured_size_C_b);
  report.lower_le_upper = report.paper_lower <= report.paper_upper;
  report.size_C_b_within_bounds =
      report.paper_lower <= report.measured_size_C_b &&
      report.measured_size_C_b <= report.paper_upper;

  if (inst != nullptr && cert != nullptr) {
    const int dim = inst->dimension();
    if (static_cast<int>(cert->s.size()) != dim) {
      throw DimensionMismatch("certificate s has wrong length");
    }
    report.assembled = true;
    long long bits = ceil_log2(dim + 1) * 2;  // matrix dimension header
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) bits += entry_bits(inst->M(i, j));
    bits += ceil_log2(dim + 1);
    for (long long qi : inst->q) bits += entry_bits(qi);
    bits += ceil_log2(dim + 1);
    for (int j = 0; j < dim; ++j) {
      long long cj = 0;
      for (int i = 0; i < dim; ++i) cj += cert->s[i] * inst->M(i, j);
      bits += entry_bits(cj);
    }
    report.measured_size_M_q_c = bits;
    report.size_Mqc_within_bound =
        report.measured_size_M_q_c <= report.paper_bound_Mqc;
    report.ratio_within_bound =
        report.measured_size_M_q_c <=
        report.ratio_bound * report.measured_size_C_b;
  }
  return report;
}

}  // namespace satlcp
