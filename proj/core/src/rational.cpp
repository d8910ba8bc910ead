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

#include "satlcp/rational.hpp"

#include <cctype>

#include "satlcp/errors.hpp"

namespace satlcp {

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational rational_from_string(std::string_view text) {
  const std::size_t slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!is_integer_token(num)) {
    throw MalformedToken("not a rational: '" + std::string(text) + "'");
  }
  BigInt n(std::string(num), 10);
  if (slash == std::string_view::npos) return Rational(n);
  std::string_view den = text.substr(slash + 1);
  if (!is_integer_token(den)) {
    throw MalformedToken("not a rational: '" + std::string(text) + "'");
  }
  BigInt d(std::string(den), 10);
  if (d == 0) {
    throw MalformedToken("zero denominator: '" + std::string(text) + "'");
  }
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::vector<Rational> to_rational(const std::vector<long long>& v) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (long long x : v) out.push_back(rat(x));
  return out;
}

}  // namespace satlcp
