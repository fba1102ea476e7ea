// Copyright 2023 The Authors.
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

#include "tropbundle/common.hpp"

#include <cctype>

namespace tropbundle {

std::vector<int> Members(Set s) {
  std::vector<int> out;
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

Set FromMembers(const std::vector<int>& members) {
  Set s = 0;
  for (int i : members) s |= Bit(i);
  return s;
}

bool LexLess(Set a, Set b) {
  while (a != 0 && b != 0) {
    int x = std::countr_zero(a);
    int y = std::countr_zero(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

Set Compress(Set s, Set keep) {
  Set out = 0;
  int k = 0;
  for (int i : Members(keep)) {
    if (Contains(s, i)) out |= Bit(k);
    ++k;
  }
  return out;
}

Set Expand(Set s, Set keep) {
  Set out = 0;
  int k = 0;
  for (int i : Members(keep)) {
    if (Contains(s, k)) out |= Bit(i);
    ++k;
  }
  return out;
}

void Fail(const std::string& name, const std::string& detail, ErrorKind kind) {
  throw Error(kind, name, detail);
}

std::string RationalToString(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational RationalFromString(const std::string& text) {
  std::string t;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  }
  auto valid_int = [](const std::string& s) {
    size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  size_t slash = t.find('/');
  std::string num = slash == std::string::npos ? t : t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) {
    Fail("ParseError", "not a rational: '" + text + "'", ErrorKind::kParse);
  }
  if (num[0] == '+') num = num.substr(1);
  if (den[0] == '+') den = den.substr(1);
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) Fail("ParseError", "zero denominator in '" + text + "'", ErrorKind::kParse);
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::int64_t CheckedAdd(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) Fail("Overflow", "integer addition", ErrorKind::kLimit);
  return r;
}

std::int64_t CheckedMul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) Fail("Overflow", "integer product", ErrorKind::kLimit);
  return r;
}

}  // namespace tropbundle
