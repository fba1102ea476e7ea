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

#include "tropbundle/tropical.hpp"

namespace tropbundle {

const Rational& ExtRational::value() const {
  if (inf_) Fail("InfiniteValue", "finite value requested from inf", ErrorKind::kInternal);
  return v_;
}

ExtRational operator+(const ExtRational& a, const ExtRational& b) {
  if (a.inf_ || b.inf_) return ExtRational::Infinity();
  return ExtRational(Rational(a.v_ + b.v_));
}

ExtRational operator-(const ExtRational& a, const ExtRational& b) {
  if (b.inf_) Fail("InfiniteValue", "subtracting inf", ErrorKind::kInternal);
  if (a.inf_) return a;
  return ExtRational(Rational(a.v_ - b.v_));
}

bool operator==(const ExtRational& a, const ExtRational& b) {
  if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
  return a.v_ == b.v_;
}

std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
  if (a.inf_ && b.inf_) return std::strong_ordering::equal;
  if (a.inf_) return std::strong_ordering::greater;
  if (b.inf_) return std::strong_ordering::less;
  int c = cmp(a.v_, b.v_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string ExtRational::ToString() const {
  return inf_ ? "inf" : RationalToString(v_);
}

ExtRational ExtRational::FromString(const std::string& text) {
  if (text == "inf" || text == "+inf" || text == "infinity") return Infinity();
  return ExtRational(RationalFromString(text));
}

ExtRational TropMin(const ExtRational& a, const ExtRational& b) {
  return a <= b ? a : b;
}

Set Support(const TropicalVector& v) {
  Set s = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_finite()) s |= Bit(static_cast<int>(i));
  }
  return s;
}

TropicalVector Shift(const TropicalVector& v, const Rational& lambda) {
  TropicalVector out = v;
  for (auto& x : out) x = x + ExtRational(lambda);
  return out;
}

TropicalVector Normalize(const TropicalVector& v) {
  ExtRational lo;
  for (const auto& x : v) lo = TropMin(lo, x);
  if (lo.is_inf()) return v;
  return Shift(v, Rational(-lo.value()));
}

std::string ToString(const TropicalVector& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].ToString();
  }
  return out + ")";
}

}  // namespace tropbundle
