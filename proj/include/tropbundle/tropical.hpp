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

#ifndef TROPBUNDLE_TROPICAL_HPP_
#define TROPBUNDLE_TROPICAL_HPP_

#include <compare>
#include <string>
#include <vector>

#include "tropbundle/common.hpp"

namespace tropbundle {

// An element of Q extended by infinity, with min-plus semantics.
class ExtRational {
 public:
  ExtRational() : inf_(true) {}
  ExtRational(const Rational& v) : inf_(false), v_(v) {}  // NOLINT
  ExtRational(long v) : inf_(false), v_(v) {}             // NOLINT
  static ExtRational Infinity() { return ExtRational(); }

  bool is_inf() const { return inf_; }
  bool is_finite() const { return !inf_; }
  // Requires is_finite().
  const Rational& value() const;

  // Tropical product (ordinary sum).
  friend ExtRational operator+(const ExtRational& a, const ExtRational& b);
  // Ordinary difference; requires b finite.
  friend ExtRational operator-(const ExtRational& a, const ExtRational& b);
  friend bool operator==(const ExtRational& a, const ExtRational& b);
  friend std::strong_ordering operator<=>(const ExtRational& a,
                                          const ExtRational& b);

  std::string ToString() const;
  static ExtRational FromString(const std::string& text);

 private:
  bool inf_;
  Rational v_;
};

// Tropical sum.
ExtRational TropMin(const ExtRational& a, const ExtRational& b);

using TropicalVector = std::vector<ExtRational>;

Set Support(const TropicalVector& v);
// Shifts so the minimum finite entry is zero; all-infinite vectors are left
// unchanged.
TropicalVector Normalize(const TropicalVector& v);
TropicalVector Shift(const TropicalVector& v, const Rational& lambda);
std::string ToString(const TropicalVector& v);

}  // namespace tropbundle

#endif  // TROPBUNDLE_TROPICAL_HPP_
