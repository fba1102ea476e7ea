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

#ifndef TROPBUNDLE_STABILITY_HPP_
#define TROPBUNDLE_STABILITY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "tropbundle/bundle.hpp"

namespace tropbundle {

IntVector ChernVector(const Bundle& e);
DivisorClass ChernClass(const Bundle& e);
// Raise MissingPolarization.
Rational Degree(const Bundle& e);
Rational Slope(const Bundle& e);

// Degree of the subsheaf on F, from ranks of F ^ E^i(j).
Rational SubsheafDegree(const Bundle& e, Set f);

Bundle Subsheaf(const Bundle& e, Set f);
Bundle Quotient(const Bundle& e, Set f);
// (E ^ F') v F with F contracted.
Bundle Subquotient(const Bundle& e, Set f, Set f_prime);

struct SlopeEntry {
  Set flat = 0;
  int rank = 0;
  Rational slope;
};

struct StabilityReport {
  Rational slope;
  bool stable = true;
  bool semistable = true;
  std::optional<Set> witness;
  std::vector<SlopeEntry> table;  // Proper nonempty flats, by rank then lex.
};

StabilityReport Stability(const Bundle& e);

struct SeeSawReport {
  Rational degree;
  Rational sub_degree;
  Rational quotient_degree;
  Rational slope;
  Rational weighted_slopes;
  bool holds = false;
};

// Raises NotModularPair.
SeeSawReport SeeSaw(const Bundle& e, Set f);

struct FiltrationStep {
  Set flat = 0;
  Rational gr_slope;
  int gr_rank = 0;
  bool modular = false;
  bool gr_stable = false;
  bool gr_semistable = false;
};

struct FlatFiltration {
  std::vector<FiltrationStep> steps;  // F_1 .. F_k; F_0 is the bottom.
  bool steps_modular = true;          // Every E^i(j) is a modular flat.
  bool unique = false;
  std::vector<std::string> warnings;
};

// Raise NotSemistable, FiltrationFlatsNotModular.
FlatFiltration JordanHolder(const Bundle& e);
FlatFiltration HarderNarasimhan(const Bundle& e);

}  // namespace tropbundle

#endif  // TROPBUNDLE_STABILITY_HPP_
