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

#ifndef TROPBUNDLE_VALUATED_MATROID_HPP_
#define TROPBUNDLE_VALUATED_MATROID_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tropbundle/matroid.hpp"
#include "tropbundle/tropical.hpp"

namespace tropbundle {

// A monomial c * t^e.
struct Monomial {
  Rational c;
  long e = 0;
};

class ValuatedMatroid {
 public:
  ValuatedMatroid() = default;

  // Validates the tropical exchange axiom and the underlying matroid.
  static ValuatedMatroid Create(std::vector<std::string> ground, int rank,
                                const std::map<Set, ExtRational>& nu);
  // No validation; for axiom checking of arbitrary data.
  static ValuatedMatroid Unchecked(std::vector<std::string> ground, int rank,
                                   const std::map<Set, ExtRational>& nu);
  static ValuatedMatroid Trivial(const Matroid& m);
  // nu(B) is the lowest exponent of det of the columns in B.
  static ValuatedMatroid FromMonomialColumns(
      std::vector<std::string> ground,
      const std::vector<std::vector<Monomial>>& columns);

  const std::vector<std::string>& ground() const { return ground_; }
  int size() const { return static_cast<int>(ground_.size()); }
  int rank() const { return rank_; }
  // Requires a checked instance.
  const Matroid& underlying() const;
  bool has_underlying() const { return underlying_.has_value(); }
  ExtRational Nu(Set b) const;
  // Finite values, keyed by basis.
  const std::map<Set, Rational>& finite_values() const { return nu_; }
  bool IsTrivial() const;

  bool operator==(const ValuatedMatroid& other) const {
    return ground_ == other.ground_ && rank_ == other.rank_ && nu_ == other.nu_;
  }

 private:
  std::vector<std::string> ground_;
  int rank_ = 0;
  std::map<Set, Rational> nu_;
  std::optional<Matroid> underlying_;
};

struct AxiomReport {
  bool ok = true;
  std::string failure;  // Empty when ok.
};

// First violated tropical exchange triple, if any.
std::optional<std::string> ExchangeViolation(const ValuatedMatroid& vm);
// Checks a circuit set against the four valuated circuit axioms.
AxiomReport CheckCircuitAxioms(const std::vector<TropicalVector>& circuits,
                               int m);
AxiomReport CheckAxioms(const ValuatedMatroid& vm);

TropicalVector FundamentalCircuit(const ValuatedMatroid& vm, Set basis, int i);
// Normalized, deduplicated, lexicographically sorted representatives.
std::vector<TropicalVector> Circuits(const ValuatedMatroid& vm);

ValuatedMatroid VmMinor(const ValuatedMatroid& vm, Set del, Set con);
ValuatedMatroid VmDirectSum(const ValuatedMatroid& a, const ValuatedMatroid& b);

struct Equivalence {
  std::vector<int> bijection;  // Element i of the first maps to bijection[i].
  std::vector<Rational> b;
  Rational lambda;
};

enum class EquivalenceMode { kProjective, kIsomorphism };

std::optional<Equivalence> VmEquivalent(const ValuatedMatroid& a,
                                        const ValuatedMatroid& b,
                                        EquivalenceMode mode);
// All ground bijections under which the two are projectively equivalent.
std::vector<Equivalence> VmIsomorphisms(const ValuatedMatroid& a,
                                        const ValuatedMatroid& b,
                                        std::size_t limit);

}  // namespace tropbundle

#endif  // TROPBUNDLE_VALUATED_MATROID_HPP_
