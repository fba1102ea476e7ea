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

#ifndef TROPBUNDLE_FIBER_HPP_
#define TROPBUNDLE_FIBER_HPP_

#include <string>
#include <vector>

#include "tropbundle/bundle.hpp"

namespace tropbundle {

// Raises InvalidCoxPoint when z lies in the irrelevant locus.
void ValidateCoxPoint(const Bundle& e, const TropicalVector& z);

TropicalVector SpecializeCircuit(const Bundle& e, const TropicalVector& c,
                                 const TropicalVector& z);
// Specialized circuits of minimal nonempty support, normalized and sorted.
std::vector<TropicalVector> FiberCircuits(const Bundle& e, const TropicalVector& z);

// Matroid whose circuits are the given supports.
Matroid MatroidFromCircuits(const std::vector<std::string>& ground,
                            const std::vector<Set>& circuits);

// Raises InconsistentPropagation.
ValuatedMatroid FiberMatroid(const Bundle& e, const TropicalVector& z);

bool FiberContains(const Bundle& e, const TropicalVector& z, const TropicalVector& a);

struct TotalSpacePolynomial {
  std::vector<CoxTerm> terms;
  std::string text;
  IntVector degree;
};

struct TotalSpaceSystem {
  std::vector<TotalSpacePolynomial> polynomials;
  // One monomial per maximal cone; the total space omits their common
  // vanishing locus.
  std::vector<std::string> irrelevant;
};

TotalSpaceSystem MakeTotalSpaceSystem(const Bundle& e);

struct PolyhedralComplex {
  std::vector<IntVector> lineality;
  std::vector<std::vector<IntVector>> cones;
};

// Raises NontrivialValuation.
PolyhedralComplex IntrinsicSubcomplex(const Bundle& e);

}  // namespace tropbundle

#endif  // TROPBUNDLE_FIBER_HPP_
