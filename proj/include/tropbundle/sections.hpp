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

#ifndef TROPBUNDLE_SECTIONS_HPP_
#define TROPBUNDLE_SECTIONS_HPP_

#include <vector>

#include "tropbundle/bundle.hpp"
#include "tropbundle/linalg.hpp"

namespace tropbundle {

// {u : normals[k] . u <= bounds[k]}.
struct Polytope {
  int dim = 0;
  IntMatrix normals;
  IntVector bounds;
};

bool IsBounded(const Polytope& p);
// Vertices by solving every n-subset of facets; raises Unbounded.
std::vector<std::vector<Rational>> Vertices(const Polytope& p);
bool ContainsPoint(const Polytope& p, const IntVector& u);
// Lexicographically sorted.
std::vector<IntVector> LatticePoints(const Polytope& p);

// P_w for every element w; raises UnboundedPolytope.
std::vector<Polytope> Parliament(const Bundle& e);

struct H0Result {
  long total = 0;
  std::vector<std::pair<IntVector, int>> breakdown;  // Nonzero entries, sorted by u.
};

H0Result GlobalSections(const Bundle& e);

}  // namespace tropbundle

#endif  // TROPBUNDLE_SECTIONS_HPP_
