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

#ifndef TROPBUNDLE_TORIC_FAN_HPP_
#define TROPBUNDLE_TORIC_FAN_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropbundle/common.hpp"
#include "tropbundle/intmat.hpp"

namespace tropbundle {

struct Fan {
  int dim = 0;
  IntMatrix rays;                         // s rows of length dim.
  std::vector<std::vector<int>> max_cones;  // Ray indices.
  bool complete = false;
  std::optional<IntVector> h;             // Polarization.

  int num_rays() const { return static_cast<int>(rays.size()); }
  bool operator==(const Fan& other) const = default;
};

struct FanReport {
  bool smooth = false;
  bool simplicial = false;
  std::vector<bool> cone_smooth;
  std::vector<std::string> warnings;
};

// Raises NonPrimitiveRay, EmptyFan, UnusedRay.
FanReport ValidateFan(const Fan& fan);
bool ConeIsSmooth(const Fan& fan, const std::vector<int>& cone);

// Standard fans used throughout the tests and examples.
Fan ProjectiveSpaceFan(int n);

// A^1 = Z^s / im(phi), phi(u)_i = u . v_i.
class ClassGroup {
 public:
  explicit ClassGroup(const Fan& fan);

  int free_rank() const { return free_rank_; }
  const IntVector& torsion() const { return torsion_; }
  // Free coordinates followed by torsion residues.
  IntVector Coordinates(const IntVector& a) const;
  // Canonical representative in Z^s of the class of a.
  IntVector NormalForm(const IntVector& a) const;
  bool Equal(const IntVector& a, const IntVector& b) const {
    return Coordinates(a) == Coordinates(b);
  }
  std::string Describe() const;

 private:
  int s_ = 0;
  int free_rank_ = 0;
  IntVector torsion_;
  IntMatrix free_rows_;     // Hermite basis of the left kernel of V.
  IntMatrix torsion_rows_;  // Rows of the Smith transform with d > 1.
  IntMatrix basis_;         // Z^s representatives of the coordinate generators.
};

struct DivisorClass {
  IntVector representative;
  IntVector normal_form;
  IntVector coordinates;
};

DivisorClass MakeDivisorClass(const Fan& fan, const IntVector& a);
IntVector CharacterImage(const Fan& fan, const IntVector& u);
Rational LineDegree(const Fan& fan, const IntVector& a);

struct Interval {
  std::int64_t lo;
  std::int64_t hi;
};

// Integer u with u . v_i in targets[k] for the k-th ray of `cone`; the
// first solution in lexicographic order of the value vector, with free
// directions set to zero.
std::optional<IntVector> SolveOnCone(const Fan& fan, const std::vector<int>& cone,
                                     const std::vector<Interval>& targets);
// Every feasible value vector in the box, with a solution for each.
std::vector<std::pair<IntVector, IntVector>> EnumerateOnCone(
    const Fan& fan, const std::vector<int>& cone,
    const std::vector<Interval>& targets, std::size_t limit);

}  // namespace tropbundle

#endif  // TROPBUNDLE_TORIC_FAN_HPP_
