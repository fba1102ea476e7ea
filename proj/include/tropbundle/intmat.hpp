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

#ifndef TROPBUNDLE_INTMAT_HPP_
#define TROPBUNDLE_INTMAT_HPP_

#include <cstdint>
#include <vector>

namespace tropbundle {

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;

IntMatrix Identity(int n);
IntMatrix Multiply(const IntMatrix& a, const IntMatrix& b, int inner, int cols);
IntVector Apply(const IntMatrix& a, const IntVector& x);
std::int64_t Dot(const IntVector& a, const IntVector& b);
std::int64_t Gcd(const IntVector& v);

// u * a * v = d with u, v unimodular and d diagonal with d_1 | d_2 | ...
struct SmithForm {
  IntMatrix u;
  IntMatrix v;
  IntMatrix d;
  IntVector diagonal;  // Nonzero invariant factors, in order.
};

SmithForm Smith(const IntMatrix& a, int rows, int cols);

// Row-style Hermite normal form of the lattice spanned by the rows:
// echelon rows with positive pivots and reduced entries above pivots.
IntMatrix HermiteRows(const IntMatrix& a, int cols);

// Integer determinant of a square matrix (Bareiss).
std::int64_t IntDeterminant(IntMatrix a);

}  // namespace tropbundle

#endif  // TROPBUNDLE_INTMAT_HPP_
