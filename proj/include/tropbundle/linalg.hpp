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

#ifndef TROPBUNDLE_LINALG_HPP_
#define TROPBUNDLE_LINALG_HPP_

#include <map>
#include <optional>
#include <vector>

#include "tropbundle/common.hpp"

namespace tropbundle {

// Dense row-major matrix over Q.
using QMatrix = std::vector<std::vector<Rational>>;

// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> RowReduce(QMatrix& a);
int MatrixRank(QMatrix a);
QMatrix Transpose(const QMatrix& a, int cols);
// Basis of {x : a x = 0}, as rows.
QMatrix Kernel(const QMatrix& a, int cols);
// Some solution of a x = b, if one exists.
std::optional<std::vector<Rational>> SolveLinear(const QMatrix& a,
                                                 const std::vector<Rational>& b,
                                                 int cols);
Rational Determinant(QMatrix a);

// A linear subspace of Q^n in canonical form: the nonzero rows of the
// reduced row echelon form of any generating set.
struct Subspace {
  int ambient = 0;
  QMatrix basis;

  static Subspace Span(int ambient, const QMatrix& generators);
  int dim() const { return static_cast<int>(basis.size()); }
  bool operator==(const Subspace& other) const;
  bool operator<(const Subspace& other) const;
  bool Contains(const Subspace& other) const;
};

Subspace SubspaceSum(const Subspace& a, const Subspace& b);
Subspace SubspaceIntersection(const Subspace& a, const Subspace& b);

// Laurent polynomials in one variable t: exponent -> coefficient.
using LaurentPoly = std::map<long, Rational>;

LaurentPoly PolyMul(const LaurentPoly& a, const LaurentPoly& b);
void PolyAddInPlace(LaurentPoly& a, const LaurentPoly& b, int sign);
// Determinant of a square matrix of Laurent polynomials by cofactor
// expansion with memoization over column subsets.
LaurentPoly PolyDeterminant(const std::vector<std::vector<LaurentPoly>>& a);

}  // namespace tropbundle

#endif  // TROPBUNDLE_LINALG_HPP_
