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

#include "tropbundle/linalg.hpp"

#include <algorithm>
#include <unordered_map>

namespace tropbundle {

std::vector<int> RowReduce(QMatrix& a) {
  std::vector<int> pivots;
  if (a.empty()) return pivots;
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i) {
      if (a[i][c] != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    std::swap(a[r], a[p]);
    Rational inv = 1 / a[r][c];
    for (int k = c; k < cols; ++k) a[r][k] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (int k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int MatrixRank(QMatrix a) { return static_cast<int>(RowReduce(a).size()); }

QMatrix Transpose(const QMatrix& a, int cols) {
  QMatrix t(cols, std::vector<Rational>(a.size()));
  for (size_t i = 0; i < a.size(); ++i) {
    for (int j = 0; j < cols; ++j) t[j][i] = a[i][j];
  }
  return t;
}

QMatrix Kernel(const QMatrix& a, int cols) {
  QMatrix r = a;
  std::vector<int> pivots = RowReduce(r);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  QMatrix basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols);
    v[f] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> SolveLinear(const QMatrix& a,
                                                 const std::vector<Rational>& b,
                                                 int cols) {
  QMatrix aug = a;
  for (size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  std::vector<int> pivots = RowReduce(aug);
  std::vector<Rational> x(cols);
  for (size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == cols) return std::nullopt;
    x[pivots[i]] = aug[i][cols];
  }
  return x;
}

Rational Determinant(QMatrix a) {
  const int n = static_cast<int>(a.size());
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i) {
      if (a[i][c] != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (int i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (int k = c; k < n; ++k) a[i][k] -= f * a[c][k];
    }
  }
  return det;
}

Subspace Subspace::Span(int ambient, const QMatrix& generators) {
  Subspace s;
  s.ambient = ambient;
  QMatrix r = generators;
  for (auto& row : r) {
    if (static_cast<int>(row.size()) != ambient) {
      Fail("DimensionMismatch", "generator length differs from ambient dimension",
           ErrorKind::kInvalidInput);
    }
  }
  std::vector<int> pivots = RowReduce(r);
  r.resize(pivots.size());
  s.basis = std::move(r);
  return s;
}

bool Subspace::operator==(const Subspace& other) const {
  return ambient == other.ambient && basis == other.basis;
}

bool Subspace::operator<(const Subspace& other) const {
  if (ambient != other.ambient) return ambient < other.ambient;
  if (basis.size() != other.basis.size()) return basis.size() < other.basis.size();
  for (size_t i = 0; i < basis.size(); ++i) {
    for (int j = 0; j < ambient; ++j) {
      int c = cmp(basis[i][j], other.basis[i][j]);
      if (c != 0) return c < 0;
    }
  }
  return false;
}

bool Subspace::Contains(const Subspace& other) const {
  return SubspaceSum(*this, other).dim() == dim();
}

Subspace SubspaceSum(const Subspace& a, const Subspace& b) {
  QMatrix g = a.basis;
  g.insert(g.end(), b.basis.begin(), b.basis.end());
  return Subspace::Span(a.ambient, g);
}

Subspace SubspaceIntersection(const Subspace& a, const Subspace& b) {
  const int n = a.ambient;
  const int p = a.dim();
  const int q = b.dim();
  if (p == 0 || q == 0) return Subspace::Span(n, {});
  // Columns: a-basis then negated b-basis; kernel gives x a = y b.
  QMatrix m(n, std::vector<Rational>(p + q));
  for (int i = 0; i < p; ++i) {
    for (int k = 0; k < n; ++k) m[k][i] = a.basis[i][k];
  }
  for (int i = 0; i < q; ++i) {
    for (int k = 0; k < n; ++k) m[k][p + i] = -b.basis[i][k];
  }
  QMatrix gens;
  for (const auto& kv : Kernel(m, p + q)) {
    std::vector<Rational> v(n);
    for (int i = 0; i < p; ++i) {
      for (int k = 0; k < n; ++k) v[k] += kv[i] * a.basis[i][k];
    }
    gens.push_back(std::move(v));
  }
  return Subspace::Span(n, gens);
}

LaurentPoly PolyMul(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Rational& slot = out[ea + eb];
      slot += ca * cb;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

void PolyAddInPlace(LaurentPoly& a, const LaurentPoly& b, int sign) {
  for (const auto& [e, c] : b) {
    Rational& slot = a[e];
    if (sign > 0) {
      slot += c;
    } else {
      slot -= c;
    }
    if (slot == 0) a.erase(e);
  }
}

namespace {

LaurentPoly MinorDet(const std::vector<std::vector<LaurentPoly>>& a, int row,
                     Set cols, std::unordered_map<Set, LaurentPoly>& memo) {
  if (cols == 0) return LaurentPoly{{0, Rational(1)}};
  auto it = memo.find(cols);
  if (it != memo.end()) return it->second;
  LaurentPoly acc;
  int sign = 1;
  for (int c : Members(cols)) {
    if (!a[row][c].empty()) {
      LaurentPoly sub = MinorDet(a, row + 1, cols & ~Bit(c), memo);
      PolyAddInPlace(acc, PolyMul(a[row][c], sub), sign);
    }
    sign = -sign;
  }
  memo.emplace(cols, acc);
  return acc;
}

}  // namespace

LaurentPoly PolyDeterminant(const std::vector<std::vector<LaurentPoly>>& a) {
  const int n = static_cast<int>(a.size());
  std::unordered_map<Set, LaurentPoly> memo;
  return MinorDet(a, 0, FullSet(n), memo);
}

}  // namespace tropbundle
