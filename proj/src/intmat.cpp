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

#include "tropbundle/intmat.hpp"

#include <cstdlib>
#include <numeric>
#include <utility>

#include "tropbundle/common.hpp"

namespace tropbundle {

namespace {

std::int64_t FloorDiv(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// row_i -= q * row_j
void RowAxpy(IntMatrix& a, int i, int j, std::int64_t q) {
  for (size_t k = 0; k < a[i].size(); ++k) {
    a[i][k] = CheckedAdd(a[i][k], -CheckedMul(q, a[j][k]));
  }
}

void ColAxpy(IntMatrix& a, int i, int j, std::int64_t q) {
  for (auto& row : a) row[i] = CheckedAdd(row[i], -CheckedMul(q, row[j]));
}

void SwapCols(IntMatrix& a, int i, int j) {
  for (auto& row : a) std::swap(row[i], row[j]);
}

}  // namespace

IntMatrix Identity(int n) {
  IntMatrix out(n, IntVector(n, 0));
  for (int i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

IntMatrix Multiply(const IntMatrix& a, const IntMatrix& b, int inner, int cols) {
  IntMatrix out(a.size(), IntVector(cols, 0));
  for (size_t i = 0; i < a.size(); ++i) {
    for (int k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < cols; ++j) {
        out[i][j] = CheckedAdd(out[i][j], CheckedMul(a[i][k], b[k][j]));
      }
    }
  }
  return out;
}

IntVector Apply(const IntMatrix& a, const IntVector& x) {
  IntVector out(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) out[i] = Dot(a[i], x);
  return out;
}

std::int64_t Dot(const IntVector& a, const IntVector& b) {
  std::int64_t s = 0;
  for (size_t i = 0; i < a.size(); ++i) s = CheckedAdd(s, CheckedMul(a[i], b[i]));
  return s;
}

std::int64_t Gcd(const IntVector& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  return g;
}

SmithForm Smith(const IntMatrix& a, int rows, int cols) {
  SmithForm f;
  f.d = a;
  f.u = Identity(rows);
  f.v = Identity(cols);
  IntMatrix& d = f.d;
  for (int t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      int pi = -1, pj = -1;
      for (int i = t; i < rows; ++i) {
        for (int j = t; j < cols; ++j) {
          if (d[i][j] != 0 && (pi < 0 || std::llabs(d[i][j]) < std::llabs(d[pi][pj]))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi < 0) break;
      std::swap(d[t], d[pi]);
      std::swap(f.u[t], f.u[pi]);
      SwapCols(d, t, pj);
      SwapCols(f.v, t, pj);
      bool clean = true;
      for (int i = t + 1; i < rows; ++i) {
        std::int64_t q = FloorDiv(d[i][t], d[t][t]);
        if (q != 0) {
          RowAxpy(d, i, t, q);
          RowAxpy(f.u, i, t, q);
        }
        if (d[i][t] != 0) clean = false;
      }
      for (int j = t + 1; j < cols; ++j) {
        std::int64_t q = FloorDiv(d[t][j], d[t][t]);
        if (q != 0) {
          ColAxpy(d, j, t, q);
          ColAxpy(f.v, j, t, q);
        }
        if (d[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Enforce divisibility of the trailing block.
      int bad = -1;
      for (int i = t + 1; i < rows && bad < 0; ++i) {
        for (int j = t + 1; j < cols; ++j) {
          if (d[i][j] % d[t][t] != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad < 0) break;
      RowAxpy(d, t, bad, -1);
      RowAxpy(f.u, t, bad, -1);
    }
    if (t < rows && t < cols && d[t][t] < 0) {
      for (auto& x : d[t]) x = -x;
      for (auto& x : f.u[t]) x = -x;
    }
  }
  for (int t = 0; t < std::min(rows, cols); ++t) {
    if (d[t][t] != 0) f.diagonal.push_back(d[t][t]);
  }
  return f;
}

IntMatrix HermiteRows(const IntMatrix& a, int cols) {
  IntMatrix h = a;
  const int rows = static_cast<int>(h.size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    while (true) {
      int p = -1;
      for (int i = r; i < rows; ++i) {
        if (h[i][c] != 0 && (p < 0 || std::llabs(h[i][c]) < std::llabs(h[p][c]))) p = i;
      }
      if (p < 0) break;
      std::swap(h[r], h[p]);
      bool done = true;
      for (int i = r + 1; i < rows; ++i) {
        std::int64_t q = FloorDiv(h[i][c], h[r][c]);
        if (q != 0) RowAxpy(h, i, r, q);
        if (h[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (r < rows && h[r][c] != 0) {
      if (h[r][c] < 0) {
        for (auto& x : h[r]) x = -x;
      }
      for (int i = 0; i < r; ++i) {
        std::int64_t q = FloorDiv(h[i][c], h[r][c]);
        if (q != 0) RowAxpy(h, i, r, q);
      }
      ++r;
    }
  }
  h.resize(r);
  return h;
}

std::int64_t IntDeterminant(IntMatrix a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i) {
        if (a[i][k] != 0) {
          p = i;
          break;
        }
      }
      if (p < 0) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        std::int64_t num = CheckedAdd(CheckedMul(a[i][j], a[k][k]),
                                      -CheckedMul(a[i][k], a[k][j]));
        a[i][j] = num / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace tropbundle
