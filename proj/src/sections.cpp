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

#include "tropbundle/sections.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace tropbundle {

namespace {

Rational Q(std::int64_t x) { return Rational(static_cast<long>(x)); }

// Calls f on every k-subset of {0..n-1}, in lexicographic order.
void ForEachSubset(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> idx(k);
  for (int t = 0; t < k; ++t) idx[t] = t;
  if (k > n) return;
  while (true) {
    f(idx);
    int t = k - 1;
    while (t >= 0 && idx[t] == n - k + t) --t;
    if (t < 0) return;
    ++idx[t];
    for (int s = t + 1; s < k; ++s) idx[s] = idx[s - 1] + 1;
  }
}

QMatrix Rows(const Polytope& p, const std::vector<int>& pick) {
  QMatrix a;
  for (int k : pick) {
    std::vector<Rational> row;
    for (auto x : p.normals[k]) row.push_back(Q(x));
    a.push_back(row);
  }
  return a;
}

std::int64_t Floor(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f.get_si();
}

std::int64_t Ceil(const Rational& q) {
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return c.get_si();
}

}  // namespace

bool IsBounded(const Polytope& p) {
  const int n = p.dim;
  if (n == 0) return true;
  if (MatrixRank(Rows(p, [&] {
        std::vector<int> all(p.normals.size());
        for (size_t k = 0; k < all.size(); ++k) all[k] = static_cast<int>(k);
        return all;
      }())) < n) {
    return false;
  }
  // The recession cone is pointed; any extreme ray is cut out by n-1 facets.
  bool bounded = true;
  ForEachSubset(static_cast<int>(p.normals.size()), n - 1, [&](const std::vector<int>& pick) {
    if (!bounded) return;
    QMatrix ker = Kernel(Rows(p, pick), n);
    if (ker.size() != 1) return;
    for (int sign : {1, -1}) {
      bool inside = true;
      for (const auto& row : p.normals) {
        Rational s = 0;
        for (int t = 0; t < n; ++t) s += Q(row[t]) * ker[0][t];
        if (sign * s > 0) inside = false;
      }
      if (inside) bounded = false;
    }
  });
  return bounded;
}

bool ContainsPoint(const Polytope& p, const IntVector& u) {
  for (size_t k = 0; k < p.normals.size(); ++k) {
    if (Dot(p.normals[k], u) > p.bounds[k]) return false;
  }
  return true;
}

std::vector<std::vector<Rational>> Vertices(const Polytope& p) {
  if (!IsBounded(p)) Fail("Unbounded", "polytope has a nonzero recession direction");
  const int n = p.dim;
  std::vector<std::vector<Rational>> out;
  if (n == 0) return {std::vector<Rational>{}};
  ForEachSubset(static_cast<int>(p.normals.size()), n, [&](const std::vector<int>& pick) {
    QMatrix a = Rows(p, pick);
    if (MatrixRank(a) != n) return;
    std::vector<Rational> b;
    for (int k : pick) b.push_back(Q(p.bounds[k]));
    auto x = SolveLinear(a, b, n);
    if (!x) return;
    for (size_t k = 0; k < p.normals.size(); ++k) {
      Rational s = 0;
      for (int t = 0; t < n; ++t) s += Q(p.normals[k][t]) * (*x)[t];
      if (s > Q(p.bounds[k])) return;
    }
    if (std::find(out.begin(), out.end(), *x) == out.end()) out.push_back(*x);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntVector> LatticePoints(const Polytope& p) {
  const auto verts = Vertices(p);
  std::vector<IntVector> out;
  if (verts.empty()) return out;
  const int n = p.dim;
  IntVector lo(n), hi(n);
  for (int t = 0; t < n; ++t) {
    Rational a = verts[0][t], b = verts[0][t];
    for (const auto& v : verts) {
      a = std::min(a, v[t]);
      b = std::max(b, v[t]);
    }
    lo[t] = Ceil(a);
    hi[t] = Floor(b);
    if (lo[t] > hi[t]) return out;
  }
  IntVector u = lo;
  while (true) {
    if (ContainsPoint(p, u)) out.push_back(u);
    int t = n - 1;
    while (t >= 0 && u[t] == hi[t]) {
      u[t] = lo[t];
      --t;
    }
    if (t < 0) break;
    ++u[t];
  }
  return out;
}

std::vector<Polytope> Parliament(const Bundle& e) {
  const auto d = DegreeVectors(e);
  std::vector<Polytope> out;
  for (int w = 0; w < e.size(); ++w) {
    Polytope p{e.fan().dim, e.fan().rays, d[w]};
    if (!IsBounded(p)) {
      Fail("UnboundedPolytope", "P_" + e.vm().ground()[w] + " is unbounded; is the fan complete?");
    }
    out.push_back(std::move(p));
  }
  return out;
}

H0Result GlobalSections(const Bundle& e) {
  const auto polys = Parliament(e);
  std::map<IntVector, Set> members;
  for (int w = 0; w < e.size(); ++w) {
    for (const auto& u : LatticePoints(polys[w])) members[u] |= Bit(w);
  }
  H0Result res;
  for (const auto& [u, s] : members) {
    const int r = e.matroid().Rank(s);
    if (r == 0) continue;
    res.total += r;
    res.breakdown.emplace_back(u, r);
  }
  return res;
}

}  // namespace tropbundle
