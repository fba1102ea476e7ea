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

#include "tropbundle/toric_fan.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tropbundle/linalg.hpp"

namespace tropbundle {

namespace {

int IntRank(const IntMatrix& rows, int cols) {
  QMatrix q;
  for (const auto& r : rows) {
    std::vector<Rational> qr;
    for (int k = 0; k < cols; ++k) qr.emplace_back(static_cast<long>(r[k]));
    q.push_back(std::move(qr));
  }
  return MatrixRank(q);
}

IntMatrix ConeRows(const Fan& fan, const std::vector<int>& cone) {
  IntMatrix rows;
  for (int i : cone) {
    if (i < 0 || i >= fan.num_rays()) {
      Fail("UnknownRay", "cone refers to ray " + std::to_string(i), ErrorKind::kInvalidInput);
    }
    rows.push_back(fan.rays[i]);
  }
  return rows;
}

std::int64_t Mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

IntMatrix InverseUnimodular(const IntMatrix& a) {
  const int n = static_cast<int>(a.size());
  QMatrix aug(n, std::vector<Rational>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = static_cast<long>(a[i][j]);
    aug[i][n + i] = 1;
  }
  RowReduce(aug);
  IntMatrix inv(n, IntVector(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Rational& x = aug[i][n + j];
      if (x.get_den() != 1) Fail("NotUnimodular", "inverse is not integral", ErrorKind::kInternal);
      inv[i][j] = x.get_num().get_si();
    }
  }
  return inv;
}

}  // namespace

bool ConeIsSmooth(const Fan& fan, const std::vector<int>& cone) {
  IntMatrix rows = ConeRows(fan, cone);
  const int k = static_cast<int>(rows.size());
  if (k == 0) return true;
  if (IntRank(rows, fan.dim) != k) return false;
  if (k == fan.dim) {
    std::int64_t det = IntDeterminant(rows);
    return det == 1 || det == -1;
  }
  SmithForm sf = Smith(rows, k, fan.dim);
  for (auto d : sf.diagonal) {
    if (d != 1) return false;
  }
  return true;
}

FanReport ValidateFan(const Fan& fan) {
  if (fan.rays.empty() || fan.max_cones.empty()) {
    Fail("EmptyFan", "fan needs rays and maximal cones", ErrorKind::kInvalidInput);
  }
  for (int i = 0; i < fan.num_rays(); ++i) {
    if (static_cast<int>(fan.rays[i].size()) != fan.dim) {
      Fail("DimensionMismatch", "ray " + std::to_string(i) + " has wrong length",
           ErrorKind::kInvalidInput);
    }
    if (Gcd(fan.rays[i]) != 1) {
      Fail("NonPrimitiveRay", "ray " + std::to_string(i) + " is not primitive",
           ErrorKind::kInvalidInput);
    }
  }
  if (fan.h && static_cast<int>(fan.h->size()) != fan.num_rays()) {
    Fail("LengthMismatch", "polarization length differs from ray count", ErrorKind::kInvalidInput);
  }
  std::vector<bool> used(fan.num_rays(), false);
  FanReport rep;
  rep.simplicial = true;
  rep.smooth = true;
  for (const auto& cone : fan.max_cones) {
    IntMatrix rows = ConeRows(fan, cone);
    for (int i : cone) used[i] = true;
    const bool simp = IntRank(rows, fan.dim) == static_cast<int>(cone.size());
    const bool smooth = simp && ConeIsSmooth(fan, cone);
    rep.simplicial = rep.simplicial && simp;
    rep.smooth = rep.smooth && smooth;
    rep.cone_smooth.push_back(smooth);
    if (!simp) rep.warnings.push_back("non-simplicial cone; pointedness not verified");
  }
  for (int i = 0; i < fan.num_rays(); ++i) {
    if (!used[i]) {
      Fail("UnusedRay", "ray " + std::to_string(i) + " lies in no maximal cone",
           ErrorKind::kInvalidInput);
    }
  }
  if (fan.complete && rep.simplicial) {
    std::map<std::vector<int>, int> faces;
    for (const auto& cone : fan.max_cones) {
      if (static_cast<int>(cone.size()) != fan.dim) {
        rep.warnings.push_back("complete fan with a lower-dimensional maximal cone");
        continue;
      }
      for (size_t skip = 0; skip < cone.size(); ++skip) {
        std::vector<int> f;
        for (size_t k = 0; k < cone.size(); ++k) {
          if (k != skip) f.push_back(cone[k]);
        }
        std::sort(f.begin(), f.end());
        ++faces[f];
      }
    }
    for (const auto& [f, count] : faces) {
      if (count == 1) {
        rep.warnings.push_back("codimension-one face in a single maximal cone");
        break;
      }
    }
  }
  return rep;
}

Fan ProjectiveSpaceFan(int n) {
  Fan fan;
  fan.dim = n;
  fan.rays.push_back(IntVector(n, -1));
  for (int i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    fan.rays.push_back(e);
  }
  for (int skip = 0; skip <= n; ++skip) {
    std::vector<int> cone;
    for (int i = 0; i <= n; ++i) {
      if (i != skip) cone.push_back(i);
    }
    fan.max_cones.push_back(cone);
  }
  fan.complete = true;
  fan.h = IntVector(n + 1, 1);
  return fan;
}

ClassGroup::ClassGroup(const Fan& fan) : s_(fan.num_rays()) {
  const int n = fan.dim;
  SmithForm sf = Smith(fan.rays, s_, n);
  const int t = static_cast<int>(sf.diagonal.size());
  if (t < n) Fail("RaysDoNotSpan", "rays do not span the ambient space", ErrorKind::kInvalidInput);
  IntMatrix kernel_rows(sf.u.begin() + t, sf.u.end());
  free_rows_ = HermiteRows(kernel_rows, s_);
  free_rank_ = static_cast<int>(free_rows_.size());
  for (int l = 0; l < t; ++l) {
    if (sf.diagonal[l] > 1) {
      torsion_.push_back(sf.diagonal[l]);
      torsion_rows_.push_back(sf.u[l]);
    }
  }
  // Unimodular transform with the Hermite rows in place of the kernel rows.
  IntMatrix full(sf.u.begin(), sf.u.begin() + t);
  full.insert(full.end(), free_rows_.begin(), free_rows_.end());
  IntMatrix inv = InverseUnimodular(full);
  // Column l of inv represents the l-th coordinate generator.
  for (int l = t; l < s_; ++l) {
    IntVector col(s_);
    for (int i = 0; i < s_; ++i) col[i] = inv[i][l];
    basis_.push_back(col);
  }
  for (int l = 0; l < t; ++l) {
    if (sf.diagonal[l] > 1) {
      IntVector col(s_);
      for (int i = 0; i < s_; ++i) col[i] = inv[i][l];
      basis_.push_back(col);
    }
  }
}

IntVector ClassGroup::Coordinates(const IntVector& a) const {
  if (static_cast<int>(a.size()) != s_) {
    Fail("LengthMismatch", "divisor length differs from ray count", ErrorKind::kInvalidInput);
  }
  IntVector out;
  for (const auto& row : free_rows_) out.push_back(Dot(row, a));
  for (size_t k = 0; k < torsion_.size(); ++k) {
    out.push_back(Mod(Dot(torsion_rows_[k], a), torsion_[k]));
  }
  return out;
}

IntVector ClassGroup::NormalForm(const IntVector& a) const {
  IntVector c = Coordinates(a);
  IntVector out(s_, 0);
  for (size_t l = 0; l < c.size(); ++l) {
    for (int i = 0; i < s_; ++i) out[i] = CheckedAdd(out[i], CheckedMul(c[l], basis_[l][i]));
  }
  return out;
}

std::string ClassGroup::Describe() const {
  std::string out = "Z^" + std::to_string(free_rank_);
  for (auto d : torsion_) out += " + Z/" + std::to_string(d);
  return out;
}

DivisorClass MakeDivisorClass(const Fan& fan, const IntVector& a) {
  ClassGroup g(fan);
  return DivisorClass{a, g.NormalForm(a), g.Coordinates(a)};
}

IntVector CharacterImage(const Fan& fan, const IntVector& u) {
  IntVector out;
  for (const auto& v : fan.rays) out.push_back(Dot(v, u));
  return out;
}

Rational LineDegree(const Fan& fan, const IntVector& a) {
  if (!fan.h) Fail("MissingPolarization", "fan has no polarization h", ErrorKind::kInvalidInput);
  if (a.size() != fan.h->size()) Fail("LengthMismatch", "divisor length", ErrorKind::kInvalidInput);
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += Rational(static_cast<long>(a[i])) * static_cast<long>((*fan.h)[i]);
  return s;
}

std::vector<std::pair<IntVector, IntVector>> EnumerateOnCone(
    const Fan& fan, const std::vector<int>& cone,
    const std::vector<Interval>& targets, std::size_t limit) {
  IntMatrix rows = ConeRows(fan, cone);
  const int k = static_cast<int>(rows.size());
  if (static_cast<int>(targets.size()) != k) {
    Fail("LengthMismatch", "one target interval per cone ray", ErrorKind::kInvalidInput);
  }
  std::vector<std::pair<IntVector, IntVector>> out;
  double volume = 1;
  for (const auto& iv : targets) {
    if (iv.lo > iv.hi) return out;
    volume *= static_cast<double>(iv.hi - iv.lo + 1);
  }
  if (volume > 1e7) Fail("UnboundedSearch", "target box too large", ErrorKind::kLimit);
  const int n = fan.dim;
  SmithForm sf = k == 0 ? SmithForm{Identity(0), Identity(n), {}, {}} : Smith(rows, k, n);
  const int t = static_cast<int>(sf.diagonal.size());
  IntVector x(k);
  for (int i = 0; i < k; ++i) x[i] = targets[i].lo;
  while (true) {
    IntVector y = Apply(sf.u, x);
    bool ok = true;
    IntVector z(n, 0);
    for (int l = 0; l < k && ok; ++l) {
      if (l < t) {
        if (y[l] % sf.diagonal[l] != 0) ok = false;
        else z[l] = y[l] / sf.diagonal[l];
      } else if (y[l] != 0) {
        ok = false;
      }
    }
    if (ok) {
      out.emplace_back(x, Apply(sf.v, z));
      if (out.size() >= limit) return out;
    }
    int pos = k - 1;
    while (pos >= 0 && x[pos] == targets[pos].hi) {
      x[pos] = targets[pos].lo;
      --pos;
    }
    if (pos < 0) break;
    ++x[pos];
  }
  return out;
}

std::optional<IntVector> SolveOnCone(const Fan& fan, const std::vector<int>& cone,
                                     const std::vector<Interval>& targets) {
  auto sols = EnumerateOnCone(fan, cone, targets, 1);
  if (sols.empty()) return std::nullopt;
  return sols.front().second;
}

}  // namespace tropbundle
