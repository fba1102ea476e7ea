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

#include "tropbundle/valuated_matroid.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "tropbundle/linalg.hpp"

namespace tropbundle {

namespace {

bool VectorLess(const TropicalVector& a, const TropicalVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string FormatSet(const std::vector<std::string>& ground, Set s) {
  std::string out = "{";
  bool first = true;
  for (int i : Members(s)) {
    if (!first) out += ",";
    out += ground[i];
    first = false;
  }
  return out + "}";
}

}  // namespace

ValuatedMatroid ValuatedMatroid::Unchecked(std::vector<std::string> ground,
                                           int rank,
                                           const std::map<Set, ExtRational>& nu) {
  ValuatedMatroid vm;
  vm.ground_ = std::move(ground);
  vm.rank_ = rank;
  for (const auto& [s, v] : nu) {
    if (v.is_finite()) vm.nu_[s] = v.value();
  }
  return vm;
}

ValuatedMatroid ValuatedMatroid::Create(std::vector<std::string> ground,
                                        int rank,
                                        const std::map<Set, ExtRational>& nu) {
  ValuatedMatroid vm = Unchecked(std::move(ground), rank, nu);
  if (vm.nu_.empty()) {
    Fail("NoFiniteBasis", "every basis valuation is inf", ErrorKind::kInvalidInput);
  }
  for (const auto& [s, v] : vm.nu_) {
    if (Card(s) != rank || !IsSubset(s, FullSet(vm.size()))) {
      Fail("CardinalityMismatch", "valuated set " + FormatSet(vm.ground_, s) +
                                      " is not an r-subset of the ground set",
           ErrorKind::kInvalidInput);
    }
  }
  std::vector<Set> bases;
  for (const auto& [s, v] : vm.nu_) bases.push_back(s);
  vm.underlying_ = Matroid::FromBases(vm.ground_, bases);
  if (!vm.IsTrivial()) {
    if (auto bad = ExchangeViolation(vm)) {
      Fail("ExchangeViolation", *bad, ErrorKind::kInvalidInput);
    }
  }
  return vm;
}

ValuatedMatroid ValuatedMatroid::Trivial(const Matroid& m) {
  ValuatedMatroid vm;
  vm.ground_ = m.ground();
  vm.rank_ = m.rank();
  for (Set b : m.bases()) vm.nu_[b] = 0;
  vm.underlying_ = m;
  return vm;
}

ValuatedMatroid ValuatedMatroid::FromMonomialColumns(
    std::vector<std::string> ground,
    const std::vector<std::vector<Monomial>>& columns) {
  if (columns.empty()) Fail("EmptyInput", "no columns", ErrorKind::kInvalidInput);
  const int m = static_cast<int>(columns.size());
  const int r = static_cast<int>(columns.front().size());
  for (const auto& c : columns) {
    if (static_cast<int>(c.size()) != r) {
      Fail("DimensionMismatch", "columns of differing length", ErrorKind::kInvalidInput);
    }
  }
  if (ground.empty()) {
    for (int i = 1; i <= m; ++i) ground.push_back(std::to_string(i));
  }
  if (static_cast<int>(ground.size()) != m) {
    Fail("DimensionMismatch", "label count differs from column count", ErrorKind::kInvalidInput);
  }
  if (m > kMaxGround) Fail("GroundTooLarge", "too many columns", ErrorKind::kLimit);
  std::map<Set, ExtRational> nu;
  for (Set s = 0;; ++s) {
    if (Card(s) == r) {
      std::vector<int> cols = Members(s);
      std::vector<std::vector<LaurentPoly>> a(r, std::vector<LaurentPoly>(r));
      for (int row = 0; row < r; ++row) {
        for (int k = 0; k < r; ++k) {
          const Monomial& mono = columns[cols[k]][row];
          if (mono.c != 0) a[row][k][mono.e] = mono.c;
        }
      }
      LaurentPoly det = PolyDeterminant(a);
      if (!det.empty()) nu[s] = ExtRational(Rational(det.begin()->first));
    }
    if (s == FullSet(m)) break;
  }
  if (nu.empty()) {
    Fail("RankDeficient", "columns do not span the ambient space", ErrorKind::kInvalidInput);
  }
  return Create(std::move(ground), r, nu);
}

const Matroid& ValuatedMatroid::underlying() const {
  if (!underlying_) Fail("Unvalidated", "valuated matroid was not validated", ErrorKind::kInternal);
  return *underlying_;
}

ExtRational ValuatedMatroid::Nu(Set b) const {
  auto it = nu_.find(b);
  return it == nu_.end() ? ExtRational::Infinity() : ExtRational(it->second);
}

bool ValuatedMatroid::IsTrivial() const {
  for (const auto& [s, v] : nu_) {
    if (v != 0) return false;
  }
  return true;
}

std::optional<std::string> ExchangeViolation(const ValuatedMatroid& vm) {
  for (const auto& [b1, v1] : vm.finite_values()) {
    for (const auto& [b2, v2] : vm.finite_values()) {
      const Rational lhs = v1 + v2;
      for (int i : Members(b1 & ~b2)) {
        bool ok = false;
        for (int j : Members(b2 & ~b1)) {
          ExtRational rhs = vm.Nu((b1 & ~Bit(i)) | Bit(j)) +
                            vm.Nu((b2 & ~Bit(j)) | Bit(i));
          if (ExtRational(lhs) >= rhs) {
            ok = true;
            break;
          }
        }
        if (!ok) {
          return "B1=" + FormatSet(vm.ground(), b1) + " B2=" +
                 FormatSet(vm.ground(), b2) + " i=" + vm.ground()[i];
        }
      }
    }
  }
  return std::nullopt;
}

TropicalVector FundamentalCircuit(const ValuatedMatroid& vm, Set basis, int i) {
  ExtRational nb = vm.Nu(basis);
  if (nb.is_inf()) Fail("NotABasis", FormatSet(vm.ground(), basis), ErrorKind::kInvalidInput);
  if (Contains(basis, i)) Fail("ElementInBasis", vm.ground()[i], ErrorKind::kInvalidInput);
  TropicalVector c(vm.size());
  for (int j : Members(basis | Bit(i))) {
    c[j] = vm.Nu((basis | Bit(i)) & ~Bit(j)) - nb;
  }
  return c;
}

std::vector<TropicalVector> Circuits(const ValuatedMatroid& vm) {
  std::vector<TropicalVector> out;
  const Set full = FullSet(vm.size());
  for (const auto& [b, v] : vm.finite_values()) {
    for (int i : Members(full & ~b)) {
      out.push_back(Normalize(FundamentalCircuit(vm, b, i)));
    }
  }
  std::sort(out.begin(), out.end(), VectorLess);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

AxiomReport CheckCircuitAxioms(const std::vector<TropicalVector>& circuits,
                               int m) {
  AxiomReport rep;
  auto fail = [&](const std::string& why) {
    rep.ok = false;
    rep.failure = why;
    return rep;
  };
  for (const auto& c : circuits) {
    if (static_cast<int>(c.size()) != m) return fail("circuit of wrong length");
    if (Support(c) == 0) return fail("axiom 1: all-inf circuit");
    if (Normalize(c) != c) return fail("axiom 2: representative not normalized " + ToString(c));
  }
  for (size_t a = 0; a < circuits.size(); ++a) {
    for (size_t b = 0; b < circuits.size(); ++b) {
      if (a == b) continue;
      Set sa = Support(circuits[a]);
      Set sb = Support(circuits[b]);
      if (IsSubset(sa, sb) && sa != sb) {
        return fail("axiom 3: support of " + ToString(circuits[a]) +
                    " strictly inside support of " + ToString(circuits[b]));
      }
    }
  }
  // Elimination, with the second circuit shifted to agree at i.
  for (const auto& c : circuits) {
    for (const auto& cp : circuits) {
      for (int i : Members(Support(c) & Support(cp))) {
        TropicalVector c2 = Shift(cp, Rational(c[i].value() - cp[i].value()));
        for (int j = 0; j < m; ++j) {
          if (!(c[j] < c2[j])) continue;
          bool found = false;
          for (const auto& d : circuits) {
            if (d[i].is_finite() || d[j].is_inf()) continue;
            TropicalVector dd = Shift(d, Rational(c[j].value() - d[j].value()));
            bool above = true;
            for (int k = 0; k < m && above; ++k) {
              above = dd[k] >= TropMin(c[k], c2[k]);
            }
            if (above) {
              found = true;
              break;
            }
          }
          if (!found) {
            return fail("axiom 4: no elimination of " + ToString(c) + " and " +
                        ToString(c2) + " at i=" + std::to_string(i) +
                        " j=" + std::to_string(j));
          }
        }
      }
    }
  }
  return rep;
}

AxiomReport CheckAxioms(const ValuatedMatroid& vm) {
  AxiomReport rep;
  if (vm.finite_values().empty()) {
    rep.ok = false;
    rep.failure = "no finite basis value";
    return rep;
  }
  if (auto bad = ExchangeViolation(vm)) {
    rep.ok = false;
    rep.failure = "exchange: " + *bad;
    return rep;
  }
  return CheckCircuitAxioms(Circuits(vm), vm.size());
}

namespace {

ValuatedMatroid Restrict(const ValuatedMatroid& vm, Set keep) {
  const Matroid& u = vm.underlying();
  const int rk = u.Rank(keep);
  Set e = 0;
  for (int x : Members(u.full() & ~keep)) {
    if (u.Rank(keep | e | Bit(x)) > u.Rank(keep | e)) e |= Bit(x);
  }
  std::map<Set, ExtRational> nu;
  const int mk = Card(keep);
  for (Set s = 0;; ++s) {
    if (Card(s) == rk) {
      ExtRational v = vm.Nu(Expand(s, keep) | e);
      if (v.is_finite()) nu[s] = v;
    }
    if (s == FullSet(mk)) break;
  }
  std::vector<std::string> labels;
  for (int x : Members(keep)) labels.push_back(vm.ground()[x]);
  return ValuatedMatroid::Create(std::move(labels), rk, nu);
}

ValuatedMatroid Contract(const ValuatedMatroid& vm, Set con) {
  const Matroid& u = vm.underlying();
  const Set keep = u.full() & ~con;
  const Set e = u.GreedyBasis(con);
  const int rk = u.rank() - Card(e);
  std::map<Set, ExtRational> nu;
  const int mk = Card(keep);
  for (Set s = 0;; ++s) {
    if (Card(s) == rk) {
      ExtRational v = vm.Nu(Expand(s, keep) | e);
      if (v.is_finite()) nu[s] = v;
    }
    if (s == FullSet(mk)) break;
  }
  std::vector<std::string> labels;
  for (int x : Members(keep)) labels.push_back(vm.ground()[x]);
  return ValuatedMatroid::Create(std::move(labels), rk, nu);
}

}  // namespace

ValuatedMatroid VmMinor(const ValuatedMatroid& vm, Set del, Set con) {
  if ((del & con) != 0) Fail("OverlapError", "delete and contract sets intersect", ErrorKind::kInvalidInput);
  const Set full = FullSet(vm.size());
  ValuatedMatroid r = del ? Restrict(vm, full & ~del) : vm;
  if (con == 0) return r;
  return Contract(r, Compress(con, full & ~del));
}

ValuatedMatroid VmDirectSum(const ValuatedMatroid& a, const ValuatedMatroid& b) {
  Matroid sum = DirectSum(a.underlying(), b.underlying());
  std::map<Set, ExtRational> nu;
  const Set low = FullSet(a.size());
  for (Set s : sum.bases()) {
    nu[s] = a.Nu(s & low) + b.Nu(s >> a.size());
  }
  return ValuatedMatroid::Create(sum.ground(), sum.rank(), nu);
}

namespace {

std::optional<Equivalence> ProjectiveUnder(const ValuatedMatroid& a,
                                           const ValuatedMatroid& b,
                                           const std::vector<int>& pi) {
  auto image = [&](Set s) {
    Set out = 0;
    for (int i : Members(s)) out |= Bit(pi[i]);
    return out;
  };
  if (a.finite_values().size() != b.finite_values().size()) return std::nullopt;
  const int m = a.size();
  QMatrix rows;
  std::vector<Rational> rhs;
  for (const auto& [s, v] : a.finite_values()) {
    ExtRational w = b.Nu(image(s));
    if (w.is_inf()) return std::nullopt;
    std::vector<Rational> row(m + 1);
    for (int i : Members(s)) row[i] = 1;
    row[m] = 1;
    rows.push_back(std::move(row));
    rhs.push_back(v - w.value());
  }
  auto x = SolveLinear(rows, rhs, m + 1);
  if (!x) return std::nullopt;
  Equivalence eq;
  eq.bijection = pi;
  eq.b.assign(x->begin(), x->begin() + m);
  eq.lambda = (*x)[m];
  return eq;
}

}  // namespace

std::vector<Equivalence> VmIsomorphisms(const ValuatedMatroid& a,
                                        const ValuatedMatroid& b,
                                        std::size_t limit) {
  std::vector<Equivalence> out;
  if (a.size() != b.size() || a.rank() != b.rank()) return out;
  const int m = a.size();
  auto degree = [](const ValuatedMatroid& vm, int i) {
    int d = 0;
    for (const auto& [s, v] : vm.finite_values()) d += Contains(s, i);
    return d;
  };
  std::vector<int> da(m), db(m), pi(m, -1);
  for (int i = 0; i < m; ++i) {
    da[i] = degree(a, i);
    db[i] = degree(b, i);
  }
  std::vector<bool> used(m, false);
  std::function<void(int)> rec = [&](int k) {
    if (out.size() >= limit) return;
    if (k == m) {
      if (auto eq = ProjectiveUnder(a, b, pi)) out.push_back(*eq);
      return;
    }
    for (int t = 0; t < m && out.size() < limit; ++t) {
      if (used[t] || da[k] != db[t]) continue;
      used[t] = true;
      pi[k] = t;
      rec(k + 1);
      used[t] = false;
    }
  };
  rec(0);
  return out;
}

std::optional<Equivalence> VmEquivalent(const ValuatedMatroid& a,
                                        const ValuatedMatroid& b,
                                        EquivalenceMode mode) {
  if (a.size() != b.size() || a.rank() != b.rank()) return std::nullopt;
  if (mode == EquivalenceMode::kProjective) {
    std::vector<int> pi(a.size());
    for (int i = 0; i < a.size(); ++i) pi[i] = i;
    return ProjectiveUnder(a, b, pi);
  }
  auto all = VmIsomorphisms(a, b, 1);
  if (all.empty()) return std::nullopt;
  return all.front();
}

}  // namespace tropbundle
