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

#include "tropbundle/fiber.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace tropbundle {

namespace {

bool SupportLess(const TropicalVector& a, const TropicalVector& b) {
  const Set sa = Support(a), sb = Support(b);
  if (sa != sb) return Card(sa) != Card(sb) ? Card(sa) < Card(sb) : LexLess(sa, sb);
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<int> Exponent(const std::vector<IntVector>& d, const TropicalVector& c, int l) {
  const std::vector<int> support = Members(Support(c));
  std::vector<int> u(d[l].size());
  for (size_t k = 0; k < u.size(); ++k) {
    std::int64_t low = d[l][k];
    for (int s : support) low = std::min(low, d[s][k]);
    u[k] = static_cast<int>(d[l][k] - low);
  }
  return u;
}

}  // namespace

void ValidateCoxPoint(const Bundle& e, const TropicalVector& z) {
  if (static_cast<int>(z.size()) != e.num_rays()) {
    Fail("LengthMismatch", "Cox point needs one coordinate per ray", ErrorKind::kInvalidInput);
  }
  for (const auto& cone : e.fan().max_cones) {
    bool ok = true;
    for (int k = 0; k < e.num_rays(); ++k) {
      if (z[k].is_inf() && std::find(cone.begin(), cone.end(), k) == cone.end()) ok = false;
    }
    if (ok) return;
  }
  Fail("InvalidCoxPoint", "point lies in the irrelevant locus " + ToString(z), ErrorKind::kInvalidInput);
}

TropicalVector SpecializeCircuit(const Bundle& e, const TropicalVector& c,
                                 const TropicalVector& z) {
  const auto d = DegreeVectors(e);
  TropicalVector out(c.size());
  for (int l : Members(Support(c))) {
    const std::vector<int> u = Exponent(d, c, l);
    ExtRational v = c[l];
    for (size_t k = 0; k < u.size(); ++k) {
      if (u[k] == 0) continue;
      if (z[k].is_inf()) {
        v = ExtRational::Infinity();
        break;
      }
      v = v + ExtRational(z[k].value() * u[k]);
    }
    out[l] = v;
  }
  return out;
}

std::vector<TropicalVector> FiberCircuits(const Bundle& e, const TropicalVector& z) {
  ValidateCoxPoint(e, z);
  std::vector<TropicalVector> spec;
  for (const auto& c : Circuits(e.vm())) {
    TropicalVector s = SpecializeCircuit(e, c, z);
    if (Support(s) != 0) spec.push_back(Normalize(s));
  }
  std::vector<TropicalVector> out;
  for (const auto& a : spec) {
    bool minimal = true;
    for (const auto& b : spec) {
      const Set sa = Support(a), sb = Support(b);
      if (sb != sa && IsSubset(sb, sa)) minimal = false;
    }
    if (minimal && std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
  }
  std::sort(out.begin(), out.end(), SupportLess);
  return out;
}

Matroid MatroidFromCircuits(const std::vector<std::string>& ground,
                            const std::vector<Set>& circuits) {
  const int m = static_cast<int>(ground.size());
  std::vector<std::uint8_t> rank(static_cast<size_t>(FullSet(m)) + 1, 0);
  for (Set s = 1; s != 0 && s <= FullSet(m); ++s) {
    bool indep = true;
    for (Set c : circuits) {
      if (IsSubset(c, s)) {
        indep = false;
        break;
      }
    }
    if (indep) {
      rank[s] = static_cast<std::uint8_t>(Card(s));
    } else {
      int best = 0;
      for (int i : Members(s)) best = std::max<int>(best, rank[s & ~Bit(i)]);
      rank[s] = static_cast<std::uint8_t>(best);
    }
    if (s == FullSet(m)) break;
  }
  return Matroid::FromRankFunction(ground, [&](Set s) { return static_cast<int>(rank[s]); });
}

ValuatedMatroid FiberMatroid(const Bundle& e, const TropicalVector& z) {
  const auto circuits = FiberCircuits(e, z);
  std::vector<Set> supports;
  for (const auto& c : circuits) supports.push_back(Support(c));
  const auto& ground = e.vm().ground();
  Matroid m = MatroidFromCircuits(ground, supports);
  std::map<Set, Rational> nu;
  const Set start = m.bases().front();
  nu[start] = 0;
  std::deque<Set> queue{start};
  while (!queue.empty()) {
    const Set b = queue.front();
    queue.pop_front();
    for (int i : Members(m.full() & ~b)) {
      const TropicalVector* fc = nullptr;
      for (const auto& c : circuits) {
        const Set s = Support(c);
        if (Contains(s, i) && IsSubset(s, b | Bit(i))) {
          fc = &c;
          break;
        }
      }
      if (fc == nullptr) continue;
      for (int j : Members(Support(*fc) & ~Bit(i))) {
        const Set next = (b & ~Bit(j)) | Bit(i);
        const Rational v = nu[b] + (*fc)[j].value() - (*fc)[i].value();
        auto it = nu.find(next);
        if (it == nu.end()) {
          nu[next] = v;
          queue.push_back(next);
        } else if (it->second != v) {
          Fail("InconsistentPropagation", "basis valuation differs along two exchange paths",
               ErrorKind::kInternal);
        }
      }
    }
  }
  std::map<Set, ExtRational> ext;
  for (const auto& [s, v] : nu) ext[s] = v;
  return ValuatedMatroid::Create(ground, m.rank(), ext);
}

bool FiberContains(const Bundle& e, const TropicalVector& z, const TropicalVector& a) {
  if (static_cast<int>(a.size()) != e.size()) {
    Fail("LengthMismatch", "point needs one coordinate per ground element", ErrorKind::kInvalidInput);
  }
  for (const auto& c : FiberCircuits(e, z)) {
    ExtRational best;
    int count = 0;
    for (size_t w = 0; w < c.size(); ++w) {
      ExtRational v = c[w] + a[w];
      if (v.is_inf()) continue;
      if (v < best) {
        best = v;
        count = 1;
      } else if (v == best) {
        ++count;
      }
    }
    if (best.is_finite() && count < 2) return false;
  }
  return true;
}

TotalSpaceSystem MakeTotalSpaceSystem(const Bundle& e) {
  TotalSpaceSystem sys;
  CoxPresentation pres = MakeCoxPresentation(e);
  for (const auto& rel : pres.relations) {
    TotalSpacePolynomial p{rel.terms, "", rel.degree};
    for (size_t t = 0; t < p.terms.size(); ++t) {
      if (t > 0) p.text += " ⊕ ";
      p.text += FormatTerm(e, p.terms[t], "y");
    }
    sys.polynomials.push_back(std::move(p));
  }
  std::sort(sys.polynomials.begin(), sys.polynomials.end(),
            [](const TotalSpacePolynomial& a, const TotalSpacePolynomial& b) {
              if (a.terms.size() != b.terms.size()) return a.terms.size() < b.terms.size();
              return a.text < b.text;
            });
  for (const auto& cone : e.fan().max_cones) {
    std::string mono;
    for (int k = 0; k < e.num_rays(); ++k) {
      if (std::find(cone.begin(), cone.end(), k) == cone.end()) mono += "z" + std::to_string(k);
    }
    sys.irrelevant.push_back(mono.empty() ? "1" : mono);
  }
  return sys;
}

PolyhedralComplex IntrinsicSubcomplex(const Bundle& e) {
  if (!e.vm().IsTrivial()) {
    Fail("NontrivialValuation", "intrinsic subcomplex needs a trivially valuated matroid",
         ErrorKind::kInvalidInput);
  }
  const Set full = e.full();
  const Set bottom = e.matroid().Closure(0);
  std::set<Set> lp(std::less<Set>{});
  for (Set s : e.AllSteps()) lp.insert(s);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Set> cur(lp.begin(), lp.end());
    for (Set a : cur) {
      for (Set b : cur) grew = lp.insert(a & b).second || grew;
    }
  }
  std::vector<Set> proper;
  for (Set s : lp) {
    if (s != full && s != bottom) proper.push_back(s);
  }
  std::sort(proper.begin(), proper.end(), [](Set a, Set b) {
    return Card(a) != Card(b) ? Card(a) < Card(b) : LexLess(a, b);
  });
  PolyhedralComplex out;
  out.lineality.push_back(IntVector(e.size(), 1));
  auto indicator = [&](Set s) {
    IntVector v(e.size(), 0);
    for (int w : Members(s)) v[w] = 1;
    return v;
  };
  std::vector<std::vector<Set>> chains;
  std::function<void(std::vector<Set>&)> extend = [&](std::vector<Set>& chain) {
    bool extended = false;
    for (Set s : proper) {
      const bool above = chain.empty() || (chain.back() != s && IsSubset(chain.back(), s));
      if (!above) continue;
      bool cover = true;
      for (Set t : proper) {
        if (t != s && IsSubset(t, s) && (chain.empty() || (t != chain.back() && IsSubset(chain.back(), t)))) {
          cover = false;
          break;
        }
      }
      if (!cover) continue;
      extended = true;
      chain.push_back(s);
      extend(chain);
      chain.pop_back();
    }
    if (!extended) chains.push_back(chain);
  };
  std::vector<Set> chain;
  extend(chain);
  for (const auto& c : chains) {
    std::vector<IntVector> rays;
    for (Set s : c) rays.push_back(indicator(s));
    out.cones.push_back(std::move(rays));
  }
  return out;
}

}  // namespace tropbundle
