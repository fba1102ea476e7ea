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

#include "tropbundle/bundle.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tropbundle {

namespace {

constexpr long kMaxFiltrationSpan = 1000000;

std::string RayAt(int ray, long j) {
  return "ray " + std::to_string(ray) + ", j=" + std::to_string(j);
}

// Flats of the chain E(lo) .. E(hi + 1), ascending.
std::vector<Set> Chain(const Filtration& f) {
  std::vector<Set> out;
  for (long j = f.hi() + 1; j >= f.lo; --j) {
    Set s = f.At(j);
    if (out.empty() || out.back() != s) out.push_back(s);
  }
  return out;
}

bool Adapted(const Bundle& e, Set basis, const std::vector<int>& cone) {
  const Matroid& m = e.matroid();
  for (int i : cone) {
    const Filtration& f = e.filtrations()[i];
    for (long j = f.lo + 1; j <= f.hi(); ++j) {
      Set s = f.At(j);
      if (m.Closure(basis & s) != s) return false;
    }
  }
  return true;
}

// Membership profile of u_w . v_i at each ray of the cone.
bool CheckAssignment(const Bundle& e, const std::vector<int>& cone,
                     const std::vector<int>& elements,
                     const std::vector<IntVector>& values) {
  const Matroid& m = e.matroid();
  for (size_t k = 0; k < cone.size(); ++k) {
    const Filtration& f = e.filtrations()[cone[k]];
    for (long j = f.lo; j <= f.hi() + 1; ++j) {
      Set chosen = 0;
      for (size_t w = 0; w < elements.size(); ++w) {
        if (values[w][k] >= j) chosen |= Bit(elements[w]);
      }
      if (m.Closure(chosen) != f.At(j)) return false;
    }
  }
  return true;
}

std::optional<ConeCertificate> PointCertificate(const Bundle& e,
                                                const std::vector<int>& cone,
                                                Set basis,
                                                const std::vector<IntVector>& d) {
  ConeCertificate c{cone, basis, {}};
  for (int w : Members(basis)) {
    std::vector<Interval> targets;
    for (int i : cone) targets.push_back({d[w][i], d[w][i]});
    auto u = SolveOnCone(e.fan(), cone, targets);
    if (!u) return std::nullopt;
    c.weights.emplace_back(w, *u);
  }
  return c;
}

std::optional<ConeCertificate> IntervalCertificate(const Bundle& e,
                                                   const std::vector<int>& cone,
                                                   Set basis,
                                                   const std::vector<IntVector>& d) {
  IntMatrix rows;
  for (int i : cone) rows.push_back(e.fan().rays[i]);
  std::int64_t width = 1;
  if (!rows.empty()) {
    for (auto x : Smith(rows, static_cast<int>(rows.size()), e.fan().dim).diagonal) {
      width = std::max(width, x);
    }
  }
  const std::vector<int> elements = Members(basis);
  // Candidate values per element, one per clamped membership pattern.
  std::vector<std::vector<std::pair<IntVector, IntVector>>> cands;
  for (int w : elements) {
    std::vector<Interval> box;
    for (int i : cone) {
      const long lo = e.filtrations()[i].lo;
      box.push_back({lo - 1 - width, d[w][i]});
    }
    std::map<IntVector, std::pair<IntVector, IntVector>> patterns;
    for (auto& [x, u] : EnumerateOnCone(e.fan(), cone, box, 1u << 20)) {
      IntVector key = x;
      for (size_t k = 0; k < cone.size(); ++k) {
        key[k] = std::max<std::int64_t>(key[k], e.filtrations()[cone[k]].lo - 1);
      }
      patterns.emplace(key, std::make_pair(key, u));
    }
    if (patterns.empty()) return std::nullopt;
    std::vector<std::pair<IntVector, IntVector>> list;
    // Larger values first, so the exact degrees are tried early.
    for (auto it = patterns.rbegin(); it != patterns.rend(); ++it) list.push_back(it->second);
    cands.push_back(std::move(list));
  }
  std::vector<size_t> pick(elements.size(), 0);
  std::vector<IntVector> values(elements.size());
  std::function<bool(size_t)> rec = [&](size_t k) {
    if (k == elements.size()) return CheckAssignment(e, cone, elements, values);
    for (size_t t = 0; t < cands[k].size(); ++t) {
      pick[k] = t;
      values[k] = cands[k][t].first;
      if (rec(k + 1)) return true;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  ConeCertificate c{cone, basis, {}};
  for (size_t k = 0; k < elements.size(); ++k) {
    c.weights.emplace_back(elements[k], cands[k][pick[k]].second);
  }
  return c;
}

std::string MonomialText(const IntVector& exponent, const std::string& var) {
  std::string out;
  for (size_t k = 0; k < exponent.size(); ++k) {
    if (exponent[k] == 0) continue;
    out += var + std::to_string(k);
    if (exponent[k] != 1) out += "^" + std::to_string(exponent[k]);
  }
  return out;
}

}  // namespace

Set Filtration::At(long j) const {
  if (steps.empty()) return 0;
  if (j <= lo) return steps.front();
  if (j > hi()) return 0;
  return steps[j - lo];
}

Filtration Filtration::Tabulate(long a, long b, const std::function<Set(long)>& f,
                                Set full) {
  if (b - a > kMaxFiltrationSpan) {
    Fail("FiltrationTooLong", "threshold span exceeds " + std::to_string(kMaxFiltrationSpan),
         ErrorKind::kLimit);
  }
  std::vector<Set> v{full};
  for (long j = a + 1; j <= b; ++j) v.push_back(f(j));
  size_t k = 0;
  while (k + 1 < v.size() && v[k + 1] == full) ++k;
  Filtration out{a + static_cast<long>(k), std::vector<Set>(v.begin() + k, v.end())};
  while (out.steps.size() > 1 && out.steps.back() == 0) out.steps.pop_back();
  return out;
}

Filtration Filtration::FromBreakpoints(std::vector<std::pair<long, Set>> points,
                                       Set full, int ray) {
  if (points.empty()) {
    Fail("MissingBound", "ray " + std::to_string(ray) + " has no filtration steps",
         ErrorKind::kInvalidInput);
  }
  std::sort(points.begin(), points.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (size_t k = 0; k + 1 < points.size(); ++k) {
    const auto& [j1, f1] = points[k];
    const auto& [j2, f2] = points[k + 1];
    if ((j1 == j2 && f1 != f2) || !IsSubset(f2, f1)) {
      Fail("NotDescending", RayAt(ray, j2), ErrorKind::kInvalidInput);
    }
  }
  for (const auto& [j, f] : points) {
    if (!IsSubset(f, full)) Fail("UnknownLabel", RayAt(ray, j), ErrorKind::kInvalidInput);
  }
  const long first = points.front().first;
  const long last = points.back().first;
  size_t pos = 0;
  return Tabulate(first - 1, last, [&](long j) {
    while (points[pos].first < j) ++pos;
    return points[pos].second;
  }, full);
}

Bundle Bundle::Create(Fan fan, ValuatedMatroid vm, std::vector<Filtration> filtrations,
                      bool allow_nonsimple) {
  ValidateFan(fan);
  if (static_cast<int>(filtrations.size()) != fan.num_rays()) {
    Fail("LengthMismatch", "one filtration per ray is required", ErrorKind::kInvalidInput);
  }
  const Matroid& m = vm.underlying();
  if (!allow_nonsimple && !m.IsSimple()) {
    Fail("NotSimple", "the matroid has loops or parallel elements", ErrorKind::kInvalidInput);
  }
  for (int i = 0; i < fan.num_rays(); ++i) {
    const Filtration& f = filtrations[i];
    if (f.steps.empty() || f.steps.front() != m.full()) {
      Fail("MissingBound", "ray " + std::to_string(i) + " never reaches the ground set",
           ErrorKind::kInvalidInput);
    }
    for (size_t k = 0; k < f.steps.size(); ++k) {
      const long j = f.lo + static_cast<long>(k);
      if (!IsSubset(f.steps[k], m.full())) Fail("UnknownLabel", RayAt(i, j), ErrorKind::kInvalidInput);
      if (k > 0 && !IsSubset(f.steps[k], f.steps[k - 1])) {
        Fail("NotDescending", RayAt(i, j), ErrorKind::kInvalidInput);
      }
      if (!m.IsFlat(f.steps[k])) {
        Fail("NotAFlat", RayAt(i, j) + " " + m.Format(f.steps[k]), ErrorKind::kInvalidInput);
      }
    }
  }
  Bundle b;
  b.fan_ = std::move(fan);
  b.vm_ = std::move(vm);
  b.filt_ = std::move(filtrations);
  return b;
}

std::vector<Set> Bundle::AllSteps() const {
  std::set<Set> seen{full(), 0};
  for (const auto& f : filt_) seen.insert(f.steps.begin(), f.steps.end());
  std::vector<Set> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](Set a, Set b) {
    return Card(a) != Card(b) ? Card(a) < Card(b) : LexLess(a, b);
  });
  return out;
}

std::vector<IntVector> DegreeVectors(const Bundle& e) {
  std::vector<IntVector> d(e.size(), IntVector(e.num_rays()));
  for (int i = 0; i < e.num_rays(); ++i) {
    const Filtration& f = e.filtrations()[i];
    for (int w = 0; w < e.size(); ++w) {
      long best = f.lo;
      for (size_t k = 0; k < f.steps.size(); ++k) {
        if (Contains(f.steps[k], w)) best = f.lo + static_cast<long>(k);
      }
      d[w][i] = best;
    }
  }
  return d;
}

std::vector<Filtration> FiltrationFromDegrees(const Matroid& m,
                                              const std::vector<IntVector>& d,
                                              int num_rays) {
  std::vector<Filtration> out;
  for (int i = 0; i < num_rays; ++i) {
    long a = 0, b = 0;
    for (size_t w = 0; w < d.size(); ++w) {
      a = w == 0 ? d[w][i] : std::min<long>(a, d[w][i]);
      b = w == 0 ? d[w][i] : std::max<long>(b, d[w][i]);
    }
    out.push_back(Filtration::Tabulate(a, b, [&](long j) {
      Set s = 0;
      for (size_t w = 0; w < d.size(); ++w) {
        if (d[w][i] >= j) s |= Bit(static_cast<int>(w));
      }
      return m.Closure(s);
    }, m.full()));
  }
  return out;
}

std::vector<Set> AdaptedBases(const Bundle& e, const std::vector<int>& cone) {
  std::vector<Set> out;
  for (Set b : e.matroid().bases()) {
    if (Adapted(e, b, cone)) out.push_back(b);
  }
  return out;
}

bool VerifyCertificate(const Bundle& e, const ConeCertificate& c) {
  if (!e.matroid().IsBasis(c.basis)) return false;
  std::vector<int> elements;
  std::vector<IntVector> values;
  for (const auto& [w, u] : c.weights) {
    elements.push_back(w);
    IntVector x;
    for (int i : c.cone) x.push_back(Dot(u, e.fan().rays[i]));
    values.push_back(x);
  }
  Set covered = FromMembers(elements);
  return covered == c.basis && CheckAssignment(e, c.cone, elements, values);
}

CertifyResult Certify(const Bundle& e) {
  CertifyResult res;
  const auto d = DegreeVectors(e);
  for (const auto& cone : e.fan().max_cones) {
    std::vector<Set> bases = AdaptedBases(e, cone);
    if (bases.empty()) {
      res.failure = CertifyFailure::kNoBasisForCone;
      res.failed_cone = cone;
      res.message = "no basis of the matroid is adapted to every filtration on this cone";
      res.cones.clear();
      return res;
    }
    std::optional<ConeCertificate> cert;
    for (Set b : bases) {
      cert = PointCertificate(e, cone, b, d);
      if (cert) break;
    }
    if (!cert) {
      for (Set b : bases) {
        cert = IntervalCertificate(e, cone, b, d);
        if (cert) break;
      }
    }
    if (!cert) {
      res.failure = CertifyFailure::kNoIntegerWeights;
      res.failed_cone = cone;
      res.failed_basis = bases.front();
      res.message =
          "no certificate found (search-complete under per-element membership interpretation)";
      res.cones.clear();
      return res;
    }
    if (!VerifyCertificate(e, *cert)) {
      Fail("CertificateMismatch", "certificate failed re-verification", ErrorKind::kInternal);
    }
    res.cones.push_back(*cert);
  }
  res.ok = true;
  return res;
}

std::optional<ModularityViolation> PartialModularityViolation(const Bundle& e) {
  const Matroid& m = e.matroid();
  const auto& fs = e.filtrations();
  for (int i = 0; i < e.num_rays(); ++i) {
    for (int j = i; j < e.num_rays(); ++j) {
      for (long k = fs[i].lo + 1; k <= fs[i].hi() + 1; ++k) {
        for (long l = fs[j].lo + 1; l <= fs[j].hi() + 1; ++l) {
          const Set x = fs[i].At(k - 1) & fs[j].At(l);
          const Set y = fs[i].At(k) & fs[j].At(l - 1);
          const Set z = fs[i].At(k) & fs[j].At(l);
          const int lhs = m.Rank(m.Closure(x | y));
          const int rhs = m.Rank(x) + m.Rank(y) - m.Rank(z);
          if (lhs != rhs) return ModularityViolation{i, j, k, l, lhs, rhs};
        }
      }
    }
  }
  return std::nullopt;
}

Set PairBasis(const Bundle& e, int ray_i, int ray_j) {
  if (ray_i < 0 || ray_j < 0 || ray_i >= e.num_rays() || ray_j >= e.num_rays()) {
    Fail("UnknownRay", "ray index out of range", ErrorKind::kInvalidInput);
  }
  const Matroid& m = e.matroid();
  const auto& fs = e.filtrations();
  for (long k = fs[ray_i].lo + 1; k <= fs[ray_i].hi() + 1; ++k) {
    for (long l = fs[ray_j].lo + 1; l <= fs[ray_j].hi() + 1; ++l) {
      const Set x = fs[ray_i].At(k - 1) & fs[ray_j].At(l);
      const Set y = fs[ray_i].At(k) & fs[ray_j].At(l - 1);
      const Set z = fs[ray_i].At(k) & fs[ray_j].At(l);
      if (m.Rank(m.Closure(x | y)) != m.Rank(x) + m.Rank(y) - m.Rank(z)) {
        Fail("NotPartiallyModular", RayAt(ray_i, k) + " against " + RayAt(ray_j, l));
      }
    }
  }
  FlatLattice lat(m);
  const std::vector<Set> a = Chain(fs[ray_i]);
  const std::vector<Set> b = Chain(fs[ray_j]);
  const Set bottom = m.Closure(0);
  Set basis = 0;
  for (size_t p = 1; p < a.size(); ++p) {
    for (size_t q = 1; q < b.size(); ++q) {
      const Set f = m.Closure((a[p - 1] & b[q]) | (a[p] & b[q - 1]));
      const Set h = a[p] & b[q];
      if (f == h) continue;
      basis |= m.GreedyBasis(RelativeComplement(m, lat, f, bottom, h));
    }
  }
  if (!m.IsBasis(basis) || !Adapted(e, basis, {ray_i, ray_j})) {
    Fail("PairBasisFailed", "constructed set is not an adapted basis", ErrorKind::kInternal);
  }
  return basis;
}

Bundle DirectSum(const Bundle& a, const Bundle& b) {
  if (!(a.fan() == b.fan())) Fail("FanMismatch", "summands live on different fans", ErrorKind::kInvalidInput);
  ValuatedMatroid vm = VmDirectSum(a.vm(), b.vm());
  const Set full = FullSet(vm.size());
  std::vector<Filtration> filt;
  for (int i = 0; i < a.num_rays(); ++i) {
    const Filtration& fa = a.filtrations()[i];
    const Filtration& fb = b.filtrations()[i];
    const long lo = std::min(fa.lo, fb.lo);
    const long hi = std::max(fa.hi(), fb.hi());
    filt.push_back(Filtration::Tabulate(lo, hi, [&](long j) {
      return fa.At(j) | (fb.At(j) << a.size());
    }, full));
  }
  return Bundle::Create(a.fan(), std::move(vm), std::move(filt));
}

std::vector<Bundle> Decompose(const Bundle& e) {
  std::vector<Bundle> out;
  const Set full = e.full();
  for (Set comp : ConnectedComponents(e.matroid())) {
    ValuatedMatroid vm = VmMinor(e.vm(), full & ~comp, 0);
    std::vector<Filtration> filt;
    for (const auto& f : e.filtrations()) {
      filt.push_back(Filtration::Tabulate(f.lo, f.hi(), [&](long j) {
        return Compress(f.At(j) & comp, comp);
      }, FullSet(Card(comp))));
    }
    out.push_back(Bundle::Create(e.fan(), std::move(vm), std::move(filt)));
  }
  return out;
}

bool IsIndecomposable(const Bundle& e) {
  return ConnectedComponents(e.matroid()).size() <= 1;
}

Bundle TensorLine(const Bundle& e, const IntVector& a) {
  if (static_cast<int>(a.size()) != e.num_rays()) {
    Fail("LengthMismatch", "character vector length differs from ray count", ErrorKind::kInvalidInput);
  }
  std::vector<Filtration> filt;
  for (int i = 0; i < e.num_rays(); ++i) filt.push_back(e.filtrations()[i].Shifted(a[i]));
  return Bundle::Create(e.fan(), e.vm(), std::move(filt), true);
}

std::optional<BundleIsomorphism> BundleIsomorphic(const Bundle& a, const Bundle& b) {
  if (!IsIndecomposable(a) || !IsIndecomposable(b)) {
    Fail("NotIndecomposable", "isomorphism testing needs indecomposable bundles", ErrorKind::kInvalidInput);
  }
  if (!(a.fan() == b.fan()) || a.size() != b.size() || a.rank() != b.rank()) return std::nullopt;
  std::vector<int> all(a.num_rays());
  for (int i = 0; i < a.num_rays(); ++i) all[i] = i;
  for (const auto& eq : VmIsomorphisms(a.vm(), b.vm(), 100000)) {
    auto image = [&](Set s) {
      Set t = 0;
      for (int w : Members(s)) t |= Bit(eq.bijection[w]);
      return t;
    };
    std::vector<Interval> targets;
    bool ok = true;
    for (int i = 0; i < a.num_rays() && ok; ++i) {
      const Filtration& fa = a.filtrations()[i];
      const Filtration& fb = b.filtrations()[i];
      if (fa.steps.size() != fb.steps.size()) {
        ok = false;
        break;
      }
      for (size_t k = 0; k < fa.steps.size(); ++k) {
        if (image(fa.steps[k]) != fb.steps[k]) ok = false;
      }
      targets.push_back({fb.lo - fa.lo, fb.lo - fa.lo});
    }
    if (!ok) continue;
    if (auto u = SolveOnCone(a.fan(), all, targets)) {
      return BundleIsomorphism{eq.bijection, *u};
    }
  }
  return std::nullopt;
}

MinimalityResult CheckTropicallyMinimal(const Bundle& e) {
  const Matroid& m = e.matroid();
  const Set bottom = m.Closure(0);
  std::vector<Set> atoms;
  std::set<Set> seen;
  for (int w : Members(m.full() & ~bottom)) {
    Set a = m.Closure(Bit(w));
    if (seen.insert(a).second) atoms.push_back(a);
  }
  std::sort(atoms.begin(), atoms.end(), LexLess);
  const int k = static_cast<int>(atoms.size());
  if (k > 20 || (1L << k) > FlatCap() * 10) {
    Fail("LatticeTooLarge", std::to_string(k) + " atoms", ErrorKind::kLimit);
  }
  const std::vector<Set> required = e.AllSteps();
  std::vector<std::uint32_t> subsets;
  for (std::uint32_t s = 0; s + 1 < (1u << k); ++s) subsets.push_back(s);
  std::stable_sort(subsets.begin(), subsets.end(), [](std::uint32_t x, std::uint32_t y) {
    return Card(x) != Card(y) ? Card(x) < Card(y) : LexLess(x, y);
  });
  auto generated = [&](std::uint32_t chosen, Set x) {
    Set u = bottom;
    for (int t : Members(chosen)) {
      if (IsSubset(atoms[t], x)) u |= atoms[t];
    }
    return m.Closure(u);
  };
  for (std::uint32_t chosen : subsets) {
    bool covers_steps = true;
    for (Set s : required) {
      if (generated(chosen, s) != s) {
        covers_steps = false;
        break;
      }
    }
    if (!covers_steps) continue;
    std::set<Set> p{bottom};
    for (int t : Members(chosen)) {
      std::vector<Set> next(p.begin(), p.end());
      for (Set x : next) p.insert(m.Closure(x | atoms[t]));
    }
    std::vector<Set> elems(p.begin(), p.end());
    bool graded = true;
    for (Set x : elems) {
      for (Set y : elems) {
        if (x == y || !IsSubset(x, y)) continue;
        bool cover = true;
        for (Set z : elems) {
          if (z != x && z != y && IsSubset(x, z) && IsSubset(z, y)) {
            cover = false;
            break;
          }
        }
        if (cover && m.Rank(y) != m.Rank(x) + 1) graded = false;
      }
    }
    if (!graded) continue;
    bool semimodular = true;
    for (Set x : elems) {
      for (Set y : elems) {
        const Set meet = generated(chosen, x & y);
        if (m.Rank(m.Closure(x | y)) + m.Rank(meet) > m.Rank(x) + m.Rank(y)) semimodular = false;
      }
    }
    if (!semimodular) continue;
    MinimalityResult res;
    res.minimal = false;
    for (int t : Members(chosen)) res.witness_atoms.push_back(atoms[t]);
    std::sort(elems.begin(), elems.end(), [](Set a, Set b) {
      return Card(a) != Card(b) ? Card(a) < Card(b) : LexLess(a, b);
    });
    res.witness_flats = elems;
    return res;
  }
  return MinimalityResult{};
}

CoxPresentation MakeCoxPresentation(const Bundle& e) {
  CoxPresentation out;
  const auto d = DegreeVectors(e);
  std::optional<ClassGroup> group;
  try {
    group.emplace(e.fan());
  } catch (const Error&) {
  }
  auto cls = [&](const IntVector& v) { return group ? group->Coordinates(v) : IntVector{}; };
  for (const auto& dw : d) {
    out.twists.push_back(dw);
    out.twist_classes.push_back(cls(dw));
  }
  for (const auto& c : Circuits(e.vm())) {
    CoxRelation rel;
    rel.circuit = c;
    const std::vector<int> support = Members(Support(c));
    IntVector low(e.num_rays(), 0);
    for (int i = 0; i < e.num_rays(); ++i) {
      for (size_t t = 0; t < support.size(); ++t) {
        low[i] = t == 0 ? d[support[t]][i] : std::min(low[i], d[support[t]][i]);
      }
    }
    for (int l : support) {
      IntVector u(e.num_rays());
      for (int i = 0; i < e.num_rays(); ++i) u[i] = d[l][i] - low[i];
      rel.terms.push_back({l, c[l].value(), u});
    }
    for (auto& x : low) x = -x;
    rel.degree = low;
    rel.degree_class = cls(low);
    for (size_t t = 0; t < rel.terms.size(); ++t) {
      std::vector<CoxTerm> bend;
      for (size_t s = 0; s < rel.terms.size(); ++s) {
        if (s != t) bend.push_back(rel.terms[s]);
      }
      rel.bends.push_back(std::move(bend));
    }
    out.relations.push_back(std::move(rel));
  }
  return out;
}

std::string FormatTerm(const Bundle& e, const CoxTerm& t, const std::string& var) {
  std::string out;
  if (t.coefficient != 0) out = RationalToString(t.coefficient) + "⊙";
  return out + MonomialText(t.exponent, "z") + var + e.vm().ground()[t.element];
}

}  // namespace tropbundle
