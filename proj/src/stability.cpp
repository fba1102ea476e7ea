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

#include "tropbundle/stability.hpp"

#include <algorithm>

namespace tropbundle {

namespace {

const IntVector& Polarization(const Bundle& e) {
  if (!e.fan().h) Fail("MissingPolarization", "fan has no polarization h", ErrorKind::kInvalidInput);
  return *e.fan().h;
}

void RequireFlat(const Bundle& e, Set f) {
  if (!IsSubset(f, e.full()) || !e.matroid().IsFlat(f)) {
    Fail("NotAFlat", e.matroid().Format(f), ErrorKind::kInvalidInput);
  }
}

// The flat of `e` whose image in the quotient by `prev` is `f`.
Set Lift(const Bundle& e, const Bundle& q, Set prev, Set f) {
  return prev | e.matroid().SetOf(q.matroid().LabelsOf(f));
}

std::optional<std::pair<int, long>> NonModularStep(const Bundle& e, const FlatLattice& lat) {
  for (int i = 0; i < e.num_rays(); ++i) {
    const Filtration& f = e.filtrations()[i];
    for (long j = f.lo + 1; j <= f.hi(); ++j) {
      if (!IsModularFlat(e.matroid(), lat, f.At(j))) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

FiltrationStep MakeStep(const Bundle& e, const Bundle& gr, Set flat, const FlatLattice& lat) {
  StabilityReport rep = Stability(gr);
  FiltrationStep s;
  s.flat = flat;
  s.gr_rank = gr.rank();
  s.gr_slope = rep.slope;
  s.gr_stable = rep.stable;
  s.gr_semistable = rep.semistable;
  s.modular = IsModularFlat(e.matroid(), lat, flat);
  return s;
}

}  // namespace

IntVector ChernVector(const Bundle& e) {
  const Matroid& m = e.matroid();
  IntVector c;
  for (const auto& f : e.filtrations()) {
    std::int64_t s = 0;
    for (long j = f.lo; j <= f.hi(); ++j) {
      s = CheckedAdd(s, CheckedMul(j, m.Rank(f.At(j)) - m.Rank(f.At(j + 1))));
    }
    c.push_back(s);
  }
  return c;
}

DivisorClass ChernClass(const Bundle& e) { return MakeDivisorClass(e.fan(), ChernVector(e)); }

Rational Degree(const Bundle& e) {
  const IntVector& h = Polarization(e);
  const IntVector c = ChernVector(e);
  Rational s = 0;
  for (size_t i = 0; i < c.size(); ++i) s += Rational(static_cast<long>(c[i])) * static_cast<long>(h[i]);
  return s;
}

Rational Slope(const Bundle& e) {
  if (e.rank() == 0) Fail("ZeroRank", "slope of a rank-zero sheaf is undefined");
  return Degree(e) / e.rank();
}

Rational SubsheafDegree(const Bundle& e, Set f) {
  const IntVector& h = Polarization(e);
  const Matroid& m = e.matroid();
  Rational total = 0;
  for (int i = 0; i < e.num_rays(); ++i) {
    const Filtration& fl = e.filtrations()[i];
    long c = 0;
    for (long j = fl.lo; j <= fl.hi(); ++j) {
      c += j * (m.Rank(f & fl.At(j)) - m.Rank(f & fl.At(j + 1)));
    }
    total += Rational(c) * static_cast<long>(h[i]);
  }
  return total;
}

Bundle Subsheaf(const Bundle& e, Set f) {
  RequireFlat(e, f);
  ValuatedMatroid vm = VmMinor(e.vm(), e.full() & ~f, 0);
  std::vector<Filtration> filt;
  for (const auto& fl : e.filtrations()) {
    filt.push_back(Filtration::Tabulate(fl.lo, fl.hi(), [&](long j) {
      return Compress(fl.At(j) & f, f);
    }, FullSet(Card(f))));
  }
  return Bundle::Create(e.fan(), std::move(vm), std::move(filt), true);
}

Bundle Subquotient(const Bundle& e, Set f, Set f_prime) {
  RequireFlat(e, f);
  RequireFlat(e, f_prime);
  if (!IsSubset(f, f_prime)) Fail("NotNested", "subquotient needs F inside F'", ErrorKind::kInvalidInput);
  const Matroid& m = e.matroid();
  const Set keep = f_prime & ~f;
  ValuatedMatroid vm = VmMinor(e.vm(), e.full() & ~f_prime, f);
  std::vector<Filtration> filt;
  for (const auto& fl : e.filtrations()) {
    filt.push_back(Filtration::Tabulate(fl.lo, fl.hi(), [&](long j) {
      return Compress(m.Closure((fl.At(j) & f_prime) | f) & keep, keep);
    }, FullSet(Card(keep))));
  }
  return Bundle::Create(e.fan(), std::move(vm), std::move(filt), true);
}

Bundle Quotient(const Bundle& e, Set f) { return Subquotient(e, f, e.full()); }

StabilityReport Stability(const Bundle& e) {
  StabilityReport rep;
  rep.slope = Slope(e);
  const Matroid& m = e.matroid();
  const Set bottom = m.Closure(0);
  FlatLattice lat(m);
  for (Set f : lat.flats()) {
    if (f == bottom || f == m.full()) continue;
    SlopeEntry entry{f, m.Rank(f), SubsheafDegree(e, f) / m.Rank(f)};
    if (entry.slope >= rep.slope) rep.stable = false;
    if (entry.slope > rep.slope) rep.semistable = false;
    if (!rep.stable && entry.slope >= rep.slope) {
      bool better = !rep.witness;
      if (!better) {
        const auto it = std::find_if(rep.table.begin(), rep.table.end(),
                                     [&](const SlopeEntry& x) { return x.flat == *rep.witness; });
        const Rational best = it != rep.table.end() ? it->slope : rep.slope;
        better = entry.slope > best || (entry.slope == best && LexLess(f, *rep.witness));
      }
      if (better) rep.witness = f;
    }
    rep.table.push_back(entry);
  }
  return rep;
}

SeeSawReport SeeSaw(const Bundle& e, Set f) {
  RequireFlat(e, f);
  const Matroid& m = e.matroid();
  for (int i = 0; i < e.num_rays(); ++i) {
    const Filtration& fl = e.filtrations()[i];
    for (long j = fl.lo; j <= fl.hi() + 1; ++j) {
      if (!IsModularPair(m, f, fl.At(j))) {
        Fail("NotModularPair", "F and E^" + std::to_string(i) + "(" + std::to_string(j) + ")");
      }
    }
  }
  SeeSawReport rep;
  rep.degree = Degree(e);
  rep.slope = Slope(e);
  const int r1 = m.Rank(f);
  const int r2 = e.rank() - r1;
  rep.sub_degree = SubsheafDegree(e, f);
  rep.quotient_degree = Degree(Quotient(e, f));
  rep.weighted_slopes = 0;
  if (r1 > 0) rep.weighted_slopes += Rational(r1) / e.rank() * (rep.sub_degree / r1);
  if (r2 > 0) rep.weighted_slopes += Rational(r2) / e.rank() * (rep.quotient_degree / r2);
  rep.holds = rep.degree == rep.sub_degree + rep.quotient_degree && rep.slope == rep.weighted_slopes;
  return rep;
}

FlatFiltration JordanHolder(const Bundle& e) {
  const StabilityReport top = Stability(e);
  if (!top.semistable) Fail("NotSemistable", "witness " + e.matroid().Format(*top.witness));
  FlatLattice lat(e.matroid());
  if (auto bad = NonModularStep(e, lat)) {
    Fail("FiltrationFlatsNotModular",
         "E^" + std::to_string(bad->first) + "(" + std::to_string(bad->second) + ")");
  }
  FlatFiltration out;
  Bundle q = e;
  Set prev = e.matroid().Closure(0);
  while (true) {
    const StabilityReport rep = Stability(q);
    if (rep.stable) {
      out.steps.push_back(MakeStep(e, q, e.full(), lat));
      break;
    }
    std::optional<SlopeEntry> pick;
    for (const auto& entry : rep.table) {
      if (entry.slope != top.slope) continue;
      if (pick && entry.rank > pick->rank) break;
      if (!Stability(Subsheaf(q, entry.flat)).stable) continue;
      if (!pick || LexLess(entry.flat, pick->flat)) pick = entry;
    }
    if (!pick) Fail("JordanHolderFailed", "no stable flat of slope mu", ErrorKind::kInternal);
    const Set lifted = Lift(e, q, prev, pick->flat);
    out.steps.push_back(MakeStep(e, Subsheaf(q, pick->flat), lifted, lat));
    q = Quotient(q, pick->flat);
    prev = lifted;
  }
  for (const auto& s : out.steps) {
    if (!s.gr_stable || s.gr_slope != top.slope) {
      Fail("JordanHolderFailed", "graded piece is not stable of slope mu", ErrorKind::kInternal);
    }
  }
  out.unique = false;
  return out;
}

FlatFiltration HarderNarasimhan(const Bundle& e) {
  FlatLattice lat(e.matroid());
  FlatFiltration out;
  if (auto bad = NonModularStep(e, lat)) {
    out.steps_modular = false;
    out.warnings.push_back("E^" + std::to_string(bad->first) + "(" + std::to_string(bad->second) +
                           ") is not a modular flat; uniqueness is not guaranteed");
  }
  Bundle q = e;
  Set prev = e.matroid().Closure(0);
  while (true) {
    const StabilityReport rep = Stability(q);
    if (rep.semistable) {
      out.steps.push_back(MakeStep(e, q, e.full(), lat));
      break;
    }
    Rational best = rep.table.front().slope;
    for (const auto& entry : rep.table) best = std::max(best, entry.slope);
    std::optional<SlopeEntry> pick;
    int ties = 0;
    for (const auto& entry : rep.table) {
      if (entry.slope != best) continue;
      if (!pick || entry.rank > pick->rank) {
        pick = entry;
        ties = 1;
      } else if (entry.rank == pick->rank) {
        ++ties;
        if (LexLess(entry.flat, pick->flat)) pick = entry;
      }
    }
    if (ties > 1) {
      out.warnings.push_back("several flats of maximal slope and rank; chose " +
                             q.matroid().Format(pick->flat));
    }
    const Set lifted = Lift(e, q, prev, pick->flat);
    out.steps.push_back(MakeStep(e, Subsheaf(q, pick->flat), lifted, lat));
    q = Quotient(q, pick->flat);
    prev = lifted;
  }
  for (size_t k = 0; k < out.steps.size(); ++k) {
    if (!out.steps[k].gr_semistable ||
        (k > 0 && !(out.steps[k - 1].gr_slope > out.steps[k].gr_slope))) {
      Fail("HarderNarasimhanFailed", "graded pieces violate the filtration postconditions");
    }
  }
  out.unique = out.steps_modular;
  for (const auto& s : out.steps) out.unique = out.unique && s.modular;
  return out;
}

}  // namespace tropbundle
