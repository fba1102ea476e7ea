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

#include "doctest.h"
#include "tropbundle/stability.hpp"
#include "unit/oracles.hpp"
#include "unit/random_bundles.hpp"

using namespace tropbundle;
using testgen::LoadBundle;

TEST_CASE("Chern vectors and slopes agree with the oracle") {
  for (const auto& name : testgen::FixtureBundles()) {
    INFO(name);
    const Bundle e = LoadBundle(name);
    const auto o = oracle::Oracle::FromFixture(name);
    const IntVector c = ChernVector(e);
    CHECK(std::vector<std::int64_t>(c.begin(), c.end()) == o.Chern());
    if (!e.fan().h) {
      CHECK_THROWS_AS(Slope(e), Error);
      continue;
    }
    CHECK(Slope(e) == o.Slope());
    const FlatLattice lat(e.matroid());
    for (Set f : lat.flats()) {
      if (f == 0) continue;
      CHECK(SubsheafDegree(e, f) == o.FlatSlope(f) * e.matroid().Rank(f));
    }
  }
}

TEST_CASE("stability table is consistent with the oracle") {
  for (const char* name : {"m1", "m2", "m3", "fano", "rank3_unstable", "vamos"}) {
    INFO(name);
    const Bundle e = LoadBundle(name);
    const auto o = oracle::Oracle::FromFixture(name);
    const StabilityReport r = Stability(e);
    bool stable = true, semistable = true;
    for (Set f : o.Flats()) {
      if (f == 0 || f == o.full()) continue;
      stable = stable && o.FlatSlope(f) < o.Slope();
      semistable = semistable && o.FlatSlope(f) <= o.Slope();
    }
    CHECK(r.stable == stable);
    CHECK(r.semistable == semistable);
  }
}

TEST_CASE("quotients and subsheaves") {
  const Bundle e = LoadBundle("vamos");
  const Set f = e.matroid().SetOf({"1", "2", "3", "4"});
  const Bundle sub = Subsheaf(e, f);
  CHECK(sub.rank() == 3);
  CHECK(Slope(sub) == Rational(4, 3));
  const Bundle q = Quotient(e, f);
  CHECK(q.rank() == 1);
  CHECK(Slope(q) == 0);
  CHECK_THROWS_AS(Subquotient(e, f, e.matroid().SetOf({"1", "2"})), Error);
}

TEST_CASE("see-saw on modular pairs") {
  const Bundle e = LoadBundle("m1");
  const SeeSawReport s = SeeSaw(e, e.matroid().SetOf({"1", "2"}));
  CHECK(s.holds);
  CHECK(s.degree == s.sub_degree + s.quotient_degree);
  // {3, 4} and E^0(1) = {1, 2} span only a rank-3 flat.
  const Bundle v = LoadBundle("split_p1_2");
  CHECK_THROWS_AS(SeeSaw(v, v.matroid().SetOf({"3", "4"})), Error);
}

TEST_CASE("Harder-Narasimhan filtrations") {
  const Bundle e = LoadBundle("rank3_unstable");
  const FlatFiltration hn = HarderNarasimhan(e);
  REQUIRE(hn.steps.size() == 2);
  CHECK(hn.steps[0].gr_slope == Rational(9, 2));
  CHECK(hn.steps[1].gr_slope == 4);
  const FlatFiltration v = HarderNarasimhan(LoadBundle("vamos"));
  CHECK_FALSE(v.steps_modular);
  CHECK_FALSE(v.warnings.empty());
  // A semistable bundle has the trivial filtration.
  const FlatFiltration t = HarderNarasimhan(LoadBundle("tangent_p2"));
  REQUIRE(t.steps.size() == 1);
  CHECK(t.steps[0].flat == 0b111);
}

TEST_CASE("Jordan-Holder filtrations") {
  const FlatFiltration t = JordanHolder(LoadBundle("tangent_p2"));
  REQUIRE(t.steps.size() == 1);
  CHECK(t.steps[0].gr_stable);
  CHECK_THROWS_AS(JordanHolder(LoadBundle("m2")), Error);
}

TEST_CASE("Jordan-Holder of a sum of equal-slope lines") {
  const Fan p2 = ProjectiveSpaceFan(2);
  const ValuatedMatroid vm = ValuatedMatroid::Trivial(Matroid::Uniform(2, 2));
  const Bundle e = Bundle::Create(p2, vm, {Filtration{0, {0b11, 0b01}}, Filtration{0, {0b11, 0b10}},
                                           Filtration{0, {0b11}}});
  const FlatFiltration jh = JordanHolder(e);
  REQUIRE(jh.steps.size() == 2);
  for (const auto& s : jh.steps) {
    CHECK(s.gr_slope == 1);
    CHECK(s.gr_stable);
  }
  CHECK_FALSE(jh.unique);
}
