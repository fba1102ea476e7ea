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

#include <map>

#include "doctest.h"
#include "tropbundle/bundle.hpp"
#include "tropbundle/toric_fan.hpp"
#include "unit/oracles.hpp"
#include "unit/random_bundles.hpp"

using namespace tropbundle;
using testgen::LoadBundle;

TEST_CASE("filtration steps agree with the oracle reading of the fixtures") {
  for (const auto& name : testgen::FixtureBundles()) {
    INFO(name);
    const Bundle e = LoadBundle(name);
    const auto o = oracle::Oracle::FromFixture(name);
    for (int i = 0; i < e.num_rays(); ++i) {
      for (long j = o.Lo(i) - 3; j <= o.Hi(i) + 3; ++j) REQUIRE(e.Step(i, j) == o.Step(i, j));
    }
    const auto d = DegreeVectors(e);
    for (int w = 0; w < e.size(); ++w) {
      for (int i = 0; i < e.num_rays(); ++i) CHECK(d[w][i] == o.MaxDegree(w, i));
    }
  }
}

TEST_CASE("degree vectors round-trip") {
  const Bundle e = LoadBundle("m1");
  const auto d = DegreeVectors(e);
  CHECK(d[0] == IntVector{1, 0, 0});
  CHECK(d[2] == IntVector{0, 1, 0});
  CHECK(FiltrationFromDegrees(e.matroid(), d, e.num_rays()) == e.filtrations());
}

TEST_CASE("bundle construction errors") {
  const Fan p2 = ProjectiveSpaceFan(2);
  const Matroid u = Matroid::Uniform(2, 3);
  const ValuatedMatroid vm = ValuatedMatroid::Trivial(u);
  const Filtration ok{0, {u.full(), 0b001}};
  CHECK_NOTHROW(Bundle::Create(p2, vm, {ok, ok, ok}));
  CHECK_THROWS_AS(Bundle::Create(p2, vm, {ok, ok}), Error);
  // {1, 2} is not a flat of U(2, 3).
  const Filtration bad{0, {u.full(), 0b011}};
  CHECK_THROWS_AS(Bundle::Create(p2, vm, {bad, ok, ok}), Error);
  const Filtration up{0, {u.full(), 0b001, 0b010}};
  CHECK_THROWS_AS(Bundle::Create(p2, vm, {up, ok, ok}), Error);
}

TEST_CASE("certificates pass the oracle on certified fixtures") {
  for (const char* name : {"tangent_p2", "tangent_p3", "m1", "m2", "m3", "fano", "rank3_unstable"}) {
    INFO(name);
    const Bundle e = LoadBundle(name);
    const CertifyResult r = Certify(e);
    REQUIRE(r.ok);
    const auto o = oracle::Oracle::FromFixture(name);
    for (const auto& c : r.cones) {
      CHECK(VerifyCertificate(e, c));
      std::map<int, oracle::Vec> u(c.weights.begin(), c.weights.end());
      CHECK(o.CertificateHolds(c.cone, c.basis, u));
    }
  }
}

TEST_CASE("certification failures") {
  const CertifyResult s = Certify(LoadBundle("singular_surface"));
  CHECK(s.failure == CertifyFailure::kNoIntegerWeights);
  const CertifyResult a = Certify(LoadBundle("a3"));
  CHECK(a.failure == CertifyFailure::kNoBasisForCone);
  CHECK(a.failed_cone == std::vector<int>{0, 1, 2});
}

TEST_CASE("partial modularity and pair bases") {
  const Bundle e = LoadBundle("p1_nonminimal");
  CHECK(IsPartiallyModular(e));
  CHECK(PairBasis(e, 0, 1) == e.matroid().SetOf({"1", "3", "4"}));
  const Bundle f = LoadBundle("split_p1_2");
  const auto v = PartialModularityViolation(f);
  REQUIRE(v.has_value());
  CHECK(v->i == 0);
  CHECK(v->j == 1);
  CHECK(v->k == 1);
  CHECK(v->l == 1);
  CHECK(v->lhs == 3);
  CHECK(v->rhs == 4);
  CHECK_THROWS_AS(PairBasis(f, 0, 1), Error);
}

TEST_CASE("pair bases are adapted to both filtrations") {
  std::mt19937 rng(11);
  Fan p1;
  p1.dim = 1;
  p1.rays = {{1}, {-1}};
  p1.max_cones = {{0}, {1}};
  p1.complete = true;
  p1.h = IntVector{1, 1};
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const Bundle e = testgen::RandomBundle(rng, p1, testgen::RandomMatroid(rng, 3, 5), 2);
    if (!IsPartiallyModular(e)) continue;
    const Set b = PairBasis(e, 0, 1);
    ++checked;
    CHECK(e.matroid().IsBasis(b));
    for (int i = 0; i < 2; ++i) {
      for (long j = e.filtrations()[i].lo; j <= e.filtrations()[i].hi() + 1; ++j) {
        CHECK(e.matroid().Closure(b & e.Step(i, j)) == e.Step(i, j));
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("direct sums decompose back") {
  const Bundle e = LoadBundle("split_p1_1");
  const auto parts = Decompose(e);
  REQUIRE(parts.size() == 3);
  const Bundle again = DirectSum(DirectSum(parts[0], parts[1]), parts[2]);
  CHECK(again.rank() == 3);
  CHECK(Decompose(again).size() == 3);
  CHECK(IsIndecomposable(LoadBundle("tangent_p2")));
}

TEST_CASE("tensoring by a line bundle shifts filtrations") {
  const Bundle e = LoadBundle("tangent_p2");
  const Bundle t = TensorLine(e, {1, -1, 2});
  for (int i = 0; i < 3; ++i) {
    for (long j = -4; j <= 4; ++j) CHECK(t.Step(i, j + (i == 0 ? 1 : i == 1 ? -1 : 2)) == e.Step(i, j));
  }
}

TEST_CASE("Picard isomorphism on the projective plane") {
  const Fan p2 = ProjectiveSpaceFan(2);
  const ValuatedMatroid vm = ValuatedMatroid::Trivial(Matroid::Uniform(1, 1));
  auto line = [&](IntVector a) {
    std::vector<Filtration> f;
    for (auto x : a) f.push_back(Filtration{x, {vm.underlying().full()}});
    return Bundle::Create(p2, vm, f);
  };
  const auto iso = BundleIsomorphic(line({1, 2, 3}), line({6, 0, 0}));
  REQUIRE(iso.has_value());
  CHECK(iso->u == IntVector{-2, -3});
  CHECK_FALSE(BundleIsomorphic(line({1, 0, 0}), line({0, 0, 0})).has_value());
}

TEST_CASE("tropical minimality") {
  CHECK(CheckTropicallyMinimal(LoadBundle("split_p1_1")).minimal);
  const MinimalityResult r = CheckTropicallyMinimal(LoadBundle("p1_nonminimal"));
  CHECK_FALSE(r.minimal);
  const Bundle e = LoadBundle("p1_nonminimal");
  CHECK(r.witness_atoms == std::vector<Set>{e.matroid().SetOf({"1"}), e.matroid().SetOf({"3"}),
                                            e.matroid().SetOf({"4"})});
}

TEST_CASE("Cox presentation of the tangent bundle") {
  const Bundle e = LoadBundle("tangent_p2");
  const CoxPresentation c = MakeCoxPresentation(e);
  REQUIRE(c.relations.size() == 1);
  CHECK(c.relations[0].terms.size() == 3);
  CHECK(c.relations[0].bends.size() == 3);
  CHECK(FormatTerm(e, c.relations[0].terms[0], "e") == "z0e0");
}
