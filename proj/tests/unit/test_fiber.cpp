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

#include <set>

#include "doctest.h"
#include "tropbundle/fiber.hpp"
#include "unit/oracles.hpp"
#include "unit/random_bundles.hpp"

using namespace tropbundle;
using testgen::LoadBundle;

namespace {
const ExtRational kInf = ExtRational::Infinity();
}  // namespace

TEST_CASE("irrelevant locus is rejected") {
  const Bundle e = LoadBundle("tangent_p2");
  CHECK_THROWS_AS(ValidateCoxPoint(e, {kInf, kInf, kInf}), Error);
  CHECK_THROWS_AS(ValidateCoxPoint(e, {0L, 0L}), Error);
  CHECK_NOTHROW(ValidateCoxPoint(e, {kInf, kInf, 0L}));
}

TEST_CASE("fiber circuits of the rank-3 bundles") {
  const Bundle m1 = LoadBundle("m1");
  auto c = FiberCircuits(m1, {1L, 2L, 3L});
  REQUIRE(c.size() == 1);
  CHECK(c[0] == TropicalVector{0L, 0L, 1L, 2L});
  const Bundle m2 = LoadBundle("m2");
  c = FiberCircuits(m2, {0L, kInf, 0L});
  REQUIRE(c.size() == 1);
  CHECK(c[0] == TropicalVector{0L, kInf, kInf, 0L});
}

TEST_CASE("fiber membership is the tropical linear space") {
  const Bundle e = LoadBundle("tangent_p2");
  // Circuit (0, 0, 0): minimum attained twice.
  CHECK(FiberContains(e, {0L, 0L, 0L}, {1L, 1L, 5L}));
  CHECK_FALSE(FiberContains(e, {0L, 0L, 0L}, {1L, 2L, 5L}));
  CHECK_FALSE(FiberContains(e, {0L, 0L, 0L}, {kInf, kInf, 3L}));
  CHECK(FiberContains(e, {0L, 0L, 0L}, {kInf, 3L, 3L}));
}

TEST_CASE("matroid from circuit supports") {
  const Matroid m = MatroidFromCircuits({"a", "b", "c"}, {0b110});
  CHECK(m.rank() == 2);
  CHECK(m.bases() == std::vector<Set>{0b011, 0b101});
}

TEST_CASE("fiber matroids satisfy the circuit axioms on random points") {
  std::mt19937 rng(5);
  const Fan p2 = ProjectiveSpaceFan(2);
  for (int trial = 0; trial < 30; ++trial) {
    const Bundle e = testgen::RandomBundle(rng, p2, testgen::RandomMatroid(rng, 3, 5), 2);
    const TropicalVector z = testgen::RandomCoxPoint(rng, p2);
    std::vector<Set> supports;
    for (const auto& c : FiberCircuits(e, z)) supports.push_back(Support(c));
    CHECK(oracle::SupportsFormCircuits(supports, e.size()));
    const ValuatedMatroid fm = FiberMatroid(e, z);
    CHECK(CheckAxioms(fm).ok);
    // Finite z: the fiber matroid has the underlying matroid of the bundle.
    bool finite = true;
    for (const auto& x : z) finite = finite && x.is_finite();
    if (finite) CHECK(fm.underlying().bases() == e.matroid().bases());
  }
}

TEST_CASE("total space systems") {
  const TotalSpaceSystem s = MakeTotalSpaceSystem(LoadBundle("m3"));
  CHECK(s.polynomials.size() == 9);
  CHECK(s.polynomials.front().text == "y1 ⊕ y2 ⊕ y3");
  CHECK(s.irrelevant.size() == 3);
}

TEST_CASE("intrinsic subcomplex of the rank-3 bundle") {
  const PolyhedralComplex pc = IntrinsicSubcomplex(LoadBundle("m1"));
  CHECK(pc.lineality == std::vector<IntVector>{{1, 1, 1, 1}});
  std::set<IntVector> rays;
  for (const auto& cone : pc.cones) {
    for (const auto& r : cone) rays.insert(r);
  }
  CHECK(rays == std::set<IntVector>{{1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK(pc.cones.size() == 3);
}
