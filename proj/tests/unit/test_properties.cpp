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

// Randomized invariants over seeded instances.

#include "doctest.h"
#include "tropbundle/fiber.hpp"
#include "tropbundle/sections.hpp"
#include "tropbundle/stability.hpp"
#include "unit/oracles.hpp"
#include "unit/random_bundles.hpp"

using namespace tropbundle;

namespace {

constexpr int kInstances = 50;

Fan P1() {
  Fan f;
  f.dim = 1;
  f.rays = {{1}, {-1}};
  f.max_cones = {{0}, {1}};
  f.complete = true;
  f.h = IntVector{1, 1};
  return f;
}

}  // namespace

TEST_CASE("random valuated matroids satisfy exchange and circuit axioms") {
  std::mt19937 rng(101);
  std::uniform_int_distribution<int> coeff(-2, 2), expo(0, 4);
  int built = 0;
  while (built < kInstances) {
    const int r = 2 + built % 3, m = r + 1 + built % 4;
    std::vector<std::vector<Monomial>> cols(m, std::vector<Monomial>(r));
    for (auto& col : cols) {
      for (auto& x : col) x = {Rational(coeff(rng)), expo(rng)};
    }
    std::vector<std::string> g;
    for (int k = 0; k < m; ++k) g.push_back(std::to_string(k));
    ValuatedMatroid vm;
    try {
      vm = ValuatedMatroid::FromMonomialColumns(g, cols);
    } catch (const Error&) {
      continue;
    }
    ++built;
    CHECK(CheckAxioms(vm).ok);
    CHECK(oracle::ExchangeHolds(m, vm.rank(), [&](Set s) -> std::optional<mpq_class> {
      const ExtRational v = vm.Nu(s);
      if (v.is_inf()) return std::nullopt;
      return v.value();
    }));
    std::vector<Set> supports;
    for (const auto& c : Circuits(vm)) supports.push_back(Support(c));
    CHECK(oracle::SupportsFormCircuits(supports, m));
  }
}

TEST_CASE("fiber matroids of random bundles") {
  std::mt19937 rng(202);
  const Fan p2 = ProjectiveSpaceFan(2);
  for (int k = 0; k < kInstances; ++k) {
    const Bundle e = testgen::RandomBundle(rng, p2, testgen::RandomMatroid(rng, 2 + k % 2, 4 + k % 3), 2);
    const TropicalVector z = testgen::RandomCoxPoint(rng, p2);
    std::vector<Set> supports;
    for (const auto& c : FiberCircuits(e, z)) supports.push_back(Support(c));
    CHECK(oracle::SupportsFormCircuits(supports, e.size()));
    CHECK(CheckCircuitAxioms(FiberCircuits(e, z), e.size()).ok);
  }
}

TEST_CASE("slope and degree invariants on random bundles") {
  std::mt19937 rng(303);
  const Fan p2 = ProjectiveSpaceFan(2);
  for (int k = 0; k < kInstances; ++k) {
    const Bundle e = testgen::RandomBundle(rng, p2, testgen::RandomMatroid(rng, 2 + k % 2, 3 + k % 4), 2);
    const IntVector a = {k % 3 - 1, k % 5 - 2, 1};
    CHECK(Slope(TensorLine(e, a)) == Slope(e) + LineDegree(p2, a));
    CHECK(ChernVector(TensorLine(e, a))[0] == ChernVector(e)[0] + a[0] * e.rank());
    const FlatLattice lat(e.matroid());
    for (Set f : lat.flats()) {
      if (f == 0 || f == e.full()) continue;
      try {
        const SeeSawReport s = SeeSaw(e, f);
        CHECK(s.holds);
      } catch (const Error& err) {
        CHECK(err.name() == "NotModularPair");
      }
    }
  }
}

TEST_CASE("stable certified bundles are indecomposable") {
  std::mt19937 rng(404);
  const Fan p2 = ProjectiveSpaceFan(2);
  int certified = 0;
  for (int trial = 0; certified < kInstances && trial < 5000; ++trial) {
    const Bundle e = testgen::RandomBundle(rng, p2, testgen::RandomMatroid(rng, 2 + trial % 2, 3 + trial % 4), 2);
    if (!Certify(e).ok) continue;
    ++certified;
    if (Stability(e).stable) CHECK(IsIndecomposable(e));
    // Sums of two bundles are never stable.
    const Bundle s = DirectSum(e, e);
    CHECK_FALSE(Stability(s).stable);
  }
  CHECK(certified == kInstances);
}

TEST_CASE("partial modularity on the projective line allows splitting") {
  std::mt19937 rng(505);
  const Fan p1 = P1();
  int split = 0;
  for (int k = 0; k < kInstances; ++k) {
    const Bundle e = testgen::RandomBundle(rng, p1, testgen::RandomMatroid(rng, 2 + k % 2, 3 + k % 3), 2);
    if (!IsPartiallyModular(e)) continue;
    // A pair basis certifies compatibility on both cones at once.
    const Set b = PairBasis(e, 0, 1);
    CHECK(Certify(e).ok);
    for (int i = 0; i < 2; ++i) {
      for (long j = e.filtrations()[i].lo; j <= e.filtrations()[i].hi() + 1; ++j) {
        CHECK(e.matroid().Closure(b & e.Step(i, j)) == e.Step(i, j));
      }
    }
    ++split;
  }
  CHECK(split > 0);
}

TEST_CASE("h0 agrees with the oracle on random certified bundles") {
  std::mt19937 rng(606);
  const Fan p2 = ProjectiveSpaceFan(2);
  for (int k = 0; k < 20; ++k) {
    const Bundle e = testgen::RandomBundle(rng, p2, testgen::RandomMatroid(rng, 2, 4), 2);
    const oracle::Oracle o = oracle::Oracle::FromJson(BundleToJson(e));
    CHECK(GlobalSections(e).total == o.H0(nullptr));
  }
}
