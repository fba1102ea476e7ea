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

#include <algorithm>

#include "doctest.h"
#include "tropbundle/matroid.hpp"
#include "unit/oracles.hpp"
#include "unit/random_bundles.hpp"

using namespace tropbundle;

TEST_CASE("uniform matroid basics") {
  const Matroid u = Matroid::Uniform(2, 4);
  CHECK(u.rank() == 2);
  CHECK(u.bases().size() == 6);
  CHECK(u.IsSimple());
  CHECK(u.Closure(0b0011) == 0b1111);
  CHECK(u.Closure(0b0001) == 0b0001);
  CHECK(u.Circuits().size() == 4);
}

TEST_CASE("set helpers") {
  CHECK(Members(0b1010) == std::vector<int>{1, 3});
  CHECK(FromMembers({0, 2}) == 0b101);
  CHECK(LexLess(0b011, 0b101));
  CHECK(LexLess(0b001, 0b011));
  CHECK_FALSE(LexLess(0b101, 0b011));
  CHECK(Compress(0b1010, 0b1110) == 0b101);
  CHECK(Expand(0b101, 0b1110) == 0b1010);
}

TEST_CASE("rank, closure and circuits agree with the brute-force oracle") {
  for (const auto& name : testgen::FixtureBundles()) {
    const Matroid m = testgen::LoadBundle(name).matroid();
    const auto o = oracle::Oracle::FromFixture(name);
    INFO(name);
    for (Set s = 0; s <= m.full(); ++s) {
      REQUIRE(m.Rank(s) == o.Rank(s));
      REQUIRE(m.Closure(s) == o.Closure(s));
    }
    auto got = m.Circuits();
    auto want = o.Circuits();
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
    std::vector<Set> flats = FlatLattice(m).flats();
    std::sort(flats.begin(), flats.end());
    CHECK(flats == o.Flats());
  }
}

TEST_CASE("column matroid matches the oracle elimination") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<int> entry(-2, 2);
    const int m = 5, r = 3;
    std::vector<std::vector<Rational>> cols(m, std::vector<Rational>(r));
    std::vector<std::vector<mpq_class>> raw(m, std::vector<mpq_class>(r));
    for (int c = 0; c < m; ++c) {
      for (int k = 0; k < r; ++k) raw[c][k] = cols[c][k] = entry(rng);
    }
    std::vector<std::string> g = {"a", "b", "c", "d", "e"};
    const Matroid mat = Matroid::FromColumns(g, cols);
    for (Set s = 0; s < 32; ++s) REQUIRE(mat.Rank(s) == oracle::ColumnRank(raw, s));
  }
}

TEST_CASE("invalid basis families are rejected") {
  std::vector<std::string> g = {"1", "2", "3", "4"};
  CHECK_THROWS_AS(Matroid::FromBases(g, {0b0011, 0b1100}), Error);
  CHECK_THROWS_AS(Matroid::FromBases(g, {0b0011, 0b0111}), Error);
}

TEST_CASE("modular flats in the Vamos matroid") {
  const Matroid m = testgen::LoadBundle("vamos").matroid();
  const FlatLattice lat(m);
  CHECK_FALSE(IsModularFlat(m, lat, m.SetOf({"1", "2", "3", "4"})));
  CHECK(IsModularFlat(m, lat, 0));
  CHECK(IsModularFlat(m, lat, m.full()));
  CHECK(IsModularPair(m, m.SetOf({"1", "2"}), m.SetOf({"3", "4"})) == false);
}

TEST_CASE("minors, sums and components") {
  const Matroid u = Matroid::Uniform(2, 3);
  const Matroid d = DirectSum(u, Matroid::Uniform(1, 1, {"x"}));
  CHECK(d.rank() == 3);
  const auto comps = ConnectedComponents(d);
  CHECK(comps.size() == 2);
  CHECK(comps[0] == 0b0111);
  const Matroid c = Minor(u, 0, 0b001);
  CHECK(c.rank() == 1);
  CHECK(c.size() == 2);
  const Matroid r = Minor(u, 0b001, 0);
  CHECK(r.rank() == 2);
  CHECK(r.bases().size() == 1);
}

TEST_CASE("relative complement in a Boolean lattice") {
  const Matroid b = Matroid::Uniform(3, 3);
  const FlatLattice lat(b);
  const Set w = RelativeComplement(b, lat, 0b001, 0, 0b111);
  CHECK(w == 0b110);
}
