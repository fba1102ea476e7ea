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
#include "tropbundle/json_io.hpp"
#include "tropbundle/lattice_embed.hpp"
#include "unit/oracles.hpp"

using namespace tropbundle;

TEST_CASE("a ranked chain embeds into a Boolean matroid") {
  // 0 < a < b with ranks 0, 1, 2.
  const RankedLattice l({"0", "a", "b"}, {{0, 1}, {1, 2}}, {0, 1, 2});
  CHECK(ValidateRankedLattice(l).ok);
  CHECK(l.Bottom() == 0);
  CHECK(l.Top() == 2);
  const LatticeEmbedding emb = DilworthMinimalMatroid(l);
  CHECK(emb.target.size() == 2);
  CHECK(emb.target.rank() == 2);
  CHECK(CheckEmbedding(emb).ok);
}

TEST_CASE("non-lattices and bad ranks are reported") {
  // Two maximal elements: no top.
  const RankedLattice two({"0", "a", "b"}, {{0, 1}, {0, 2}}, {0, 1, 1});
  CHECK_FALSE(ValidateRankedLattice(two).ok);
  const RankedLattice bad_rank({"0", "a", "1"}, {{0, 1}, {1, 2}}, {0, 2, 1});
  CHECK_FALSE(ValidateRankedLattice(bad_rank).ok);
}

TEST_CASE("rank axiom checker") {
  CHECK(CheckRankAxioms(3, [](Set s) { return std::min(Card(s), 2); }).ok);
  CHECK_FALSE(CheckRankAxioms(3, [](Set s) { return Card(s) == 3 ? 1 : Card(s); }).ok);
}

TEST_CASE("realized bundle lattices and the polymatroid") {
  const Realization r = ParseRealization(LoadJsonFile(oracle::FixturePath("realization_p2")));
  const BundleLattices bl = ComputeBundleLattices(r.ambient, r.steps);
  CHECK(bl.lprime.size() == 5);
  CHECK(bl.l.size() == 6);
  CHECK(ValidateRankedLattice(bl.l).ok);
  // Hyperplane spaces a1 = span(e1, e2), a2 = span(e1 + e3), a3 = span(e3).
  std::vector<Subspace> spaces = {Subspace::Span(3, {{1, 0, 0}, {0, 1, 0}}), Subspace::Span(3, {{1, 0, 1}}),
                                  Subspace::Span(3, {{0, 0, 1}})};
  CHECK(PolymatroidRank(spaces, 0b111) == 3);
  CHECK(PolymatroidRank(spaces, 0b011) == 3);
  CHECK(PolymatroidRank(spaces, 0b101) == 3);
  CHECK(PolymatroidRank(spaces, 0b001) == 2);
  CHECK(PolymatroidRank(spaces, 0b110) == 2);
  CHECK(PolymatroidRank(spaces, 0b010) == 1);
  CHECK(CheckPolymatroidAxioms(spaces).ok);
}

TEST_CASE("subspace arithmetic") {
  const Subspace a = Subspace::Span(3, {{1, 0, 0}, {0, 1, 0}});
  const Subspace b = Subspace::Span(3, {{1, 1, 1}, {0, 0, 1}});
  CHECK(SubspaceSum(a, b).dim() == 3);
  const Subspace i = SubspaceIntersection(a, b);
  CHECK(i.dim() == 1);
  CHECK(i == Subspace::Span(3, {{2, 2, 0}}));
  CHECK(a.Contains(i));
}
