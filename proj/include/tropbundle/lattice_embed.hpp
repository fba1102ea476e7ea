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

#ifndef TROPBUNDLE_LATTICE_EMBED_HPP_
#define TROPBUNDLE_LATTICE_EMBED_HPP_

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "tropbundle/linalg.hpp"
#include "tropbundle/matroid.hpp"

namespace tropbundle {

// A finite poset with a rank function, expected to be a lattice.
class RankedLattice {
 public:
  RankedLattice() = default;
  // `relations` lists pairs (a, b) with a <= b; the reflexive transitive
  // closure is taken.
  RankedLattice(std::vector<std::string> elements,
                const std::vector<std::pair<int, int>>& relations,
                std::vector<int> rank);

  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::vector<int>& rank() const { return rank_; }
  bool Leq(int a, int b) const { return leq_[a][b]; }
  int IndexOf(const std::string& label) const;
  // -1 when no unique least upper (greatest lower) bound exists.
  int Join(int a, int b) const;
  int Meet(int a, int b) const;
  int Bottom() const;
  int Top() const;
  // Elements covered by x.
  std::vector<int> Lower(int x) const;
  bool IsJoinIrreducible(int x) const { return Lower(x).size() == 1; }

 private:
  std::vector<std::string> elements_;
  std::vector<std::vector<bool>> leq_;
  std::vector<int> rank_;
};

struct LatticeReport {
  bool ok = true;
  std::vector<std::string> violations;
};

LatticeReport ValidateRankedLattice(const RankedLattice& lattice);

// Brute-force check of the matroid rank axioms over all subsets.
LatticeReport CheckRankAxioms(int m, const std::function<int(Set)>& rank);

struct LatticeEmbedding {
  RankedLattice source;
  Matroid target;
  std::vector<Set> phi;  // Indexed by lattice element.
};

LatticeEmbedding DilworthMinimalMatroid(const RankedLattice& lattice);
LatticeReport CheckEmbedding(const LatticeEmbedding& emb);

// One filtration step of a realized bundle: E^ray(j) spanned by generators.
struct RealizedStep {
  int ray = 0;
  long j = 0;
  QMatrix generators;
};

struct BundleLattices {
  RankedLattice lprime;
  RankedLattice l;
  std::vector<Subspace> lprime_spaces;
  std::vector<Subspace> l_spaces;
};

// Intersections of filtration subspaces, then all their sums.
BundleLattices ComputeBundleLattices(int ambient,
                                     const std::vector<RealizedStep>& steps);

// dim of the sum of the chosen subspaces.
int PolymatroidRank(const std::vector<Subspace>& spaces, Set chosen);
LatticeReport CheckPolymatroidAxioms(const std::vector<Subspace>& spaces);

}  // namespace tropbundle

#endif  // TROPBUNDLE_LATTICE_EMBED_HPP_
