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

#ifndef TROPBUNDLE_MATROID_HPP_
#define TROPBUNDLE_MATROID_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tropbundle/common.hpp"

namespace tropbundle {

// A matroid stored by its basis family, with a rank table over all subsets.
class Matroid {
 public:
  Matroid() = default;

  // Verifies equicardinality and basis exchange.
  static Matroid FromBases(std::vector<std::string> ground,
                           std::vector<Set> bases);
  // Columns are the ground elements, each a vector of common length.
  static Matroid FromColumns(std::vector<std::string> ground,
                             const std::vector<std::vector<Rational>>& columns);
  // Bases are the maximal-size subsets with rank equal to their size.
  static Matroid FromRankFunction(std::vector<std::string> ground,
                                  const std::function<int(Set)>& rank);
  // U(r, m) with labels "1".."m" unless given.
  static Matroid Uniform(int r, int m, std::vector<std::string> ground = {});

  const std::vector<std::string>& ground() const { return ground_; }
  int size() const { return static_cast<int>(ground_.size()); }
  int rank() const { return rank_; }
  Set full() const { return FullSet(size()); }
  // Lexicographically sorted.
  const std::vector<Set>& bases() const { return bases_; }

  int Rank(Set s) const { return rank_table_[s]; }
  bool IsIndependent(Set s) const { return Rank(s) == Card(s); }
  bool IsBasis(Set s) const { return Card(s) == rank_ && IsIndependent(s); }
  Set Closure(Set s) const;
  bool IsFlat(Set s) const { return Closure(s) == s; }
  // Minimal dependent sets, lexicographically sorted.
  std::vector<Set> Circuits() const;
  bool IsSimple() const;
  // Lexicographically least maximal independent subset of s.
  Set GreedyBasis(Set s) const;

  int IndexOf(const std::string& label) const;
  Set SetOf(const std::vector<std::string>& labels) const;
  std::vector<std::string> LabelsOf(Set s) const;
  std::string Format(Set s) const;

  bool operator==(const Matroid& other) const {
    return ground_ == other.ground_ && bases_ == other.bases_;
  }

 private:
  void BuildRankTable();

  std::vector<std::string> ground_;
  int rank_ = 0;
  std::vector<Set> bases_;
  std::vector<std::uint8_t> rank_table_;
};

// The lattice of flats, sorted by rank then lexicographically.
class FlatLattice {
 public:
  explicit FlatLattice(const Matroid& m);

  const std::vector<Set>& flats() const { return flats_; }
  int size() const { return static_cast<int>(flats_.size()); }
  int IndexOf(Set flat) const;
  bool Has(Set s) const { return index_.count(s) != 0; }
  Set Join(Set a, Set b) const { return m_.Closure(a | b); }
  Set Meet(Set a, Set b) const { return a & b; }
  int Rank(Set f) const { return m_.Rank(f); }
  const Matroid& matroid() const { return m_; }
  // Index pairs (lower, upper) of the covering relation.
  std::vector<std::pair<int, int>> Covers() const;
  std::vector<Set> OfRank(int r) const;

 private:
  Matroid m_;
  std::vector<Set> flats_;
  std::unordered_map<Set, int> index_;
};

// Upper bound on enumerated flats; TROPBUNDLE_FLAT_CAP overrides.
long FlatCap();

bool IsModularPair(const Matroid& m, Set f, Set g);
// First flat G (in lattice order) with (F, G) not a modular pair.
std::optional<Set> ModularWitness(const Matroid& m, const FlatLattice& lat,
                                  Set f);
inline bool IsModularFlat(const Matroid& m, const FlatLattice& lat, Set f) {
  return !ModularWitness(m, lat, f).has_value();
}

// Restriction to ground minus `del`, then contraction of `con`.
Matroid Minor(const Matroid& m, Set del, Set con);
Matroid DirectSum(const Matroid& a, const Matroid& b);
std::vector<Set> ConnectedComponents(const Matroid& m);

// W with W v F = H, W ^ F = G and rk W = rk H - rk F + rk G, lex-least.
Set RelativeComplement(const Matroid& m, const FlatLattice& lat, Set f, Set g,
                       Set h);

}  // namespace tropbundle

#endif  // TROPBUNDLE_MATROID_HPP_
