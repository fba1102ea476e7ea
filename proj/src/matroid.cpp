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

#include "tropbundle/matroid.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <unordered_set>

#include "tropbundle/linalg.hpp"

namespace tropbundle {

namespace {

void SortLex(std::vector<Set>& sets) {
  std::sort(sets.begin(), sets.end(), LexLess);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

void CheckGround(const std::vector<std::string>& ground) {
  if (static_cast<int>(ground.size()) > kMaxGround) {
    Fail("GroundTooLarge", "at most " + std::to_string(kMaxGround) + " elements",
         ErrorKind::kLimit);
  }
  std::set<std::string> seen(ground.begin(), ground.end());
  if (seen.size() != ground.size()) {
    Fail("DuplicateLabel", "ground labels must be distinct", ErrorKind::kInvalidInput);
  }
}

std::vector<std::string> DefaultLabels(int m) {
  std::vector<std::string> out;
  for (int i = 1; i <= m; ++i) out.push_back(std::to_string(i));
  return out;
}

}  // namespace

Matroid Matroid::FromBases(std::vector<std::string> ground,
                           std::vector<Set> bases) {
  CheckGround(ground);
  Matroid m;
  m.ground_ = std::move(ground);
  if (bases.empty()) Fail("EmptyInput", "basis family is empty", ErrorKind::kInvalidInput);
  SortLex(bases);
  const Set full = m.full();
  const int r = Card(bases.front());
  for (Set b : bases) {
    if (!IsSubset(b, full)) Fail("UnknownLabel", "basis outside ground set", ErrorKind::kInvalidInput);
    if (Card(b) != r) {
      Fail("CardinalityMismatch", "bases of sizes " + std::to_string(r) + " and " +
                                      std::to_string(Card(b)),
           ErrorKind::kInvalidInput);
    }
  }
  std::unordered_set<Set> lookup(bases.begin(), bases.end());
  for (Set b1 : bases) {
    for (Set b2 : bases) {
      for (int i : Members(b1 & ~b2)) {
        bool ok = false;
        for (int j : Members(b2 & ~b1)) {
          if (lookup.count((b1 & ~Bit(i)) | Bit(j))) {
            ok = true;
            break;
          }
        }
        if (!ok) {
          Fail("ExchangeViolation",
               "B1=" + m.Format(b1) + " B2=" + m.Format(b2) + " i=" + m.ground_[i],
               ErrorKind::kInvalidInput);
        }
      }
    }
  }
  m.rank_ = r;
  m.bases_ = std::move(bases);
  m.BuildRankTable();
  return m;
}

void Matroid::BuildRankTable() {
  const int m = size();
  const size_t n = size_t{1} << m;
  std::vector<std::uint8_t> indep(n, 0);
  for (Set b : bases_) {
    // Enumerate all subsets of b.
    Set s = b;
    while (true) {
      indep[s] = 1;
      if (s == 0) break;
      s = (s - 1) & b;
    }
  }
  rank_table_.assign(n, 0);
  for (size_t s = 1; s < n; ++s) {
    if (indep[s]) {
      rank_table_[s] = static_cast<std::uint8_t>(Card(static_cast<Set>(s)));
    } else {
      std::uint8_t best = 0;
      for (int i : Members(static_cast<Set>(s))) {
        best = std::max(best, rank_table_[s & ~Bit(i)]);
      }
      rank_table_[s] = best;
    }
  }
}

Matroid Matroid::FromColumns(std::vector<std::string> ground,
                             const std::vector<std::vector<Rational>>& columns) {
  if (columns.empty()) Fail("EmptyInput", "no columns", ErrorKind::kInvalidInput);
  if (ground.empty()) ground = DefaultLabels(static_cast<int>(columns.size()));
  if (ground.size() != columns.size()) {
    Fail("DimensionMismatch", "label count differs from column count", ErrorKind::kInvalidInput);
  }
  const size_t dim = columns.front().size();
  for (const auto& c : columns) {
    if (c.size() != dim) Fail("DimensionMismatch", "columns of differing length", ErrorKind::kInvalidInput);
  }
  const int m = static_cast<int>(columns.size());
  CheckGround(ground);
  auto rank_of = [&](Set s) {
    if (s == 0) return 0;
    QMatrix rows;
    for (int i : Members(s)) rows.push_back(columns[i]);
    return MatrixRank(rows);
  };
  const int r = rank_of(FullSet(m));
  std::vector<Set> bases;
  for (Set s = 0; s <= FullSet(m); ++s) {
    if (Card(s) == r && rank_of(s) == r) bases.push_back(s);
    if (s == FullSet(m)) break;
  }
  return FromBases(std::move(ground), std::move(bases));
}

Matroid Matroid::FromRankFunction(std::vector<std::string> ground,
                                  const std::function<int(Set)>& rank) {
  const int m = static_cast<int>(ground.size());
  CheckGround(ground);
  const int r = rank(FullSet(m));
  std::vector<Set> bases;
  for (Set s = 0;; ++s) {
    if (Card(s) == r && rank(s) == r) bases.push_back(s);
    if (s == FullSet(m)) break;
  }
  return FromBases(std::move(ground), std::move(bases));
}

Matroid Matroid::Uniform(int r, int m, std::vector<std::string> ground) {
  if (ground.empty()) ground = DefaultLabels(m);
  std::vector<Set> bases;
  for (Set s = 0;; ++s) {
    if (Card(s) == r) bases.push_back(s);
    if (s == FullSet(m)) break;
  }
  return FromBases(std::move(ground), std::move(bases));
}

Set Matroid::Closure(Set s) const {
  const int r = Rank(s);
  Set out = s;
  for (int e = 0; e < size(); ++e) {
    if (!Contains(s, e) && Rank(s | Bit(e)) == r) out |= Bit(e);
  }
  return out;
}

std::vector<Set> Matroid::Circuits() const {
  std::vector<Set> out;
  for (Set s = 1; s <= full() && s != 0; ++s) {
    if (Card(s) > rank_ + 1 || IsIndependent(s)) {
      if (s == full()) break;
      continue;
    }
    bool minimal = true;
    for (int i : Members(s)) {
      if (!IsIndependent(s & ~Bit(i))) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(s);
    if (s == full()) break;
  }
  SortLex(out);
  return out;
}

bool Matroid::IsSimple() const {
  for (Set c : Circuits()) {
    if (Card(c) <= 2) return false;
  }
  return true;
}

Set Matroid::GreedyBasis(Set s) const {
  Set out = 0;
  for (int i : Members(s)) {
    if (IsIndependent(out | Bit(i))) out |= Bit(i);
  }
  return out;
}

int Matroid::IndexOf(const std::string& label) const {
  for (int i = 0; i < size(); ++i) {
    if (ground_[i] == label) return i;
  }
  Fail("UnknownLabel", "'" + label + "' is not in the ground set", ErrorKind::kInvalidInput);
}

Set Matroid::SetOf(const std::vector<std::string>& labels) const {
  Set s = 0;
  for (const auto& l : labels) s |= Bit(IndexOf(l));
  return s;
}

std::vector<std::string> Matroid::LabelsOf(Set s) const {
  std::vector<std::string> out;
  for (int i : Members(s)) out.push_back(ground_[i]);
  return out;
}

std::string Matroid::Format(Set s) const {
  std::string out = "{";
  bool first = true;
  for (int i : Members(s)) {
    if (!first) out += ",";
    out += i < size() ? ground_[i] : "#" + std::to_string(i);
    first = false;
  }
  return out + "}";
}

long FlatCap() {
  const char* env = std::getenv("TROPBUNDLE_FLAT_CAP");
  if (env != nullptr) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return 100000;
}

FlatLattice::FlatLattice(const Matroid& m) : m_(m) {
  const long cap = FlatCap();
  for (Set s = 0;; ++s) {
    if (m.IsFlat(s)) {
      flats_.push_back(s);
      if (static_cast<long>(flats_.size()) > cap) {
        Fail("LatticeTooLarge", "flat count exceeds cap " + std::to_string(cap),
             ErrorKind::kLimit);
      }
    }
    if (s == m.full()) break;
  }
  std::sort(flats_.begin(), flats_.end(), [&](Set a, Set b) {
    int ra = m.Rank(a);
    int rb = m.Rank(b);
    if (ra != rb) return ra < rb;
    return LexLess(a, b);
  });
  for (int i = 0; i < size(); ++i) index_[flats_[i]] = i;
}

int FlatLattice::IndexOf(Set flat) const {
  auto it = index_.find(flat);
  if (it == index_.end()) Fail("NotAFlat", m_.Format(flat), ErrorKind::kInvalidInput);
  return it->second;
}

std::vector<std::pair<int, int>> FlatLattice::Covers() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < size(); ++j) {
      if (i != j && IsSubset(flats_[i], flats_[j]) &&
          Rank(flats_[j]) == Rank(flats_[i]) + 1) {
        out.emplace_back(i, j);
      }
    }
  }
  return out;
}

std::vector<Set> FlatLattice::OfRank(int r) const {
  std::vector<Set> out;
  for (Set f : flats_) {
    if (Rank(f) == r) out.push_back(f);
  }
  return out;
}

bool IsModularPair(const Matroid& m, Set f, Set g) {
  return m.Rank(m.Closure(f | g)) + m.Rank(f & g) == m.Rank(f) + m.Rank(g);
}

std::optional<Set> ModularWitness(const Matroid& m, const FlatLattice& lat,
                                  Set f) {
  if (!m.IsFlat(f)) Fail("NotAFlat", m.Format(f), ErrorKind::kInvalidInput);
  for (Set g : lat.flats()) {
    if (!IsModularPair(m, f, g)) return g;
  }
  return std::nullopt;
}

Matroid Minor(const Matroid& m, Set del, Set con) {
  if ((del & con) != 0) Fail("OverlapError", "delete and contract sets intersect", ErrorKind::kInvalidInput);
  const Set keep = m.full() & ~del & ~con;
  std::vector<std::string> labels = m.LabelsOf(keep);
  const int rc = m.Rank(con);
  return Matroid::FromRankFunction(std::move(labels), [&](Set s) {
    return m.Rank(Expand(s, keep) | con) - rc;
  });
}

Matroid DirectSum(const Matroid& a, const Matroid& b) {
  std::vector<std::string> labels = a.ground();
  std::set<std::string> seen(labels.begin(), labels.end());
  bool clash = false;
  for (const auto& l : b.ground()) clash = clash || seen.count(l);
  if (clash) {
    for (auto& l : labels) l = "a:" + l;
  }
  for (const auto& l : b.ground()) labels.push_back(clash ? "b:" + l : l);
  std::vector<Set> bases;
  for (Set x : a.bases()) {
    for (Set y : b.bases()) bases.push_back(x | (y << a.size()));
  }
  return Matroid::FromBases(std::move(labels), std::move(bases));
}

std::vector<Set> ConnectedComponents(const Matroid& m) {
  std::vector<int> parent(m.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (Set c : m.Circuits()) {
    std::vector<int> mem = Members(c);
    for (size_t k = 1; k < mem.size(); ++k) parent[find(mem[k])] = find(mem[0]);
  }
  std::vector<Set> comps;
  for (int i = 0; i < m.size(); ++i) {
    Set c = 0;
    for (int j = 0; j < m.size(); ++j) {
      if (find(j) == find(i)) c |= Bit(j);
    }
    if (std::find(comps.begin(), comps.end(), c) == comps.end()) comps.push_back(c);
  }
  return comps;
}

Set RelativeComplement(const Matroid& m, const FlatLattice& lat, Set f, Set g,
                       Set h) {
  if (!IsSubset(g, f) || !IsSubset(f, h)) {
    Fail("InvalidInterval", "require G <= F <= H", ErrorKind::kInvalidInput);
  }
  const int want = m.Rank(h) - m.Rank(f) + m.Rank(g);
  std::optional<Set> best;
  for (Set w : lat.flats()) {
    if (!IsSubset(g, w) || !IsSubset(w, h)) continue;
    if (m.Rank(w) != want || (w & f) != g || m.Closure(w | f) != h) continue;
    if (!best || LexLess(w, *best)) best = w;
  }
  if (!best) Fail("NoComplement", "no relative complement exists", ErrorKind::kInternal);
  return *best;
}

}  // namespace tropbundle
