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

#include "tropbundle/lattice_embed.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tropbundle {

RankedLattice::RankedLattice(std::vector<std::string> elements,
                             const std::vector<std::pair<int, int>>& relations,
                             std::vector<int> rank)
    : elements_(std::move(elements)), rank_(std::move(rank)) {
  const int n = size();
  if (static_cast<int>(rank_.size()) != n) {
    Fail("DimensionMismatch", "rank list length differs from element count",
         ErrorKind::kInvalidInput);
  }
  leq_.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) leq_[i][i] = true;
  for (auto [a, b] : relations) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      Fail("UnknownLabel", "relation refers to a missing element", ErrorKind::kInvalidInput);
    }
    leq_[a][b] = true;
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (!leq_[i][k]) continue;
      for (int j = 0; j < n; ++j) {
        if (leq_[k][j]) leq_[i][j] = true;
      }
    }
  }
}

int RankedLattice::IndexOf(const std::string& label) const {
  for (int i = 0; i < size(); ++i) {
    if (elements_[i] == label) return i;
  }
  Fail("UnknownLabel", "'" + label + "' is not a lattice element", ErrorKind::kInvalidInput);
}

int RankedLattice::Join(int a, int b) const {
  std::vector<int> ub;
  for (int x = 0; x < size(); ++x) {
    if (leq_[a][x] && leq_[b][x]) ub.push_back(x);
  }
  for (int x : ub) {
    bool least = true;
    for (int y : ub) least = least && leq_[x][y];
    if (least) return x;
  }
  return -1;
}

int RankedLattice::Meet(int a, int b) const {
  std::vector<int> lb;
  for (int x = 0; x < size(); ++x) {
    if (leq_[x][a] && leq_[x][b]) lb.push_back(x);
  }
  for (int x : lb) {
    bool greatest = true;
    for (int y : lb) greatest = greatest && leq_[y][x];
    if (greatest) return x;
  }
  return -1;
}

int RankedLattice::Bottom() const {
  for (int x = 0; x < size(); ++x) {
    bool all = true;
    for (int y = 0; y < size(); ++y) all = all && leq_[x][y];
    if (all) return x;
  }
  return -1;
}

int RankedLattice::Top() const {
  for (int x = 0; x < size(); ++x) {
    bool all = true;
    for (int y = 0; y < size(); ++y) all = all && leq_[y][x];
    if (all) return x;
  }
  return -1;
}

std::vector<int> RankedLattice::Lower(int x) const {
  std::vector<int> out;
  for (int y = 0; y < size(); ++y) {
    if (y == x || !leq_[y][x]) continue;
    bool cover = true;
    for (int z = 0; z < size() && cover; ++z) {
      if (z != x && z != y && leq_[y][z] && leq_[z][x]) cover = false;
    }
    if (cover) out.push_back(y);
  }
  return out;
}

LatticeReport ValidateRankedLattice(const RankedLattice& lat) {
  LatticeReport rep;
  auto bad = [&](const std::string& why) {
    rep.ok = false;
    rep.violations.push_back(why);
  };
  const int n = lat.size();
  const auto& el = lat.elements();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b && lat.Leq(a, b) && lat.Leq(b, a)) {
        bad("antisymmetry: " + el[a] + " and " + el[b]);
      }
    }
  }
  const int bottom = lat.Bottom();
  if (bottom < 0) bad("no bottom element");
  if (lat.Top() < 0) bad("no top element");
  if (bottom >= 0 && lat.rank()[bottom] != 0) bad("normalization: r(bottom) != 0");
  for (int a = 0; a < n; ++a) {
    if (lat.rank()[a] < 0) bad("negative rank at " + el[a]);
    for (int b = 0; b < n; ++b) {
      if (a != b && lat.Leq(a, b) && lat.rank()[a] >= lat.rank()[b]) {
        bad("increasing: " + el[a] + " < " + el[b]);
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      int j = lat.Join(a, b);
      int m = lat.Meet(a, b);
      if (j < 0) bad("no join of " + el[a] + " and " + el[b]);
      if (m < 0) bad("no meet of " + el[a] + " and " + el[b]);
      if (j >= 0 && m >= 0 &&
          lat.rank()[j] + lat.rank()[m] > lat.rank()[a] + lat.rank()[b]) {
        bad("semimodularity: " + el[a] + ", " + el[b]);
      }
    }
  }
  return rep;
}

LatticeReport CheckRankAxioms(int m, const std::function<int(Set)>& rank) {
  LatticeReport rep;
  const Set full = FullSet(m);
  std::vector<int> r(size_t{1} << m);
  for (Set s = 0;; ++s) {
    r[s] = rank(s);
    if (s == full) break;
  }
  if (r[0] != 0) {
    rep.ok = false;
    rep.violations.push_back("rank of empty set is nonzero");
  }
  for (Set s = 0;; ++s) {
    if (r[s] < 0 || r[s] > Card(s)) {
      rep.ok = false;
      rep.violations.push_back("bound violated at subset " + std::to_string(s));
    }
    for (int e = 0; e < m; ++e) {
      if (Contains(s, e)) continue;
      Set se = s | Bit(e);
      if (r[se] < r[s] || r[se] > r[s] + 1) {
        rep.ok = false;
        rep.violations.push_back("unit increase violated at subset " + std::to_string(s));
      }
      for (int f = e + 1; f < m; ++f) {
        if (Contains(s, f)) continue;
        Set sf = s | Bit(f);
        if (r[se] + r[sf] < r[se | sf] + r[s]) {
          rep.ok = false;
          rep.violations.push_back("submodularity violated at subset " + std::to_string(s));
        }
      }
    }
    if (!rep.ok || s == full) break;
  }
  return rep;
}

LatticeEmbedding DilworthMinimalMatroid(const RankedLattice& lat) {
  LatticeReport valid = ValidateRankedLattice(lat);
  if (!valid.ok) Fail("AxiomFailure", valid.violations.front(), ErrorKind::kInvalidInput);
  const int n = lat.size();
  const auto& r = lat.rank();
  // Fresh elements for each join-irreducible j.
  std::vector<std::string> labels;
  std::vector<int> owner;
  for (int j = 0; j < n; ++j) {
    if (!lat.IsJoinIrreducible(j)) continue;
    int s = lat.Bottom();
    for (int i = 0; i < n; ++i) {
      if (i != j && lat.IsJoinIrreducible(i) && lat.Leq(i, j)) s = lat.Join(s, i);
    }
    const int fresh = r[j] - r[s];
    for (int k = 1; k <= fresh; ++k) {
      labels.push_back(fresh == 1 ? lat.elements()[j]
                                  : lat.elements()[j] + "." + std::to_string(k));
      owner.push_back(j);
    }
  }
  const int m = static_cast<int>(labels.size());
  if (m > kMaxGround) Fail("GroundTooLarge", "embedding ground set too large", ErrorKind::kLimit);
  std::vector<Set> phi(n, 0);
  for (int x = 0; x < n; ++x) {
    for (int e = 0; e < m; ++e) {
      if (lat.Leq(owner[e], x)) phi[x] |= Bit(e);
    }
  }
  auto rank = [&](Set s) {
    int best = Card(s);
    for (int x = 0; x < n; ++x) best = std::min(best, r[x] + Card(s & ~phi[x]));
    return best;
  };
  LatticeReport axioms = CheckRankAxioms(m, rank);
  if (!axioms.ok) Fail("AxiomFailure", axioms.violations.front(), ErrorKind::kInvalidInput);
  LatticeEmbedding emb{lat, Matroid::FromRankFunction(labels, rank), phi};
  LatticeReport inv = CheckEmbedding(emb);
  if (!inv.ok) Fail("AxiomFailure", inv.violations.front(), ErrorKind::kInvalidInput);
  return emb;
}

LatticeReport CheckEmbedding(const LatticeEmbedding& emb) {
  LatticeReport rep;
  auto bad = [&](const std::string& why) {
    rep.ok = false;
    rep.violations.push_back(why);
  };
  const auto& lat = emb.source;
  const auto& m = emb.target;
  const int n = lat.size();
  const auto& el = lat.elements();
  for (int x = 0; x < n; ++x) {
    if (!m.IsFlat(emb.phi[x])) bad("phi(" + el[x] + ") is not a flat");
    if (m.Rank(emb.phi[x]) != lat.rank()[x]) bad("rank mismatch at " + el[x]);
    for (int y = 0; y < n; ++y) {
      if (x != y && emb.phi[x] == emb.phi[y]) bad("phi not injective");
      if (m.Closure(emb.phi[x] | emb.phi[y]) != emb.phi[lat.Join(x, y)]) {
        bad("join not preserved at " + el[x] + ", " + el[y]);
      }
      if ((emb.phi[x] & emb.phi[y]) != emb.phi[lat.Meet(x, y)]) {
        bad("meet not preserved at " + el[x] + ", " + el[y]);
      }
    }
  }
  return rep;
}

namespace {

std::string SpaceLabel(const Subspace& s) {
  if (s.dim() == 0) return "0";
  std::string out = "span(";
  for (int i = 0; i < s.dim(); ++i) {
    if (i) out += ";";
    for (int k = 0; k < s.ambient; ++k) {
      if (k) out += ",";
      out += RationalToString(s.basis[i][k]);
    }
  }
  return out + ")";
}

RankedLattice LatticeOf(std::vector<Subspace>& spaces) {
  std::sort(spaces.begin(), spaces.end());
  spaces.erase(std::unique(spaces.begin(), spaces.end()), spaces.end());
  std::vector<std::string> labels;
  std::vector<int> rank;
  std::vector<std::pair<int, int>> rel;
  for (const auto& s : spaces) {
    labels.push_back(SpaceLabel(s));
    rank.push_back(s.dim());
  }
  for (size_t a = 0; a < spaces.size(); ++a) {
    for (size_t b = 0; b < spaces.size(); ++b) {
      if (spaces[b].Contains(spaces[a])) {
        rel.emplace_back(static_cast<int>(a), static_cast<int>(b));
      }
    }
  }
  return RankedLattice(std::move(labels), rel, std::move(rank));
}

}  // namespace

BundleLattices ComputeBundleLattices(int ambient,
                                     const std::vector<RealizedStep>& steps) {
  QMatrix identity(ambient, std::vector<Rational>(ambient));
  for (int i = 0; i < ambient; ++i) identity[i][i] = 1;
  const Subspace whole = Subspace::Span(ambient, identity);
  const Subspace zero = Subspace::Span(ambient, {});
  std::map<int, std::vector<Subspace>> chains;
  for (const auto& st : steps) {
    chains[st.ray].push_back(Subspace::Span(ambient, st.generators));
  }
  std::set<Subspace> inter{whole, zero};
  for (auto& [ray, chain] : chains) {
    std::set<Subspace> next;
    for (const auto& acc : inter) {
      next.insert(acc);
      for (const auto& v : chain) next.insert(SubspaceIntersection(acc, v));
    }
    inter = std::move(next);
  }
  BundleLattices out;
  out.lprime_spaces.assign(inter.begin(), inter.end());
  std::set<Subspace> sums(inter.begin(), inter.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Subspace> cur(sums.begin(), sums.end());
    for (size_t a = 0; a < cur.size(); ++a) {
      for (size_t b = a + 1; b < cur.size(); ++b) {
        if (sums.insert(SubspaceSum(cur[a], cur[b])).second) grew = true;
      }
    }
  }
  out.l_spaces.assign(sums.begin(), sums.end());
  out.lprime = LatticeOf(out.lprime_spaces);
  out.l = LatticeOf(out.l_spaces);
  return out;
}

int PolymatroidRank(const std::vector<Subspace>& spaces, Set chosen) {
  if (spaces.empty()) return 0;
  Subspace acc = Subspace::Span(spaces.front().ambient, {});
  for (int i : Members(chosen)) acc = SubspaceSum(acc, spaces[i]);
  return acc.dim();
}

LatticeReport CheckPolymatroidAxioms(const std::vector<Subspace>& spaces) {
  LatticeReport rep;
  const int k = static_cast<int>(spaces.size());
  std::vector<int> r(size_t{1} << k);
  for (Set s = 0;; ++s) {
    r[s] = PolymatroidRank(spaces, s);
    if (s == FullSet(k)) break;
  }
  if (r[0] != 0) {
    rep.ok = false;
    rep.violations.push_back("normalization");
  }
  for (Set a = 0;; ++a) {
    for (Set b = 0;; ++b) {
      if (IsSubset(a, b) && r[a] > r[b]) {
        rep.ok = false;
        rep.violations.push_back("monotonicity");
      }
      if (r[a | b] + r[a & b] > r[a] + r[b]) {
        rep.ok = false;
        rep.violations.push_back("submodularity");
      }
      if (b == FullSet(k) || !rep.ok) break;
    }
    if (a == FullSet(k) || !rep.ok) break;
  }
  return rep;
}

}  // namespace tropbundle
