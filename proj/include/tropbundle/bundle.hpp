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

#ifndef TROPBUNDLE_BUNDLE_HPP_
#define TROPBUNDLE_BUNDLE_HPP_

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropbundle/matroid.hpp"
#include "tropbundle/toric_fan.hpp"
#include "tropbundle/valuated_matroid.hpp"

namespace tropbundle {

// A descending Z-indexed chain of flats. steps[k] is E(lo + k); E(j) is the
// whole ground set for j <= lo and empty past the stored steps.
struct Filtration {
  long lo = 0;
  std::vector<Set> steps;

  long hi() const { return lo + static_cast<long>(steps.size()) - 1; }
  Set At(long j) const;
  bool operator==(const Filtration& other) const = default;

  // Breakpoint form: E(j) = full below the first threshold, the flat of
  // the next threshold at or above j in between, empty above the last.
  static Filtration FromBreakpoints(std::vector<std::pair<long, Set>> points,
                                    Set full, int ray);
  // E(j) = full for j <= a, f(j) for a < j <= b, empty beyond b.
  static Filtration Tabulate(long a, long b, const std::function<Set(long)>& f,
                             Set full);
  Filtration Shifted(long a) const { return Filtration{lo + a, steps}; }
};

class Bundle {
 public:
  Bundle() = default;
  // Raises NotSimple, NotAFlat, LengthMismatch. Quotients by flats may carry
  // parallel elements; allow_nonsimple admits them.
  static Bundle Create(Fan fan, ValuatedMatroid vm, std::vector<Filtration> filtrations,
                       bool allow_nonsimple = false);

  const Fan& fan() const { return fan_; }
  const ValuatedMatroid& vm() const { return vm_; }
  const Matroid& matroid() const { return vm_.underlying(); }
  const std::vector<Filtration>& filtrations() const { return filt_; }
  int rank() const { return vm_.rank(); }
  int size() const { return vm_.size(); }
  int num_rays() const { return fan_.num_rays(); }
  Set full() const { return FullSet(size()); }
  Set Step(int ray, long j) const { return filt_[ray].At(j); }
  // Every distinct E^i(j), including the ground set.
  std::vector<Set> AllSteps() const;

  bool operator==(const Bundle& other) const {
    return fan_ == other.fan_ && vm_ == other.vm_ && filt_ == other.filt_;
  }

 private:
  Fan fan_;
  ValuatedMatroid vm_;
  std::vector<Filtration> filt_;
};

// d[w][i] = max{j : w in E^i(j)}.
std::vector<IntVector> DegreeVectors(const Bundle& e);
std::vector<Filtration> FiltrationFromDegrees(const Matroid& m,
                                              const std::vector<IntVector>& d,
                                              int num_rays);

struct ConeCertificate {
  std::vector<int> cone;
  Set basis = 0;
  std::vector<std::pair<int, IntVector>> weights;  // (element, u_w)
};

enum class CertifyFailure { kNone, kNoBasisForCone, kNoIntegerWeights };

struct CertifyResult {
  bool ok = false;
  std::vector<ConeCertificate> cones;
  CertifyFailure failure = CertifyFailure::kNone;
  std::vector<int> failed_cone;
  Set failed_basis = 0;
  std::string message;
};

// Bases B with every E^i(j), rho_i in the cone, the closure of B ^ E^i(j).
std::vector<Set> AdaptedBases(const Bundle& e, const std::vector<int>& cone);
CertifyResult Certify(const Bundle& e);
bool VerifyCertificate(const Bundle& e, const ConeCertificate& c);

struct ModularityViolation {
  int i = 0;
  int j = 0;
  long k = 0;
  long l = 0;
  int lhs = 0;
  int rhs = 0;
};

std::optional<ModularityViolation> PartialModularityViolation(const Bundle& e);
inline bool IsPartiallyModular(const Bundle& e) {
  return !PartialModularityViolation(e).has_value();
}

// A basis adapted to both filtrations; raises NotPartiallyModular.
Set PairBasis(const Bundle& e, int ray_i, int ray_j);

Bundle DirectSum(const Bundle& a, const Bundle& b);
std::vector<Bundle> Decompose(const Bundle& e);
bool IsIndecomposable(const Bundle& e);
Bundle TensorLine(const Bundle& e, const IntVector& a);

struct BundleIsomorphism {
  std::vector<int> bijection;
  IntVector u;
};

// Raises NotIndecomposable.
std::optional<BundleIsomorphism> BundleIsomorphic(const Bundle& a, const Bundle& b);

struct MinimalityResult {
  bool minimal = true;
  std::vector<Set> witness_atoms;
  std::vector<Set> witness_flats;
};

// Raises LatticeTooLarge.
MinimalityResult CheckTropicallyMinimal(const Bundle& e);

struct CoxTerm {
  int element = 0;
  Rational coefficient;
  IntVector exponent;
};

struct CoxRelation {
  TropicalVector circuit;
  std::vector<CoxTerm> terms;
  IntVector degree;
  IntVector degree_class;
  std::vector<std::vector<CoxTerm>> bends;
};

struct CoxPresentation {
  std::vector<IntVector> twists;
  std::vector<IntVector> twist_classes;
  std::vector<CoxRelation> relations;
};

CoxPresentation MakeCoxPresentation(const Bundle& e);
// Monomial text such as "z0^2z1e3", with an optional prefix variable name.
std::string FormatTerm(const Bundle& e, const CoxTerm& t, const std::string& var);

}  // namespace tropbundle

#endif  // TROPBUNDLE_BUNDLE_HPP_
