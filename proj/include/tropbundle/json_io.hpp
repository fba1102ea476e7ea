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

#ifndef TROPBUNDLE_JSON_IO_HPP_
#define TROPBUNDLE_JSON_IO_HPP_

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "tropbundle/bundle.hpp"
#include "tropbundle/lattice_embed.hpp"

namespace tropbundle {

using Json = nlohmann::json;

// Raises ParseError (kind kParse) naming the offending field.
Json ParseJsonText(const std::string& text);
Json LoadJsonFile(const std::string& path);  // Also raises FileNotFound.

// Any of the matroid encodings: bases, rational columns, basis valuation,
// or monomial columns.
ValuatedMatroid ParseMatroid(const Json& j);
Json MatroidToJson(const ValuatedMatroid& vm);

Fan ParseFan(const Json& j);
Json FanToJson(const Fan& fan);

Bundle ParseBundle(const Json& j);
Json BundleToJson(const Bundle& e);

RankedLattice ParseRankedLattice(const Json& j);
Json RankedLatticeToJson(const RankedLattice& l);

struct Realization {
  int ambient = 0;
  std::vector<RealizedStep> steps;
};
Realization ParseRealization(const Json& j);

// "0,inf,1/2" style lists.
TropicalVector ParseTropicalList(const std::string& text);
IntVector ParseIntList(const std::string& text);

Json LabelsJson(const std::vector<std::string>& ground, Set s);
Json TropicalJson(const TropicalVector& v);
Json RationalJson(const Rational& q);

}  // namespace tropbundle

#endif  // TROPBUNDLE_JSON_IO_HPP_
