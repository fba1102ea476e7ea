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

#include "tropbundle/json_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace tropbundle {

namespace {

[[noreturn]] void Bad(const std::string& path, const std::string& what) {
  Fail("ParseError", path + ": " + what, ErrorKind::kParse);
}

const Json& Field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) Bad(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) Bad(path + "." + key, "missing field");
  return *it;
}

const Json& Array(const Json& j, const std::string& path) {
  if (!j.is_array()) Bad(path, "expected an array");
  return j;
}

std::int64_t Int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) Bad(path, "expected an integer");
  return j.get<std::int64_t>();
}

std::string Label(const Json& j, const std::string& path) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
  Bad(path, "expected a label");
}

Rational Rat(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  if (!j.is_string()) Bad(path, "expected a rational string");
  try {
    return RationalFromString(j.get<std::string>());
  } catch (const Error& e) {
    Bad(path, e.what());
  }
}

ExtRational Ext(const Json& j, const std::string& path) {
  if (j.is_string() && j.get<std::string>() == "inf") return ExtRational::Infinity();
  return Rat(j, path);
}

std::string At(const std::string& path, size_t k) { return path + "[" + std::to_string(k) + "]"; }

std::vector<std::string> Labels(const Json& j, const std::string& path) {
  std::vector<std::string> out;
  const Json& a = Array(j, path);
  for (size_t k = 0; k < a.size(); ++k) out.push_back(Label(a[k], At(path, k)));
  return out;
}

Set LabelSet(const std::vector<std::string>& ground, const Json& j, const std::string& path) {
  Set s = 0;
  for (const auto& l : Labels(j, path)) {
    auto it = std::find(ground.begin(), ground.end(), l);
    if (it == ground.end()) Fail("UnknownLabel", path + ": " + l, ErrorKind::kInvalidInput);
    s |= Bit(static_cast<int>(it - ground.begin()));
  }
  return s;
}

IntVector Ints(const Json& j, const std::string& path) {
  IntVector out;
  const Json& a = Array(j, path);
  for (size_t k = 0; k < a.size(); ++k) out.push_back(Int(a[k], At(path, k)));
  return out;
}

std::string Trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

std::vector<std::string> SplitCommas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Trim(item));
  return out;
}

}  // namespace

Json ParseJsonText(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    Fail("ParseError", std::string("malformed JSON at byte ") + std::to_string(e.byte), ErrorKind::kParse);
  }
}

Json LoadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) Fail("FileNotFound", path, ErrorKind::kNotFound);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const Json::parse_error& e) {
    // Report a line number for the offending byte.
    const std::string text = ss.str();
    const size_t upto = std::min<size_t>(e.byte, text.size());
    const long line = 1 + std::count(text.begin(), text.begin() + upto, '\n');
    Fail("ParseError", path + ":" + std::to_string(line) + ": malformed JSON", ErrorKind::kParse);
  }
}

ValuatedMatroid ParseMatroid(const Json& j) {
  const std::string path = "matroid";
  if (!j.is_object()) Bad(path, "expected an object");
  std::vector<std::string> ground;
  if (j.contains("ground")) ground = Labels(j["ground"], path + ".ground");
  if (j.contains("nu")) {
    const int rank = static_cast<int>(Int(Field(j, "rank", path), path + ".rank"));
    std::map<Set, ExtRational> nu;
    const Json& a = Array(j["nu"], path + ".nu");
    for (size_t k = 0; k < a.size(); ++k) {
      const std::string p = At(path + ".nu", k);
      nu[LabelSet(ground, Field(a[k], "set", p), p + ".set")] = Ext(Field(a[k], "value", p), p + ".value");
    }
    return ValuatedMatroid::Create(ground, rank, nu);
  }
  if (j.contains("columns")) {
    const Json& cols = Array(j["columns"], path + ".columns");
    if (cols.empty()) Fail("EmptyInput", "no columns", ErrorKind::kInvalidInput);
    const bool monomial = cols[0].is_array() && !cols[0].empty() && cols[0][0].is_object();
    if (monomial) {
      std::vector<std::vector<Monomial>> columns;
      for (size_t c = 0; c < cols.size(); ++c) {
        std::vector<Monomial> col;
        const Json& entries = Array(cols[c], At(path + ".columns", c));
        for (size_t r = 0; r < entries.size(); ++r) {
          const std::string p = At(At(path + ".columns", c), r);
          col.push_back({Rat(Field(entries[r], "c", p), p + ".c"), static_cast<long>(Int(Field(entries[r], "e", p), p + ".e"))});
        }
        columns.push_back(std::move(col));
      }
      return ValuatedMatroid::FromMonomialColumns(ground, columns);
    }
    std::vector<std::vector<Rational>> columns;
    for (size_t c = 0; c < cols.size(); ++c) {
      std::vector<Rational> col;
      const Json& entries = Array(cols[c], At(path + ".columns", c));
      for (size_t r = 0; r < entries.size(); ++r) col.push_back(Rat(entries[r], At(At(path + ".columns", c), r)));
      columns.push_back(std::move(col));
    }
    return ValuatedMatroid::Trivial(Matroid::FromColumns(ground, columns));
  }
  if (j.contains("bases")) {
    std::vector<Set> bases;
    const Json& a = Array(j["bases"], path + ".bases");
    for (size_t k = 0; k < a.size(); ++k) bases.push_back(LabelSet(ground, a[k], At(path + ".bases", k)));
    Matroid m = Matroid::FromBases(ground, bases);
    if (j.contains("rank") && Int(j["rank"], path + ".rank") != m.rank()) {
      Fail("CardinalityMismatch", "declared rank differs from basis size", ErrorKind::kInvalidInput);
    }
    return ValuatedMatroid::Trivial(m);
  }
  Bad(path, "needs one of bases, columns, nu");
}

Json LabelsJson(const std::vector<std::string>& ground, Set s) {
  Json out = Json::array();
  for (int i : Members(s)) out.push_back(ground[i]);
  return out;
}

Json RationalJson(const Rational& q) { return RationalToString(q); }

Json TropicalJson(const TropicalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.ToString());
  return out;
}

Json MatroidToJson(const ValuatedMatroid& vm) {
  Json out;
  out["ground"] = vm.ground();
  out["rank"] = vm.rank();
  if (vm.IsTrivial()) {
    Json bases = Json::array();
    for (Set b : vm.underlying().bases()) bases.push_back(LabelsJson(vm.ground(), b));
    out["bases"] = bases;
  } else {
    std::vector<Set> sets;
    for (const auto& [s, v] : vm.finite_values()) sets.push_back(s);
    std::sort(sets.begin(), sets.end(), LexLess);
    Json nu = Json::array();
    for (Set s : sets) {
      nu.push_back({{"set", LabelsJson(vm.ground(), s)}, {"value", RationalToString(vm.finite_values().at(s))}});
    }
    out["nu"] = nu;
  }
  return out;
}

Fan ParseFan(const Json& j) {
  const std::string path = "fan";
  Fan fan;
  fan.dim = static_cast<int>(Int(Field(j, "dim", path), path + ".dim"));
  const Json& rays = Array(Field(j, "rays", path), path + ".rays");
  for (size_t k = 0; k < rays.size(); ++k) fan.rays.push_back(Ints(rays[k], At(path + ".rays", k)));
  const Json& cones = Array(Field(j, "max_cones", path), path + ".max_cones");
  for (size_t k = 0; k < cones.size(); ++k) {
    IntVector c = Ints(cones[k], At(path + ".max_cones", k));
    fan.max_cones.emplace_back(c.begin(), c.end());
  }
  if (j.contains("complete")) {
    if (!j["complete"].is_boolean()) Bad(path + ".complete", "expected a boolean");
    fan.complete = j["complete"].get<bool>();
  }
  if (j.contains("h") && !j["h"].is_null()) fan.h = Ints(j["h"], path + ".h");
  return fan;
}

Json FanToJson(const Fan& fan) {
  Json out;
  out["dim"] = fan.dim;
  out["rays"] = fan.rays;
  out["max_cones"] = fan.max_cones;
  out["complete"] = fan.complete;
  if (fan.h) out["h"] = *fan.h;
  return out;
}

Bundle ParseBundle(const Json& j) {
  if (!j.is_object()) Bad("bundle", "expected an object");
  Fan fan = ParseFan(Field(j, "fan", "bundle"));
  ValuatedMatroid vm = ParseMatroid(Field(j, "matroid", "bundle"));
  const Json& fs = Array(Field(j, "filtrations", "bundle"), "bundle.filtrations");
  std::vector<std::optional<Filtration>> filt(fan.num_rays());
  const Set full = FullSet(vm.size());
  for (size_t k = 0; k < fs.size(); ++k) {
    const std::string p = At("bundle.filtrations", k);
    const std::int64_t ray = Int(Field(fs[k], "ray", p), p + ".ray");
    if (ray < 0 || ray >= fan.num_rays()) Fail("UnknownRay", p + ".ray", ErrorKind::kInvalidInput);
    if (filt[ray]) Fail("DuplicateRay", p + ".ray", ErrorKind::kInvalidInput);
    std::vector<std::pair<long, Set>> points;
    const Json& steps = Array(Field(fs[k], "steps", p), p + ".steps");
    for (size_t t = 0; t < steps.size(); ++t) {
      const std::string q = At(p + ".steps", t);
      points.emplace_back(Int(Field(steps[t], "j", q), q + ".j"),
                          LabelSet(vm.ground(), Field(steps[t], "flat", q), q + ".flat"));
    }
    filt[ray] = Filtration::FromBreakpoints(points, full, static_cast<int>(ray));
  }
  std::vector<Filtration> out;
  for (int i = 0; i < fan.num_rays(); ++i) {
    if (!filt[i]) Fail("MissingBound", "ray " + std::to_string(i) + " has no filtration", ErrorKind::kInvalidInput);
    out.push_back(*filt[i]);
  }
  return Bundle::Create(std::move(fan), std::move(vm), std::move(out));
}

Json BundleToJson(const Bundle& e) {
  Json out;
  out["fan"] = FanToJson(e.fan());
  out["matroid"] = MatroidToJson(e.vm());
  Json fs = Json::array();
  for (int i = 0; i < e.num_rays(); ++i) {
    const Filtration& f = e.filtrations()[i];
    Json steps = Json::array();
    for (long j = f.lo; j <= f.hi(); ++j) {
      steps.push_back({{"j", j}, {"flat", LabelsJson(e.vm().ground(), f.At(j))}});
    }
    fs.push_back({{"ray", i}, {"steps", steps}});
  }
  out["filtrations"] = fs;
  return out;
}

RankedLattice ParseRankedLattice(const Json& j) {
  const std::string path = "lattice";
  std::vector<std::string> elements = Labels(Field(j, "elements", path), path + ".elements");
  auto index = [&](const Json& x, const std::string& p) {
    const std::string l = Label(x, p);
    auto it = std::find(elements.begin(), elements.end(), l);
    if (it == elements.end()) Fail("UnknownLabel", p + ": " + l, ErrorKind::kInvalidInput);
    return static_cast<int>(it - elements.begin());
  };
  std::vector<std::pair<int, int>> rel;
  const Json& leq = Array(Field(j, "leq", path), path + ".leq");
  for (size_t k = 0; k < leq.size(); ++k) {
    const std::string p = At(path + ".leq", k);
    if (!leq[k].is_array() || leq[k].size() != 2) Bad(p, "expected a pair");
    rel.emplace_back(index(leq[k][0], p + "[0]"), index(leq[k][1], p + "[1]"));
  }
  const Json& rank = Field(j, "rank", path);
  if (!rank.is_object()) Bad(path + ".rank", "expected an object");
  std::vector<int> r(elements.size());
  for (size_t k = 0; k < elements.size(); ++k) {
    r[k] = static_cast<int>(Int(Field(rank, elements[k], path + ".rank"), path + ".rank." + elements[k]));
  }
  return RankedLattice(elements, rel, r);
}

Json RankedLatticeToJson(const RankedLattice& l) {
  Json out;
  out["elements"] = l.elements();
  Json leq = Json::array();
  for (int b = 0; b < l.size(); ++b) {
    for (int a : l.Lower(b)) leq.push_back({l.elements()[a], l.elements()[b]});
  }
  out["leq"] = leq;
  Json rank = Json::object();
  for (int k = 0; k < l.size(); ++k) rank[l.elements()[k]] = l.rank()[k];
  out["rank"] = rank;
  return out;
}

Realization ParseRealization(const Json& j) {
  const std::string path = "realization";
  Realization out;
  out.ambient = static_cast<int>(Int(Field(j, "ambient", path), path + ".ambient"));
  const Json& steps = Array(Field(j, "steps", path), path + ".steps");
  for (size_t k = 0; k < steps.size(); ++k) {
    const std::string p = At(path + ".steps", k);
    RealizedStep s;
    s.ray = static_cast<int>(Int(Field(steps[k], "ray", p), p + ".ray"));
    s.j = Int(Field(steps[k], "j", p), p + ".j");
    const Json& gens = Array(Field(steps[k], "generators", p), p + ".generators");
    for (size_t g = 0; g < gens.size(); ++g) {
      std::vector<Rational> row;
      const Json& entries = Array(gens[g], At(p + ".generators", g));
      for (size_t t = 0; t < entries.size(); ++t) row.push_back(Rat(entries[t], At(At(p + ".generators", g), t)));
      if (static_cast<int>(row.size()) != out.ambient) {
        Fail("DimensionMismatch", At(p + ".generators", g), ErrorKind::kInvalidInput);
      }
      s.generators.push_back(std::move(row));
    }
    out.steps.push_back(std::move(s));
  }
  return out;
}

TropicalVector ParseTropicalList(const std::string& text) {
  TropicalVector out;
  for (const auto& item : SplitCommas(text)) {
    try {
      out.push_back(ExtRational::FromString(item));
    } catch (const Error& e) {
      Fail("ParseError", "bad tropical entry '" + item + "'", ErrorKind::kParse);
    }
  }
  return out;
}

IntVector ParseIntList(const std::string& text) {
  IntVector out;
  for (const auto& item : SplitCommas(text)) {
    try {
      size_t used = 0;
      long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      Fail("ParseError", "bad integer entry '" + item + "'", ErrorKind::kParse);
    }
  }
  return out;
}

}  // namespace tropbundle
