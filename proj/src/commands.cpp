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

#include "tropbundle/commands.hpp"

#include <algorithm>

#include "tropbundle/fiber.hpp"
#include "tropbundle/sections.hpp"
#include "tropbundle/stability.hpp"

namespace tropbundle {

namespace {

Json Labels(const Bundle& e, Set s) { return LabelsJson(e.vm().ground(), s); }

Json ClassJson(const DivisorClass& c, const Fan& fan) {
  return {{"coordinates", c.coordinates},
          {"normal_form", c.normal_form},
          {"group", ClassGroup(fan).Describe()}};
}

Json TermsText(const Bundle& e, const std::vector<CoxTerm>& terms, const std::string& var) {
  std::string text;
  for (size_t t = 0; t < terms.size(); ++t) {
    if (t > 0) text += " ⊕ ";
    text += FormatTerm(e, terms[t], var);
  }
  return text;
}

Json FanReportJson(const FanReport& r) {
  return {{"smooth", r.smooth}, {"simplicial", r.simplicial}, {"warnings", r.warnings}};
}

Json StepsJson(const Bundle& e, const FlatFiltration& f) {
  Json chain = Json::array({Labels(e, e.matroid().Closure(0))});
  Json slopes = Json::array();
  Json steps = Json::array();
  for (const auto& s : f.steps) {
    chain.push_back(Labels(e, s.flat));
    slopes.push_back(RationalToString(s.gr_slope));
    steps.push_back({{"flat", Labels(e, s.flat)},
                     {"gr_rank", s.gr_rank},
                     {"gr_slope", RationalToString(s.gr_slope)},
                     {"gr_stable", s.gr_stable},
                     {"gr_semistable", s.gr_semistable},
                     {"modular", s.modular}});
  }
  return {{"filtration", chain},
          {"slopes", slopes},
          {"steps", steps},
          {"steps_modular", f.steps_modular},
          {"unique", f.unique},
          {"warnings", f.warnings}};
}

CommandResult Validate(const Json& input) {
  CommandResult res;
  Bundle e;
  try {
    e = ParseBundle(input);
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::kInvalidInput) throw;
    res.negative = true;
    res.report = {{"valid", false}, {"error", {{"name", err.name()}, {"detail", err.what()}}}};
    return res;
  }
  Json r;
  r["valid"] = true;
  r["kind"] = "reflexive";
  r["rank"] = e.rank();
  r["size"] = e.size();
  r["fan"] = FanReportJson(ValidateFan(e.fan()));
  Json d = Json::object();
  const auto dv = DegreeVectors(e);
  for (int w = 0; w < e.size(); ++w) d[e.vm().ground()[w]] = dv[w];
  r["degree_vectors"] = d;
  auto viol = PartialModularityViolation(e);
  r["partially_modular"] = !viol;
  if (viol) {
    r["modularity_violation"] = {{"i", viol->i}, {"j", viol->j}, {"k", viol->k},
                                 {"l", viol->l}, {"lhs", viol->lhs}, {"rhs", viol->rhs}};
  } else {
    Json pairs = Json::array();
    for (int i = 0; i < e.num_rays(); ++i) {
      for (int j = i + 1; j < e.num_rays(); ++j) {
        pairs.push_back({{"rays", {i, j}}, {"basis", Labels(e, PairBasis(e, i, j))}});
      }
    }
    r["pair_bases"] = pairs;
  }
  r["indecomposable"] = IsIndecomposable(e);
  r["bundle"] = BundleToJson(e);
  res.report = r;
  return res;
}

CommandResult CertifyCommand(const Bundle& e) {
  CommandResult res;
  CertifyResult c = Certify(e);
  Json r;
  r["certified"] = c.ok;
  r["kind"] = c.ok ? "certified_bundle" : "reflexive";
  if (c.ok) {
    Json cones = Json::array();
    for (const auto& cc : c.cones) {
      Json weights = Json::array();
      for (const auto& [w, u] : cc.weights) weights.push_back({{"element", e.vm().ground()[w]}, {"u", u}});
      cones.push_back({{"cone", cc.cone}, {"basis", Labels(e, cc.basis)}, {"weights", weights}});
    }
    r["cones"] = cones;
  } else {
    res.negative = true;
    r["failure"] = c.failure == CertifyFailure::kNoBasisForCone ? "NoBasisForCone" : "NoIntegerWeights";
    r["cone"] = c.failed_cone;
    if (c.failure == CertifyFailure::kNoIntegerWeights) r["basis"] = Labels(e, c.failed_basis);
    r["message"] = c.message;
  }
  res.report = r;
  return res;
}

CommandResult StabilityCommand(const Bundle& e, const CommandOptions& opt) {
  CommandResult res;
  StabilityReport s = Stability(e);
  Json table = Json::array();
  for (const auto& t : s.table) {
    table.push_back({{"flat", Labels(e, t.flat)}, {"rank", t.rank}, {"slope", RationalToString(t.slope)}});
  }
  Json r = {{"slope", RationalToString(s.slope)},
            {"stable", s.stable},
            {"semistable", s.semistable},
            {"table", table}};
  r["witness"] = s.witness ? Labels(e, *s.witness) : Json(nullptr);
  if (opt.flat) {
    const Set f = e.matroid().SetOf(*opt.flat);
    SeeSawReport ss = SeeSaw(e, f);
    r["see_saw"] = {{"flat", Labels(e, f)},
                    {"degree", RationalToString(ss.degree)},
                    {"sub_degree", RationalToString(ss.sub_degree)},
                    {"quotient_degree", RationalToString(ss.quotient_degree)},
                    {"slope", RationalToString(ss.slope)},
                    {"weighted_slopes", RationalToString(ss.weighted_slopes)},
                    {"holds", ss.holds}};
  }
  res.negative = !s.semistable;
  res.report = r;
  return res;
}

CommandResult FiberCommand(const Bundle& e, const CommandOptions& opt) {
  if (!opt.z) Fail("UsageError", "fiber needs --z", ErrorKind::kInvalidInput);
  CommandResult res;
  Json circuits = Json::array();
  for (const auto& c : FiberCircuits(e, *opt.z)) circuits.push_back(TropicalJson(c));
  ValuatedMatroid vm = FiberMatroid(e, *opt.z);
  Json comps = Json::array();
  for (Set c : ConnectedComponents(vm.underlying())) comps.push_back(LabelsJson(vm.ground(), c));
  Json r = {{"z", TropicalJson(*opt.z)},
            {"circuits", circuits},
            {"matroid", MatroidToJson(vm)},
            {"components", comps}};
  if (opt.point) {
    const bool in = FiberContains(e, *opt.z, *opt.point);
    r["point"] = TropicalJson(*opt.point);
    r["contains"] = in;
    res.negative = !in;
  }
  res.report = r;
  return res;
}

Json ComplexJson(const PolyhedralComplex& pc) {
  Json cones = Json::array();
  for (const auto& c : pc.cones) cones.push_back({{"rays", c}});
  return {{"lineality", pc.lineality}, {"cones", cones}};
}

CommandResult TotalSpaceCommand(const Bundle& e) {
  CommandResult res;
  TotalSpaceSystem sys = MakeTotalSpaceSystem(e);
  Json polys = Json::array();
  for (const auto& p : sys.polynomials) polys.push_back({{"text", p.text}, {"degree", p.degree}});
  res.report = {{"polynomials", polys}, {"irrelevant", sys.irrelevant}};
  res.report["intrinsic_subcomplex"] =
      e.vm().IsTrivial() ? ComplexJson(IntrinsicSubcomplex(e)) : Json(nullptr);
  return res;
}

CommandResult DecomposeCommand(const Bundle& e) {
  CommandResult res;
  Json parts = Json::array();
  for (const auto& b : Decompose(e)) {
    Json p = {{"elements", b.vm().ground()}, {"rank", b.rank()}, {"bundle", BundleToJson(b)}};
    if (b.rank() == 1 && b.size() == 1) p["line_bundle"] = DegreeVectors(b)[0];
    parts.push_back(p);
  }
  res.report = {{"summands", parts}, {"indecomposable", parts.size() <= 1}};
  return res;
}

CommandResult IsomorphicCommand(const Bundle& a, const Bundle& b) {
  CommandResult res;
  auto iso = BundleIsomorphic(a, b);
  res.negative = !iso;
  res.report = {{"isomorphic", iso.has_value()}};
  if (iso) {
    Json map = Json::object();
    for (int w = 0; w < a.size(); ++w) map[a.vm().ground()[w]] = b.vm().ground()[iso->bijection[w]];
    res.report["bijection"] = map;
    res.report["u"] = iso->u;
  }
  return res;
}

Json EmbeddingJson(const LatticeEmbedding& emb) {
  Json phi = Json::object();
  for (int x = 0; x < emb.source.size(); ++x) {
    phi[emb.source.elements()[x]] = LabelsJson(emb.target.ground(), emb.phi[x]);
  }
  const LatticeReport axioms =
      CheckRankAxioms(emb.target.size(), [&](Set s) { return emb.target.Rank(s); });
  const LatticeReport inv = CheckEmbedding(emb);
  return {{"matroid", MatroidToJson(ValuatedMatroid::Trivial(emb.target))},
          {"phi", phi},
          {"rank_axioms_ok", axioms.ok},
          {"embedding_ok", inv.ok},
          {"violations", inv.violations}};
}

CommandResult EmbedCommand(const Json& input) {
  CommandResult res;
  if (input.is_object() && input.contains("ambient")) {
    Realization real = ParseRealization(input);
    BundleLattices bl = ComputeBundleLattices(real.ambient, real.steps);
    res.report = {{"lprime", RankedLatticeToJson(bl.lprime)},
                  {"l", RankedLatticeToJson(bl.l)},
                  {"embedding", EmbeddingJson(DilworthMinimalMatroid(bl.l))}};
    return res;
  }
  RankedLattice lat = ParseRankedLattice(input);
  LatticeReport v = ValidateRankedLattice(lat);
  res.report = {{"valid", v.ok}, {"violations", v.violations}};
  if (!v.ok) {
    res.negative = true;
    return res;
  }
  res.report["embedding"] = EmbeddingJson(DilworthMinimalMatroid(lat));
  return res;
}

CommandResult CoxCommand(const Bundle& e) {
  CommandResult res;
  CoxPresentation p = MakeCoxPresentation(e);
  Json twists = Json::array();
  for (int w = 0; w < e.size(); ++w) {
    twists.push_back({{"element", e.vm().ground()[w]}, {"d", p.twists[w]}, {"class", p.twist_classes[w]}});
  }
  Json rels = Json::array();
  for (const auto& rel : p.relations) {
    Json bends = Json::array();
    for (const auto& b : rel.bends) bends.push_back({TermsText(e, rel.terms, "e"), TermsText(e, b, "e")});
    rels.push_back({{"text", TermsText(e, rel.terms, "e")},
                    {"circuit", TropicalJson(rel.circuit)},
                    {"degree", rel.degree},
                    {"degree_class", rel.degree_class},
                    {"bend_pairs", bends}});
  }
  res.report = {{"twists", twists}, {"relations", rels}};
  return res;
}

CommandResult MinimalCommand(const Bundle& e) {
  CommandResult res;
  MinimalityResult m = CheckTropicallyMinimal(e);
  res.negative = !m.minimal;
  res.report = {{"tropically_minimal", m.minimal}};
  if (!m.minimal) {
    Json atoms = Json::array(), flats = Json::array();
    for (Set s : m.witness_atoms) atoms.push_back(Labels(e, s));
    for (Set s : m.witness_flats) flats.push_back(Labels(e, s));
    res.report["witness_atoms"] = atoms;
    res.report["witness_flats"] = flats;
  }
  return res;
}

}  // namespace

const std::vector<CommandInfo>& Commands() {
  static const std::vector<CommandInfo> kCommands = {
      {"validate", 1, "check a sheaf and report degree vectors and partial modularity"},
      {"certify", 1, "search for a compatibility certificate on every maximal cone"},
      {"h0", 1, "global sections from the parliament of polytopes"},
      {"chern", 1, "first Chern vector and its divisor class"},
      {"slope", 1, "degree, rank and slope"},
      {"stability", 1, "slope table over proper flats; --flat adds a see-saw check"},
      {"jh", 1, "Jordan-Holder filtration of a semistable bundle"},
      {"hn", 1, "Harder-Narasimhan filtration"},
      {"fiber", 1, "fiber circuits and valuated matroid at a Cox point (--z)"},
      {"total-space", 1, "total-space polynomial system and intrinsic subcomplex"},
      {"decompose", 1, "split into indecomposable summands"},
      {"tensor", 1, "tensor with the line bundle given by --a"},
      {"isomorphic", 2, "isomorphism test for two indecomposable bundles"},
      {"embed-lattice", 1, "minimal matroid for a ranked lattice or subspace realization"},
      {"cox", 1, "Cox module presentation data"},
      {"minimal-check", 1, "tropical minimality test"},
  };
  return kCommands;
}

const CommandInfo* FindCommand(const std::string& name) {
  for (const auto& c : Commands()) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

CommandResult RunCommand(const std::string& name, const std::vector<Json>& inputs,
                         const CommandOptions& options) {
  const CommandInfo* info = FindCommand(name);
  if (info == nullptr) Fail("UsageError", "unknown command '" + name + "'", ErrorKind::kInvalidInput);
  if (static_cast<int>(inputs.size()) != info->inputs) {
    Fail("UsageError", name + " takes " + std::to_string(info->inputs) + " input(s)",
         ErrorKind::kInvalidInput);
  }
  CommandResult res;
  if (name == "validate") {
    res = Validate(inputs[0]);
  } else if (name == "embed-lattice") {
    res = EmbedCommand(inputs[0]);
  } else if (name == "isomorphic") {
    res = IsomorphicCommand(ParseBundle(inputs[0]), ParseBundle(inputs[1]));
  } else {
    const Bundle e = ParseBundle(inputs[0]);
    if (name == "certify") {
      res = CertifyCommand(e);
    } else if (name == "h0") {
      H0Result h = GlobalSections(e);
      Json b = Json::array();
      for (const auto& [u, k] : h.breakdown) b.push_back({{"u", u}, {"h0", k}});
      res.report = {{"total", h.total}, {"breakdown", b}};
    } else if (name == "chern") {
      res.report = {{"vector", ChernVector(e)}, {"class", ClassJson(ChernClass(e), e.fan())}};
    } else if (name == "slope") {
      res.report = {{"chern_vector", ChernVector(e)},
                    {"degree", RationalToString(Degree(e))},
                    {"rank", e.rank()},
                    {"slope", RationalToString(Slope(e))}};
    } else if (name == "stability") {
      res = StabilityCommand(e, options);
    } else if (name == "jh") {
      res.report = StepsJson(e, JordanHolder(e));
    } else if (name == "hn") {
      res.report = StepsJson(e, HarderNarasimhan(e));
    } else if (name == "fiber") {
      res = FiberCommand(e, options);
    } else if (name == "total-space") {
      res = TotalSpaceCommand(e);
    } else if (name == "decompose") {
      res = DecomposeCommand(e);
    } else if (name == "tensor") {
      if (!options.a) Fail("UsageError", "tensor needs --a", ErrorKind::kInvalidInput);
      res.report = {{"bundle", BundleToJson(TensorLine(e, *options.a))}};
    } else if (name == "cox") {
      res = CoxCommand(e);
    } else if (name == "minimal-check") {
      res = MinimalCommand(e);
    }
  }
  res.report["command"] = name;
  return res;
}

std::string DumpReport(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace tropbundle
