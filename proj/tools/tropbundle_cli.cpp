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

// Command-line front end over the C API.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tropbundle/tropbundle.h"

namespace {

using Json = nlohmann::json;

struct Command {
  const char* name;
  int inputs;
  const char* help;
};

constexpr Command kCommands[] = {
    {"validate", 1, "Check a sheaf; report degree vectors and partial modularity"},
    {"certify", 1, "Search for a compatibility certificate on every maximal cone"},
    {"h0", 1, "Global sections from the parliament of polytopes"},
    {"chern", 1, "First Chern vector and divisor class"},
    {"slope", 1, "Degree, rank and slope"},
    {"stability", 1, "Slope table over proper flats"},
    {"jh", 1, "Jordan-Holder filtration"},
    {"hn", 1, "Harder-Narasimhan filtration"},
    {"fiber", 1, "Fiber circuits and valuated matroid at a Cox point"},
    {"total-space", 1, "Total-space polynomial system"},
    {"decompose", 1, "Indecomposable summands"},
    {"tensor", 1, "Tensor with a line bundle"},
    {"isomorphic", 2, "Isomorphism test for two indecomposable bundles"},
    {"embed-lattice", 1, "Minimal matroid for a ranked lattice or realization"},
    {"cox", 1, "Cox module presentation data"},
    {"minimal-check", 1, "Tropical minimality test"},
};

std::vector<std::string> Split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  return out;
}

Json IntList(const std::string& text) {
  Json out = Json::array();
  for (const auto& s : Split(text)) {
    size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw CLI::ValidationError("--a", "bad integer '" + s + "'");
    out.push_back(v);
  }
  return out;
}

int Emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot write " << out_path << "\n";
    return TB_ERR_NOT_FOUND;
  }
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tropical toric vector bundles: certificates, invariants, fibers, stability"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tb_version());

  std::vector<std::string> files;
  std::string z, point, a, flat, out_path;
  int threads = 1;

  for (const auto& c : kCommands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("inputs", files, c.inputs == 2 ? "Two JSON input files" : "JSON input file")
        ->required()
        ->expected(c.inputs);
    sub->add_option("--out", out_path, "Write the report to this file");
    sub->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 1024));
    const std::string name = c.name;
    if (name == "fiber") {
      sub->add_option("--z", z, "Cox point, e.g. \"0,inf,1\"")->required();
      sub->add_option("--point", point, "Test membership of this point in the fiber");
    }
    if (name == "tensor") sub->add_option("--a", a, "Line bundle vector, e.g. \"1,0,0\"")->required();
    if (name == "stability") sub->add_option("--flat", flat, "Flat for a see-saw check, e.g. \"1,2\"");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return TB_ERR_USAGE;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Json options = Json::object();
  try {
    if (!z.empty()) options["z"] = Split(z);
    if (!point.empty()) options["point"] = Split(point);
    if (!a.empty()) options["a"] = IntList(a);
    if (!flat.empty()) options["flat"] = Split(flat);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return TB_ERR_USAGE;
  }

  std::vector<tb_document*> docs;
  auto release = [&] {
    for (auto* d : docs) tb_document_free(d);
  };
  for (const auto& f : files) {
    tb_document* d = nullptr;
    const int rc = tb_document_load(f.c_str(), &d);
    if (rc != TB_OK) {
      std::cerr << tb_last_error() << "\n";
      release();
      return rc;
    }
    docs.push_back(d);
  }

  char* report = nullptr;
  int negative = 0;
  const std::string opts = options.dump();
  const int rc = tb_execute(command.c_str(), docs.data(), docs.size(), opts.c_str(), &report, &negative);
  release();
  if (rc == TB_ERR_DOMAIN) {
    // A failed mathematical precondition is a negative answer with a report.
    const std::string msg = tb_last_error();
    const auto colon = msg.find(':');
    Json r = {{"command", command},
              {"error", {{"name", msg.substr(0, colon)},
                         {"detail", colon == std::string::npos ? "" : msg.substr(colon + 2)}}}};
    const int w = Emit(r.dump(2) + "\n", out_path);
    return w != 0 ? w : 1;
  }
  if (rc != TB_OK) {
    std::cerr << tb_last_error() << "\n";
    return rc;
  }
  const int w = Emit(report, out_path);
  tb_string_free(report);
  if (w != 0) return w;
  return negative ? 1 : 0;
}
