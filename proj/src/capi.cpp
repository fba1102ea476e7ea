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

#include "tropbundle/tropbundle.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "tropbundle/commands.hpp"

struct tb_document {
  tropbundle::Json json;
};

namespace {

thread_local std::string last_error;

int Code(tropbundle::ErrorKind kind) {
  using tropbundle::ErrorKind;
  switch (kind) {
    case ErrorKind::kParse: return TB_ERR_PARSE;
    case ErrorKind::kNotFound: return TB_ERR_NOT_FOUND;
    case ErrorKind::kInvalidInput: return TB_ERR_INVALID;
    case ErrorKind::kDomain: return TB_ERR_DOMAIN;
    case ErrorKind::kLimit: return TB_ERR_LIMIT;
    case ErrorKind::kInternal: return TB_ERR_INTERNAL;
  }
  return TB_ERR_INTERNAL;
}

char* Copy(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
int Guard(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const tropbundle::Error& e) {
    last_error = e.what();
    return e.name() == "UsageError" ? TB_ERR_USAGE : Code(e.kind());
  } catch (const tropbundle::Json::exception& e) {
    last_error = std::string("ParseError: ") + e.what();
    return TB_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return TB_ERR_LIMIT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return TB_ERR_INTERNAL;
  }
}

tropbundle::TropicalVector TropicalFrom(const tropbundle::Json& j, const std::string& key) {
  if (!j.is_array()) tropbundle::Fail("ParseError", key + ": expected an array", tropbundle::ErrorKind::kParse);
  tropbundle::TropicalVector v;
  for (const auto& x : j) {
    if (x.is_number_integer()) {
      v.emplace_back(static_cast<long>(x.get<std::int64_t>()));
    } else if (x.is_string()) {
      v.push_back(tropbundle::ExtRational::FromString(x.get<std::string>()));
    } else {
      tropbundle::Fail("ParseError", key + ": bad entry", tropbundle::ErrorKind::kParse);
    }
  }
  return v;
}

}  // namespace

extern "C" {

const char* tb_version(void) { return "1.0.0"; }

const char* tb_last_error(void) { return last_error.c_str(); }

int tb_document_parse(const char* text, tb_document** out) {
  if (text == nullptr || out == nullptr) return TB_ERR_USAGE;
  return Guard([&] {
    *out = new tb_document{tropbundle::ParseJsonText(text)};
    return TB_OK;
  });
}

int tb_document_load(const char* path, tb_document** out) {
  if (path == nullptr || out == nullptr) return TB_ERR_USAGE;
  return Guard([&] {
    *out = new tb_document{tropbundle::LoadJsonFile(path)};
    return TB_OK;
  });
}

void tb_document_free(tb_document* doc) { delete doc; }

int tb_bundle_canonical(const tb_document* doc, char** json_out) {
  if (doc == nullptr || json_out == nullptr) return TB_ERR_USAGE;
  return Guard([&] {
    tropbundle::Bundle e = tropbundle::ParseBundle(doc->json);
    *json_out = Copy(tropbundle::DumpReport(tropbundle::BundleToJson(e)));
    return TB_OK;
  });
}

int tb_bundle_rank(const tb_document* doc, int* rank_out) {
  if (doc == nullptr || rank_out == nullptr) return TB_ERR_USAGE;
  return Guard([&] {
    *rank_out = tropbundle::ParseBundle(doc->json).rank();
    return TB_OK;
  });
}

int tb_execute(const char* command, const tb_document* const* inputs, size_t n_inputs,
               const char* options_json, char** report_out, int* negative) {
  if (command == nullptr || report_out == nullptr || (n_inputs > 0 && inputs == nullptr)) {
    return TB_ERR_USAGE;
  }
  return Guard([&] {
    const tropbundle::CommandInfo* info = tropbundle::FindCommand(command);
    if (info == nullptr || static_cast<size_t>(info->inputs) != n_inputs) {
      tropbundle::Fail("UsageError", std::string("bad command or input count: ") + command);
    }
    tropbundle::CommandOptions opt;
    if (options_json != nullptr) {
      tropbundle::Json o = tropbundle::ParseJsonText(options_json);
      if (o.contains("z")) opt.z = TropicalFrom(o["z"], "z");
      if (o.contains("point")) opt.point = TropicalFrom(o["point"], "point");
      if (o.contains("a")) opt.a = o["a"].get<tropbundle::IntVector>();
      if (o.contains("flat")) {
        std::vector<std::string> labels;
        for (const auto& x : o["flat"]) {
          labels.push_back(x.is_string() ? x.get<std::string>() : x.dump());
        }
        opt.flat = labels;
      }
    }
    std::vector<tropbundle::Json> docs;
    for (size_t k = 0; k < n_inputs; ++k) {
      if (inputs[k] == nullptr) tropbundle::Fail("UsageError", "null input");
      docs.push_back(inputs[k]->json);
    }
    tropbundle::CommandResult res = tropbundle::RunCommand(command, docs, opt);
    *report_out = Copy(tropbundle::DumpReport(res.report));
    if (negative != nullptr) *negative = res.negative ? 1 : 0;
    return TB_OK;
  });
}

void tb_string_free(char* s) { std::free(s); }

}  // extern "C"
