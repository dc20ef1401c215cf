// Copyright 2026 The Shapely Authors
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


// Command line front end. Flags are collected into a JSON request and
// handed to shapely_run; all work happens in the library.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "shapely.h"

namespace {

using Json = nlohmann::ordered_json;

struct Flags {
  std::vector<std::string> input;
  std::string mode = "planar";
  std::optional<unsigned> max_edges, max_arity;
  std::string cls, kind, functor, polygraph, strategy, shape, mono, automorphism;
  std::vector<unsigned> arity;
  std::optional<unsigned long long> trials, seed, threads;
  bool closure = false, mutate = false, universal = false;
};

Json request_of(const Flags& f) {
  Json j = Json::object();
  auto put = [&](const char* key, const std::string& v) {
    if (!v.empty()) j[key] = v;
  };
  if (!f.input.empty()) j["input"] = f.input;
  j["mode"] = f.mode;
  if (f.max_edges) j["max_edges"] = *f.max_edges;
  if (f.max_arity) j["max_arity"] = *f.max_arity;
  put("class", f.cls);
  put("kind", f.kind);
  put("functor", f.functor);
  put("polygraph", f.polygraph);
  put("strategy", f.strategy);
  put("shape", f.shape);
  put("mono", f.mono);
  put("automorphism", f.automorphism);
  if (!f.arity.empty()) j["arity"] = f.arity;
  if (f.trials) j["trials"] = *f.trials;
  if (f.seed) j["seed"] = *f.seed;
  if (f.threads) j["threads"] = *f.threads;
  if (f.closure) j["closure"] = true;
  if (f.mutate) j["mutate"] = true;
  if (f.universal) j["universal"] = true;
  return j;
}

void add_common(CLI::App* c, Flags& f) {
  c->add_option("--input,-i", f.input, "workspace files")->check(CLI::ExistingFile);
  c->add_option("--mode", f.mode)->check(CLI::IsMember({"planar", "symmetric"}));
  c->add_option("--max-edges", f.max_edges);
  c->add_option("--max-arity", f.max_arity);
}

int format(const Flags& f) {
  shapely_workspace* raw = nullptr;
  shapely_workspace_create(&raw);
  std::unique_ptr<shapely_workspace, void (*)(shapely_workspace*)> ws(raw, shapely_workspace_destroy);
  for (const auto& path : f.input) {
    if (shapely_workspace_load(ws.get(), path.c_str()) != SHAPELY_OK) {
      std::cerr << "shapely: " << shapely_last_error() << "\n";
      return 1;
    }
  }
  shapely_buffer* out = nullptr;
  if (shapely_workspace_serialize(ws.get(), &out) != SHAPELY_OK) {
    std::cerr << "shapely: " << shapely_last_error() << "\n";
    return 1;
  }
  std::fwrite(shapely_buffer_data(out), 1, shapely_buffer_size(out), stdout);
  shapely_buffer_destroy(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shapes, shapely functors and free structures on polygraphs"};
  app.set_version_flag("--version", std::string(shapely_version()));
  app.require_subcommand(1);
  Flags f;

  auto* en = app.add_subcommand("enumerate", "list shapes of a class");
  add_common(en, f);
  en->add_option("--class", f.cls)->required();
  en->add_option("--arity", f.arity, "inputs and outputs")->expected(2);

  auto* fm = app.add_subcommand("free-monad", "closure of a functor under substitution");
  add_common(fm, f);
  fm->add_option("--functor", f.functor);
  fm->add_option("--class", f.cls, "start from the generators of a class");
  fm->add_option("--strategy", f.strategy)->check(CLI::IsMember({"auto", "direct", "orbit"}));

  auto* ap = app.add_subcommand("apply", "evaluate a functor on a polygraph");
  add_common(ap, f);
  ap->add_option("--functor", f.functor);
  ap->add_option("--class", f.cls);
  ap->add_option("--polygraph", f.polygraph);
  ap->add_flag("--closure", f.closure, "take the free monad first");

  auto* fs = app.add_subcommand("free-structure", "hom tables of a free structure");
  add_common(fs, f);
  fs->add_option("--kind", f.kind)->required();
  fs->add_option("--polygraph", f.polygraph);

  auto* ca = app.add_subcommand("check-axioms", "randomised check of the structure laws");
  add_common(ca, f);
  ca->add_option("--kind", f.kind)->required();
  ca->add_option("--polygraph", f.polygraph);
  ca->add_option("--trials", f.trials);
  ca->add_option("--seed", f.seed);
  ca->add_option("--threads", f.threads);
  ca->add_flag("--mutate", f.mutate, "drop the interchange permutation");

  auto* cn = app.add_subcommand("canon", "canonical forms and automorphisms of shapes");
  add_common(cn, f);
  cn->add_option("--shape", f.shape);

  auto* mx = app.add_subcommand("minext", "minimal extension of an automorphism along a mono");
  add_common(mx, f);
  mx->add_option("--mono", f.mono)->required();
  mx->add_option("--automorphism", f.automorphism)->required();

  auto* sp = app.add_subcommand("spectrum", "arity spectrum of a functor");
  add_common(sp, f);
  sp->add_option("--functor", f.functor);
  sp->add_option("--class", f.cls);
  sp->add_flag("--closure", f.closure);
  sp->add_flag("--universal", f.universal, "spectrum of the universal functor");

  auto* fmt = app.add_subcommand("format", "parse workspace files and print them back");
  fmt->add_option("--input,-i", f.input)->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (fmt->parsed()) return format(f);

  auto* sub = app.get_subcommands().front();
  auto request = request_of(f).dump();
  shapely_buffer* out = nullptr;
  int exit_code = 0;
  if (shapely_run(nullptr, sub->get_name().c_str(), request.c_str(), &out, &exit_code) !=
      SHAPELY_OK) {
    std::cerr << "shapely: " << shapely_last_error() << "\n";
    return 1;
  }
  std::fwrite(shapely_buffer_data(out), 1, shapely_buffer_size(out), stdout);
  shapely_buffer_destroy(out);
  if (exit_code != 0) std::cerr << "shapely: " << shapely_last_error() << "\n";
  return exit_code;
}
