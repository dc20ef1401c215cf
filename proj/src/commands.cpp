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


#include "shapely/commands.hpp"

#include <functional>
#include <map>

#include "shapely/error.hpp"
#include "shapely/freestruct.hpp"
#include "shapely/shapes.hpp"

namespace shapely {

namespace {

[[noreturn]] void usage(const std::string& what) { throw Error(ErrorCode::kUsage, what); }

bool is_count(const Json& v) {
  return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
}

struct Request {
  const Json& j;
  Workspace ws;

  bool has(const char* key) const { return j.contains(key) && !j[key].is_null(); }

  std::string str(const char* key, const std::string& fallback = "") const {
    if (!has(key)) return fallback;
    if (!j[key].is_string()) usage(std::string("--") + key + " expects a string");
    return j[key].get<std::string>();
  }

  std::uint64_t num(const char* key, std::uint64_t fallback) const {
    if (!has(key)) return fallback;
    if (!is_count(j[key])) usage(std::string("--") + key + " expects a count");
    return j[key].get<std::uint64_t>();
  }

  bool flag(const char* key) const { return has(key) && j[key].is_boolean() && j[key].get<bool>(); }

  Mode mode() const {
    auto m = str("mode", "planar");
    if (m == "planar") return Mode::kPlanar;
    if (m == "symmetric") return Mode::kSymmetric;
    usage("--mode must be planar or symmetric");
  }

  Bounds bounds(std::uint32_t edges = 2, std::uint32_t arity = 2) const {
    return Bounds{static_cast<std::uint32_t>(num("max_edges", edges)),
                  static_cast<std::uint32_t>(num("max_arity", arity))};
  }

  ShapeClass shape_class(const char* key = "class") const {
    auto name = str(key);
    if (name.empty()) usage(std::string("--") + key + " is required");
    auto c = std::string(key) == "kind" ? parse_structure_kind(name) : parse_shape_class(name);
    if (!c) usage("unknown " + std::string(key) + " '" + name + "'");
    return *c;
  }

  // The named polygraph, or the only one in the inputs.
  std::pair<std::string, const Polygraph*> polygraph() const {
    auto name = str("polygraph");
    if (name.empty()) {
      auto all = ws.names(Workspace::Kind::kPolygraph);
      if (all.size() != 1) usage("--polygraph is required when the input has " +
                                 std::to_string(all.size()) + " polygraphs");
      name = all[0];
    }
    return {name, &ws.polygraph(name)};
  }

  // --functor NAME from the inputs, or the signature of --class.
  ShapelyFunctor functor() const {
    if (has("functor")) return ws.functor(str("functor")).functor;
    if (has("class")) return sigma(shape_class(), mode(), bounds());
    usage("--functor or --class is required");
  }
};

Json header(const std::string& command) { return Json{{"command", command}}; }

Json cmd_enumerate(const Request& r) {
  auto c = r.shape_class();
  auto mode = r.mode();
  Json out = header("enumerate");
  out["class"] = shape_class_name(c);
  out["mode"] = mode_name(mode);
  if (r.has("arity")) {
    const auto& a = r.j["arity"];
    if (!a.is_array() || a.size() != 2 || !is_count(a[0]) || !is_count(a[1]))
      usage("--arity expects two counts");
    std::uint32_t n = a[0], m = a[1];
    Bounds b = r.bounds(2, std::max<std::uint32_t>({n, m, 1}));
    auto shapes = enumerate_shapes(c, n, m, b.max_edges, b.max_arity, mode);
    out["arity"] = Json::array({n, m});
    out["bounds"] = bounds_json(b);
    out["count"] = shapes.size();
    Json ds = Json::array();
    for (const auto& s : shapes) ds.push_back(digest_of(s).hex());
    out["digests"] = ds;
    return out;
  }
  Bounds b = r.bounds();
  auto cat = enumerate_class(c, b, mode);
  ShapelyFunctor f;
  f.mode = mode;
  f.bounds = b;
  for (const auto& [a, list] : cat)
    for (const auto& s : list) f.insert(s);
  out["functor"] = functor_json(f);
  return out;
}

Json cmd_free_monad(const Request& r) {
  auto f = r.functor();
  auto strategy = r.str("strategy", "auto");
  ClosureStrategy s = ClosureStrategy::kAuto;
  if (strategy == "direct")
    s = ClosureStrategy::kDirect;
  else if (strategy == "orbit")
    s = ClosureStrategy::kOrbit;
  else if (strategy != "auto")
    usage("--strategy must be auto, direct or orbit");
  Json out = header("free-monad");
  out["generators"] = f.size();
  out["functor"] = functor_json(free_monad(f, s));
  return out;
}

Json cmd_apply(const Request& r) {
  auto f = r.functor();
  if (r.flag("closure")) f = free_monad(f);
  auto [name, a] = r.polygraph();
  Json out = header("apply");
  out["polygraph"] = name;
  out["mode"] = mode_name(f.mode);
  out["bounds"] = bounds_json(f.bounds);
  out["evaluation"] = evaluation_json(evaluate(f, *a), *a, f.mode);
  return out;
}

Json cmd_free_structure(const Request& r) {
  auto kind = r.shape_class("kind");
  auto [name, a] = r.polygraph();
  Json out = header("free-structure");
  out["polygraph"] = name;
  out["structure"] = free_structure_json(free_structure(kind, *a, r.bounds(3, 2), r.mode()));
  return out;
}

Json cmd_check_axioms(const Request& r) {
  auto kind = r.shape_class("kind");
  auto [name, a] = r.polygraph();
  auto s = free_structure(kind, *a, r.bounds(3, 2), r.mode());
  AxiomOptions o;
  o.trials = r.num("trials", 1000);
  o.seed = r.num("seed", 0);
  o.drop_interchange_permutation = r.flag("mutate");
  o.threads = static_cast<unsigned>(r.num("threads", 0));
  Json out = header("check-axioms");
  out["polygraph"] = name;
  out["bounds"] = bounds_json(s.bounds);
  out["morphisms"] = s.size();
  out["report"] = axiom_report_json(check_axioms(s, o));
  return out;
}

Json cmd_canon(const Request& r) {
  auto mode = r.mode();
  std::vector<std::string> names;
  if (r.has("shape"))
    names.push_back(r.str("shape"));
  else
    names = r.ws.names(Workspace::Kind::kShape);
  if (names.empty()) usage("no shapes to canonicalise");
  Json shapes = Json::array();
  for (const auto& n : names) {
    const auto& s = r.ws.shape(n);
    if (!is_valid(s.shape)) throw Error(ErrorCode::kInvalidPolygraph, "shape " + n + " is not valid");
    auto cf = canonical_form(s.shape, mode);
    Json j{{"name", n}};
    j.update(canonical_json(cf, label_preserving_automorphisms(cf.shape, mode), mode));
    j["well_labelled"] = well_labelled(s.shape);
    shapes.push_back(std::move(j));
  }
  Json out = header("canon");
  out["mode"] = mode_name(mode);
  out["shapes"] = shapes;
  return out;
}

Json cmd_minext(const Request& r) {
  if (!r.has("mono") || !r.has("automorphism")) usage("--mono and --automorphism are required");
  const auto& f = r.ws.morphism(r.str("mono"));
  const auto& sigma = r.ws.morphism(r.str("automorphism"));
  if (sigma.dom != f.dom || sigma.cod != f.dom)
    throw Error(ErrorCode::kTypeMismatch, "the automorphism must act on " + f.dom);
  const auto& dom = r.ws.polygraph(f.dom);
  const auto& cod = r.ws.polygraph(f.cod);
  auto ext = minimal_extension(f.map, dom, cod, sigma.map);
  Json out = header("minext");
  out["mono"] = f.name;
  out["automorphism"] = sigma.name;
  out.update(minimal_extension_json(ext, cod));
  return out;
}

Json cmd_spectrum(const Request& r) {
  Json out = header("spectrum");
  if (r.flag("universal")) {
    out["universal"] = true;
    out["spectrum"] = spectrum_json(universal_spectrum(r.bounds(), r.mode()));
    return out;
  }
  auto f = r.functor();
  if (r.flag("closure")) f = free_monad(f);
  out["spectrum"] = spectrum_json(spectrum(f));
  return out;
}

const std::map<std::string, std::function<Json(const Request&)>>& table() {
  static const std::map<std::string, std::function<Json(const Request&)>> t = {
      {"enumerate", cmd_enumerate},   {"free-monad", cmd_free_monad},
      {"apply", cmd_apply},           {"free-structure", cmd_free_structure},
      {"check-axioms", cmd_check_axioms}, {"canon", cmd_canon},
      {"minext", cmd_minext},         {"spectrum", cmd_spectrum},
  };
  return t;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [k, v] : table()) out.push_back(k);
    return out;
  }();
  return names;
}

CommandResult run_command(const std::string& command, const Json& request, const Workspace& ws) {
  CommandResult result;
  try {
    auto it = table().find(command);
    if (it == table().end()) usage("unknown command '" + command + "'");
    if (!request.is_object()) usage("request must be a JSON object");
    Request r{request, ws};
    if (r.has("input")) {
      const auto& in = request["input"];
      if (in.is_string()) {
        r.ws.load_file(in.get<std::string>());
      } else if (in.is_array()) {
        for (const auto& p : in) {
          if (!p.is_string()) usage("--input expects file names");
          r.ws.load_file(p.get<std::string>());
        }
      } else {
        usage("--input expects file names");
      }
    }
    result.output = it->second(r);
  } catch (const Error& e) {
    result.exit_code = e.code() == ErrorCode::kUsage ? 2 : 1;
    result.output = header(command);
    result.output["error"] =
        Json{{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}};
  } catch (const std::exception& e) {
    result.exit_code = 1;
    result.output = header(command);
    result.output["error"] = Json{{"code", "internal"}, {"message", e.what()}};
  }
  return result;
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace shapely
