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


#include "shapely/export.hpp"

namespace shapely {

namespace {

Json ids(const Polygraph& p, const std::vector<Vertex>& vs) {
  Json out = Json::array();
  for (auto v : vs) out.push_back(p.vertex_id(v));
  return out;
}

Json arity_json(const Arity& a) { return Json::array({a.in, a.out}); }

Json one_based(const Perm& p) {
  Json out = Json::array();
  for (auto v : p) out.push_back(v + 1);
  return out;
}

}  // namespace

Json bounds_json(const Bounds& b) {
  return Json{{"max_edges", b.max_edges}, {"max_arity", b.max_arity}};
}

Json polygraph_json(const Polygraph& p) {
  Json vs = Json::array();
  for (Vertex v = 0; v < p.vertex_count; ++v) vs.push_back(p.vertex_id(v));
  Json es = Json::array();
  for (EdgeIndex e = 0; e < p.edges.size(); ++e)
    es.push_back(Json{{"id", p.edge_id(e)},
                      {"sources", ids(p, p.edges[e].sources)},
                      {"targets", ids(p, p.edges[e].targets)}});
  return Json{{"vertices", vs}, {"edges", es}};
}

Json shape_json(const LabelledShape& x) {
  Json es = Json::array();
  for (const auto& e : x.body.edges) es.push_back(Json::array({e.sources, e.targets}));
  return Json{{"vertices", x.body.vertex_count},
              {"edges", es},
              {"leaves", x.leaves},
              {"roots", x.roots}};
}

Json morphism_json(const PolyMorphism& m, const Polygraph& cod) {
  Json es = Json::array();
  for (const auto& img : m.edge_map) {
    Json e{{"edge", cod.edge_id(img.edge)}};
    if (m.mode == Mode::kSymmetric) {
      e["in_perm"] = one_based(img.in_perm);
      e["out_perm"] = one_based(img.out_perm);
    }
    es.push_back(std::move(e));
  }
  return Json{{"vertices", ids(cod, m.vertex_map)}, {"edges", es}};
}

Json group_json(const PermGroup& g, Mode mode) {
  Json els = Json::array();
  for (const auto& m : g.elements) {
    Json e{{"vertices", m.vertex_map}};
    Json edges = Json::array();
    for (const auto& img : m.edge_map) {
      Json x{{"edge", img.edge}};
      if (mode == Mode::kSymmetric) {
        x["in_perm"] = one_based(img.in_perm);
        x["out_perm"] = one_based(img.out_perm);
      }
      edges.push_back(std::move(x));
    }
    e["edges"] = std::move(edges);
    els.push_back(std::move(e));
  }
  return Json{{"order", g.order()}, {"elements", els}};
}

Json functor_json(const ShapelyFunctor& f) {
  Json stages = Json::array();
  for (const auto& [a, set] : f.shapes) {
    Json shapes = Json::object();
    for (const auto& c : f.sorted(a)) shapes[digest_of(c).hex()] = shape_json(shape_from_certificate(c));
    stages.push_back(Json{{"arity", arity_json(a)}, {"count", set.size()}, {"shapes", shapes}});
  }
  return Json{{"mode", mode_name(f.mode)},
              {"bounds", bounds_json(f.bounds)},
              {"size", f.size()},
              {"stages", stages}};
}

Json evaluation_json(const Evaluation& ev, const Polygraph& a, Mode mode) {
  Json star = Json::array();
  for (Vertex v = 0; v < ev.star; ++v) star.push_back(a.vertex_id(v));
  Json stages = Json::array();
  std::size_t total = 0;
  for (const auto& [ar, classes] : ev.classes) {
    Json cs = Json::array();
    for (const auto& c : classes) {
      auto rep = c.representative;
      rep.mode = mode;
      cs.push_back(Json{{"shape", c.digest.hex()},
                        {"orbit_size", c.orbit_size},
                        {"leaves", ids(a, c.leaf_images)},
                        {"roots", ids(a, c.root_images)},
                        {"map", morphism_json(rep, a)}});
    }
    total += classes.size();
    stages.push_back(Json{{"arity", arity_json(ar)}, {"count", classes.size()}, {"classes", cs}});
  }
  return Json{{"star", star}, {"size", total}, {"stages", stages}};
}

Json spectrum_json(const SpectrumData& s) {
  Json stages = Json::array();
  for (const auto& [a, entries] : s.stages) {
    Json es = Json::array();
    for (const auto& e : entries) {
      Json arrows = Json::array();
      for (const auto& b : e.arrows)
        arrows.push_back(Json{{"side", b.leaf ? "leaf" : "root"},
                              {"index", b.index},
                              {"vertex", b.map.vertex_map.at(0)},
                              {"valid", b.valid}});
      Json j{{"digest", e.digest.hex()},
             {"shape", shape_json(e.shape)},
             {"group", group_json(e.group, s.mode)},
             {"arrows", arrows}};
      if (s.mode == Mode::kSymmetric) {
        Json la = Json::array(), ra = Json::array();
        for (const auto& d : e.leaf_actions) la.push_back(d.hex());
        for (const auto& d : e.root_actions) ra.push_back(d.hex());
        j["leaf_actions"] = la;
        j["root_actions"] = ra;
      }
      es.push_back(std::move(j));
    }
    stages.push_back(Json{{"arity", arity_json(a)}, {"count", entries.size()}, {"entries", es}});
  }
  return Json{{"mode", mode_name(s.mode)},
              {"bounds", bounds_json(s.bounds)},
              {"star", s.star},
              {"size", s.size()},
              {"stages", stages}};
}

Json free_structure_json(const FreeStructure& s) {
  Json homs = Json::array();
  for (const auto& [key, list] : s.homs) {
    Json ms = Json::array();
    for (const auto& m : list)
      ms.push_back(Json{{"shape", m.digest.hex()},
                        {"morphism", morphism_digest(m).hex()},
                        {"edges", certificate_header(m.shape).edge_count},
                        {"map", morphism_json(m.representative, s.base)}});
    homs.push_back(Json{{"source", ids(s.base, key.source)},
                        {"target", ids(s.base, key.target)},
                        {"count", list.size()},
                        {"morphisms", ms}});
  }
  return Json{{"kind", structure_kind_name(s.kind)},
              {"mode", mode_name(s.mode)},
              {"bounds", bounds_json(s.bounds)},
              {"base", polygraph_json(s.base)},
              {"size", s.size()},
              {"homs", homs}};
}

Json axiom_report_json(const AxiomReport& r) {
  Json axioms = Json::array();
  for (const auto& a : r.axioms) {
    Json cs = Json::array();
    for (const auto& c : a.counterexamples) {
      Json inst = Json::object();
      for (const auto& [k, v] : c.bindings) inst[k] = v;
      cs.push_back(Json{{"instantiation", inst}, {"lhs", c.lhs.hex()}, {"rhs", c.rhs.hex()}});
    }
    axioms.push_back(Json{{"axiom", a.axiom},
                          {"trials", a.trials},
                          {"failures", a.failures},
                          {"counterexamples", cs}});
  }
  return Json{{"kind", structure_kind_name(r.kind)},
              {"mode", mode_name(r.mode)},
              {"seed", r.seed},
              {"mutation", r.mutation},
              {"failures", r.failures()},
              {"axioms", axioms}};
}

Json canonical_json(const CanonicalForm& cf, const PermGroup& automorphisms, Mode mode) {
  Json witness{{"vertices", cf.witness.vertex_map}};
  Json edges = Json::array();
  for (const auto& img : cf.witness.edge_map) {
    Json e{{"edge", img.edge}};
    if (mode == Mode::kSymmetric) {
      e["in_perm"] = one_based(img.in_perm);
      e["out_perm"] = one_based(img.out_perm);
    }
    edges.push_back(std::move(e));
  }
  witness["edges"] = std::move(edges);
  return Json{{"mode", mode_name(mode)},
              {"digest", cf.digest.hex()},
              {"shape", shape_json(cf.shape)},
              {"witness", witness},
              {"automorphisms", group_json(automorphisms, mode)}};
}

Json minimal_extension_json(const MinimalExtension& ext, const Polygraph& cod) {
  if (ext.tau) return Json{{"result", "extension"}, {"tau", morphism_json(*ext.tau, cod)}};
  Json out{{"result", "no-extension"}};
  if (ext.obstruction) {
    const auto& o = *ext.obstruction;
    out["obstruction"] = Json{{"edge", cod.edge_id(o.edge)},
                              {"side", o.is_source ? "source" : "target"},
                              {"position", o.position + 1},
                              {"vertex", cod.vertex_id(o.vertex)}};
  }
  return out;
}

}  // namespace shapely
