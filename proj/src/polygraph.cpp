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

#include "shapely/polygraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "shapely/error.hpp"

namespace shapely {

namespace {

constexpr Vertex kUnassigned = static_cast<Vertex>(-1);

std::vector<std::uint32_t> union_find_roots(std::vector<std::uint32_t>& parent) {
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::vector<std::uint32_t> roots(parent.size());
  for (std::uint32_t i = 0; i < parent.size(); ++i) roots[i] = find(i);
  return roots;
}

}  // namespace

const char* mode_name(Mode mode) { return mode == Mode::kPlanar ? "planar" : "symmetric"; }

std::string Polygraph::vertex_id(Vertex v) const {
  if (v < vertex_names.size()) return vertex_names[v];
  return "v" + std::to_string(v);
}

std::string Polygraph::edge_id(EdgeIndex e) const {
  if (e < edge_names.size()) return edge_names[e];
  return "e" + std::to_string(e);
}

Polygraph representable(std::uint32_t n, std::uint32_t m) {
  Polygraph p;
  p.vertex_count = n + m;
  Edge e;
  for (std::uint32_t i = 0; i < n; ++i) e.sources.push_back(i);
  for (std::uint32_t j = 0; j < m; ++j) e.targets.push_back(n + j);
  p.edges.push_back(std::move(e));
  return p;
}

Polygraph discrete(std::uint32_t k) {
  Polygraph p;
  p.vertex_count = k;
  return p;
}

std::vector<Violation> validate(const Polygraph& p) {
  std::vector<Violation> out;
  if (!p.vertex_names.empty() && p.vertex_names.size() != p.vertex_count)
    out.push_back({"vertex name count", "expected " + std::to_string(p.vertex_count)});
  if (!p.edge_names.empty() && p.edge_names.size() != p.edges.size())
    out.push_back({"edge name count", "expected " + std::to_string(p.edges.size())});
  std::set<std::string> seen;
  for (const auto& name : p.vertex_names)
    if (!seen.insert(name).second) out.push_back({"duplicate vertex id", name});
  seen.clear();
  for (const auto& name : p.edge_names)
    if (!seen.insert(name).second) out.push_back({"duplicate edge id", name});
  for (EdgeIndex e = 0; e < p.edges.size(); ++e) {
    for (auto v : p.edges[e].sources)
      if (v >= p.vertex_count) out.push_back({"dangling source", p.edge_id(e)});
    for (auto v : p.edges[e].targets)
      if (v >= p.vertex_count) out.push_back({"dangling target", p.edge_id(e)});
  }
  return out;
}

bool is_morphism(const PolyMorphism& m, const Polygraph& dom, const Polygraph& cod) {
  if (m.vertex_map.size() != dom.vertex_count || m.edge_map.size() != dom.edges.size())
    return false;
  for (auto v : m.vertex_map)
    if (v >= cod.vertex_count) return false;
  for (EdgeIndex e = 0; e < dom.edges.size(); ++e) {
    const auto& img = m.edge_map[e];
    if (img.edge >= cod.edges.size()) return false;
    const Edge& src = dom.edges[e];
    const Edge& dst = cod.edges[img.edge];
    if (src.arity() != dst.arity()) return false;
    if (img.in_perm.size() != src.sources.size() || img.out_perm.size() != src.targets.size())
      return false;
    if (!is_perm(img.in_perm) || !is_perm(img.out_perm)) return false;
    if (m.mode == Mode::kPlanar && (!is_identity(img.in_perm) || !is_identity(img.out_perm)))
      return false;
    for (std::size_t i = 0; i < src.sources.size(); ++i)
      if (m.vertex_map[src.sources[i]] != dst.sources[img.in_perm[i]]) return false;
    for (std::size_t j = 0; j < src.targets.size(); ++j)
      if (m.vertex_map[src.targets[img.out_perm[j]]] != dst.targets[j]) return false;
  }
  return true;
}

PolyMorphism identity_morphism(const Polygraph& p, Mode mode) {
  PolyMorphism m;
  m.mode = mode;
  m.vertex_map.resize(p.vertex_count);
  std::iota(m.vertex_map.begin(), m.vertex_map.end(), 0u);
  m.edge_map.reserve(p.edges.size());
  for (EdgeIndex e = 0; e < p.edges.size(); ++e)
    m.edge_map.push_back({e, identity_perm(p.edges[e].sources.size()),
                          identity_perm(p.edges[e].targets.size())});
  return m;
}

PolyMorphism compose(const PolyMorphism& g, const PolyMorphism& f) {
  PolyMorphism out;
  out.mode = (g.mode == Mode::kSymmetric || f.mode == Mode::kSymmetric) ? Mode::kSymmetric
                                                                          : Mode::kPlanar;
  out.vertex_map.reserve(f.vertex_map.size());
  for (auto v : f.vertex_map) {
    if (v >= g.vertex_map.size())
      throw Error(ErrorCode::kInvalidMorphism, "composite of non-composable morphisms");
    out.vertex_map.push_back(g.vertex_map[v]);
  }
  out.edge_map.reserve(f.edge_map.size());
  for (const auto& fe : f.edge_map) {
    if (fe.edge >= g.edge_map.size())
      throw Error(ErrorCode::kInvalidMorphism, "composite of non-composable morphisms");
    const auto& ge = g.edge_map[fe.edge];
    // sources compose covariantly, targets contravariantly
    out.edge_map.push_back({ge.edge, shapely::compose(ge.in_perm, fe.in_perm),
                            shapely::compose(fe.out_perm, ge.out_perm)});
  }
  return out;
}

std::optional<PolyMorphism> inverse(const PolyMorphism& m) {
  PolyMorphism out;
  out.mode = m.mode;
  out.vertex_map.assign(m.vertex_map.size(), kUnassigned);
  for (Vertex v = 0; v < m.vertex_map.size(); ++v) {
    auto w = m.vertex_map[v];
    if (w >= out.vertex_map.size() || out.vertex_map[w] != kUnassigned) return std::nullopt;
    out.vertex_map[w] = v;
  }
  out.edge_map.assign(m.edge_map.size(), EdgeImage{kUnassigned, {}, {}});
  for (EdgeIndex e = 0; e < m.edge_map.size(); ++e) {
    const auto& img = m.edge_map[e];
    if (img.edge >= out.edge_map.size() || out.edge_map[img.edge].edge != kUnassigned)
      return std::nullopt;
    out.edge_map[img.edge] = {e, shapely::inverse(img.in_perm), shapely::inverse(img.out_perm)};
  }
  return out;
}

bool is_mono(const PolyMorphism& m) {
  std::set<Vertex> vs(m.vertex_map.begin(), m.vertex_map.end());
  if (vs.size() != m.vertex_map.size()) return false;
  std::set<EdgeIndex> es;
  for (const auto& img : m.edge_map) es.insert(img.edge);
  return es.size() == m.edge_map.size();
}

bool is_bijective(const PolyMorphism& m, const Polygraph& cod) {
  return is_mono(m) && m.vertex_map.size() == cod.vertex_count &&
         m.edge_map.size() == cod.edges.size();
}

bool is_automorphism(const PolyMorphism& m, const Polygraph& p) {
  return is_morphism(m, p, p) && is_bijective(m, p);
}

PolyMorphism planar_morphism(const Polygraph& dom, std::vector<Vertex> vertex_map,
                             std::vector<EdgeIndex> edge_map) {
  PolyMorphism m;
  m.mode = Mode::kPlanar;
  m.vertex_map = std::move(vertex_map);
  m.edge_map.reserve(edge_map.size());
  for (EdgeIndex e = 0; e < edge_map.size(); ++e)
    m.edge_map.push_back({edge_map[e], identity_perm(dom.edges[e].sources.size()),
                          identity_perm(dom.edges[e].targets.size())});
  return m;
}

CoproductResult coproduct(const Polygraph& p, const Polygraph& q) {
  auto po = pushout_discrete(p, q, DiscreteSpan{});
  return {std::move(po.object), std::move(po.left), std::move(po.right)};
}

PushoutResult pushout_discrete(const Polygraph& p, const Polygraph& q, const DiscreteSpan& span) {
  if (span.left_leg.size() != span.apex || span.right_leg.size() != span.apex)
    throw Error(ErrorCode::kInvalidMorphism, "span legs do not match the apex");
  const std::uint32_t np = p.vertex_count;
  std::vector<std::uint32_t> parent(np + q.vertex_count);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (std::uint32_t a = 0; a < span.apex; ++a) {
    if (span.left_leg[a] >= np || span.right_leg[a] >= q.vertex_count)
      throw Error(ErrorCode::kInvalidMorphism, "span leg leaves the vertex set");
    auto x = find(span.left_leg[a]);
    auto y = find(np + span.right_leg[a]);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
  auto roots = union_find_roots(parent);
  std::vector<Vertex> fresh(parent.size(), kUnassigned);
  PushoutResult out;
  for (std::uint32_t i = 0; i < parent.size(); ++i) {
    auto r = roots[i];
    if (fresh[r] == kUnassigned) fresh[r] = out.object.vertex_count++;
  }
  auto image = [&](std::uint32_t i) { return fresh[roots[i]]; };
  std::vector<Vertex> left_v(np), right_v(q.vertex_count);
  for (std::uint32_t v = 0; v < np; ++v) left_v[v] = image(v);
  for (std::uint32_t v = 0; v < q.vertex_count; ++v) right_v[v] = image(np + v);
  out.object.edges.reserve(p.edges.size() + q.edges.size());
  std::vector<EdgeIndex> left_e, right_e;
  for (const auto& e : p.edges) {
    Edge ne;
    for (auto v : e.sources) ne.sources.push_back(left_v[v]);
    for (auto v : e.targets) ne.targets.push_back(left_v[v]);
    left_e.push_back(out.object.edge_count());
    out.object.edges.push_back(std::move(ne));
  }
  for (const auto& e : q.edges) {
    Edge ne;
    for (auto v : e.sources) ne.sources.push_back(right_v[v]);
    for (auto v : e.targets) ne.targets.push_back(right_v[v]);
    right_e.push_back(out.object.edge_count());
    out.object.edges.push_back(std::move(ne));
  }
  out.left = planar_morphism(p, std::move(left_v), std::move(left_e));
  out.right = planar_morphism(q, std::move(right_v), std::move(right_e));
  return out;
}

namespace {

class HomSearch {
 public:
  HomSearch(const Polygraph& p, const Polygraph& q, Mode mode, const VertexPins& pins,
            const std::function<bool(const PolyMorphism&)>& visit)
      : p_(p), q_(q), mode_(mode), visit_(visit) {
    vmap_.assign(p.vertex_count, kUnassigned);
    for (std::size_t v = 0; v < pins.size() && v < p.vertex_count; ++v)
      if (pins[v]) vmap_[v] = *pins[v];
    emap_.resize(p.edges.size());
    order_.resize(p.edges.size());
    std::iota(order_.begin(), order_.end(), 0u);
    std::stable_sort(order_.begin(), order_.end(), [&](EdgeIndex a, EdgeIndex b) {
      const auto& ea = p.edges[a];
      const auto& eb = p.edges[b];
      return ea.sources.size() + ea.targets.size() > eb.sources.size() + eb.targets.size();
    });
    std::vector<bool> touched(p.vertex_count, false);
    for (const auto& e : p.edges) {
      for (auto v : e.sources) touched[v] = true;
      for (auto v : e.targets) touched[v] = true;
    }
    for (Vertex v = 0; v < p.vertex_count; ++v)
      if (!touched[v]) loose_.push_back(v);
  }

  void run() {
    for (auto v : vmap_)
      if (v != kUnassigned && v >= q_.vertex_count) return;
    edge_step(0);
  }

 private:
  bool assign(Vertex v, Vertex w, std::vector<Vertex>& trail) {
    if (vmap_[v] == kUnassigned) {
      vmap_[v] = w;
      trail.push_back(v);
      return true;
    }
    return vmap_[v] == w;
  }

  void undo(std::vector<Vertex>& trail, std::size_t mark) {
    while (trail.size() > mark) {
      vmap_[trail.back()] = kUnassigned;
      trail.pop_back();
    }
  }

  // returns false when the visitor asked to stop
  bool edge_step(std::size_t k) {
    if (k == order_.size()) return loose_step(0);
    const EdgeIndex e = order_[k];
    const Edge& src = p_.edges[e];
    for (EdgeIndex f = 0; f < q_.edges.size(); ++f) {
      const Edge& dst = q_.edges[f];
      if (dst.arity() != src.arity()) continue;
      if (mode_ == Mode::kPlanar) {
        std::vector<Vertex> trail;
        bool ok = true;
        for (std::size_t i = 0; ok && i < src.sources.size(); ++i)
          ok = assign(src.sources[i], dst.sources[i], trail);
        for (std::size_t j = 0; ok && j < src.targets.size(); ++j)
          ok = assign(src.targets[j], dst.targets[j], trail);
        if (ok) {
          emap_[e] = {f, identity_perm(src.sources.size()), identity_perm(src.targets.size())};
          if (!edge_step(k + 1)) return false;
        }
        undo(trail, 0);
      } else {
        Perm phi(src.sources.size());
        std::vector<bool> used(src.sources.size(), false);
        if (!sources_step(k, e, f, 0, phi, used)) return false;
      }
    }
    return true;
  }

  bool sources_step(std::size_t k, EdgeIndex e, EdgeIndex f, std::size_t i, Perm& phi,
                    std::vector<bool>& used) {
    const Edge& src = p_.edges[e];
    const Edge& dst = q_.edges[f];
    if (i == src.sources.size()) {
      Perm psi(src.targets.size());
      std::vector<bool> used_t(src.targets.size(), false);
      return targets_step(k, e, f, 0, phi, psi, used_t);
    }
    for (std::uint32_t pos = 0; pos < dst.sources.size(); ++pos) {
      if (used[pos]) continue;
      std::vector<Vertex> trail;
      if (assign(src.sources[i], dst.sources[pos], trail)) {
        used[pos] = true;
        phi[i] = pos;
        bool go = sources_step(k, e, f, i + 1, phi, used);
        used[pos] = false;
        undo(trail, 0);
        if (!go) return false;
      }
    }
    return true;
  }

  // psi(j) names the position in e's targets sent to the j-th target of f
  bool targets_step(std::size_t k, EdgeIndex e, EdgeIndex f, std::size_t j, const Perm& phi,
                    Perm& psi, std::vector<bool>& used) {
    const Edge& src = p_.edges[e];
    const Edge& dst = q_.edges[f];
    if (j == dst.targets.size()) {
      emap_[e] = {f, phi, psi};
      return edge_step(k + 1);
    }
    for (std::uint32_t pos = 0; pos < src.targets.size(); ++pos) {
      if (used[pos]) continue;
      std::vector<Vertex> trail;
      if (assign(src.targets[pos], dst.targets[j], trail)) {
        used[pos] = true;
        psi[j] = pos;
        bool go = targets_step(k, e, f, j + 1, phi, psi, used);
        used[pos] = false;
        undo(trail, 0);
        if (!go) return false;
      }
    }
    return true;
  }

  bool loose_step(std::size_t k) {
    while (k < loose_.size() && vmap_[loose_[k]] != kUnassigned) ++k;
    if (k == loose_.size()) {
      PolyMorphism m;
      m.mode = mode_;
      m.vertex_map = vmap_;
      m.edge_map = emap_;
      return visit_(m);
    }
    const Vertex v = loose_[k];
    for (Vertex w = 0; w < q_.vertex_count; ++w) {
      vmap_[v] = w;
      bool go = loose_step(k + 1);
      vmap_[v] = kUnassigned;
      if (!go) return false;
    }
    return true;
  }

  const Polygraph& p_;
  const Polygraph& q_;
  Mode mode_;
  const std::function<bool(const PolyMorphism&)>& visit_;
  std::vector<Vertex> vmap_;
  std::vector<EdgeImage> emap_;
  std::vector<EdgeIndex> order_;
  std::vector<Vertex> loose_;
};

}  // namespace

void for_each_hom(const Polygraph& p, const Polygraph& q, Mode mode, const VertexPins& pins,
                  const std::function<bool(const PolyMorphism&)>& visit) {
  HomSearch search(p, q, mode, pins, visit);
  search.run();
}

std::vector<PolyMorphism> hom(const Polygraph& p, const Polygraph& q, Mode mode) {
  return hom(p, q, mode, {});
}

std::vector<PolyMorphism> hom(const Polygraph& p, const Polygraph& q, Mode mode,
                              const VertexPins& pins) {
  std::vector<PolyMorphism> out;
  for_each_hom(p, q, mode, pins, [&](const PolyMorphism& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

FixedResult fixed_subpolygraph(const Polygraph& p, const std::vector<PolyMorphism>& group) {
  for (const auto& g : group) {
    if (g.mode != Mode::kPlanar || !is_automorphism(g, p))
      throw Error(ErrorCode::kNotAutomorphism, "group element is not a planar automorphism");
  }
  std::vector<bool> keep_v(p.vertex_count, true), keep_e(p.edges.size(), true);
  for (const auto& g : group) {
    for (Vertex v = 0; v < p.vertex_count; ++v)
      if (g.vertex_map[v] != v) keep_v[v] = false;
    for (EdgeIndex e = 0; e < p.edges.size(); ++e)
      if (g.edge_map[e].edge != e) keep_e[e] = false;
  }
  FixedResult out;
  std::vector<Vertex> renumber(p.vertex_count, kUnassigned);
  std::vector<Vertex> vincl;
  for (Vertex v = 0; v < p.vertex_count; ++v) {
    if (!keep_v[v]) continue;
    renumber[v] = out.fixed.vertex_count++;
    vincl.push_back(v);
  }
  std::vector<EdgeIndex> eincl;
  for (EdgeIndex e = 0; e < p.edges.size(); ++e) {
    if (!keep_e[e]) continue;
    Edge ne;
    // a fixed edge of a planar automorphism has fixed incident vertices
    for (auto v : p.edges[e].sources) ne.sources.push_back(renumber[v]);
    for (auto v : p.edges[e].targets) ne.targets.push_back(renumber[v]);
    out.fixed.edges.push_back(std::move(ne));
    eincl.push_back(e);
  }
  out.inclusion = planar_morphism(out.fixed, std::move(vincl), std::move(eincl));
  return out;
}

}  // namespace shapely
