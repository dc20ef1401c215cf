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

#include "shapely/cellular.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "shapely/error.hpp"

namespace shapely {

namespace {

constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);

// Search for a relative cell structure. Each edge is attached either along
// its sources (targets fresh) or along its targets (sources fresh). A valid
// choice claims every fresh vertex at most once, never claims a base vertex,
// and induces an acyclic "must exist before" relation between edges; any
// remaining vertex is attached as a lone vertex ahead of all edges.
class ComplexSearch {
 public:
  ComplexSearch(const Polygraph& cod, const std::vector<bool>& in_base)
      : cod_(cod), in_base_(in_base), claimed_by_(cod.vertex_count, kNone),
        dir_(cod.edges.size(), AttachKind::kAlongSources) {}

  std::optional<std::vector<EdgeIndex>> solve() {
    if (assign(0)) return order_;
    return std::nullopt;
  }

  AttachKind direction(EdgeIndex e) const { return dir_[e]; }
  std::uint32_t claimed_by(Vertex v) const { return claimed_by_[v]; }

 private:
  const std::vector<Vertex>& fresh_side(EdgeIndex e, AttachKind kind) const {
    return kind == AttachKind::kAlongSources ? cod_.edges[e].targets : cod_.edges[e].sources;
  }

  bool claim(EdgeIndex e, AttachKind kind) {
    const auto& fresh = fresh_side(e, kind);
    std::size_t k = 0;
    for (; k < fresh.size(); ++k) {
      Vertex v = fresh[k];
      if (in_base_[v] || claimed_by_[v] != kNone) break;
      claimed_by_[v] = e;
    }
    if (k == fresh.size()) return true;
    for (std::size_t r = 0; r < k; ++r) claimed_by_[fresh[r]] = kNone;
    return false;
  }

  void release(EdgeIndex e, AttachKind kind) {
    for (Vertex v : fresh_side(e, kind)) claimed_by_[v] = kNone;
  }

  bool assign(EdgeIndex e) {
    if (e == cod_.edges.size()) return ordered();
    for (AttachKind kind : {AttachKind::kAlongSources, AttachKind::kAlongTargets}) {
      if (!claim(e, kind)) continue;
      dir_[e] = kind;
      if (assign(e + 1)) return true;
      release(e, kind);
    }
    return false;
  }

  // Kahn's algorithm on the dependency relation, smallest index first.
  bool ordered() {
    const std::size_t n = cod_.edges.size();
    std::vector<std::vector<EdgeIndex>> after(n);
    std::vector<std::uint32_t> indegree(n, 0);
    for (EdgeIndex e = 0; e < n; ++e) {
      const auto& attached = dir_[e] == AttachKind::kAlongSources ? cod_.edges[e].sources
                                                                  : cod_.edges[e].targets;
      for (Vertex v : attached) {
        auto owner = claimed_by_[v];
        if (owner == kNone) continue;
        if (owner == e) return false;
        after[owner].push_back(e);
        ++indegree[e];
      }
    }
    std::priority_queue<EdgeIndex, std::vector<EdgeIndex>, std::greater<>> ready;
    for (EdgeIndex e = 0; e < n; ++e)
      if (indegree[e] == 0) ready.push(e);
    order_.clear();
    while (!ready.empty()) {
      auto e = ready.top();
      ready.pop();
      order_.push_back(e);
      for (auto next : after[e])
        if (--indegree[next] == 0) ready.push(next);
    }
    return order_.size() == n;
  }

  const Polygraph& cod_;
  const std::vector<bool>& in_base_;
  std::vector<std::uint32_t> claimed_by_;
  std::vector<AttachKind> dir_;
  std::vector<EdgeIndex> order_;
};

}  // namespace

const char* attach_kind_name(AttachKind kind) {
  switch (kind) {
    case AttachKind::kVertex: return "vertex";
    case AttachKind::kAlongSources: return "along-sources";
    case AttachKind::kAlongTargets: return "along-targets";
  }
  return "?";
}

std::vector<BordageTemplate> polygraph_bordage(std::uint32_t max_arity) {
  std::vector<BordageTemplate> out;
  {
    BordageTemplate t;
    t.level = 1;
    t.kind = AttachKind::kVertex;
    t.codomain = discrete(1);
    t.map = identity_morphism(t.domain);
    out.push_back(std::move(t));
  }
  for (std::uint32_t n = 0; n <= max_arity; ++n) {
    for (std::uint32_t m = 0; m <= max_arity; ++m) {
      for (AttachKind kind : {AttachKind::kAlongSources, AttachKind::kAlongTargets}) {
        BordageTemplate t;
        t.level = 2;
        t.kind = kind;
        t.arity = {n, m};
        t.codomain = representable(n, m);
        std::uint32_t k = kind == AttachKind::kAlongSources ? n : m;
        t.domain = discrete(k);
        std::vector<Vertex> vmap(k);
        for (std::uint32_t a = 0; a < k; ++a) vmap[a] = kind == AttachKind::kAlongSources ? a : n + a;
        t.map = planar_morphism(t.domain, std::move(vmap), {});
        out.push_back(std::move(t));
      }
    }
  }
  return out;
}

std::optional<CellCertificate> is_relative_complex(const PolyMorphism& m, const Polygraph& cod) {
  if (m.mode != Mode::kPlanar || !m.edge_map.empty())
    throw Error(ErrorCode::kInvalidMorphism,
                "relative complex check needs a planar map out of a discrete polygraph");
  for (Vertex v : m.vertex_map)
    if (v >= cod.vertex_count)
      throw Error(ErrorCode::kInvalidMorphism, "boundary map leaves the codomain");
  if (!is_mono(m)) return std::nullopt;

  std::vector<bool> in_base(cod.vertex_count, false);
  for (Vertex v : m.vertex_map) in_base[v] = true;
  ComplexSearch search(cod, in_base);
  auto order = search.solve();
  if (!order) return std::nullopt;

  CellCertificate cert;
  cert.base_size = static_cast<std::uint32_t>(m.vertex_map.size());
  for (Vertex v = 0; v < cod.vertex_count; ++v) {
    if (in_base[v] || search.claimed_by(v) != kNone) continue;
    cert.steps.push_back({AttachKind::kVertex, 0, {}, {}, {v}});
  }
  for (EdgeIndex e : *order) {
    const Edge& edge = cod.edges[e];
    AttachStep step;
    step.kind = search.direction(e);
    step.edge = e;
    step.arity = edge.arity();
    if (step.kind == AttachKind::kAlongSources) {
      step.attached = edge.sources;
      step.fresh = edge.targets;
    } else {
      step.attached = edge.targets;
      step.fresh = edge.sources;
    }
    cert.steps.push_back(std::move(step));
  }
  return cert;
}

std::optional<CellCertificate> is_finite_complex(const Polygraph& p) {
  return is_relative_complex(PolyMorphism{}, p);
}

ReplayResult replay(const CellCertificate& cert, const Polygraph& target,
                    const std::vector<Vertex>& base_images) {
  if (base_images.size() != cert.base_size)
    throw Error(ErrorCode::kInvalidMorphism, "certificate base does not match");
  ReplayResult out;
  std::vector<Vertex> local(target.vertex_count, kNone);
  std::vector<Vertex> to_target;
  std::vector<EdgeIndex> edge_to_target;
  std::vector<bool> edge_done(target.edges.size(), false);
  auto create = [&](Vertex v) {
    if (v >= target.vertex_count || local[v] != kNone)
      throw Error(ErrorCode::kInvalidMorphism, "step creates an existing vertex");
    local[v] = out.object.vertex_count++;
    to_target.push_back(v);
  };
  for (Vertex v : base_images) create(v);
  for (const auto& step : cert.steps) {
    if (step.kind == AttachKind::kVertex) {
      for (Vertex v : step.fresh) create(v);
      continue;
    }
    if (step.edge >= target.edges.size() || edge_done[step.edge])
      throw Error(ErrorCode::kInvalidMorphism, "step attaches an unknown or repeated edge");
    const Edge& te = target.edges[step.edge];
    const bool along_sources = step.kind == AttachKind::kAlongSources;
    const auto& attached = along_sources ? te.sources : te.targets;
    const auto& fresh = along_sources ? te.targets : te.sources;
    if (step.arity != te.arity() || step.attached != attached || step.fresh != fresh)
      throw Error(ErrorCode::kInvalidMorphism, "step does not match the template");
    for (Vertex v : attached)
      if (v >= target.vertex_count || local[v] == kNone)
        throw Error(ErrorCode::kInvalidMorphism, "step attaches along a missing vertex");
    for (Vertex v : fresh) create(v);
    Edge e;
    for (Vertex v : te.sources) e.sources.push_back(local[v]);
    for (Vertex v : te.targets) e.targets.push_back(local[v]);
    out.object.edges.push_back(std::move(e));
    edge_to_target.push_back(step.edge);
    edge_done[step.edge] = true;
  }
  std::vector<Vertex> base(cert.base_size);
  std::iota(base.begin(), base.end(), 0u);
  out.base_inclusion = planar_morphism(discrete(cert.base_size), std::move(base), {});
  out.to_target = planar_morphism(out.object, std::move(to_target), std::move(edge_to_target));
  return out;
}

CellQuotient coequalizer(const PolyMorphism& f, const PolyMorphism& f_sigma,
                         const Polygraph& cod) {
  auto classes = [](std::size_t n, auto&& pairs) {
    std::vector<std::uint32_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](std::uint32_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (auto [a, b] : pairs) {
      auto x = find(a), y = find(b);
      if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
    std::vector<std::uint32_t> out(n);
    for (std::uint32_t i = 0; i < n; ++i) out[i] = find(i);
    return out;
  };
  std::vector<std::pair<std::uint32_t, std::uint32_t>> vpairs, epairs;
  for (std::size_t x = 0; x < f.vertex_map.size(); ++x)
    vpairs.emplace_back(f.vertex_map[x], f_sigma.vertex_map[x]);
  for (std::size_t x = 0; x < f.edge_map.size(); ++x)
    epairs.emplace_back(f.edge_map[x].edge, f_sigma.edge_map[x].edge);
  return {classes(cod.vertex_count, vpairs), classes(cod.edges.size(), epairs)};
}

bool fixes_coequalizer(const PolyMorphism& tau, const CellQuotient& q) {
  for (std::size_t v = 0; v < tau.vertex_map.size(); ++v)
    if (q.vertex_class[tau.vertex_map[v]] != q.vertex_class[v]) return false;
  for (std::size_t e = 0; e < tau.edge_map.size(); ++e)
    if (q.edge_class[tau.edge_map[e].edge] != q.edge_class[e]) return false;
  return true;
}

MinimalExtension minimal_extension(const PolyMorphism& f, const Polygraph& dom,
                                   const Polygraph& cod, const PolyMorphism& sigma) {
  if (f.mode != Mode::kPlanar || !is_morphism(f, dom, cod))
    throw Error(ErrorCode::kInvalidMorphism, "f is not a planar morphism");
  if (!is_mono(f)) throw Error(ErrorCode::kNotMonic, "f is not monic");
  if (sigma.mode != Mode::kPlanar || !is_automorphism(sigma, dom))
    throw Error(ErrorCode::kNotAutomorphism, "sigma is not an automorphism of the domain");

  std::vector<std::uint32_t> vpre(cod.vertex_count, kNone), epre(cod.edges.size(), kNone);
  for (Vertex v = 0; v < f.vertex_map.size(); ++v) vpre[f.vertex_map[v]] = v;
  for (EdgeIndex e = 0; e < f.edge_map.size(); ++e) epre[f.edge_map[e].edge] = e;

  MinimalExtension out;
  for (EdgeIndex x = 0; x < cod.edges.size() && !out.obstruction; ++x) {
    if (epre[x] != kNone) continue;
    auto check = [&](const std::vector<Vertex>& side, bool is_source) {
      for (std::uint32_t k = 0; k < side.size(); ++k) {
        auto pre = vpre[side[k]];
        if (pre != kNone && sigma.vertex_map[pre] != pre) {
          out.obstruction = ExtensionObstruction{x, is_source, k, side[k]};
          return;
        }
      }
    };
    check(cod.edges[x].sources, true);
    if (!out.obstruction) check(cod.edges[x].targets, false);
  }
  if (out.obstruction) return out;

  std::vector<Vertex> vmap(cod.vertex_count);
  for (Vertex v = 0; v < cod.vertex_count; ++v)
    vmap[v] = vpre[v] == kNone ? v : f.vertex_map[sigma.vertex_map[vpre[v]]];
  std::vector<EdgeIndex> emap(cod.edges.size());
  for (EdgeIndex e = 0; e < cod.edges.size(); ++e)
    emap[e] = epre[e] == kNone ? e : f.edge_map[sigma.edge_map[epre[e]].edge].edge;
  PolyMorphism tau = planar_morphism(cod, std::move(vmap), std::move(emap));

  if (!is_automorphism(tau, cod) || compose(tau, f) != compose(f, sigma) ||
      !fixes_coequalizer(tau, coequalizer(f, compose(f, sigma), cod)))
    throw Error(ErrorCode::kInvalidMorphism, "minimal extension failed verification");
  out.tau = std::move(tau);
  return out;
}

}  // namespace shapely
