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

// Slow reference implementations used only by tests. Nothing here calls
// into the search code it is meant to check: morphisms are found by
// trying every vertex table, edge table and port permutation.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "shapely/labelled.hpp"
#include "shapely/perm.hpp"
#include "shapely/polygraph.hpp"

namespace oracle {

using shapely::Edge;
using shapely::LabelledShape;
using shapely::Mode;
using shapely::Perm;
using shapely::Polygraph;
using shapely::Vertex;

inline std::vector<Perm> perms(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Does (vmap, edge e -> f) satisfy the equations with some port
// permutations? Returns the number of (phi, psi) that work.
inline std::size_t port_solutions(const Edge& e, const Edge& f, const std::vector<Vertex>& vmap,
                                  Mode mode) {
  if (e.sources.size() != f.sources.size() || e.targets.size() != f.targets.size()) return 0;
  if (mode == Mode::kPlanar) {
    for (std::size_t i = 0; i < e.sources.size(); ++i)
      if (vmap[e.sources[i]] != f.sources[i]) return 0;
    for (std::size_t j = 0; j < e.targets.size(); ++j)
      if (vmap[e.targets[j]] != f.targets[j]) return 0;
    return 1;
  }
  std::size_t ins = 0, outs = 0;
  for (const auto& phi : perms(e.sources.size())) {
    bool ok = true;
    for (std::size_t i = 0; ok && i < e.sources.size(); ++i)
      ok = vmap[e.sources[i]] == f.sources[phi[i]];
    ins += ok;
  }
  for (const auto& psi : perms(e.targets.size())) {
    bool ok = true;
    for (std::size_t j = 0; ok && j < e.targets.size(); ++j)
      ok = vmap[e.targets[psi[j]]] == f.targets[j];
    outs += ok;
  }
  return ins * outs;
}

// Visits every vertex table p -> q (|q|^|p| of them).
inline void each_vertex_map(std::uint32_t from, std::uint32_t to,
                            const std::function<void(const std::vector<Vertex>&)>& visit) {
  std::vector<Vertex> vmap(from, 0);
  if (from > 0 && to == 0) return;
  while (true) {
    visit(vmap);
    std::size_t k = 0;
    while (k < from && ++vmap[k] == to) vmap[k++] = 0;
    if (k == from) return;
  }
}

// Number of morphisms p -> q; with bijective_only, of isomorphisms.
// pins: -1 for free vertices.
inline std::size_t count_homs(const Polygraph& p, const Polygraph& q, Mode mode,
                              bool bijective_only = false,
                              const std::vector<std::int64_t>& pins = {}) {
  std::size_t total = 0;
  each_vertex_map(p.vertex_count, q.vertex_count, [&](const std::vector<Vertex>& vmap) {
    for (std::size_t v = 0; v < pins.size(); ++v)
      if (pins[v] >= 0 && vmap[v] != static_cast<Vertex>(pins[v])) return;
    if (bijective_only) {
      std::vector<bool> hit(q.vertex_count, false);
      for (auto w : vmap) {
        if (hit[w]) return;
        hit[w] = true;
      }
      if (p.vertex_count != q.vertex_count) return;
    }
    // Edge tables: product over edges, with injectivity if required.
    std::vector<std::uint32_t> emap(p.edges.size(), 0);
    std::function<void(std::size_t, std::size_t, std::vector<bool>&)> go =
        [&](std::size_t k, std::size_t weight, std::vector<bool>& used) {
          if (k == p.edges.size()) {
            total += weight;
            return;
          }
          for (std::uint32_t f = 0; f < q.edges.size(); ++f) {
            if (bijective_only && used[f]) continue;
            auto w = port_solutions(p.edges[k], q.edges[f], vmap, mode);
            if (w == 0) continue;
            used[f] = true;
            go(k + 1, weight * w, used);
            used[f] = false;
          }
        };
    if (bijective_only && p.edges.size() != q.edges.size()) return;
    std::vector<bool> used(q.edges.size(), false);
    go(0, 1, used);
  });
  return total;
}

// Label preserving isomorphism test by brute force.
inline bool brute_isomorphic(const LabelledShape& x, const LabelledShape& y, Mode mode) {
  if (x.body.vertex_count != y.body.vertex_count || x.body.edges.size() != y.body.edges.size() ||
      x.leaves.size() != y.leaves.size() || x.roots.size() != y.roots.size())
    return false;
  bool found = false;
  const std::uint32_t n = x.body.vertex_count;
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  do {
    bool ok = true;
    for (std::size_t i = 0; ok && i < x.leaves.size(); ++i) ok = p[x.leaves[i]] == y.leaves[i];
    for (std::size_t j = 0; ok && j < x.roots.size(); ++j) ok = p[x.roots[j]] == y.roots[j];
    if (!ok) continue;
    std::vector<std::int64_t> pins(p.begin(), p.end());
    if (count_homs(x.body, y.body, mode, true, pins) > 0) found = true;
  } while (!found && std::next_permutation(p.begin(), p.end()));
  return found;
}

inline std::size_t brute_automorphisms(const LabelledShape& x, Mode mode) {
  std::vector<std::int64_t> pins(x.body.vertex_count, -1);
  for (auto v : x.leaves) pins[v] = v;
  for (auto v : x.roots) pins[v] = v;
  return count_homs(x.body, x.body, mode, true, pins);
}

// Renames vertices and edges by random permutations and, in symmetric
// mode, also twists the port order of each edge (compensating the labels
// is not needed: labels name vertices, not ports).
inline LabelledShape shuffle(const LabelledShape& x, Mode mode, std::mt19937_64& rng) {
  Perm vp(x.body.vertex_count), ep(x.body.edges.size());
  std::iota(vp.begin(), vp.end(), 0u);
  std::iota(ep.begin(), ep.end(), 0u);
  std::shuffle(vp.begin(), vp.end(), rng);
  std::shuffle(ep.begin(), ep.end(), rng);
  LabelledShape out;
  out.body.vertex_count = x.body.vertex_count;
  out.body.edges.resize(x.body.edges.size());
  for (std::size_t e = 0; e < x.body.edges.size(); ++e) {
    Edge ne;
    for (auto v : x.body.edges[e].sources) ne.sources.push_back(vp[v]);
    for (auto v : x.body.edges[e].targets) ne.targets.push_back(vp[v]);
    if (mode == Mode::kSymmetric) {
      std::shuffle(ne.sources.begin(), ne.sources.end(), rng);
      std::shuffle(ne.targets.begin(), ne.targets.end(), rng);
    }
    out.body.edges[ep[e]] = std::move(ne);
  }
  for (auto v : x.leaves) out.leaves.push_back(vp[v]);
  for (auto v : x.roots) out.roots.push_back(vp[v]);
  return out;
}

// A random labelled polygraph: up to max_edges edges of arity up to
// max_arity over a pool of vertices, labels drawn without repetition.
inline LabelledShape random_shape(std::mt19937_64& rng, std::uint32_t max_vertices,
                                  std::uint32_t max_edges, std::uint32_t max_arity) {
  std::uniform_int_distribution<std::uint32_t> nv(1, max_vertices), ne(0, max_edges),
      ar(0, max_arity);
  LabelledShape x;
  x.body.vertex_count = nv(rng);
  std::uniform_int_distribution<std::uint32_t> pick(0, x.body.vertex_count - 1);
  auto edges = ne(rng);
  for (std::uint32_t e = 0; e < edges; ++e) {
    Edge edge;
    auto n = ar(rng), m = ar(rng);
    for (std::uint32_t i = 0; i < n; ++i) edge.sources.push_back(pick(rng));
    for (std::uint32_t j = 0; j < m; ++j) edge.targets.push_back(pick(rng));
    x.body.edges.push_back(std::move(edge));
  }
  std::vector<Vertex> pool(x.body.vertex_count);
  std::iota(pool.begin(), pool.end(), 0u);
  std::shuffle(pool.begin(), pool.end(), rng);
  auto nl = std::uniform_int_distribution<std::uint32_t>(0, x.body.vertex_count)(rng);
  x.leaves.assign(pool.begin(), pool.begin() + nl);
  std::shuffle(pool.begin(), pool.end(), rng);
  auto nr = std::uniform_int_distribution<std::uint32_t>(0, x.body.vertex_count)(rng);
  x.roots.assign(pool.begin(), pool.begin() + nr);
  return x;
}

}  // namespace oracle
