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

#include "shapely/labelled.hpp"

#include <algorithm>
#include <string>

#include "shapely/error.hpp"

namespace shapely {

namespace {

constexpr std::uint32_t kNoVertex = static_cast<std::uint32_t>(-1);

std::vector<Vertex> push(const std::vector<Vertex>& labels, const PolyMorphism& leg,
                         std::size_t from, std::size_t to) {
  std::vector<Vertex> out;
  for (std::size_t k = from; k < to && k < labels.size(); ++k)
    out.push_back(leg.vertex_map[labels[k]]);
  return out;
}

void append(std::vector<Vertex>& dst, const std::vector<Vertex>& src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

}  // namespace

bool is_valid(const LabelledShape& x) {
  if (!validate(x.body).empty()) return false;
  for (Vertex v : x.leaves)
    if (v >= x.body.vertex_count) return false;
  for (Vertex v : x.roots)
    if (v >= x.body.vertex_count) return false;
  return true;
}

LabelledShape identity_shape() {
  LabelledShape x;
  x.body = discrete(1);
  x.leaves = {0};
  x.roots = {0};
  return x;
}

LabelledShape corolla(std::uint32_t n, std::uint32_t m) {
  LabelledShape x;
  x.body = representable(n, m);
  x.leaves = x.body.edges[0].sources;
  x.roots = x.body.edges[0].targets;
  return x;
}

LabelledShape empty_shape() { return {}; }

LabelledShape relabel(const LabelledShape& x, const Perm& phi, const Perm& psi) {
  if (phi.size() != x.leaves.size() || psi.size() != x.roots.size() || !is_perm(phi) ||
      !is_perm(psi))
    throw Error(ErrorCode::kArityMismatch, "relabelling permutations do not match the arity");
  LabelledShape out;
  out.body = x.body;
  out.leaves = permute_list<Vertex>(x.leaves, phi);
  out.roots = permute_list<Vertex>(x.roots, inverse(psi));
  return out;
}

GraftResult multi_graft_with_legs(const LabelledShape& y, const LabelledShape& x,
                                  std::uint32_t i, std::uint32_t j, std::uint32_t width) {
  if (width == 0 || i == 0 || j == 0 || i + width - 1 > x.roots.size() ||
      j + width - 1 > y.leaves.size())
    throw Error(ErrorCode::kIndexOutOfRange,
                "graft window (" + std::to_string(i) + ", " + std::to_string(j) + ", width " +
                    std::to_string(width) + ") out of range");
  DiscreteSpan span;
  span.apex = width;
  for (std::uint32_t l = 0; l < width; ++l) {
    span.left_leg.push_back(x.roots[i - 1 + l]);
    span.right_leg.push_back(y.leaves[j - 1 + l]);
  }
  auto po = pushout_discrete(x.body, y.body, span);
  GraftResult out;
  out.shape.body = std::move(po.object);
  auto& leaves = out.shape.leaves;
  append(leaves, push(y.leaves, po.right, 0, j - 1));
  append(leaves, push(x.leaves, po.left, 0, x.leaves.size()));
  append(leaves, push(y.leaves, po.right, j - 1 + width, y.leaves.size()));
  auto& roots = out.shape.roots;
  append(roots, push(x.roots, po.left, 0, i - 1));
  append(roots, push(y.roots, po.right, 0, y.roots.size()));
  append(roots, push(x.roots, po.left, i - 1 + width, x.roots.size()));
  out.from_lower = std::move(po.left);
  out.from_upper = std::move(po.right);
  return out;
}

LabelledShape multi_graft(const LabelledShape& y, const LabelledShape& x, std::uint32_t i,
                          std::uint32_t j, std::uint32_t width) {
  return multi_graft_with_legs(y, x, i, j, width).shape;
}

GraftResult graft_with_legs(const LabelledShape& y, const LabelledShape& x, std::uint32_t i,
                            std::uint32_t j) {
  return multi_graft_with_legs(y, x, i, j, 1);
}

LabelledShape graft(const LabelledShape& y, const LabelledShape& x, std::uint32_t i,
                    std::uint32_t j) {
  return multi_graft_with_legs(y, x, i, j, 1).shape;
}

GraftResult juxtapose_with_legs(const LabelledShape& y, const LabelledShape& x) {
  auto sum = coproduct(x.body, y.body);
  GraftResult out;
  out.shape.body = std::move(sum.sum);
  append(out.shape.leaves, push(x.leaves, sum.left, 0, x.leaves.size()));
  append(out.shape.leaves, push(y.leaves, sum.right, 0, y.leaves.size()));
  append(out.shape.roots, push(x.roots, sum.left, 0, x.roots.size()));
  append(out.shape.roots, push(y.roots, sum.right, 0, y.roots.size()));
  out.from_lower = std::move(sum.left);
  out.from_upper = std::move(sum.right);
  return out;
}

LabelledShape juxtapose(const LabelledShape& y, const LabelledShape& x) {
  return juxtapose_with_legs(y, x).shape;
}

LabelledShape substitute_edges(const LabelledShape& x,
                               const std::vector<const LabelledShape*>& fill) {
  if (fill.size() != x.body.edges.size())
    throw Error(ErrorCode::kArityMismatch, "one filling per edge expected");
  // Vertex pool: x's vertices, then each filling's vertices in edge order.
  std::vector<std::uint32_t> offset(fill.size(), 0);
  std::uint32_t total = x.body.vertex_count;
  for (std::size_t e = 0; e < fill.size(); ++e) {
    if (!fill[e]) continue;
    const auto& y = *fill[e];
    const auto& edge = x.body.edges[e];
    if (y.leaves.size() != edge.sources.size() || y.roots.size() != edge.targets.size())
      throw Error(ErrorCode::kArityMismatch, "filling arity differs from its edge");
    offset[e] = total;
    total += y.body.vertex_count;
  }
  std::vector<std::uint32_t> parent(total);
  for (std::uint32_t v = 0; v < total; ++v) parent[v] = v;
  auto find = [&](std::uint32_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto unite = [&](std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  for (std::size_t e = 0; e < fill.size(); ++e) {
    if (!fill[e]) continue;
    const auto& y = *fill[e];
    const auto& edge = x.body.edges[e];
    for (std::size_t i = 0; i < edge.sources.size(); ++i)
      unite(edge.sources[i], offset[e] + y.leaves[i]);
    for (std::size_t j = 0; j < edge.targets.size(); ++j)
      unite(edge.targets[j], offset[e] + y.roots[j]);
  }
  std::vector<std::uint32_t> id(total, kNoVertex);
  std::uint32_t count = 0;
  for (std::uint32_t v = 0; v < total; ++v) {
    auto r = find(v);
    if (id[r] == kNoVertex) id[r] = count++;
    id[v] = id[r];
  }
  LabelledShape out;
  out.body.vertex_count = count;
  for (std::size_t e = 0; e < fill.size(); ++e) {
    if (!fill[e]) {
      Edge ne;
      for (auto v : x.body.edges[e].sources) ne.sources.push_back(id[v]);
      for (auto v : x.body.edges[e].targets) ne.targets.push_back(id[v]);
      out.body.edges.push_back(std::move(ne));
      continue;
    }
    for (const auto& f : fill[e]->body.edges) {
      Edge ne;
      for (auto v : f.sources) ne.sources.push_back(id[offset[e] + v]);
      for (auto v : f.targets) ne.targets.push_back(id[offset[e] + v]);
      out.body.edges.push_back(std::move(ne));
    }
  }
  for (auto v : x.leaves) out.leaves.push_back(id[v]);
  for (auto v : x.roots) out.roots.push_back(id[v]);
  return out;
}

LabelledShape substitute_edge(const LabelledShape& x, EdgeIndex e, const LabelledShape& y) {
  if (e >= x.body.edges.size()) throw Error(ErrorCode::kIndexOutOfRange, "no such edge");
  std::vector<const LabelledShape*> fill(x.body.edges.size(), nullptr);
  fill[e] = &y;
  return substitute_edges(x, fill);
}

PolyMorphism boundary_map(const std::vector<Vertex>& labels) {
  PolyMorphism m;
  m.mode = Mode::kPlanar;
  m.vertex_map = labels;
  return m;
}

WellLabelledWitness well_labelled_witness(const LabelledShape& x) {
  WellLabelledWitness w;
  if (!is_valid(x)) return w;
  w.leaf_certificate = is_relative_complex(boundary_map(x.leaves), x.body);
  if (!w.leaf_certificate) return w;
  w.root_certificate = is_relative_complex(boundary_map(x.roots), x.body);
  w.ok = w.root_certificate.has_value();
  return w;
}

bool well_labelled(const LabelledShape& x) { return well_labelled_witness(x).ok; }

}  // namespace shapely
