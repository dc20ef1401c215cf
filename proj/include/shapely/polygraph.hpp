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

// Finite polygraphs: a set of vertices and a set of edges, each edge of
// arity (n, m) carrying an ordered list of n source and m target vertices.
// Symmetric polygraphs are encoded as planar data together with morphisms
// that may permute the ports of each edge.

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "shapely/perm.hpp"

namespace shapely {

enum class Mode { kPlanar, kSymmetric };

const char* mode_name(Mode mode);

using Vertex = std::uint32_t;
using EdgeIndex = std::uint32_t;

struct Arity {
  std::uint32_t in = 0;
  std::uint32_t out = 0;

  auto operator<=>(const Arity&) const = default;
};

struct Edge {
  std::vector<Vertex> sources;
  std::vector<Vertex> targets;

  Arity arity() const {
    return {static_cast<std::uint32_t>(sources.size()),
            static_cast<std::uint32_t>(targets.size())};
  }
  bool operator==(const Edge&) const = default;
};

/// Vertices are the integers [0, vertex_count). Names are optional display
/// ids used by the text format; when empty, ids are generated as v<i>/e<i>.
/// Operations that build new polygraphs never carry names over.
struct Polygraph {
  std::uint32_t vertex_count = 0;
  std::vector<Edge> edges;
  std::vector<std::string> vertex_names;
  std::vector<std::string> edge_names;

  std::uint32_t edge_count() const { return static_cast<std::uint32_t>(edges.size()); }
  std::string vertex_id(Vertex v) const;
  std::string edge_id(EdgeIndex e) const;

  /// Structural equality; names are ignored.
  bool same_structure(const Polygraph& other) const {
    return vertex_count == other.vertex_count && edges == other.edges;
  }
};

/// The representable y_(n,m): n + m distinct vertices and one edge whose
/// sources are vertices 0..n-1 and targets n..n+m-1.
Polygraph representable(std::uint32_t n, std::uint32_t m);

/// The discrete polygraph on k vertices (a sum of k copies of y_star).
Polygraph discrete(std::uint32_t k);

struct Violation {
  std::string code;  // "dangling source", "duplicate edge id", ...
  std::string detail;
};

/// Returns every invariant violation; an empty result means valid.
std::vector<Violation> validate(const Polygraph& p);

/// Where a single edge goes under a morphism. In planar morphisms the two
/// permutations are identities. In symmetric morphisms they satisfy
///   f(s_i(e)) = s_{in_perm(i)}(e')   and   f(t_{out_perm(j)}(e)) = t_j(e').
struct EdgeImage {
  EdgeIndex edge = 0;
  Perm in_perm;
  Perm out_perm;

  bool operator==(const EdgeImage&) const = default;
  auto operator<=>(const EdgeImage&) const = default;
};

struct PolyMorphism {
  Mode mode = Mode::kPlanar;
  std::vector<Vertex> vertex_map;
  std::vector<EdgeImage> edge_map;

  bool operator==(const PolyMorphism& o) const {
    return vertex_map == o.vertex_map && edge_map == o.edge_map;
  }
  auto operator<=>(const PolyMorphism& o) const {
    if (auto c = vertex_map <=> o.vertex_map; c != 0) return c;
    return edge_map <=> o.edge_map;
  }
};

/// Checks that m is a morphism dom -> cod in its mode.
bool is_morphism(const PolyMorphism& m, const Polygraph& dom, const Polygraph& cod);

PolyMorphism identity_morphism(const Polygraph& p, Mode mode = Mode::kPlanar);

/// g after f. The mode is symmetric if either argument is.
PolyMorphism compose(const PolyMorphism& g, const PolyMorphism& f);

/// Inverse of a bijective morphism; nullopt if m is not bijective on cells.
std::optional<PolyMorphism> inverse(const PolyMorphism& m);

bool is_mono(const PolyMorphism& m);
bool is_bijective(const PolyMorphism& m, const Polygraph& cod);

/// A planar morphism given by vertex and edge tables.
PolyMorphism planar_morphism(const Polygraph& dom, std::vector<Vertex> vertex_map,
                             std::vector<EdgeIndex> edge_map);

struct CoproductResult {
  Polygraph sum;
  PolyMorphism left;
  PolyMorphism right;
};

/// Disjoint union: p's cells first, then q's.
CoproductResult coproduct(const Polygraph& p, const Polygraph& q);

/// A span of vertex maps out of a discrete apex (a sum of y_star).
struct DiscreteSpan {
  std::uint32_t apex = 0;
  std::vector<Vertex> left_leg;   // apex -> vertices(p)
  std::vector<Vertex> right_leg;  // apex -> vertices(q)
};

struct PushoutResult {
  Polygraph object;
  PolyMorphism left;   // p -> object
  PolyMorphism right;  // q -> object
};

/// The pushout of p <- apex -> q. Vertices are the quotient of
/// vertices(p) + vertices(q) by left_leg(a) ~ right_leg(a); edges are the
/// disjoint union. New vertex ids follow the order of first occurrence,
/// scanning p's vertices then q's.
PushoutResult pushout_discrete(const Polygraph& p, const Polygraph& q, const DiscreteSpan& span);

/// Constraints pinning the image of selected domain vertices.
using VertexPins = std::vector<std::optional<Vertex>>;

/// Calls visit on every morphism p -> q of the given mode, in the
/// deterministic search order. Returning false from visit stops the search.
/// Edges are matched in order of descending arity (ties by index); vertices
/// untouched by edges are enumerated last in ascending target order.
void for_each_hom(const Polygraph& p, const Polygraph& q, Mode mode, const VertexPins& pins,
                  const std::function<bool(const PolyMorphism&)>& visit);

std::vector<PolyMorphism> hom(const Polygraph& p, const Polygraph& q, Mode mode);
std::vector<PolyMorphism> hom(const Polygraph& p, const Polygraph& q, Mode mode,
                              const VertexPins& pins);

/// The subpolygraph of cells fixed by every element of group, with its
/// inclusion. Throws kNotAutomorphism if an element is not a planar
/// automorphism of p.
struct FixedResult {
  Polygraph fixed;
  PolyMorphism inclusion;
};
FixedResult fixed_subpolygraph(const Polygraph& p, const std::vector<PolyMorphism>& group);

bool is_automorphism(const PolyMorphism& m, const Polygraph& p);

}  // namespace shapely
