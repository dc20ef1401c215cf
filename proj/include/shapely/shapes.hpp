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

// Recognisers for polycategorical trees, properadic graphs and PROP
// graphs, and brute-force enumerators that build every labelled shape of
// a class directly from edge wirings. The enumerators never graft, so they
// can serve as a reference for anything generated by substitution.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shapely/canon.hpp"
#include "shapely/labelled.hpp"
#include "shapely/polygraph.hpp"

namespace shapely {

/// Truncation used throughout: at most max_edges edges, every edge of
/// arity (n,m) with n,m <= max_arity, and the shape itself of arity
/// (n,m) with n,m <= max_arity.
struct Bounds {
  std::uint32_t max_edges = 0;
  std::uint32_t max_arity = 0;

  bool operator==(const Bounds&) const = default;
};

bool within_bounds(const LabelledShape& x, const Bounds& b);

enum class ShapeClass { kTree, kProperad, kProp };

const char* shape_class_name(ShapeClass c);
std::optional<ShapeClass> parse_shape_class(const std::string& name);

/// The incidence multigraph: one arc per (vertex, edge, side, port).
/// Source arcs point from the vertex into the edge, target arcs out of it.
struct IncidenceGraph {
  struct Arc {
    Vertex vertex = 0;
    EdgeIndex edge = 0;
    bool is_source = true;
    std::uint32_t position = 0;
  };
  std::uint32_t vertex_count = 0;
  std::uint32_t edge_count = 0;
  std::vector<Arc> arcs;

  /// Node ids: vertices first, then edges offset by vertex_count.
  bool connected() const;
  bool undirected_acyclic() const;
  bool directed_acyclic() const;
};

IncidenceGraph incidence_graph(const Polygraph& p);

/// Each vertex is a source of at most one edge and a target of at most one
/// edge, counting repeated ports separately.
bool degrees_at_most_one(const Polygraph& p);

/// Leaves enumerate the vertices that are targets of no edge, roots the
/// vertices that are sources of no edge, without repetition.
bool labels_enumerate_boundary(const LabelledShape& x);

bool is_polycat_tree(const LabelledShape& x);
bool is_properadic_graph(const LabelledShape& x);
bool is_prop_graph(const LabelledShape& x);
bool recognises(ShapeClass c, const LabelledShape& x);

/// Canonical certificates per arity, each list sorted by digest. Shapes
/// are recovered with shape_from_certificate.
using ShapeCatalog = std::map<Arity, std::vector<Certificate>>;

/// Sorts by digest, ties by certificate.
void sort_by_digest(std::vector<Certificate>& certs);

/// Every labelled shape of the class at arity (n,m) with at most max_edges
/// edges of arity at most max_arity, up to isomorphism in the mode, sorted
/// by digest.
std::vector<Certificate> enumerate_shapes(ShapeClass c, std::uint32_t n, std::uint32_t m,
                                          std::uint32_t max_edges, std::uint32_t max_arity,
                                          Mode mode);

/// enumerate_shapes for every arity within the bounds.
ShapeCatalog enumerate_class(ShapeClass c, const Bounds& b, Mode mode);

/// Every labelled polygraph with at most max_vertices vertices, within the
/// bounds, with pairwise distinct leaves and pairwise distinct roots,
/// passing keep; canonical and sorted by digest per arity. No structural
/// assumptions are made about the body.
ShapeCatalog enumerate_labelled(
    const Bounds& b, std::uint32_t max_vertices, Mode mode,
    const std::function<bool(const LabelledShape&)>& keep);

/// A decomposition of a tree with at least two edges as a graft: the shape
/// is isomorphic to relabel(graft(upper, lower, i, j), phi, psi), with both
/// pieces trees with fewer edges.
struct GraftDecomposition {
  LabelledShape upper;
  LabelledShape lower;
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  Perm phi;
  Perm psi;
};
std::optional<GraftDecomposition> decompose_tree(const LabelledShape& x);

}  // namespace shapely
