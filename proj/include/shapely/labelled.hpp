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

// Labelled shapes: a finite polygraph with a sequence of n leaf vertices
// and m root vertices, plus the closure operations used to build wiring
// diagrams (identity, corollas, relabelling, grafting along one or several
// wires, and juxtaposition). All indices in this interface are 1-based to
// match the usual notation for composites g o_{j,i} f.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "shapely/cellular.hpp"
#include "shapely/polygraph.hpp"

namespace shapely {

struct LabelledShape {
  Polygraph body;
  std::vector<Vertex> leaves;
  std::vector<Vertex> roots;

  Arity arity() const {
    return {static_cast<std::uint32_t>(leaves.size()), static_cast<std::uint32_t>(roots.size())};
  }
  bool operator==(const LabelledShape& o) const {
    return body.same_structure(o.body) && leaves == o.leaves && roots == o.roots;
  }
};

/// Structural checks: body valid and labels in range.
bool is_valid(const LabelledShape& x);

/// y_star labelled by its single vertex as leaf and root.
LabelledShape identity_shape();

/// The standard corolla <n,m>: leaves are the sources, roots the targets.
LabelledShape corolla(std::uint32_t n, std::uint32_t m);

/// The (0,0)-shape with empty body.
LabelledShape empty_shape();

/// psi . X . phi: leaves become (l_{phi(1)}, ..., l_{phi(n)}) and roots
/// (r_{psi^-1(1)}, ..., r_{psi^-1(m)}). Permutations are 0-based tables.
LabelledShape relabel(const LabelledShape& x, const Perm& phi, const Perm& psi);

/// A composite together with the two pushout legs out of the pieces.
struct GraftResult {
  LabelledShape shape;
  PolyMorphism from_lower;  // X -> result
  PolyMorphism from_upper;  // Y -> result
};

/// Y o_{j,i} X: root i of X glued to leaf j of Y.
LabelledShape graft(const LabelledShape& y, const LabelledShape& x, std::uint32_t i,
                    std::uint32_t j);
GraftResult graft_with_legs(const LabelledShape& y, const LabelledShape& x, std::uint32_t i,
                            std::uint32_t j);

/// Y o_{J,I} X for the windows I = {i, ..., i+k} on the roots of X and
/// J = {j, ..., j+k} on the leaves of Y: root i+l glued to leaf j+l.
LabelledShape multi_graft(const LabelledShape& y, const LabelledShape& x, std::uint32_t i,
                          std::uint32_t j, std::uint32_t width);
GraftResult multi_graft_with_legs(const LabelledShape& y, const LabelledShape& x,
                                  std::uint32_t i, std::uint32_t j, std::uint32_t width);

/// Y o_{empty} X: X placed alongside Y, leaves (X, Y) and roots (X, Y).
LabelledShape juxtapose(const LabelledShape& y, const LabelledShape& x);
GraftResult juxtapose_with_legs(const LabelledShape& y, const LabelledShape& x);

/// Replaces each edge e with fill[e] != nullptr by a copy of that shape,
/// glueing its leaves onto the sources of e and its roots onto the targets
/// of e. Edges keep their order, a filled edge giving way to the filling's
/// edges in place. Labels are those of x. Vertices are numbered by the
/// least member of each glued class, x's vertices first.
LabelledShape substitute_edges(const LabelledShape& x,
                               const std::vector<const LabelledShape*>& fill);

LabelledShape substitute_edge(const LabelledShape& x, EdgeIndex e, const LabelledShape& y);

/// Both boundary maps n.y_star -> body and m.y_star -> body are finite
/// relative complexes for the bordage generated by vertices and by edges
/// attached along all their sources or all their targets.
bool well_labelled(const LabelledShape& x);

struct WellLabelledWitness {
  bool ok = false;
  std::optional<CellCertificate> leaf_certificate;
  std::optional<CellCertificate> root_certificate;
};
WellLabelledWitness well_labelled_witness(const LabelledShape& x);

/// The boundary morphism k.y_star -> body picking out the given vertices.
PolyMorphism boundary_map(const std::vector<Vertex>& labels);

}  // namespace shapely
