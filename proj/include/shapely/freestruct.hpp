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


// Free polycategories, properads and PROPs on a polygraph, their
// operations, and a randomized checker for the polycategory axioms.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shapely/canon.hpp"
#include "shapely/labelled.hpp"
#include "shapely/perm.hpp"
#include "shapely/polygraph.hpp"
#include "shapely/shapes.hpp"

namespace shapely {

/// kTree is the polycategory case.
const char* structure_kind_name(ShapeClass kind);  // polycat, properad, prop
std::optional<ShapeClass> parse_structure_kind(const std::string& name);

/// A morphism of a free structure: a shape T, given by its canonical
/// certificate, and the orbit of a map from T's body into the base under
/// T's label preserving automorphisms, stored as the least member.
struct Morphism {
  Mode mode = Mode::kPlanar;
  Certificate shape;
  Digest digest;  // of the shape
  PolyMorphism representative;
  std::vector<Vertex> source;  // images of the leaves
  std::vector<Vertex> target;  // images of the roots

  bool operator==(const Morphism& o) const {
    return shape == o.shape && representative == o.representative;
  }
  bool operator<(const Morphism& o) const {
    if (digest != o.digest) return digest < o.digest;
    if (shape != o.shape) return shape < o.shape;
    return representative < o.representative;
  }
};

/// Digest of the whole class, shape and representative.
Digest morphism_digest(const Morphism& m);

/// Canonicalises (T, f) for any labelled shape T and map f: body(T) -> base.
Morphism make_morphism(const LabelledShape& t, const PolyMorphism& f, Mode mode);

LabelledShape morphism_shape(const Morphism& m);

Morphism identity(Vertex v, Mode mode);
Morphism empty_morphism(Mode mode);

/// g o_{j,i} f: output i of f fed into input j of g (1-based). The result has
/// inputs (C_<j, A, C_>j) and outputs (B_<i, D, B_>i) for f: A -> B and
/// g: C -> D. Throws kTypeMismatch when B_i != C_j, kIndexOutOfRange for bad
/// indices.
Morphism compose(const Morphism& g, const Morphism& f, std::uint32_t j, std::uint32_t i);

/// Outputs i..i+width-1 of f fed into inputs j..j+width-1 of g. Properads
/// and PROPs.
Morphism multi_compose(ShapeClass kind, const Morphism& g, const Morphism& f, std::uint32_t j,
                       std::uint32_t i, std::uint32_t width);

/// f beside g: inputs (A, C), outputs (B, D). PROPs only.
Morphism juxtapose_morphisms(ShapeClass kind, const Morphism& f, const Morphism& g);

/// psi . f . phi. Throws kArityMismatch for permutations of the wrong size.
Morphism exchange(const Morphism& f, const Perm& phi, const Perm& psi);

struct HomKey {
  std::vector<Vertex> source;
  std::vector<Vertex> target;
  auto operator<=>(const HomKey&) const = default;
};

struct FreeStructure {
  ShapeClass kind = ShapeClass::kTree;
  Mode mode = Mode::kPlanar;
  Polygraph base;
  Bounds bounds;
  std::map<HomKey, std::vector<Morphism>> homs;  // each sorted, no empty entries

  const std::vector<Morphism>& hom(const std::vector<Vertex>& source,
                                   const std::vector<Vertex>& target) const;
  std::size_t size() const;
};

/// The morphisms of the free structure whose shapes lie within the bounds.
FreeStructure free_structure(ShapeClass kind, const Polygraph& base, const Bounds& bounds,
                             Mode mode);

struct AxiomOptions {
  std::size_t trials = 1000;  // per axiom
  std::uint64_t seed = 0;
  // Negative control: leave out the permutation psi in left interchange.
  bool drop_interchange_permutation = false;
  std::size_t max_counterexamples = 5;
  // Instances whose composites have more edges are drawn again. Automorphism
  // groups of composites grow quickly (k equal closed components give k!).
  // 0: twice the structure's edge bound.
  std::uint32_t max_composite_edges = 0;
  unsigned threads = 0;  // 0: SHAPELY_THREADS or the hardware
};

struct AxiomInstance {
  std::vector<std::pair<std::string, std::string>> bindings;
  Digest lhs;
  Digest rhs;
};

struct AxiomTally {
  std::string axiom;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::vector<AxiomInstance> counterexamples;
};

struct AxiomReport {
  ShapeClass kind = ShapeClass::kTree;
  Mode mode = Mode::kPlanar;
  std::uint64_t seed = 0;
  bool mutation = false;
  std::vector<AxiomTally> axioms;

  std::size_t failures() const;
};

/// Samples instances of each axiom from the hom tables of s and compares
/// both sides. The unit, associativity, interchange, action and
/// equivariance axioms are checked for every kind; window associativity for
/// properads and PROPs; juxtaposition laws for PROPs. Axioms without any
/// instance in s report zero trials.
AxiomReport check_axioms(const FreeStructure& s, const AxiomOptions& options);

}  // namespace shapely
