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


// Shapely functors as sets of canonical well-labelled shapes per arity,
// with join, substitution composite and the free monad closure, evaluation
// on a polygraph and export of the spectrum with its exponents.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_set>
#include <vector>

#include "shapely/canon.hpp"
#include "shapely/labelled.hpp"
#include "shapely/polygraph.hpp"
#include "shapely/shapes.hpp"

namespace shapely {

using CertificateSet = std::unordered_set<Certificate, CertificateHash>;

struct ShapelyFunctor {
  Mode mode = Mode::kPlanar;
  Bounds bounds;
  std::map<Arity, CertificateSet> shapes;  // no empty entries
  bool non_degenerate = true;
  // Set by sigma: the shapes are the truncation of the whole generator
  // signature of this class, which free_monad closes before truncating.
  std::optional<ShapeClass> signature;

  std::size_t size() const;
  bool contains(const Certificate& cert) const;
  bool contains(const LabelledShape& x) const;
  /// Adds a canonical certificate; true if it was new.
  bool insert(const Certificate& cert);
  /// Certificates at one arity, sorted by digest.
  std::vector<Certificate> sorted(Arity a) const;
  /// All certificates, by arity then digest.
  std::vector<Certificate> sorted() const;

  bool operator==(const ShapelyFunctor& o) const {
    return mode == o.mode && bounds == o.bounds && shapes == o.shapes;
  }
};

/// Canonicalises and dedupes. Shapes must be well labelled and within the
/// bounds. Symmetric functors are closed under relabelling.
ShapelyFunctor from_shapes(const std::vector<LabelledShape>& shapes, Mode mode,
                           const Bounds& bounds);

/// The standard corollas within the bounds (all their relabellings in
/// symmetric mode, which are isomorphic to them).
ShapelyFunctor identity_functor(Mode mode, const Bounds& bounds);

/// Generators of the free polycategory, properad and PROP monads: id, the
/// relabelled corollas and the two-corolla composites of the class (single
/// grafts; grafts along windows; also juxtapositions and the empty shape),
/// truncated to the bounds. The result remembers its class.
ShapelyFunctor sigma(ShapeClass c, Mode mode, const Bounds& bounds);
inline ShapelyFunctor sigma_polycat(const Bounds& b, Mode mode = Mode::kPlanar) {
  return sigma(ShapeClass::kTree, mode, b);
}
inline ShapelyFunctor sigma_properad(const Bounds& b, Mode mode = Mode::kPlanar) {
  return sigma(ShapeClass::kProperad, mode, b);
}
inline ShapelyFunctor sigma_prop(const Bounds& b, Mode mode = Mode::kPlanar) {
  return sigma(ShapeClass::kProp, mode, b);
}

ShapelyFunctor join(const ShapelyFunctor& f, const ShapelyFunctor& g);
bool leq(const ShapelyFunctor& f, const ShapelyFunctor& g);

/// The composite F.G: every shape of F with each edge replaced by a shape
/// of G of the same arity, truncated to the bounds. Shapes of F without
/// edges pass through.
ShapelyFunctor substitute(const ShapelyFunctor& f, const ShapelyFunctor& g);

enum class ClosureStrategy {
  kAuto,
  // Worklist closure of id v F under substituting one edge at a time.
  kDirect,
  // The same closure computed on classes up to relabelling and port
  // reordering, then expanded. Needs every relabelled corolla in id v F.
  kOrbit,
};

/// Least functor containing id and F and closed under substitution, within
/// the bounds. For a signature functor the closure is taken over the whole
/// signature, wider than the bounds, and truncated afterwards: a shape
/// within the bounds may only split into pieces that are not.
ShapelyFunctor free_monad(const ShapelyFunctor& f,
                          ClosureStrategy strategy = ClosureStrategy::kAuto);

/// True iff id v F contains every relabelling of every corolla within the
/// bounds, the precondition of ClosureStrategy::kOrbit.
bool has_all_relabelled_corollas(const ShapelyFunctor& f);

struct EvaluationClass {
  Certificate shape;
  Digest digest;
  PolyMorphism representative;  // least member of the orbit
  std::size_t orbit_size = 0;
  std::vector<Vertex> leaf_images;
  std::vector<Vertex> root_images;
};

struct Evaluation {
  std::uint32_t star = 0;  // vertices of A
  std::map<Arity, std::vector<EvaluationClass>> classes;  // by digest, then representative
};

/// FA(n,m): for every shape X of F, the morphisms from X's body into A up
/// to precomposition with X's label preserving automorphisms.
Evaluation evaluate(const ShapelyFunctor& f, const Polygraph& a);

struct BoundaryArrow {
  bool leaf = true;
  std::uint32_t index = 0;  // 1-based
  PolyMorphism map;          // point -> body
  bool valid = false;        // orbit_morphism_valid against the group
};

struct SpectrumEntry {
  Certificate certificate;
  Digest digest;
  LabelledShape shape;
  PermGroup group;
  std::vector<BoundaryArrow> arrows;
  // Symmetric mode: digests of the shape after each adjacent transposition
  // of leaves, then of roots.
  std::vector<Digest> leaf_actions;
  std::vector<Digest> root_actions;
};

struct SpectrumData {
  Mode mode = Mode::kPlanar;
  Bounds bounds;
  std::uint32_t star = 1;
  std::map<Arity, std::vector<SpectrumEntry>> stages;

  std::size_t size() const;
};

SpectrumData spectrum(const ShapelyFunctor& f);

/// Every well-labelled shape within the bounds, from the unstructured
/// enumerator filtered by well_labelled.
ShapelyFunctor universal_functor(Mode mode, const Bounds& bounds);
SpectrumData universal_spectrum(const Bounds& bounds, Mode mode);

}  // namespace shapely
