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

// Canonical forms and automorphism groups of labelled shapes.
//
// Planar shapes whose cells are all reachable from the labels, and where
// no vertex sits at the same port of two edges, are numbered by a
// breadth-first walk from the labels; such shapes have no non-trivial
// label preserving automorphisms. Everything else goes through refinement:
// vertices and edges are refined together by colour (arity, label
// positions, incidences) and remaining ties are broken by individualising
// one cell member at a time. Every leaf of the search tree gives an
// ordering of the cells, and the least resulting certificate wins. In
// symmetric mode edges carry port multisets rather than sequences, so port
// order is normalised by sorting. The two routes tag their certificates
// differently, and which route applies is itself an isomorphism invariant.

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "shapely/labelled.hpp"
#include "shapely/polygraph.hpp"

namespace shapely {

/// Complete isomorphism invariant, stored as a compact byte string. Equal
/// certificates mean isomorphic shapes in the mode they were computed in.
/// A shape certificate also spells out the canonical shape itself, see
/// shape_from_certificate.
using Certificate = std::string;

struct Digest {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;

  auto operator<=>(const Digest&) const = default;
  std::string hex() const;  // 32 lowercase hex digits
};

Digest digest_of(const Certificate& cert);

struct CertificateHash {
  std::size_t operator()(const Certificate& c) const { return std::hash<std::string>{}(c); }
};

/// Rebuilds the canonical shape a certificate describes.
LabelledShape shape_from_certificate(const Certificate& cert);

struct CertificateHeader {
  std::uint32_t vertex_count = 0;
  std::uint32_t edge_count = 0;
  Arity arity;
};

/// Counts read off the front of a shape certificate without decoding it.
CertificateHeader certificate_header(const Certificate& cert);

/// A finite group of automorphisms, stored by its elements. elements[0] is
/// the identity.
struct PermGroup {
  std::vector<PolyMorphism> elements;
  std::vector<PolyMorphism> generators;

  std::size_t order() const { return elements.size(); }
  bool contains(const PolyMorphism& m) const;
};

/// Builds the group from explicit elements (which must already be closed).
/// Elements are sorted after the identity and a small generating set is
/// chosen greedily.
PermGroup make_group(std::vector<PolyMorphism> elements, const Polygraph& carrier, Mode mode);

/// The trivial group on p.
PermGroup trivial_group(const Polygraph& p, Mode mode);

struct CanonicalForm {
  LabelledShape shape;
  PolyMorphism witness;  // input body -> shape.body, label preserving
  Certificate certificate;
  Digest digest;
};

CanonicalForm canonical_form(const LabelledShape& x, Mode mode);

/// Only the certificate; cheaper when the shape itself is not needed.
Certificate certificate_of(const LabelledShape& x, Mode mode);

/// Canonical form of a polygraph with coloured vertices. The certificate
/// includes the colours.
struct ColouredCanon {
  Certificate certificate;
  std::vector<Vertex> vertex_order;  // new id -> old vertex
};
ColouredCanon canonical_coloured(const Polygraph& p, const std::vector<std::uint32_t>& colours,
                                 Mode mode);

/// A label preserving isomorphism x -> y, or nullopt.
std::optional<PolyMorphism> are_isomorphic(const LabelledShape& x, const LabelledShape& y,
                                           Mode mode);

PermGroup label_preserving_automorphisms(const LabelledShape& x, Mode mode);

/// Counts label preserving self-isomorphisms by direct morphism search,
/// without refinement. Used to cross-check the group order.
std::size_t raw_automorphism_count(const LabelledShape& x, Mode mode);

/// True iff f is a label preserving morphism x -> y in the mode.
bool is_label_preserving_iso(const PolyMorphism& f, const LabelledShape& x,
                             const LabelledShape& y, Mode mode);

/// Condition for [f] : (A, G) -> (B, H) to be a morphism of objects with
/// group actions: every tau in H has some sigma in G with tau.f = f.sigma.
bool orbit_morphism_valid(const PolyMorphism& f, const PermGroup& g, const PermGroup& h);

/// True iff f2 = f1.sigma for some sigma in G.
bool orbit_equal(const PolyMorphism& f1, const PolyMorphism& f2, const PermGroup& g);

/// The least element of the orbit {f.sigma : sigma in G}.
PolyMorphism orbit_min(const PolyMorphism& f, const PermGroup& g);

}  // namespace shapely
