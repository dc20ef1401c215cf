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

// Cell complexes over the polygraph bordage. Level one attaches a lone
// vertex (0 -> y_star); level two attaches an edge of arity (n,m) either
// along all of its sources, creating m fresh targets, or along all of its
// targets, creating n fresh sources. Pushouts are taken along arbitrary
// attaching maps, so attached sides may repeat vertices.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shapely/polygraph.hpp"

namespace shapely {

enum class AttachKind { kVertex, kAlongSources, kAlongTargets };

const char* attach_kind_name(AttachKind kind);

/// One pushout of a bordage map. Cells are named by their ids in the
/// codomain being reconstructed.
struct AttachStep {
  AttachKind kind = AttachKind::kVertex;
  EdgeIndex edge = 0;             // unused for kVertex
  Arity arity;                    // template arity (unused for kVertex)
  std::vector<Vertex> attached;   // existing vertices the template is glued to
  std::vector<Vertex> fresh;      // vertices created by this step

  bool operator==(const AttachStep&) const = default;
};

struct CellCertificate {
  std::uint32_t base_size = 0;  // vertices of the discrete domain
  std::vector<AttachStep> steps;
};

/// The bordage itself, exposed for inspection: level 1 holds the single
/// vertex template, level 2 the two edge templates of each arity.
struct BordageTemplate {
  std::uint32_t level = 1;
  AttachKind kind = AttachKind::kVertex;
  Arity arity;
  Polygraph domain;
  Polygraph codomain;
  PolyMorphism map;
};
std::vector<BordageTemplate> polygraph_bordage(std::uint32_t max_arity);

/// Decides whether m : k.y_star -> cod (planar, from a discrete domain) is
/// a finite relative complex. Returns a certificate on success, nullopt
/// when not constructible. Throws kInvalidMorphism when m is not a planar
/// morphism from a discrete polygraph of size m.vertex_map.size().
std::optional<CellCertificate> is_relative_complex(const PolyMorphism& m, const Polygraph& cod);

/// Relative complex from the empty polygraph.
std::optional<CellCertificate> is_finite_complex(const Polygraph& p);

struct ReplayResult {
  Polygraph object;
  PolyMorphism base_inclusion;  // k.y_star -> object
  PolyMorphism to_target;       // object -> the polygraph the steps name
};

/// Rebuilds the polygraph by performing the steps as pushouts from the
/// discrete base. Throws kInvalidMorphism when a step does not apply.
ReplayResult replay(const CellCertificate& cert, const Polygraph& target,
                    const std::vector<Vertex>& base_images);

/// Witness that the minimal-extension condition fails: an edge outside
/// the image of f with an incident vertex in the image that is not the
/// image of a sigma-fixed vertex.
struct ExtensionObstruction {
  EdgeIndex edge = 0;
  bool is_source = true;
  std::uint32_t position = 0;  // 0-based port
  Vertex vertex = 0;
};

struct MinimalExtension {
  std::optional<PolyMorphism> tau;
  std::optional<ExtensionObstruction> obstruction;
};

/// The unique automorphism tau of cod with tau.f = f.sigma that acts as
/// the identity off the image of f, when it exists. f must be a planar
/// mono dom -> cod and sigma a planar automorphism of dom.
MinimalExtension minimal_extension(const PolyMorphism& f, const Polygraph& dom,
                                   const Polygraph& cod, const PolyMorphism& sigma);

/// Cell classes of the coequalizer of f and f.sigma: vertex and edge
/// class ids of cod.
struct CellQuotient {
  std::vector<std::uint32_t> vertex_class;
  std::vector<std::uint32_t> edge_class;
};
CellQuotient coequalizer(const PolyMorphism& f, const PolyMorphism& f_sigma,
                         const Polygraph& cod);

/// True iff q.tau = q for the coequalizer q of (f, f.sigma).
bool fixes_coequalizer(const PolyMorphism& tau, const CellQuotient& q);

}  // namespace shapely
