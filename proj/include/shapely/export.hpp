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


// JSON views of library values, with stable key order. Vertex and edge ids
// come from the polygraphs' names where they have them.

#pragma once

#include "json.hpp"
#include "shapely/canon.hpp"
#include "shapely/cellular.hpp"
#include "shapely/freestruct.hpp"
#include "shapely/shapely.hpp"

namespace shapely {

using Json = nlohmann::ordered_json;

Json bounds_json(const Bounds& b);
Json polygraph_json(const Polygraph& p);
/// Shape bodies are written by vertex index.
Json shape_json(const LabelledShape& x);
/// The morphism as cell tables into cod; port permutations in symmetric mode.
Json morphism_json(const PolyMorphism& m, const Polygraph& cod);
Json group_json(const PermGroup& g, Mode mode);

Json functor_json(const ShapelyFunctor& f);
Json evaluation_json(const Evaluation& ev, const Polygraph& a, Mode mode);
Json spectrum_json(const SpectrumData& s);
Json free_structure_json(const FreeStructure& s);
Json axiom_report_json(const AxiomReport& r);
Json canonical_json(const CanonicalForm& cf, const PermGroup& automorphisms, Mode mode);
Json minimal_extension_json(const MinimalExtension& ext, const Polygraph& cod);

}  // namespace shapely
