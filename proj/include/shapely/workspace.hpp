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


// Named polygraphs, shapes, morphisms and functors read from a line based
// text format:
//
//   # comment
//   polygraph A
//   vertex a b c
//   edge e : (a, b) -> (c)
//   shape s of A : leaves (a b) roots (c)
//   morphism f : A -> B : vertices (x y z) edges (d)
//   functor F mode planar bounds 2 2 : s t
//
// Vertex and edge lines belong to the polygraph declared last. Ids in lists
// are separated by blanks or commas. A morphism lists the images of the
// domain's vertices, then of its edges, in declaration order.

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "shapely/labelled.hpp"
#include "shapely/polygraph.hpp"
#include "shapely/shapely.hpp"

namespace shapely {

struct NamedShape {
  std::string name;
  std::string polygraph;
  LabelledShape shape;
};

struct NamedMorphism {
  std::string name;
  std::string dom;
  std::string cod;
  PolyMorphism map;
};

struct NamedFunctor {
  std::string name;
  std::vector<std::string> shapes;
  ShapelyFunctor functor;
};

class Workspace {
 public:
  enum class Kind { kPolygraph, kShape, kMorphism, kFunctor };

  /// Adds the declarations in text. On error nothing is added and an Error
  /// is thrown whose message starts with "<source>:<line>:<column>: ".
  void parse(std::string_view text, const std::string& source = "<input>");
  void load_file(const std::string& path);

  /// Text that parses back to the same declarations.
  std::string serialize() const;

  bool has(const std::string& name) const { return index_.count(name) > 0; }
  const Polygraph& polygraph(const std::string& name) const;
  const NamedShape& shape(const std::string& name) const;
  const NamedMorphism& morphism(const std::string& name) const;
  const NamedFunctor& functor(const std::string& name) const;

  /// Names of one kind, in declaration order.
  std::vector<std::string> names(Kind kind) const;

 private:
  std::vector<std::pair<std::string, Polygraph>> polygraphs_;
  std::vector<NamedShape> shapes_;
  std::vector<NamedMorphism> morphisms_;
  std::vector<NamedFunctor> functors_;
  std::vector<std::pair<Kind, std::size_t>> order_;
  std::map<std::string, std::pair<Kind, std::size_t>> index_;

  friend class WorkspaceParser;
};

}  // namespace shapely
