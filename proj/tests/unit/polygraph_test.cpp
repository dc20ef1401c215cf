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

#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "shapely/canon.hpp"
#include "shapely/error.hpp"
#include "shapely/labelled.hpp"
#include "shapely/polygraph.hpp"

using namespace shapely;

namespace {

Polygraph one_edge(std::vector<Vertex> src, std::vector<Vertex> tgt, std::uint32_t vertices) {
  Polygraph p;
  p.vertex_count = vertices;
  p.edges.push_back({std::move(src), std::move(tgt)});
  return p;
}

}  // namespace

TEST_CASE("validate reports dangling references and duplicate ids") {
  CHECK(validate(corolla(2, 1).body).empty());
  auto bad = one_edge({0, 5}, {1}, 2);
  auto v = validate(bad);
  REQUIRE(v.size() == 1);
  CHECK(v[0].code == "dangling source");

  Polygraph dup = corolla(1, 1).body;
  dup.edges.push_back(dup.edges[0]);
  dup.edge_names = {"e", "e"};
  auto w = validate(dup);
  REQUIRE(!w.empty());
  CHECK(w[0].code == "duplicate edge id");
}

TEST_CASE("coproduct adds cells") {
  auto r = coproduct(representable(0, 0), representable(0, 0));
  CHECK(r.sum.vertex_count == 0);
  CHECK(r.sum.edge_count() == 2);
  auto s = coproduct(representable(1, 1), representable(2, 1));
  CHECK(s.sum.vertex_count == 5);
  CHECK(s.sum.edge_count() == 2);
  CHECK(is_mono(s.left));
  CHECK(is_mono(s.right));
  CHECK(is_morphism(s.left, representable(1, 1), s.sum));
  CHECK(is_morphism(s.right, representable(2, 1), s.sum));
  auto u = coproduct(representable(2, 1), Polygraph{});
  CHECK(u.sum.same_structure(representable(2, 1)));
}

TEST_CASE("discrete pushouts") {
  auto c = representable(1, 1);
  DiscreteSpan chain{1, {1}, {0}};
  auto po = pushout_discrete(c, c, chain);
  CHECK(po.object.vertex_count == 3);
  CHECK(po.object.edge_count() == 2);
  CHECK(compose(po.left, planar_morphism(discrete(1), {1}, {})) ==
        compose(po.right, planar_morphism(discrete(1), {0}, {})));

  DiscreteSpan two{2, {0, 1}, {0, 1}};
  auto pr = pushout_discrete(representable(0, 2), representable(2, 0), two);
  CHECK(pr.object.vertex_count == 2);
  CHECK(pr.object.edge_count() == 2);

  auto empty = pushout_discrete(c, c, DiscreteSpan{});
  CHECK(empty.object.vertex_count == 4);

  // Swapping legs gives an isomorphic result.
  DiscreteSpan swapped{1, {0}, {1}};
  auto po2 = pushout_discrete(c, c, swapped);
  LabelledShape a{po.object, {}, {}}, b{po2.object, {}, {}};
  CHECK(are_isomorphic(a, b, Mode::kPlanar).has_value());
}

TEST_CASE("hom counts agree with brute force") {
  auto a = one_edge({0, 1}, {2}, 3);
  CHECK(hom(representable(2, 1), a, Mode::kPlanar).size() == 1);
  CHECK(hom(representable(2, 1), a, Mode::kSymmetric).size() == 2);
  auto a2 = one_edge({0, 0}, {1}, 2);
  CHECK(hom(representable(2, 1), a2, Mode::kSymmetric).size() == 2);
  CHECK(hom(discrete(1), a, Mode::kPlanar).size() == 3);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    auto p = oracle::random_shape(rng, 3, 2, 2).body;
    auto q = oracle::random_shape(rng, 3, 3, 2).body;
    auto planar = hom(p, q, Mode::kPlanar);
    auto symmetric = hom(p, q, Mode::kSymmetric);
    CHECK(planar.size() == oracle::count_homs(p, q, Mode::kPlanar));
    CHECK(symmetric.size() == oracle::count_homs(p, q, Mode::kSymmetric));
    CHECK(symmetric.size() >= planar.size());
    for (const auto& m : symmetric) CHECK(is_morphism(m, p, q));
  }
}

TEST_CASE("hom composition and identities") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    auto p = oracle::random_shape(rng, 2, 1, 2).body;
    auto q = oracle::random_shape(rng, 3, 2, 2).body;
    auto r = oracle::random_shape(rng, 3, 2, 2).body;
    for (Mode mode : {Mode::kPlanar, Mode::kSymmetric}) {
      auto pq = hom(p, q, mode);
      auto qr = hom(q, r, mode);
      for (const auto& f : pq) {
        CHECK(compose(identity_morphism(q, mode), f) == f);
        CHECK(compose(f, identity_morphism(p, mode)) == f);
        for (const auto& g : qr) CHECK(is_morphism(compose(g, f), p, r));
      }
    }
  }
}

TEST_CASE("monos and fixed subpolygraphs") {
  CHECK(is_mono(coproduct(discrete(1), discrete(1)).left));
  CHECK_FALSE(is_mono(planar_morphism(discrete(2), {0, 0}, {})));

  auto two = discrete(2);
  auto swap = planar_morphism(two, {1, 0}, {});
  auto fixed = fixed_subpolygraph(two, {identity_morphism(two), swap});
  CHECK(fixed.fixed.vertex_count == 0);
  auto three = discrete(3);
  auto swap3 = planar_morphism(three, {1, 0, 2}, {});
  auto f3 = fixed_subpolygraph(three, {identity_morphism(three), swap3});
  CHECK(f3.fixed.vertex_count == 1);
  CHECK(f3.inclusion.vertex_map == std::vector<Vertex>{2});
  CHECK(fixed_subpolygraph(three, {identity_morphism(three)}).fixed.vertex_count == 3);
  CHECK_THROWS_AS(fixed_subpolygraph(three, {planar_morphism(three, {0, 0, 1}, {})}), Error);
}
