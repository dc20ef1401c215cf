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
#include "shapely/cellular.hpp"
#include "shapely/error.hpp"
#include "shapely/labelled.hpp"

using namespace shapely;

namespace {

// Brute force: is the codomain built from the base by some order of
// attachments? Tries every sequence of steps.
bool brute_constructible(const Polygraph& cod, const std::vector<Vertex>& base) {
  std::vector<bool> have_v(cod.vertex_count, false), have_e(cod.edges.size(), false);
  for (auto v : base) {
    if (have_v[v]) return false;
    have_v[v] = true;
  }
  std::function<bool()> go = [&]() {
    bool all = true;
    for (bool b : have_v) all = all && b;
    for (bool b : have_e) all = all && b;
    if (all) return true;
    for (Vertex v = 0; v < cod.vertex_count; ++v) {
      if (have_v[v]) continue;
      have_v[v] = true;
      bool ok = go();
      have_v[v] = false;
      if (ok) return true;
    }
    for (EdgeIndex e = 0; e < cod.edges.size(); ++e) {
      if (have_e[e]) continue;
      for (int side = 0; side < 2; ++side) {
        const auto& att = side == 0 ? cod.edges[e].sources : cod.edges[e].targets;
        const auto& fresh = side == 0 ? cod.edges[e].targets : cod.edges[e].sources;
        bool ok = true;
        for (auto v : att) ok = ok && have_v[v];
        std::vector<Vertex> seen;
        for (auto v : fresh) {
          if (have_v[v] || std::find(seen.begin(), seen.end(), v) != seen.end()) ok = false;
          seen.push_back(v);
        }
        if (!ok) continue;
        have_e[e] = true;
        for (auto v : fresh) have_v[v] = true;
        bool done = go();
        have_e[e] = false;
        for (auto v : fresh) have_v[v] = false;
        if (done) return true;
      }
    }
    return false;
  };
  return go();
}

}  // namespace

TEST_CASE("bordage templates") {
  auto b = polygraph_bordage(2);
  CHECK(b.size() == 1 + 2 * 9);
  for (const auto& t : b) CHECK(is_morphism(t.map, t.domain, t.codomain));
}

TEST_CASE("relative complexes on basic maps") {
  auto c = representable(2, 3);
  auto cert = is_relative_complex(planar_morphism(discrete(2), {0, 1}, {}), c);
  REQUIRE(cert);
  CHECK(cert->steps.size() == 1);
  CHECK(cert->steps[0].kind == AttachKind::kAlongSources);

  auto d = discrete(3);
  auto id = is_relative_complex(planar_morphism(d, {0, 1, 2}, {}), d);
  REQUIRE(id);
  CHECK(id->steps.empty());

  CHECK_FALSE(is_relative_complex(planar_morphism(discrete(2), {0, 0}, {}), representable(2, 0)));
  CHECK_THROWS_AS(is_relative_complex(identity_morphism(c), c), Error);

  for (std::uint32_t n = 0; n <= 3; ++n)
    for (std::uint32_t m = 0; m <= 3; ++m) CHECK(is_finite_complex(representable(n, m)));
  auto empty = is_finite_complex(Polygraph{});
  REQUIRE(empty);
  CHECK(empty->steps.empty());

  auto chain = graft(corolla(1, 1), corolla(1, 1), 1, 1).body;
  auto cc = is_finite_complex(chain);
  REQUIRE(cc);
  CHECK(cc->steps.size() >= 3);
}

TEST_CASE("certificates replay to the codomain and agree with brute force") {
  std::mt19937_64 rng(3);
  int constructible = 0;
  for (int trial = 0; trial < 400; ++trial) {
    auto x = oracle::random_shape(rng, 4, 3, 2);
    auto m = boundary_map(x.leaves);
    auto cert = is_relative_complex(m, x.body);
    CHECK(cert.has_value() == brute_constructible(x.body, x.leaves));
    if (!cert) continue;
    ++constructible;
    CHECK(is_mono(m));
    auto r = replay(*cert, x.body, x.leaves);
    CHECK(is_bijective(r.to_target, x.body));
    LabelledShape rebuilt{r.object, {}, {}}, target{x.body, {}, {}};
    CHECK(are_isomorphic(rebuilt, target, Mode::kPlanar).has_value());
    CHECK(compose(r.to_target, r.base_inclusion).vertex_map == x.leaves);
  }
  CHECK(constructible > 20);
}

TEST_CASE("attaching along a repeated vertex") {
  Polygraph p;
  p.vertex_count = 2;
  p.edges.push_back({{0, 0}, {1}});
  CHECK(is_relative_complex(planar_morphism(discrete(1), {0}, {}), p));
  CHECK_FALSE(is_relative_complex(planar_morphism(discrete(1), {1}, {}), p));
}

TEST_CASE("minimal extensions") {
  auto two = discrete(2), three = discrete(3);
  auto f = planar_morphism(two, {0, 1}, {});
  auto swap = planar_morphism(two, {1, 0}, {});
  auto ext = minimal_extension(f, two, three, swap);
  REQUIRE(ext.tau);
  CHECK(ext.tau->vertex_map == std::vector<Vertex>{1, 0, 2});

  auto same = minimal_extension(f, two, three, identity_morphism(two));
  REQUIRE(same.tau);
  CHECK(*same.tau == identity_morphism(three));

  auto c = representable(2, 0);
  auto none = minimal_extension(f, two, c, swap);
  CHECK_FALSE(none.tau);
  REQUIRE(none.obstruction);
  CHECK(none.obstruction->edge == 0);
  CHECK(none.obstruction->is_source);

  CHECK_THROWS_AS(minimal_extension(planar_morphism(two, {0, 0}, {}), two, three, swap), Error);
  CHECK_THROWS_AS(minimal_extension(f, two, three, planar_morphism(two, {0, 0}, {})), Error);
}
