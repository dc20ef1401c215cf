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
#include "shapely/labelled.hpp"

using namespace shapely;

TEST_CASE("planar and symmetric digests of a swapped corolla") {
  auto c = corolla(2, 0);
  auto s = relabel(c, {1, 0}, {});
  CHECK(canonical_form(c, Mode::kPlanar).digest != canonical_form(s, Mode::kPlanar).digest);
  CHECK(canonical_form(c, Mode::kSymmetric).digest == canonical_form(s, Mode::kSymmetric).digest);
  CHECK_FALSE(are_isomorphic(c, s, Mode::kPlanar));
  auto w = are_isomorphic(c, s, Mode::kSymmetric);
  REQUIRE(w);
  CHECK(is_label_preserving_iso(*w, c, s, Mode::kSymmetric));
  CHECK(canonical_form(c, Mode::kPlanar).digest.hex().size() == 32);
}

TEST_CASE("isomorphism basics") {
  auto x = graft(corolla(1, 2), corolla(2, 1), 1, 1);
  auto w = are_isomorphic(x, x, Mode::kPlanar);
  REQUIRE(w);
  CHECK(*w == identity_morphism(x.body));
  CHECK_FALSE(are_isomorphic(graft(corolla(1, 1), corolla(1, 1), 1, 1), corolla(1, 1), Mode::kPlanar));
}

TEST_CASE("canonical forms under random shuffles") {
  std::mt19937_64 rng(23);
  for (Mode mode : {Mode::kPlanar, Mode::kSymmetric}) {
    for (int trial = 0; trial < 300; ++trial) {
      auto x = oracle::random_shape(rng, 4, 3, 2);
      auto y = oracle::shuffle(x, mode, rng);
      auto cx = canonical_form(x, mode);
      auto cy = canonical_form(y, mode);
      CHECK(cx.digest == cy.digest);
      CHECK(cx.shape == cy.shape);
      CHECK(shape_from_certificate(cx.certificate) == cx.shape);
      CHECK(is_label_preserving_iso(cx.witness, x, cx.shape, mode));
      CHECK(is_label_preserving_iso(cy.witness, y, cy.shape, mode));
      auto group = label_preserving_automorphisms(x, mode);
      CHECK(group.order() == raw_automorphism_count(x, mode));
      CHECK(group.order() == oracle::brute_automorphisms(x, mode));
      for (const auto& a : group.elements)
        for (const auto& b : group.elements) CHECK(group.contains(compose(a, b)));
    }
  }
}

TEST_CASE("certificates separate non-isomorphic shapes") {
  std::mt19937_64 rng(29);
  int agree = 0;
  for (Mode mode : {Mode::kPlanar, Mode::kSymmetric}) {
    for (int trial = 0; trial < 1500; ++trial) {
      auto x = oracle::random_shape(rng, 3, 2, 2);
      auto y = oracle::random_shape(rng, 3, 2, 2);
      bool equal = certificate_of(x, mode) == certificate_of(y, mode);
      CHECK(equal == oracle::brute_isomorphic(x, y, mode));
      agree += equal;
    }
  }
  CHECK(agree > 0);
}

TEST_CASE("planar automorphisms embed in symmetric ones") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    auto x = oracle::random_shape(rng, 4, 3, 2);
    auto planar = label_preserving_automorphisms(x, Mode::kPlanar);
    auto symmetric = label_preserving_automorphisms(x, Mode::kSymmetric);
    for (auto a : planar.elements) {
      a.mode = Mode::kSymmetric;
      CHECK(symmetric.contains(a));
    }
  }
}

TEST_CASE("orbit morphisms") {
  auto r = juxtapose(corolla(0, 0), corolla(0, 0));
  auto g = label_preserving_automorphisms(r, Mode::kPlanar);
  auto f = identity_morphism(r.body);
  CHECK(orbit_equal(f, g.elements[1], g));
  CHECK(orbit_morphism_valid(f, g, g));
  auto triv = trivial_group(r.body, Mode::kPlanar);
  CHECK_FALSE(orbit_morphism_valid(f, triv, g));
  CHECK(orbit_morphism_valid(f, triv, triv));

  auto x = graft(corolla(1, 2), corolla(2, 1), 1, 1);
  auto sx = label_preserving_automorphisms(x, Mode::kPlanar);
  for (Vertex v : x.leaves) {
    auto leaf = planar_morphism(discrete(1), {v}, {});
    CHECK(orbit_morphism_valid(leaf, trivial_group(discrete(1), Mode::kPlanar), sx));
  }
}
