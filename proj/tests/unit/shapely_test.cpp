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
#include "shapely/error.hpp"
#include "shapely/perm.hpp"
#include "shapely/shapely.hpp"

using namespace shapely;

namespace {

ShapelyFunctor from_catalog(const ShapeCatalog& cat, Mode mode, const Bounds& b) {
  ShapelyFunctor f;
  f.mode = mode;
  f.bounds = b;
  for (const auto& [a, list] : cat)
    for (const auto& c : list) f.insert(c);
  return f;
}

// Each shape of `pool` kept with probability p; edgeless shapes dropped when
// `edgeful` is set.
ShapelyFunctor random_sub(const ShapelyFunctor& pool, double p, std::mt19937& rng,
                          bool edgeful = false) {
  ShapelyFunctor f;
  f.mode = pool.mode;
  f.bounds = pool.bounds;
  std::bernoulli_distribution keep(p);
  for (const auto& c : pool.sorted()) {
    if (edgeful && certificate_header(c).edge_count == 0) continue;
    if (!keep(rng)) continue;
    if (pool.mode == Mode::kSymmetric) {
      // keep whole relabelling classes
      auto x = shape_from_certificate(c);
      f = join(f, from_shapes({x}, f.mode, f.bounds));
    } else {
      f.insert(c);
    }
  }
  return f;
}

ShapelyFunctor relabelled_corollas(Mode mode, const Bounds& b) {
  std::vector<LabelledShape> out;
  for (std::uint32_t n = 0; n <= b.max_arity; ++n)
    for (std::uint32_t m = 0; m <= b.max_arity; ++m)
      for (const auto& phi : all_perms(n))
        for (const auto& psi : all_perms(m)) out.push_back(relabel(corolla(n, m), phi, psi));
  return from_shapes(out, mode, b);
}

LabelledShape chain(std::uint32_t k) {
  LabelledShape x;
  x.body.vertex_count = k + 1;
  for (std::uint32_t i = 0; i < k; ++i) x.body.edges.push_back({{i}, {i + 1}});
  x.leaves = {0};
  x.roots = {k};
  return x;
}

}  // namespace

TEST_CASE("from_shapes dedupes and checks its input") {
  Bounds b{2, 2};
  auto c = corolla(2, 1);
  auto f = from_shapes({c, c, relabel(c, {1, 0}, {0})}, Mode::kPlanar, b);
  CHECK(f.size() == 2);
  auto g = from_shapes({c, relabel(c, {1, 0}, {0})}, Mode::kSymmetric, b);
  CHECK(g.size() == 1);
  CHECK(from_shapes({c}, Mode::kSymmetric, b) == g);

  auto bad = corolla(2, 1);
  bad.leaves = {0, 0};
  CHECK_THROWS_AS(from_shapes({bad}, Mode::kPlanar, b), Error);
  try {
    from_shapes({chain(3)}, Mode::kPlanar, b);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kBoundsExceeded);
  }
  CHECK_THROWS(join(f, from_shapes({c}, Mode::kPlanar, Bounds{3, 2})));
  CHECK_THROWS(join(f, g));
}

TEST_CASE("sigma generators") {
  auto s = sigma_polycat(Bounds{2, 1});
  std::vector<Certificate> want = {certificate_of(identity_shape(), Mode::kPlanar),
                                   certificate_of(corolla(1, 1), Mode::kPlanar),
                                   certificate_of(chain(2), Mode::kPlanar)};
  sort_by_digest(want);
  CHECK(s.sorted(Arity{1, 1}) == want);

  Bounds b{2, 2};
  for (Mode m : {Mode::kPlanar, Mode::kSymmetric}) {
    auto t = sigma_polycat(b, m), pd = sigma_properad(b, m), pp = sigma_prop(b, m);
    CHECK(leq(t, pd));
    CHECK(leq(pd, pp));
    CHECK(leq(identity_functor(m, b), t));
    CHECK(pp.contains(empty_shape()));
    CHECK_FALSE(pd.contains(empty_shape()));
    // <0,2> feeding both leaves of <2,0>: a properad composite, not a tree
    auto loop = multi_graft(corolla(2, 0), corolla(0, 2), 1, 1, 2);
    CHECK(pd.contains(loop));
    CHECK_FALSE(t.contains(loop));
    CHECK(pp.contains(juxtapose(corolla(1, 1), corolla(0, 1))));
    CHECK_FALSE(pd.contains(juxtapose(corolla(1, 1), corolla(0, 1))));
  }
}

TEST_CASE("free monads of the signatures match the shape enumerator") {
  for (Bounds b : {Bounds{3, 2}, Bounds{2, 3}})
    for (Mode m : {Mode::kPlanar, Mode::kSymmetric})
      for (auto c : {ShapeClass::kTree, ShapeClass::kProperad, ShapeClass::kProp}) {
        CAPTURE(shape_class_name(c));
        CAPTURE(mode_name(m));
        auto monad = free_monad(sigma(c, m, b));
        CHECK(monad == from_catalog(enumerate_class(c, b, m), m, b));
      }
}

TEST_CASE("free monad laws") {
  std::mt19937 rng(7);
  for (Mode m : {Mode::kPlanar, Mode::kSymmetric}) {
    Bounds b{2, 2};
    auto id = identity_functor(m, b);
    CHECK(free_monad(id) == id);
    auto pool = free_monad(sigma_prop(b, m));
    for (int trial = 0; trial < 6; ++trial) {
      auto f = random_sub(pool, 0.05, rng);
      auto direct = free_monad(f, ClosureStrategy::kDirect);
      CHECK(leq(f, direct));
      CHECK(leq(id, direct));
      CHECK(leq(direct, pool));
      CHECK(free_monad(direct, ClosureStrategy::kDirect) == direct);
      CHECK(leq(substitute(direct, direct), direct));
      auto with_corollas = join(f, relabelled_corollas(m, b));
      REQUIRE(has_all_relabelled_corollas(with_corollas));
      CHECK(free_monad(with_corollas, ClosureStrategy::kOrbit) ==
            free_monad(with_corollas, ClosureStrategy::kDirect));
    }
  }
}

TEST_CASE("join, leq and substitution") {
  std::mt19937 rng(11);
  for (Mode m : {Mode::kPlanar, Mode::kSymmetric}) {
    Bounds b{2, 2};
    auto pool = free_monad(sigma_prop(b, m));
    auto id = identity_functor(m, b);
    for (int trial = 0; trial < 8; ++trial) {
      auto f = random_sub(pool, 0.03, rng);
      auto g = random_sub(pool, 0.03, rng);
      auto fg = join(f, g);
      CHECK(fg == join(g, f));
      CHECK(join(f, f) == f);
      CHECK(leq(f, fg));
      CHECK(leq(g, fg));
      CHECK(fg.size() <= f.size() + g.size());
      CHECK(substitute(f, id) == f);
      CHECK(substitute(id, f) == f);
      auto h = random_sub(pool, 0.03, rng);
      CHECK(leq(join(substitute(f, g), substitute(f, h)), substitute(f, join(g, h))));
    }
    // associativity when no piece has fewer edges than the edge it fills
    Bounds b3{3, 2};
    auto pool3 = free_monad(sigma_prop(b3, m));
    auto i3 = identity_functor(m, b3);
    for (int trial = 0; trial < 4; ++trial) {
      auto f = random_sub(pool3, 0.004, rng);
      auto g = join(i3, random_sub(pool3, 0.004, rng, true));
      auto h = join(i3, random_sub(pool3, 0.004, rng, true));
      CHECK(substitute(substitute(f, g), h) == substitute(f, substitute(g, h)));
    }
  }
}

TEST_CASE("substituting one corolla into the polycategory signature") {
  Bounds b{2, 3};
  auto c = corolla(2, 1);
  auto sub = substitute(sigma_polycat(b), from_shapes({c}, Mode::kPlanar, b));
  CHECK(sub.contains(identity_shape()));
  CHECK(sub.contains(c));
  CHECK(sub.contains(graft(c, c, 1, 1)));
  CHECK(sub.contains(graft(c, c, 1, 2)));
  CHECK(sub.contains(relabel(c, {1, 0}, {0})));
  CHECK_FALSE(sub.contains(corolla(1, 1)));
  CHECK(sub.sorted(Arity{3, 1}).size() == 2);
}

TEST_CASE("evaluation examples") {
  auto c21 = from_shapes({corolla(2, 1)}, Mode::kPlanar, Bounds{1, 2});
  auto ev = evaluate(c21, representable(2, 1));
  CHECK(ev.star == 3);
  REQUIRE(ev.classes.size() == 1);
  REQUIRE(ev.classes.at(Arity{2, 1}).size() == 1);
  const auto& cls = ev.classes.at(Arity{2, 1})[0];
  CHECK(cls.leaf_images == std::vector<Vertex>{0, 1});
  CHECK(cls.root_images == std::vector<Vertex>{2});
  CHECK(cls.orbit_size == 1);

  // the bare identity shape picks out the vertices
  Polygraph a = representable(1, 2);
  auto unit = from_shapes({identity_shape()}, Mode::kPlanar, Bounds{0, 1});
  auto ev1 = evaluate(unit, a);
  CHECK(ev1.classes.at(Arity{1, 1}).size() == 3);

  // two closed edges: the two-edge composites land in three ways
  Polygraph two;
  two.vertex_count = 0;
  two.edges = {{{}, {}}, {{}, {}}};
  for (Mode m : {Mode::kPlanar, Mode::kSymmetric}) {
    auto r = free_monad(sigma_prop(Bounds{2, 0}, m));
    CHECK(r.size() == 3);
    auto ev2 = evaluate(r, two);
    std::size_t by_edges[3] = {0, 0, 0};
    for (const auto& e : ev2.classes.at(Arity{0, 0}))
      ++by_edges[certificate_header(e.shape).edge_count];
    CHECK(by_edges[0] == 1);
    CHECK(by_edges[1] == 2);
    CHECK(by_edges[2] == 3);
  }
}

TEST_CASE("evaluation counts orbits") {
  // orbit sizes add up to the raw hom count
  for (Mode m : {Mode::kPlanar, Mode::kSymmetric}) {
    Bounds b{2, 2};
    auto f = free_monad(sigma_properad(b, m));
    Polygraph a;
    a.vertex_count = 2;
    a.edges = {{{0}, {1}}, {{1, 1}, {0}}, {{0, 1}, {}}};
    auto ev = evaluate(f, a);
    std::size_t raw = 0, total = 0;
    for (const auto& c : f.sorted()) {
      auto x = shape_from_certificate(c);
      raw += hom(x.body, a, m).size();
    }
    for (const auto& [ar, list] : ev.classes)
      for (const auto& e : list) total += e.orbit_size;
    CHECK(total == raw);
  }
}

TEST_CASE("spectrum and the universal functor") {
  for (Mode m : {Mode::kPlanar, Mode::kSymmetric}) {
    Bounds b{1, 2};
    auto u = universal_functor(m, b);
    for (auto c : {ShapeClass::kTree, ShapeClass::kProperad, ShapeClass::kProp})
      CHECK(leq(free_monad(sigma(c, m, b)), u));
    for (const auto& c : u.sorted()) CHECK(well_labelled(shape_from_certificate(c)));

    auto sp = spectrum(free_monad(sigma_properad(Bounds{2, 2}, m)));
    CHECK(sp.star == 1);
    std::size_t n = 0;
    for (const auto& [a, entries] : sp.stages)
      for (const auto& e : entries) {
        ++n;
        CHECK(e.shape.arity() == a);
        CHECK(e.arrows.size() == a.in + a.out);
        for (const auto& arrow : e.arrows) CHECK(arrow.valid);
        if (m == Mode::kSymmetric) {
          CHECK(e.leaf_actions.size() == (a.in > 0 ? a.in - 1 : 0));
          CHECK(e.root_actions.size() == (a.out > 0 ? a.out - 1 : 0));
        }
      }
    CHECK(n == sp.size());
  }
  // not a tree, still well labelled
  auto loop = multi_graft(corolla(2, 0), corolla(0, 2), 1, 1, 2);
  auto u = universal_functor(Mode::kPlanar, Bounds{2, 2});
  CHECK(u.contains(loop));
  CHECK_FALSE(free_monad(sigma_polycat(Bounds{2, 2})).contains(loop));
}
