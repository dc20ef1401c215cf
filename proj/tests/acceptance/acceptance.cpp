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


// Acceptance run. Each criterion prints one PASS or FAIL line with a short
// summary; the exit status is the number of failures.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "oracle.hpp"
#include "shapely/canon.hpp"
#include "shapely/cellular.hpp"
#include "shapely/export.hpp"
#include "shapely/freestruct.hpp"
#include "shapely/labelled.hpp"
#include "shapely/shapely.hpp"
#include "shapely/shapes.hpp"
#include "shapely/workspace.hpp"

using namespace shapely;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "first failure: " << what << "; ";
      pass = false;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

const Mode kModes[] = {Mode::kPlanar, Mode::kSymmetric};
const ShapeClass kClasses[] = {ShapeClass::kTree, ShapeClass::kProperad, ShapeClass::kProp};

std::string label(ShapeClass c, Mode m) {
  return std::string(shape_class_name(c)) + "/" + mode_name(m);
}

// Number of arities where the functor and the catalog differ.
std::size_t catalog_mismatches(const ShapelyFunctor& f, const ShapeCatalog& cat) {
  std::set<Arity> arities;
  for (const auto& [a, s] : f.shapes) arities.insert(a);
  for (const auto& [a, l] : cat) arities.insert(a);
  std::size_t bad = 0;
  for (auto a : arities) {
    CertificateSet want;
    if (auto it = cat.find(a); it != cat.end()) want.insert(it->second.begin(), it->second.end());
    CertificateSet got;
    if (auto it = f.shapes.find(a); it != f.shapes.end()) got = it->second;
    bad += got != want;
  }
  return bad;
}

std::size_t catalog_size(const ShapeCatalog& cat) {
  std::size_t n = 0;
  for (const auto& [a, l] : cat) n += l.size();
  return n;
}

std::vector<LabelledShape> shapes_of(const ShapeCatalog& cat) {
  std::vector<LabelledShape> out;
  for (const auto& [a, l] : cat)
    for (const auto& c : l) out.push_back(shape_from_certificate(c));
  return out;
}

// A random explicit functor: up to max_k shapes drawn from the pool, and
// each standard corolla with probability one half so that substitution
// has something to act on.
ShapelyFunctor random_functor(const std::vector<LabelledShape>& pool, std::size_t max_k, Mode mode,
                              const Bounds& b, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> k(1, max_k), pick(0, pool.size() - 1);
  std::vector<LabelledShape> chosen;
  for (auto n = k(rng); n > 0; --n) chosen.push_back(pool[pick(rng)]);
  for (std::uint32_t n = 0; n <= b.max_arity; ++n)
    for (std::uint32_t m = 0; m <= b.max_arity; ++m)
      if (rng() % 2) chosen.push_back(corolla(n, m));
  return from_shapes(chosen, mode, b);
}

Polygraph random_polygraph(std::mt19937_64& rng, std::uint32_t max_vertices,
                           std::uint32_t min_edges, std::uint32_t max_edges,
                           std::uint32_t max_arity) {
  Polygraph p;
  p.vertex_count = std::uniform_int_distribution<std::uint32_t>(1, max_vertices)(rng);
  std::uniform_int_distribution<std::uint32_t> ne(min_edges, max_edges), ar(0, max_arity),
      pick(0, p.vertex_count - 1);
  for (auto e = ne(rng); e > 0; --e) {
    Edge edge;
    for (auto n = ar(rng); n > 0; --n) edge.sources.push_back(pick(rng));
    for (auto m = ar(rng); m > 0; --m) edge.targets.push_back(pick(rng));
    p.edges.push_back(std::move(edge));
  }
  return p;
}

// ---------------------------------------------------------------------------

Outcome tree_monad_large() {
  Outcome o;
  auto t0 = Clock::now();
  Bounds b{4, 3};
  auto monad = free_monad(sigma_polycat(b));
  double monad_s = seconds_since(t0);
  auto t1 = Clock::now();
  auto cat = enumerate_class(ShapeClass::kTree, b, Mode::kPlanar);
  double oracle_s = seconds_since(t1);
  auto bad = catalog_mismatches(monad, cat);
  o.require(bad == 0, std::to_string(bad) + " arities differ");
  o.require(monad_s <= 300, "free monad took over 5 minutes");
  o.detail << monad.size() << " planar trees, " << monad.shapes.size()
           << " arities, free monad " << static_cast<int>(monad_s) << " s, enumeration "
           << static_cast<int>(oracle_s) << " s";
  return o;
}

Outcome properad_prop_monads() {
  Outcome o;
  Bounds b{3, 2};
  for (auto c : {ShapeClass::kProperad, ShapeClass::kProp}) {
    auto monad = free_monad(sigma(c, Mode::kPlanar, b));
    auto cat = enumerate_class(c, b, Mode::kPlanar);
    o.require(catalog_mismatches(monad, cat) == 0, label(c, Mode::kPlanar) + " differs");
    o.detail << shape_class_name(c) << " " << monad.size() << "/" << catalog_size(cat) << " ";
  }
  o.detail << "at E3 A2";
  return o;
}

Outcome symmetric_monads() {
  Outcome o;
  Bounds b{3, 2};
  for (auto c : kClasses) {
    auto monad = free_monad(sigma(c, Mode::kSymmetric, b));
    auto cat = enumerate_class(c, b, Mode::kSymmetric);
    o.require(catalog_mismatches(monad, cat) == 0, label(c, Mode::kSymmetric) + " differs");
    o.detail << shape_class_name(c) << " " << monad.size() << "/" << catalog_size(cat) << " ";
  }
  auto c20 = corolla(2, 0);
  auto swapped = relabel(c20, transposition(2, 0, 1), identity_perm(0));
  bool planar_distinct =
      certificate_of(c20, Mode::kPlanar) != certificate_of(swapped, Mode::kPlanar);
  bool symmetric_same =
      certificate_of(c20, Mode::kSymmetric) == certificate_of(swapped, Mode::kSymmetric);
  o.require(planar_distinct && symmetric_same, "corolla(2,0) and its swap");

  auto r = juxtapose(corolla(0, 0), corolla(0, 0));
  auto prop = free_monad(sigma_prop(Bounds{2, 2}, Mode::kSymmetric));
  auto order = label_preserving_automorphisms(r, Mode::kSymmetric).order();
  o.require(prop.contains(r), "R not generated");
  o.require(order >= 2, "|Aut R| < 2");
  o.detail << "; corolla(2,0) swap merges symmetrically; |Aut R| = " << order;
  return o;
}

Outcome eckmann_hilton() {
  Outcome o;
  Polygraph a;
  a.edges = {Edge{}, Edge{}};
  auto r = juxtapose(corolla(0, 0), corolla(0, 0));
  for (auto mode : kModes) {
    auto monad = free_monad(sigma_prop(Bounds{2, 2}, mode));
    auto ev = evaluate(monad, a);
    auto digest = digest_of(certificate_of(r, mode));
    std::size_t classes = 0, total = 0;
    for (const auto& c : ev.classes[Arity{0, 0}]) {
      total++;
      if (c.digest == digest) classes++;
    }
    o.require(classes == 3, std::string(mode_name(mode)) + ": " + std::to_string(classes));
    o.detail << mode_name(mode) << " " << classes << " classes from R (" << total
             << " at (0,0)) ";
  }
  return o;
}

Outcome one_edge_census() {
  Outcome o;
  std::size_t cells = 0;
  for (std::uint32_t n = 0; n <= 3; ++n)
    for (std::uint32_t m = 0; m <= 3; ++m) {
      // Every labelling of the corolla body, deduplicated by brute force.
      auto base = corolla(n, m);
      std::vector<LabelledShape> all;
      for (const auto& phi : all_perms(n))
        for (const auto& psi : all_perms(m)) {
          auto x = base;
          x.leaves = permute_list(std::span<const Vertex>(base.leaves), phi);
          x.roots = permute_list(std::span<const Vertex>(base.roots), psi);
          all.push_back(x);
        }
      for (auto mode : kModes) {
        std::vector<LabelledShape> reps;
        for (const auto& x : all) {
          bool seen = false;
          for (const auto& y : reps) seen = seen || oracle::brute_isomorphic(x, y, mode);
          if (!seen) reps.push_back(x);
        }
        std::size_t expect = mode == Mode::kPlanar ? all.size() : 1;
        std::size_t listed = 0;
        for (const auto& c : enumerate_shapes(ShapeClass::kTree, n, m, 1, 3, mode))
          listed += shape_from_certificate(c).body.edges.size() == 1;
        auto tag = "(" + std::to_string(n) + "," + std::to_string(m) + ") " + mode_name(mode);
        o.require(reps.size() == expect, tag + " brute " + std::to_string(reps.size()));
        o.require(listed == expect, tag + " enumerated " + std::to_string(listed));
        cells++;
      }
    }
  o.detail << cells << " arity/mode cells, n!m! planar and 1 symmetric";
  return o;
}

Outcome axiom_suite() {
  Outcome o;
  auto t0 = Clock::now();
  std::mt19937_64 rng(2026);
  const std::size_t bases = 20;
  std::size_t reports = 0, failures = 0, trials = 0, empty = 0, mutation_failures = 0;
  std::set<std::string> exercised, seen;
  for (std::size_t i = 0; i < bases; ++i) {
    auto base = random_polygraph(rng, 3, 1, 3, 2);
    for (auto kind : kClasses)
      for (auto mode : kModes) {
        auto s = free_structure(kind, base, Bounds{3, 2}, mode);
        AxiomOptions opt;
        opt.trials = 1000;
        opt.seed = i;
        auto report = check_axioms(s, opt);
        reports++;
        failures += report.failures();
        for (const auto& t : report.axioms) {
          auto key = std::string(shape_class_name(kind)) + ":" + t.axiom;
          seen.insert(key);
          if (t.trials > 0) exercised.insert(key);
          trials += t.trials;
          empty += t.trials == 0;
          o.require(t.trials == 0 || t.trials == opt.trials, key + " ran a partial count");
        }
        opt.drop_interchange_permutation = true;
        mutation_failures += check_axioms(s, opt).failures();
      }
  }
  double secs = seconds_since(t0);
  o.require(failures == 0, std::to_string(failures) + " failures");
  o.require(exercised == seen, "some axiom never had an instance");
  o.require(mutation_failures >= 1, "mutation not detected");
  o.require(secs <= 600, "over 10 minutes");
  o.detail << bases << " bases, " << reports << " reports, " << trials << " trials, "
           << failures << " failures (" << empty << " axiom/base pairs without instances); "
           << "mutation: " << mutation_failures << " failures; " << static_cast<int>(secs) << " s";
  return o;
}

Outcome composite_laws() {
  Outcome o;
  std::mt19937_64 rng(20);
  Bounds b{3, 2};
  std::size_t triples = 0, strict = 0, general_right_gaps = 0;
  for (auto mode : kModes) {
    auto pool = shapes_of(enumerate_class(ShapeClass::kProp, b, mode));
    auto id = identity_functor(mode, b);
    for (int t = 0; t < 100; ++t) {
      auto f = random_functor(pool, 6, mode, b, rng);
      auto g = random_functor(pool, 6, mode, b, rng);
      auto h = random_functor(pool, 6, mode, b, rng);
      triples++;
      o.require(substitute(f, id) == f, "F.id");
      o.require(substitute(id, f) == f, "id.F");
      auto fg = substitute(f, g), gh = substitute(g, h);
      auto lhs = substitute(fg, h), rhs = substitute(f, gh);
      o.require(leq(lhs, rhs), "(F.G).H <= F.(G.H)");
      strict += !(lhs == rhs);
      o.require(substitute(join(f, g), h) == join(substitute(f, h), substitute(g, h)),
                "(F v G).H");
      // Directed join G <= G v H <= G v H v F.
      auto g1 = g, g2 = join(g, h), g3 = join(g2, f);
      o.require(substitute(f, g3) ==
                    join(join(substitute(f, g1), substitute(f, g2)), substitute(f, g3)),
                "F.(directed join)");
      auto mixed = substitute(f, join(g, h));
      auto parts = join(fg, substitute(f, h));
      o.require(leq(parts, mixed), "F.G v F.H <= F.(G v H)");
      general_right_gaps += !(parts == mixed);
    }
  }
  o.detail << triples << " triples at E3 A2; unit laws exact; associativity strict in " << strict
           << "; right distribution exact on directed joins (" << general_right_gaps
           << " non-directed joins only an inclusion)";
  return o;
}

Outcome free_monad_closure() {
  Outcome o;
  std::mt19937_64 rng(28);
  Bounds b{3, 2};
  std::size_t monads = 0, reflections = 0, above = 0;
  for (auto mode : kModes) {
    auto pool = shapes_of(enumerate_class(ShapeClass::kProp, b, mode));
    auto id = identity_functor(mode, b);
    for (int t = 0; t < 5; ++t) {
      auto f = random_functor(pool, 4, mode, b, rng);
      auto fbar = free_monad(f);
      monads++;
      o.require(leq(id, fbar), "id <= F");
      o.require(leq(f, fbar), "F <= free monad");
      o.require(leq(substitute(fbar, fbar), fbar), "closure under substitution");
      o.require(free_monad(fbar) == fbar, "idempotence");
      for (int k = 0; k < 5; ++k) {
        // Half of the monads are built above F.
        auto h = random_functor(pool, 4, mode, b, rng);
        auto g = free_monad(k % 2 == 0 ? join(f, h) : h);
        o.require(leq(id, g) && leq(substitute(g, g), g), "G is not a monad");
        o.require(leq(f, g) == leq(fbar, g), "reflection");
        above += leq(fbar, g);
        reflections++;
      }
    }
  }
  o.detail << monads << " free monads; reflection against " << reflections
           << " substitution-closed G (" << above << " above the free monad)";
  return o;
}

// Every planar automorphism of p, by trying all vertex and edge tables.
std::vector<PolyMorphism> brute_automorphisms(const Polygraph& p) {
  std::vector<PolyMorphism> out;
  for (const auto& vp : all_perms(p.vertex_count))
    for (const auto& ep : all_perms(p.edges.size())) {
      bool ok = true;
      for (std::size_t e = 0; ok && e < p.edges.size(); ++e) {
        const auto &src = p.edges[e], &dst = p.edges[ep[e]];
        ok = src.sources.size() == dst.sources.size() && src.targets.size() == dst.targets.size();
        for (std::size_t i = 0; ok && i < src.sources.size(); ++i)
          ok = vp[src.sources[i]] == dst.sources[i];
        for (std::size_t j = 0; ok && j < src.targets.size(); ++j)
          ok = vp[src.targets[j]] == dst.targets[j];
      }
      if (ok) out.push_back(planar_morphism(p, vp, std::vector<EdgeIndex>(ep.begin(), ep.end())));
    }
  return out;
}

// The automorphisms tau of cod with tau.f = f.sigma that fix the
// coequalizer of f and f.sigma.
std::vector<PolyMorphism> brute_extensions(const PolyMorphism& f, const Polygraph& cod,
                                           const PolyMorphism& sigma) {
  auto fs = compose(f, sigma);
  auto q = coequalizer(f, fs, cod);
  std::vector<PolyMorphism> out;
  for (const auto& tau : brute_automorphisms(cod))
    if (compose(tau, f) == fs && fixes_coequalizer(tau, q)) out.push_back(tau);
  return out;
}

Outcome minimal_extensions() {
  Outcome o;
  std::mt19937_64 rng(8);
  std::size_t positive = 0, negative = 0, attempts = 0;
  while (positive < 60 && attempts < 20000) {
    attempts++;
    auto cod = random_polygraph(rng, 5, 0, 3, 2);
    auto k = std::uniform_int_distribution<std::uint32_t>(1, cod.vertex_count)(rng);
    auto dom = discrete(k);
    std::vector<Vertex> image(cod.vertex_count);
    std::iota(image.begin(), image.end(), 0u);
    std::shuffle(image.begin(), image.end(), rng);
    image.resize(k);
    auto f = planar_morphism(dom, image, {});
    Perm s = identity_perm(k);
    std::shuffle(s.begin(), s.end(), rng);
    auto sigma = planar_morphism(dom, std::vector<Vertex>(s.begin(), s.end()), {});
    auto ext = minimal_extension(f, dom, cod, sigma);
    auto brute = brute_extensions(f, cod, sigma);
    if (ext.tau) {
      positive++;
      o.require(is_automorphism(*ext.tau, cod), "tau is not an automorphism");
      o.require(compose(*ext.tau, f) == compose(f, sigma), "tau.f != f.sigma");
      o.require(fixes_coequalizer(*ext.tau, coequalizer(f, compose(f, sigma), cod)),
                "tau moves the coequalizer");
      o.require(brute.size() == 1 && brute[0] == *ext.tau, "not the unique extension");
    } else {
      negative++;
      o.require(ext.obstruction.has_value(), "no obstruction reported");
      o.require(brute.empty(), "missed an extension");
    }
  }
  o.require(positive >= 50, "too few positive cases");

  Workspace ws;
  ws.load_file(std::string(SHAPELY_FIXTURE_DIR) + "/minext.pg");
  const auto& f = ws.morphism("f");
  const auto& swap = ws.morphism("swap");
  const auto& cod = ws.polygraph("c");
  auto ext = minimal_extension(f.map, ws.polygraph("two"), cod, swap.map);
  o.require(!ext.tau && ext.obstruction, "fixture has an extension");
  o.require(brute_extensions(f.map, cod, swap.map).empty(), "fixture: brute force found one");
  o.detail << positive << " extensions unique by exhaustive search, " << negative
           << " obstructions confirmed; fixture reports no-extension";
  return o;
}

Outcome universal_containment() {
  Outcome o;
  Bounds b{2, 2};
  std::size_t checked = 0;
  std::mt19937_64 rng(23);
  for (auto mode : kModes) {
    auto uni = universal_spectrum(b, mode);
    CertificateSet all;
    for (const auto& [a, list] : uni.stages)
      for (const auto& e : list) all.insert(e.certificate);
    std::vector<ShapelyFunctor> monads;
    for (auto c : kClasses) monads.push_back(free_monad(sigma(c, mode, b)));
    auto pool = shapes_of(enumerate_class(ShapeClass::kProp, b, mode));
    for (int t = 0; t < 5; ++t) monads.push_back(free_monad(random_functor(pool, 4, mode, b, rng)));
    for (const auto& m : monads)
      for (const auto& c : m.sorted()) {
        checked++;
        o.require(well_labelled(shape_from_certificate(c)), "not well labelled");
        o.require(all.count(c) == 1, "missing from the universal spectrum");
      }
    auto trees = free_monad(sigma_polycat(b, mode));
    auto loop = multi_graft(corolla(2, 0), corolla(0, 2), 1, 1, 2);
    auto lc = certificate_of(loop, mode);
    o.require(well_labelled(loop) && all.count(lc) == 1 && !trees.contains(lc),
              "non-tree witness");
    o.require(all.size() > trees.size(), "universal not larger than trees");
    o.detail << mode_name(mode) << " universal " << all.size() << " vs trees " << trees.size()
             << "; ";
  }
  o.detail << checked << " monad shapes contained; closed loop is a non-tree witness";
  return o;
}

Outcome canonicalization() {
  Outcome o;
  std::mt19937_64 rng(11);
  std::size_t pairs = 0, nontrivial = 0;
  for (auto mode : kModes) {
    auto catalog = shapes_of(enumerate_class(ShapeClass::kProp, Bounds{2, 2}, mode));
    for (int t = 0; t < 1000; ++t) {
      bool from_catalog = t % 2 == 1;
      auto x = from_catalog ? catalog[rng() % catalog.size()] : oracle::random_shape(rng, 5, 3, 2);
      auto y = oracle::shuffle(x, mode, rng);
      auto cx = canonical_form(x, mode), cy = canonical_form(y, mode);
      o.require(cx.digest == cy.digest && cx.certificate == cy.certificate, "digest changed");
      o.require(is_label_preserving_iso(cx.witness, x, cx.shape, mode), "witness x");
      o.require(is_label_preserving_iso(cy.witness, y, cy.shape, mode), "witness y");
      auto order = label_preserving_automorphisms(x, mode).order();
      auto raw = from_catalog ? raw_automorphism_count(x, mode) : oracle::brute_automorphisms(x, mode);
      o.require(order == raw, "|Aut| differs from the raw count");
      nontrivial += order > 1;
      pairs++;
    }
  }
  o.detail << pairs << " shuffled pairs, " << nontrivial << " with nontrivial automorphisms";
  return o;
}

std::string run(const std::string& command) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  out += "\nstatus " + std::to_string(status);
  return out;
}

Outcome cli_determinism() {
  Outcome o;
  const std::string cli = SHAPELY_CLI;
  const std::string fx = SHAPELY_FIXTURE_DIR;
  const std::vector<std::string> commands = {
      "enumerate --class tree --arity 1 1 --max-edges 2",
      "enumerate --class prop --mode symmetric --max-edges 2",
      "free-monad --class properad --max-edges 2",
      "apply -i " + fx + "/functors.pg -i " + fx + "/A.pg --functor Chains --polygraph A --closure",
      "free-structure --kind prop -i " + fx + "/eckmann_hilton.pg --max-edges 2",
      "check-axioms --kind polycat --seed 7 --trials 1000 -i " + fx + "/A.pg",
      "check-axioms --kind prop --mode symmetric --seed 3 --trials 300 -i " + fx + "/A.pg",
      "canon -i " + fx + "/loop.pg --mode symmetric",
      "minext -i " + fx + "/minext.pg --mono f --automorphism swap",
      "spectrum -i " + fx + "/functors.pg --functor Binary --closure",
  };
  for (const auto& c : commands) {
    auto a = run(cli + " " + c + " 2>&1");
    auto b = run(cli + " " + c + " 2>&1");
    auto single = run("SHAPELY_THREADS=1 " + cli + " " + c + " 2>&1");
    o.require(a == b && a == single, "output differs: " + c);
    o.require(a.size() > 20 && a.find("\"error\"") == std::string::npos, "command failed: " + c);
  }

  std::size_t files = 0;
  auto tmp = std::filesystem::temp_directory_path() / ("shapely_rt_" + std::to_string(::getpid()) + ".pg");
  for (const auto& e : std::filesystem::directory_iterator(fx)) {
    if (e.path().extension() != ".pg") continue;
    files++;
    auto once = run(cli + " format -i " + e.path().string());
    {
      std::ofstream(tmp) << once.substr(0, once.rfind("\nstatus "));
    }
    auto twice = run(cli + " format -i " + tmp.string());
    o.require(once == twice, "format is not stable: " + e.path().filename().string());

    Workspace a, b;
    a.load_file(e.path().string());
    b.load_file(tmp.string());
    for (const auto& n : a.names(Workspace::Kind::kShape))
      for (auto mode : kModes)
        o.require(certificate_of(a.shape(n).shape, mode) == certificate_of(b.shape(n).shape, mode),
                  "shape digest changed: " + n);
    for (const auto& n : a.names(Workspace::Kind::kFunctor))
      o.require(a.functor(n).functor == b.functor(n).functor, "functor changed: " + n);
    for (const auto& n : a.names(Workspace::Kind::kMorphism))
      o.require(a.morphism(n).map == b.morphism(n).map, "morphism changed: " + n);
    for (const auto& n : a.names(Workspace::Kind::kPolygraph))
      o.require(a.polygraph(n).same_structure(b.polygraph(n)), "polygraph changed: " + n);
  }
  std::filesystem::remove(tmp);
  o.require(files >= 5, "fixture corpus missing");
  o.detail << commands.size() << " commands byte-identical over 3 runs; " << files
           << " fixtures round trip";
  return o;
}

struct Criterion {
  int number;
  const char* title;
  std::function<Outcome()> check;
};

}  // namespace

// Arguments, if any, select criteria by number.
int main(int argc, char** argv) {
  std::set<int> only;
  for (int a = 1; a < argc; ++a) only.insert(std::atoi(argv[a]));
  const std::vector<Criterion> criteria = {
      {1, "tree free monad equals enumeration (E4 A3)", tree_monad_large},
      {2, "properad and PROP free monads equal enumeration (E3)", properad_prop_monads},
      {3, "symmetric free monads equal enumeration (E3)", symmetric_monads},
      {4, "Eckmann-Hilton orbit count", eckmann_hilton},
      {5, "one-edge census", one_edge_census},
      {6, "axiom suite with mutation control", axiom_suite},
      {7, "composite laws", composite_laws},
      {8, "free monad closure and reflection", free_monad_closure},
      {9, "minimal extensions", minimal_extensions},
      {10, "containment in the universal functor", universal_containment},
      {11, "canonicalization soundness", canonicalization},
      {12, "command line determinism and round trip", cli_determinism},
  };
  int failed = 0, ran = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.count(c.number)) continue;
    ran++;
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    failed += !o.pass;
    std::printf("%s %2d  %s: %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", c.number, c.title,
                o.detail.str().c_str(), seconds_since(t0));
    std::fflush(stdout);
  }
  std::printf("%d of %d criteria passed\n", ran - failed, ran);
  return failed;
}
