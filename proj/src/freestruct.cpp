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


#include "shapely/freestruct.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <cstdlib>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>
#include <tuple>
#include <unordered_map>

#include "shapely/error.hpp"
#include "shapely/shapely.hpp"

namespace shapely {

namespace {

// Label preserving automorphism groups of canonical shapes, shared by all
// free structures. Certificates do not record the mode, so the key does.
const PermGroup& group_of(const Certificate& cert, const LabelledShape& shape, Mode mode) {
  static std::mutex mu;
  static std::unordered_map<std::string, PermGroup> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = static_cast<char>(mode) + cert;
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(std::move(key), label_preserving_automorphisms(shape, mode)).first;
  return it->second;
}

void put_u32(std::string& out, std::uint32_t v) {
  for (int b = 0; b < 4; ++b) out.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
}

std::string exact_key(const LabelledShape& t, Mode mode) {
  std::string key(1, static_cast<char>(mode));
  put_u32(key, t.body.vertex_count);
  put_u32(key, t.body.edge_count());
  for (const auto& e : t.body.edges) {
    put_u32(key, static_cast<std::uint32_t>(e.sources.size()));
    for (auto v : e.sources) put_u32(key, v);
    put_u32(key, static_cast<std::uint32_t>(e.targets.size()));
    for (auto v : e.targets) put_u32(key, v);
  }
  put_u32(key, static_cast<std::uint32_t>(t.leaves.size()));
  for (auto v : t.leaves) put_u32(key, v);
  put_u32(key, static_cast<std::uint32_t>(t.roots.size()));
  for (auto v : t.roots) put_u32(key, v);
  return key;
}

// Composites in the axiom checker repeat a lot; remember canonical forms of
// the exact shapes seen.
CanonicalForm cached_canonical_form(const LabelledShape& t, Mode mode) {
  static std::mutex mu;
  static std::unordered_map<std::string, CanonicalForm> cache;
  auto key = exact_key(t, mode);
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto cf = canonical_form(t, mode);
  std::lock_guard<std::mutex> lock(mu);
  if (cache.size() > (1u << 18)) cache.clear();
  cache.emplace(std::move(key), cf);
  return cf;
}

const ShapelyFunctor& cached_free_monad(ShapeClass kind, Mode mode, const Bounds& b) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, std::uint32_t, std::uint32_t>, ShapelyFunctor> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::tuple{static_cast<int>(kind), static_cast<int>(mode), b.max_edges, b.max_arity};
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, free_monad(sigma(kind, mode, b))).first;
  return it->second;
}

std::string show_list(const std::vector<Vertex>& xs) {
  std::string s = "(";
  for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? "," : "") + std::to_string(xs[k]);
  return s + ")";
}

std::string show_perm(const Perm& p) {
  std::string s = "[";
  for (std::size_t k = 0; k < p.size(); ++k) s += (k ? "," : "") + std::to_string(p[k] + 1);
  return s + "]";
}

std::string show(const Morphism& m) {
  return m.digest.hex().substr(0, 12) + ":" + show_list(m.source) + "->" + show_list(m.target);
}

// The map on a composite induced by the two legs of its pushout.
PolyMorphism induce(const GraftResult& r, const Morphism& lower, const Morphism& upper,
                    Mode mode) {
  PolyMorphism h;
  h.mode = mode;
  h.vertex_map.assign(r.shape.body.vertex_count, 0);
  h.edge_map.resize(r.shape.body.edges.size());
  auto add = [&](const PolyMorphism& leg, const PolyMorphism& rep) {
    for (std::size_t v = 0; v < leg.vertex_map.size(); ++v)
      h.vertex_map[leg.vertex_map[v]] = rep.vertex_map[v];
    for (std::size_t e = 0; e < leg.edge_map.size(); ++e) {
      const auto& img = leg.edge_map[e];
      if (!is_identity(img.in_perm) || !is_identity(img.out_perm))
        throw Error(ErrorCode::kInvalidMorphism, "graft leg permutes ports");
      h.edge_map[img.edge] = rep.edge_map[e];
    }
  };
  add(r.from_lower, lower.representative);
  add(r.from_upper, upper.representative);
  return h;
}

void require_same_mode(const Morphism& a, const Morphism& b) {
  if (a.mode != b.mode) throw Error(ErrorCode::kModeMismatch, "morphisms differ in mode");
}

}  // namespace

const char* structure_kind_name(ShapeClass kind) {
  switch (kind) {
    case ShapeClass::kTree:
      return "polycat";
    case ShapeClass::kProperad:
      return "properad";
    case ShapeClass::kProp:
      return "prop";
  }
  return "?";
}

std::optional<ShapeClass> parse_structure_kind(const std::string& name) {
  if (name == "polycat" || name == "polycategory" || name == "tree") return ShapeClass::kTree;
  if (name == "properad") return ShapeClass::kProperad;
  if (name == "prop") return ShapeClass::kProp;
  return std::nullopt;
}

Digest morphism_digest(const Morphism& m) {
  std::string bytes = m.shape;
  const auto& r = m.representative;
  put_u32(bytes, static_cast<std::uint32_t>(r.vertex_map.size()));
  for (auto v : r.vertex_map) put_u32(bytes, v);
  for (const auto& e : r.edge_map) {
    put_u32(bytes, e.edge);
    for (auto p : e.in_perm) put_u32(bytes, p);
    for (auto p : e.out_perm) put_u32(bytes, p);
  }
  return digest_of(bytes);
}

Morphism make_morphism(const LabelledShape& t, const PolyMorphism& f, Mode mode) {
  auto cf = cached_canonical_form(t, mode);
  auto back = inverse(cf.witness);
  if (!back) throw Error(ErrorCode::kInvalidMorphism, "canonical witness is not invertible");
  Morphism m;
  m.mode = mode;
  m.digest = cf.digest;
  auto rep = compose(f, *back);
  rep.mode = mode;
  m.representative = orbit_min(rep, group_of(cf.certificate, cf.shape, mode));
  for (auto v : cf.shape.leaves) m.source.push_back(m.representative.vertex_map[v]);
  for (auto v : cf.shape.roots) m.target.push_back(m.representative.vertex_map[v]);
  m.shape = std::move(cf.certificate);
  return m;
}

LabelledShape morphism_shape(const Morphism& m) { return shape_from_certificate(m.shape); }

Morphism identity(Vertex v, Mode mode) {
  PolyMorphism f;
  f.mode = mode;
  f.vertex_map = {v};
  return make_morphism(identity_shape(), f, mode);
}

Morphism empty_morphism(Mode mode) {
  PolyMorphism f;
  f.mode = mode;
  return make_morphism(empty_shape(), f, mode);
}

Morphism multi_compose(ShapeClass kind, const Morphism& g, const Morphism& f, std::uint32_t j,
                       std::uint32_t i, std::uint32_t width) {
  if (kind == ShapeClass::kTree && width != 1)
    throw Error(ErrorCode::kUnsupported, "polycategories compose along one object");
  require_same_mode(g, f);
  if (width == 0 || i == 0 || j == 0 || i + width - 1 > f.target.size() ||
      j + width - 1 > g.source.size())
    throw Error(ErrorCode::kIndexOutOfRange, "composition index out of range");
  for (std::uint32_t l = 0; l < width; ++l)
    if (f.target[i - 1 + l] != g.source[j - 1 + l])
      throw Error(ErrorCode::kTypeMismatch,
                  "output " + std::to_string(i + l) + " of f is not input " +
                      std::to_string(j + l) + " of g");
  auto r = multi_graft_with_legs(morphism_shape(g), morphism_shape(f), i, j, width);
  return make_morphism(r.shape, induce(r, f, g, f.mode), f.mode);
}

Morphism compose(const Morphism& g, const Morphism& f, std::uint32_t j, std::uint32_t i) {
  return multi_compose(ShapeClass::kTree, g, f, j, i, 1);
}

Morphism juxtapose_morphisms(ShapeClass kind, const Morphism& f, const Morphism& g) {
  if (kind != ShapeClass::kProp)
    throw Error(ErrorCode::kUnsupported, "juxtaposition needs a PROP");
  require_same_mode(f, g);
  auto r = juxtapose_with_legs(morphism_shape(g), morphism_shape(f));
  return make_morphism(r.shape, induce(r, f, g, f.mode), f.mode);
}

Morphism exchange(const Morphism& f, const Perm& phi, const Perm& psi) {
  if (phi.size() != f.source.size() || psi.size() != f.target.size() || !is_perm(phi) ||
      !is_perm(psi))
    throw Error(ErrorCode::kArityMismatch, "permutations do not match the morphism");
  return make_morphism(relabel(morphism_shape(f), phi, psi), f.representative, f.mode);
}

const std::vector<Morphism>& FreeStructure::hom(const std::vector<Vertex>& source,
                                                const std::vector<Vertex>& target) const {
  static const std::vector<Morphism> none;
  auto it = homs.find(HomKey{source, target});
  return it == homs.end() ? none : it->second;
}

std::size_t FreeStructure::size() const {
  std::size_t n = 0;
  for (const auto& [k, v] : homs) n += v.size();
  return n;
}

FreeStructure free_structure(ShapeClass kind, const Polygraph& base, const Bounds& bounds,
                             Mode mode) {
  if (auto bad = validate(base); !bad.empty())
    throw Error(ErrorCode::kInvalidPolygraph, bad.front().code + ": " + bad.front().detail);
  FreeStructure s;
  s.kind = kind;
  s.mode = mode;
  s.base = base;
  s.bounds = bounds;
  auto ev = evaluate(cached_free_monad(kind, mode, bounds), base);
  for (auto& [arity, classes] : ev.classes)
    for (auto& c : classes) {
      Morphism m;
      m.mode = mode;
      m.shape = std::move(c.shape);
      m.digest = c.digest;
      m.representative = std::move(c.representative);
      m.representative.mode = mode;
      m.source = std::move(c.leaf_images);
      m.target = std::move(c.root_images);
      s.homs[HomKey{m.source, m.target}].push_back(std::move(m));
    }
  for (auto& [k, v] : s.homs) std::sort(v.begin(), v.end());
  return s;
}

std::size_t AxiomReport::failures() const {
  std::size_t n = 0;
  for (const auto& a : axioms) n += a.failures;
  return n;
}

namespace {

using Rng = std::mt19937_64;

// Port tags for the list equations: morphism number and 1-based port.
std::uint64_t tag(std::uint64_t who, std::uint64_t port) { return (who << 32) | port; }

std::vector<std::uint64_t> tags(std::uint64_t who, std::size_t n) {
  std::vector<std::uint64_t> out;
  for (std::size_t k = 1; k <= n; ++k) out.push_back(tag(who, k));
  return out;
}

// xs[from, to) with 1-based inclusive-exclusive bounds written as in the
// axioms: before(xs, i) = xs_<i, after(xs, i) = xs_>i.
std::vector<std::uint64_t> before(const std::vector<std::uint64_t>& xs, std::size_t i) {
  return {xs.begin(), xs.begin() + (i - 1)};
}
std::vector<std::uint64_t> after(const std::vector<std::uint64_t>& xs, std::size_t i) {
  return {xs.begin() + i, xs.end()};
}
std::vector<std::uint64_t> cat(std::initializer_list<std::vector<std::uint64_t>> parts) {
  std::vector<std::uint64_t> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Perm solve(const std::vector<std::uint64_t>& list, const std::vector<std::uint64_t>& target) {
  auto p = solve_reindexing(list, target);
  if (p.size() != list.size())
    throw Error(ErrorCode::kInvalidMorphism, "list equation has no solution");
  return p;
}

Perm random_perm(std::size_t n, Rng& rng) {
  auto p = identity_perm(n);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

std::uint32_t pick(std::size_t n, Rng& rng) {
  return static_cast<std::uint32_t>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
}

// Morphisms and their ports, indexed by the object at a port or by a run of
// consecutive objects.
struct Pool {
  std::vector<const Morphism*> all;
  std::map<std::vector<Vertex>, std::vector<std::pair<const Morphism*, std::uint32_t>>> inputs,
      outputs;
  const Morphism* empty = nullptr;

  explicit Pool(const FreeStructure& s, std::uint32_t max_window) {
    for (const auto& [k, v] : s.homs)
      for (const auto& m : v) {
        all.push_back(&m);
        if (m.source.empty() && m.target.empty() && certificate_header(m.shape).edge_count == 0)
          empty = &m;
        auto index = [&](const std::vector<Vertex>& ports, auto& table) {
          for (std::uint32_t a = 0; a < ports.size(); ++a)
            for (std::uint32_t w = 1; w <= max_window && a + w <= ports.size(); ++w)
              table[std::vector<Vertex>(ports.begin() + a, ports.begin() + a + w)].push_back(
                  {&m, a + 1});
        };
        index(m.source, inputs);
        index(m.target, outputs);
      }
  }

  const Morphism& any(Rng& rng) const { return *all[pick(all.size(), rng)]; }

  // A morphism with the given run of objects starting at some input
  // (output), and the 1-based start.
  std::optional<std::pair<const Morphism*, std::uint32_t>> with_input(
      const std::vector<Vertex>& run, Rng& rng) const {
    return from(inputs, run, rng);
  }
  std::optional<std::pair<const Morphism*, std::uint32_t>> with_output(
      const std::vector<Vertex>& run, Rng& rng) const {
    return from(outputs, run, rng);
  }

 private:
  static std::optional<std::pair<const Morphism*, std::uint32_t>> from(
      const std::map<std::vector<Vertex>,
                     std::vector<std::pair<const Morphism*, std::uint32_t>>>& table,
      const std::vector<Vertex>& run, Rng& rng) {
    auto it = table.find(run);
    if (it == table.end() || it->second.empty()) return std::nullopt;
    return it->second[pick(it->second.size(), rng)];
  }
};

// One sampled instance: both sides as thunks so that the expensive part
// can run on worker threads.
struct Instance {
  std::vector<std::pair<std::string, std::string>> bindings;
  std::uint32_t edges = 0;  // of the composite on either side
  std::function<std::pair<Morphism, Morphism>()> sides;
};

using Sampler = std::function<std::optional<Instance>(Rng&)>;

struct Axiom {
  std::string name;
  Sampler sample;
};

std::string num(std::size_t v) { return std::to_string(v); }

std::uint32_t edges_of(std::initializer_list<const Morphism*> ms) {
  std::uint32_t n = 0;
  for (const auto* m : ms) n += certificate_header(m->shape).edge_count;
  return n;
}

std::vector<Axiom> axioms_for(const FreeStructure& s, const Pool& pool, bool drop_psi) {
  const auto kind = s.kind;
  const auto mode = s.mode;
  std::vector<Axiom> out;

  out.push_back({"unit", [&pool, mode](Rng& rng) -> std::optional<Instance> {
    const Morphism& f = pool.any(rng);
    if (f.source.empty() && f.target.empty()) return std::nullopt;
    // one side per trial, chosen among those that exist
    bool left = f.target.empty() || (!f.source.empty() && rng() % 2 == 0);
    Instance in;
    in.bindings = {{"f", show(f)}};
    in.edges = edges_of({&f});
    if (left) {
      auto i = 1 + pick(f.source.size(), rng);
      in.bindings.push_back({"side", "input"});
      in.bindings.push_back({"i", num(i)});
      in.sides = [&f, i, mode] {
        return std::pair{compose(f, identity(f.source[i - 1], mode), i, 1), f};
      };
    } else {
      auto j = 1 + pick(f.target.size(), rng);
      in.bindings.push_back({"side", "output"});
      in.bindings.push_back({"j", num(j)});
      in.sides = [&f, j, mode] {
        return std::pair{compose(identity(f.target[j - 1], mode), f, 1, j), f};
      };
    }
    return in;
  }});

  out.push_back({"associativity", [&pool](Rng& rng) -> std::optional<Instance> {
    const Morphism& f = pool.any(rng);
    if (f.target.empty()) return std::nullopt;
    auto i = 1 + pick(f.target.size(), rng);
    auto gj = pool.with_input({f.target[i - 1]}, rng);
    if (!gj) return std::nullopt;
    const Morphism& g = *gj->first;
    auto j = gj->second;
    if (g.target.empty()) return std::nullopt;
    auto k = 1 + pick(g.target.size(), rng);
    auto hl = pool.with_input({g.target[k - 1]}, rng);
    if (!hl) return std::nullopt;
    const Morphism& h = *hl->first;
    auto l = hl->second;
    Instance in;
    in.bindings = {{"f", show(f)}, {"g", show(g)}, {"h", show(h)},
                   {"i", num(i)},  {"j", num(j)},  {"k", num(k)}, {"l", num(l)}};
    in.edges = edges_of({&f, &g, &h});
    in.sides = [&f, &g, &h, i, j, k, l] {
      auto lhs = compose(compose(h, g, l, k), f, j + l - 1, i);
      auto rhs = compose(h, compose(g, f, j, i), l, k + i - 1);
      return std::pair{lhs, rhs};
    };
    return in;
  }});

  out.push_back({"left interchange", [&pool, drop_psi](Rng& rng) -> std::optional<Instance> {
    const Morphism& h = pool.any(rng);
    if (h.source.size() < 2) return std::nullopt;
    auto a = pick(h.source.size(), rng), b = pick(h.source.size() - 1, rng);
    if (b >= a) ++b;
    std::uint32_t k1 = 1 + std::min(a, b), k2 = 1 + std::max(a, b);
    auto fi = pool.with_output({h.source[k1 - 1]}, rng);
    auto gj = pool.with_output({h.source[k2 - 1]}, rng);
    if (!fi || !gj) return std::nullopt;
    const Morphism& f = *fi->first;
    const Morphism& g = *gj->first;
    auto i = fi->second, j = gj->second;
    Instance in;
    in.bindings = {{"f", show(f)}, {"g", show(g)}, {"h", show(h)},   {"i", num(i)},
                   {"j", num(j)},  {"k1", num(k1)}, {"k2", num(k2)}};
    in.edges = edges_of({&f, &g, &h});
    // (B<i, D<j, F, D>j, B>i)_psi = (D<j, B<i, F, B>i, D>j)
    auto B = tags(1, f.target.size()), D = tags(2, g.target.size()),
         F = tags(3, h.target.size());
    auto psi = solve(cat({before(B, i), before(D, j), F, after(D, j), after(B, i)}),
                     cat({before(D, j), before(B, i), F, after(B, i), after(D, j)}));
    if (drop_psi) psi = identity_perm(psi.size());
    in.bindings.push_back({"psi", show_perm(psi)});
    in.sides = [&f, &g, &h, i, j, k1, k2, psi] {
      auto lhs = compose(compose(h, g, k2, j), f, k1, i);
      auto inner = compose(compose(h, f, k1, i), g,
                           k2 + static_cast<std::uint32_t>(f.source.size()) - 1, j);
      return std::pair{lhs, exchange(inner, identity_perm(inner.source.size()), psi)};
    };
    return in;
  }});

  out.push_back({"right interchange", [&pool](Rng& rng) -> std::optional<Instance> {
    const Morphism& f = pool.any(rng);
    if (f.target.size() < 2) return std::nullopt;
    auto a = pick(f.target.size(), rng), b = pick(f.target.size() - 1, rng);
    if (b >= a) ++b;
    std::uint32_t i1 = 1 + std::min(a, b), i2 = 1 + std::max(a, b);
    auto gj = pool.with_input({f.target[i1 - 1]}, rng);
    auto hk = pool.with_input({f.target[i2 - 1]}, rng);
    if (!gj || !hk) return std::nullopt;
    const Morphism& g = *gj->first;
    const Morphism& h = *hk->first;
    auto j = gj->second, k = hk->second;
    Instance in;
    in.bindings = {{"f", show(f)}, {"g", show(g)}, {"h", show(h)},  {"i1", num(i1)},
                   {"i2", num(i2)}, {"j", num(j)}, {"k", num(k)}};
    in.edges = edges_of({&f, &g, &h});
    // (E<k, C<j, A, C>j, E>k)_phi = (C<j, E<k, A, E>k, C>j)
    auto A = tags(1, f.source.size()), C = tags(2, g.source.size()),
         E = tags(3, h.source.size());
    auto phi = solve(cat({before(E, k), before(C, j), A, after(C, j), after(E, k)}),
                     cat({before(C, j), before(E, k), A, after(E, k), after(C, j)}));
    in.bindings.push_back({"phi", show_perm(phi)});
    in.sides = [&f, &g, &h, i1, i2, j, k, phi] {
      auto lhs = compose(g, compose(h, f, k, i2), j, i1);
      auto inner = compose(h, compose(g, f, j, i1), k,
                           i2 + static_cast<std::uint32_t>(g.target.size()) - 1);
      return std::pair{lhs, exchange(inner, phi, identity_perm(inner.target.size()))};
    };
    return in;
  }});

  out.push_back({"action", [&pool](Rng& rng) -> std::optional<Instance> {
    const Morphism& f = pool.any(rng);
    auto n = f.source.size(), m = f.target.size();
    Instance in;
    in.edges = edges_of({&f});
    if (rng() % 4 == 0) {
      in.bindings = {{"f", show(f)}, {"form", "identity"}};
      in.sides = [&f, n, m] {
        return std::pair{exchange(f, identity_perm(n), identity_perm(m)), f};
      };
      return in;
    }
    auto phi1 = random_perm(n, rng), phi2 = random_perm(n, rng);
    auto psi1 = random_perm(m, rng), psi2 = random_perm(m, rng);
    in.bindings = {{"f", show(f)},
                   {"form", "product"},
                   {"phi1", show_perm(phi1)},
                   {"phi2", show_perm(phi2)},
                   {"psi1", show_perm(psi1)},
                   {"psi2", show_perm(psi2)}};
    in.sides = [&f, phi1, phi2, psi1, psi2] {
      auto lhs = exchange(f, compose(phi1, phi2), compose(psi2, psi1));
      auto rhs = exchange(exchange(f, phi1, psi1), phi2, psi2);
      return std::pair{lhs, rhs};
    };
    return in;
  }});

  out.push_back({"equivariance", [&pool](Rng& rng) -> std::optional<Instance> {
    const Morphism& f = pool.any(rng);
    if (f.target.empty()) return std::nullopt;
    auto phi1 = random_perm(f.source.size(), rng), psi1 = random_perm(f.target.size(), rng);
    // output i of psi1.f.phi1 is output psi1^-1(i) of f
    auto i = 1 + pick(f.target.size(), rng);
    auto i0 = inverse(psi1)[i - 1] + 1;
    auto gj = pool.with_input({f.target[i0 - 1]}, rng);
    if (!gj) return std::nullopt;
    const Morphism& g = *gj->first;
    auto j0 = gj->second;
    auto phi2 = random_perm(g.source.size(), rng), psi2 = random_perm(g.target.size(), rng);
    // input j of psi2.g.phi2 is input phi2(j) of g
    auto j = inverse(phi2)[j0 - 1] + 1;
    // port tags of the relabelled pieces, in terms of the original ports
    auto A = tags(1, f.source.size()), B = tags(1 << 1, f.target.size());
    auto C = tags(2, g.source.size()), D = tags(2 << 1, g.target.size());
    std::vector<std::uint64_t> A1, B1, C2, D2;
    for (auto p : phi1) A1.push_back(A[p]);
    for (auto p : inverse(psi1)) B1.push_back(B[p]);
    for (auto p : phi2) C2.push_back(C[p]);
    for (auto p : inverse(psi2)) D2.push_back(D[p]);
    // (C<phi2(j), A, C>phi2(j))_phibar = ((C_phi2)<j, A_phi1, (C_phi2)>j)
    auto phibar = solve(cat({before(C, j0), A, after(C, j0)}),
                        cat({before(C2, j), A1, after(C2, j)}));
    // (B<psi1^-1(i), D, B>psi1^-1(i))_{psibar^-1} = ((B_psi1^-1)<i, D_psi2^-1, (B_psi1^-1)>i)
    auto psibar = inverse(solve(cat({before(B, i0), D, after(B, i0)}),
                                cat({before(B1, i), D2, after(B1, i)})));
    Instance in;
    in.bindings = {{"f", show(f)},
                   {"g", show(g)},
                   {"i", num(i)},
                   {"j", num(j)},
                   {"phi1", show_perm(phi1)},
                   {"psi1", show_perm(psi1)},
                   {"phi2", show_perm(phi2)},
                   {"psi2", show_perm(psi2)},
                   {"phibar", show_perm(phibar)},
                   {"psibar", show_perm(psibar)}};
    in.edges = edges_of({&f, &g});
    in.sides = [&f, &g, i, j, i0, j0, phi1, psi1, phi2, psi2, phibar, psibar] {
      auto lhs = compose(exchange(g, phi2, psi2), exchange(f, phi1, psi1), j, i);
      auto rhs = exchange(compose(g, f, j0, i0), phibar, psibar);
      return std::pair{lhs, rhs};
    };
    return in;
  }});

  if (kind != ShapeClass::kTree) {
    std::uint32_t cap = std::max<std::uint32_t>(1, s.bounds.max_arity);
    out.push_back({"window associativity", [&pool, kind, cap](Rng& rng) -> std::optional<Instance> {
      const Morphism& f = pool.any(rng);
      if (f.target.empty()) return std::nullopt;
      auto i = 1 + pick(f.target.size(), rng);
      auto w1 = 1 + pick(std::min<std::size_t>(cap, f.target.size() - i + 1), rng);
      auto gj = pool.with_input({f.target.begin() + (i - 1), f.target.begin() + (i - 1 + w1)},
                                rng);
      if (!gj) return std::nullopt;
      const Morphism& g = *gj->first;
      auto j = gj->second;
      if (g.target.empty()) return std::nullopt;
      auto k = 1 + pick(g.target.size(), rng);
      auto w2 = 1 + pick(std::min<std::size_t>(cap, g.target.size() - k + 1), rng);
      auto hl = pool.with_input({g.target.begin() + (k - 1), g.target.begin() + (k - 1 + w2)},
                                rng);
      if (!hl) return std::nullopt;
      const Morphism& h = *hl->first;
      auto l = hl->second;
      Instance in;
      in.bindings = {{"f", show(f)}, {"g", show(g)},   {"h", show(h)}, {"i", num(i)},
                     {"j", num(j)},  {"w1", num(w1)},  {"k", num(k)},  {"l", num(l)},
                     {"w2", num(w2)}};
      in.edges = edges_of({&f, &g, &h});
      in.sides = [&f, &g, &h, kind, i, j, k, l, w1, w2] {
        auto lhs = multi_compose(kind, multi_compose(kind, h, g, l, k, w2), f, j + l - 1, i, w1);
        auto rhs = multi_compose(kind, h, multi_compose(kind, g, f, j, i, w1), l, k + i - 1, w2);
        return std::pair{lhs, rhs};
      };
      return in;
    }});
  }

  if (kind == ShapeClass::kProp) {
    out.push_back({"juxtaposition associativity", [&pool](Rng& rng) -> std::optional<Instance> {
      const Morphism& f = pool.any(rng);
      const Morphism& g = pool.any(rng);
      const Morphism& h = pool.any(rng);
      Instance in;
      in.bindings = {{"f", show(f)}, {"g", show(g)}, {"h", show(h)}};
      in.edges = edges_of({&f, &g, &h});
      in.sides = [&f, &g, &h] {
        auto k = ShapeClass::kProp;
        return std::pair{juxtapose_morphisms(k, juxtapose_morphisms(k, f, g), h),
                         juxtapose_morphisms(k, f, juxtapose_morphisms(k, g, h))};
      };
      return in;
    }});
    out.push_back({"juxtaposition unit", [&pool](Rng& rng) -> std::optional<Instance> {
      if (!pool.empty) return std::nullopt;
      const Morphism& f = pool.any(rng);
      const Morphism& e = *pool.empty;
      bool left = rng() % 2 == 0;
      Instance in;
      in.bindings = {{"f", show(f)}, {"side", left ? "left" : "right"}};
      in.edges = edges_of({&f});
      in.sides = [&f, &e, left] {
        auto k = ShapeClass::kProp;
        return std::pair{left ? juxtapose_morphisms(k, e, f) : juxtapose_morphisms(k, f, e), f};
      };
      return in;
    }});
  }
  return out;
}

unsigned thread_count(unsigned requested) {
  if (requested) return requested;
  if (const char* env = std::getenv("SHAPELY_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

AxiomReport check_axioms(const FreeStructure& s, const AxiomOptions& options) {
  AxiomReport report;
  report.kind = s.kind;
  report.mode = s.mode;
  report.seed = options.seed;
  report.mutation = options.drop_interchange_permutation;
  Pool pool(s, std::max<std::uint32_t>(1, s.bounds.max_arity));
  if (pool.all.empty()) return report;
  auto axioms = axioms_for(s, pool, options.drop_interchange_permutation);
  const unsigned threads = thread_count(options.threads);
  const std::uint32_t edge_cap = options.max_composite_edges
                                     ? options.max_composite_edges
                                     : 2 * std::max<std::uint32_t>(1, s.bounds.max_edges);

  for (std::size_t a = 0; a < axioms.size(); ++a) {
    AxiomTally tally;
    tally.axiom = axioms[a].name;
    // Sampling is sequential so that the instances only depend on the seed.
    Rng rng(options.seed * 1000003ULL + a);
    std::vector<Instance> instances;
    std::size_t misses = 0;
    while (instances.size() < options.trials && misses < 50 * options.trials + 1000) {
      auto in = axioms[a].sample(rng);
      if (in && in->edges <= edge_cap)
        instances.push_back(std::move(*in));
      else
        ++misses;
    }
    std::vector<std::optional<std::pair<Digest, Digest>>> results(instances.size());
    std::vector<std::thread> pool_threads;
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto work = [&] {
      for (std::size_t t; (t = next++) < instances.size();) {
        try {
          auto [lhs, rhs] = instances[t].sides();
          if (!(lhs == rhs)) results[t] = std::pair{morphism_digest(lhs), morphism_digest(rhs)};
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mu);
          if (!failure) failure = std::current_exception();
        }
      }
    };
    for (unsigned t = 1; t < std::min<std::size_t>(threads, instances.size()); ++t)
      pool_threads.emplace_back(work);
    work();
    for (auto& t : pool_threads) t.join();
    if (failure) std::rethrow_exception(failure);

    tally.trials = instances.size();
    for (std::size_t t = 0; t < instances.size(); ++t) {
      if (!results[t]) continue;
      ++tally.failures;
      if (tally.counterexamples.size() < options.max_counterexamples)
        tally.counterexamples.push_back(
            {instances[t].bindings, results[t]->first, results[t]->second});
    }
    report.axioms.push_back(std::move(tally));
  }
  return report;
}

}  // namespace shapely
