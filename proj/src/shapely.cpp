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


#include "shapely/shapely.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_map>

#include "shapely/cellular.hpp"
#include "shapely/error.hpp"
#include "shapely/perm.hpp"

namespace shapely {

namespace {

// Permutations of 0..n-1 for every n up to the cap, computed once.
class PermTable {
 public:
  explicit PermTable(std::uint32_t max) {
    for (std::uint32_t n = 0; n <= max; ++n) table_.push_back(all_perms(n));
  }
  const std::vector<Perm>& operator[](std::size_t n) const { return table_.at(n); }

 private:
  std::vector<std::vector<Perm>> table_;
};

void require_compatible(const ShapelyFunctor& f, const ShapelyFunctor& g) {
  if (f.mode != g.mode) throw Error(ErrorCode::kModeMismatch, "functors differ in mode");
  if (!(f.bounds == g.bounds))
    throw Error(ErrorCode::kBoundsMismatch, "functors differ in bounds");
}

bool arity_within(Arity a, const Bounds& b) {
  return a.in <= b.max_arity && a.out <= b.max_arity;
}

// Adds x, and in symmetric mode every relabelling of x.
void add_shape(ShapelyFunctor& f, const LabelledShape& x) {
  if (f.mode == Mode::kPlanar) {
    f.insert(certificate_of(x, Mode::kPlanar));
    return;
  }
  for (const auto& phi : all_perms(x.leaves.size()))
    for (const auto& psi : all_perms(x.roots.size()))
      f.insert(certificate_of(relabel(x, phi, psi), Mode::kSymmetric));
}

std::vector<LabelledShape> decode_all(const ShapelyFunctor& f) {
  std::vector<LabelledShape> out;
  for (const auto& cert : f.sorted()) out.push_back(shape_from_certificate(cert));
  return out;
}

// The port-reordered copy of x: edge e's sources permuted by twists[e].first
// and targets by twists[e].second.
LabelledShape twist(const LabelledShape& x, const std::vector<const Perm*>& in,
                    const std::vector<const Perm*>& out) {
  LabelledShape y = x;
  for (std::size_t e = 0; e < x.body.edges.size(); ++e) {
    y.body.edges[e].sources = permute_list<Vertex>(x.body.edges[e].sources, *in[e]);
    y.body.edges[e].targets = permute_list<Vertex>(x.body.edges[e].targets, *out[e]);
  }
  return y;
}

// Calls visit on every port reordering of x.
void each_twist(const LabelledShape& x, const PermTable& perms,
                const std::function<void(const LabelledShape&)>& visit) {
  const std::size_t ne = x.body.edges.size();
  std::vector<const Perm*> in(ne), out(ne);
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == 2 * ne) {
      visit(twist(x, in, out));
      return;
    }
    const auto& edge = x.body.edges[k / 2];
    const auto& choices = perms[k % 2 == 0 ? edge.sources.size() : edge.targets.size()];
    for (const auto& p : choices) {
      (k % 2 == 0 ? in : out)[k / 2] = &p;
      go(k + 1);
    }
  };
  go(0);
}

// Semi-naive closure under single edge substitution. Items are shapes (in
// the functor's mode) or, for the orbit strategy, class representatives up
// to relabelling and port reordering. Substituting into every edge one at a
// time reaches every full substitution whose operands and result lie within
// the bounds: fillings without edges go first, which only shrinks the
// shape, and every later step adds edges.
class Closure {
 public:
  Closure(Mode mode, const Bounds& b, bool orbits)
      : mode_(mode), bounds_(b), orbits_(orbits), perms_(b.max_arity) {}

  void seed(const LabelledShape& x) { add(x); }

  void run() {
    while (next_ < items_.size()) process(next_++);
  }

  const std::vector<LabelledShape>& items() const { return items_; }

 private:
  struct Item {
    std::uint32_t edges = 0;
    bool unit = false;  // a corolla, or in orbit mode any relabelled corolla
  };

  Certificate key(const LabelledShape& x) const {
    if (!orbits_) return certificate_of(x, mode_);
    std::vector<std::uint32_t> colours(x.body.vertex_count, 0);
    for (auto v : x.leaves) {
      if (colours[v] & 1u)
        throw Error(ErrorCode::kIllLabelled, "repeated leaf in a generated shape");
      colours[v] |= 1u;
    }
    for (auto v : x.roots) {
      if (colours[v] & 2u)
        throw Error(ErrorCode::kIllLabelled, "repeated root in a generated shape");
      colours[v] |= 2u;
    }
    return canonical_coloured(x.body, colours, Mode::kSymmetric).certificate;
  }

  bool is_unit(const LabelledShape& x) const {
    if (x.body.edges.size() != 1) return false;
    const auto& e = x.body.edges[0];
    if (orbits_) {
      // any relabelled corolla: distinct fresh ports, labelled exactly once
      if (x.body.vertex_count != e.sources.size() + e.targets.size()) return false;
      auto ls = x.leaves, ss = e.sources, rs = x.roots, ts = e.targets;
      std::sort(ls.begin(), ls.end());
      std::sort(ss.begin(), ss.end());
      std::sort(rs.begin(), rs.end());
      std::sort(ts.begin(), ts.end());
      return ls == ss && rs == ts &&
             std::adjacent_find(ss.begin(), ss.end()) == ss.end() &&
             std::adjacent_find(ts.begin(), ts.end()) == ts.end();
    }
    return x.leaves == e.sources && x.roots == e.targets &&
           x.body.vertex_count == e.sources.size() + e.targets.size() &&
           key(x) == key(corolla(e.sources.size(), e.targets.size()));
  }

  void add(const LabelledShape& x) {
    if (x.body.edges.size() > bounds_.max_edges || !arity_within(x.arity(), bounds_)) return;
    auto k = key(x);
    if (!seen_.insert(std::move(k)).second) return;
    items_.push_back(x);
    meta_.push_back({x.body.edge_count(), is_unit(x)});
  }

  bool fits(std::uint32_t outer, std::uint32_t inner) const {
    return outer - 1 + inner <= bounds_.max_edges;
  }

  // Every filling of an edge of arity a by the item y.
  void fill(const LabelledShape& x, EdgeIndex e, std::uint32_t y) {
    const auto inner = items_[y];
    if (!orbits_) {
      add(substitute_edge(x, e, inner));
      return;
    }
    for (const auto& phi : perms_[inner.leaves.size()])
      for (const auto& psi : perms_[inner.roots.size()])
        add(substitute_edge(x, e, relabel(inner, phi, psi)));
  }

  void process(std::uint32_t z) {
    const Arity a = items_[z].arity();
    processed_[a].push_back(z);
    if (!meta_[z].unit) {
      const auto& x = items_[z];
      for (EdgeIndex e = 0; e < x.body.edges.size(); ++e)
        slots_[x.body.edges[e].arity()].push_back({z, e});
    }
    // z outer, every processed item inner (z itself included).
    if (!meta_[z].unit) {
      const auto x = items_[z];
      for (EdgeIndex e = 0; e < x.body.edges.size(); ++e) {
        auto it = processed_.find(x.body.edges[e].arity());
        if (it == processed_.end()) continue;
        const auto inner = it->second;  // add() may grow the lists
        for (auto y : inner)
          if (!meta_[y].unit && fits(meta_[z].edges, meta_[y].edges)) fill(x, e, y);
      }
    }
    // z inner, every other processed item outer.
    if (meta_[z].unit) return;
    auto it = slots_.find(a);
    if (it == slots_.end()) return;
    const auto outer = it->second;
    for (auto [x, e] : outer) {
      if (x == z || !fits(meta_[x].edges, meta_[z].edges)) continue;
      const auto shape = items_[x];
      fill(shape, e, z);
    }
  }

  Mode mode_;
  Bounds bounds_;
  bool orbits_;
  PermTable perms_;
  CertificateSet seen_;
  std::vector<LabelledShape> items_;
  std::vector<Item> meta_;
  std::size_t next_ = 0;
  std::map<Arity, std::vector<std::uint32_t>> processed_;
  std::map<Arity, std::vector<std::pair<std::uint32_t, EdgeIndex>>> slots_;
};

Certificate orbit_key(const LabelledShape& x) {
  std::vector<std::uint32_t> colours(x.body.vertex_count, 0);
  for (auto v : x.leaves) colours[v] |= 1u;
  for (auto v : x.roots) colours[v] |= 2u;
  return canonical_coloured(x.body, colours, Mode::kSymmetric).certificate;
}

// Glues the roots xr of x onto the leaves yl of y, pairwise. Leaves: y's
// unglued leaves then x's; roots: x's unglued roots then y's.
LabelledShape glue(const LabelledShape& y, const LabelledShape& x,
                   const std::vector<std::uint32_t>& xr, const std::vector<std::uint32_t>& yl) {
  DiscreteSpan span;
  span.apex = static_cast<std::uint32_t>(xr.size());
  for (std::size_t t = 0; t < xr.size(); ++t) {
    span.left_leg.push_back(x.roots[xr[t]]);
    span.right_leg.push_back(y.leaves[yl[t]]);
  }
  auto po = pushout_discrete(x.body, y.body, span);
  LabelledShape out;
  out.body = std::move(po.object);
  for (std::uint32_t k = 0; k < y.leaves.size(); ++k)
    if (std::find(yl.begin(), yl.end(), k) == yl.end())
      out.leaves.push_back(po.right.vertex_map[y.leaves[k]]);
  for (auto v : x.leaves) out.leaves.push_back(po.left.vertex_map[v]);
  for (std::uint32_t k = 0; k < x.roots.size(); ++k)
    if (std::find(xr.begin(), xr.end(), k) == xr.end())
      out.roots.push_back(po.left.vertex_map[x.roots[k]]);
  for (auto v : y.roots) out.roots.push_back(po.right.vertex_map[v]);
  return out;
}

// The free monad of a whole signature, as the least fixpoint of
// X -> id v Sigma.X on classes up to relabelling and port order. Sigma.X
// is computed with the class operations: relabelling (free on classes),
// grafting two pieces along one wire (trees) or along any nonempty set of
// wires (properads, PROPs), and juxtaposition (PROPs). A shape with at
// most E edges and arity at most A is built from connected pieces, the
// PROP case by juxtaposing its components, so only connected pieces are
// grafted. A connected piece with k edges and n leaves lies in such a
// shape only if n - (E - k) <= A for trees, where each further edge
// removes at most one leaf, and n - A(E - k) <= A otherwise; other pieces
// are dropped. Juxtapositions must fit the bounds themselves.
class SignatureClosure {
 public:
  SignatureClosure(ShapeClass c, const Bounds& b) : class_(c), bounds_(b) {}

  void run() {
    if (bounds_.max_arity >= 1) add(identity_shape(), true);
    if (class_ == ShapeClass::kProp) add(empty_shape(), false);
    if (bounds_.max_edges >= 1)
      for (std::uint32_t n = 0; n <= bounds_.max_arity; ++n)
        for (std::uint32_t m = 0; m <= bounds_.max_arity; ++m) add(corolla(n, m), true);
    while (next_ < items_.size()) process(next_++);
  }

  // Class representatives within the bounds.
  std::vector<LabelledShape> within_bounds() const {
    std::vector<LabelledShape> out;
    for (const auto& x : items_)
      if (arity_within(x.arity(), bounds_)) out.push_back(x);
    return out;
  }

 private:
  std::uint32_t slack(std::uint32_t edges) const {
    const std::uint32_t rest = bounds_.max_edges - edges;
    return class_ == ShapeClass::kTree ? rest : bounds_.max_arity * rest;
  }

  void add(const LabelledShape& x, bool connected) {
    const auto k = x.body.edge_count();
    if (k > bounds_.max_edges) return;
    const std::uint32_t cap = bounds_.max_arity + (connected ? slack(k) : 0);
    if (x.leaves.size() > cap || x.roots.size() > cap) return;
    if (!seen_.insert(orbit_key(x)).second) return;
    items_.push_back(x);
    connected_.push_back(connected);
  }

  // y above x.
  void graft_all(std::uint32_t upper, std::uint32_t lower) {
    const auto y = items_[upper], x = items_[lower];
    if (y.body.edges.empty() || x.body.edges.empty()) return;  // id grafts are trivial
    if (x.body.edge_count() + y.body.edge_count() > bounds_.max_edges) return;
    const std::uint32_t widest = class_ == ShapeClass::kTree
                                     ? 1
                                     : static_cast<std::uint32_t>(
                                           std::min(x.roots.size(), y.leaves.size()));
    for (std::uint32_t w = 1; w <= widest; ++w) {
      // subsets of x's roots in increasing order, sequences of y's leaves
      std::vector<std::uint32_t> xr(w), yl(w);
      std::function<void(std::uint32_t, std::uint32_t)> pick_roots;
      std::function<void(std::uint32_t)> pick_leaves = [&](std::uint32_t t) {
        if (t == w) {
          add(glue(y, x, xr, yl), true);
          return;
        }
        for (std::uint32_t l = 0; l < y.leaves.size(); ++l) {
          if (std::find(yl.begin(), yl.begin() + t, l) != yl.begin() + t) continue;
          yl[t] = l;
          pick_leaves(t + 1);
        }
      };
      pick_roots = [&](std::uint32_t t, std::uint32_t from) {
        if (t == w) {
          pick_leaves(0);
          return;
        }
        for (std::uint32_t r = from; r < x.roots.size(); ++r) {
          xr[t] = r;
          pick_roots(t + 1, r + 1);
        }
      };
      pick_roots(0, 0);
    }
  }

  void process(std::uint32_t z) {
    processed_.push_back(z);
    for (auto p : processed_) {
      if (connected_[z] && connected_[p]) {
        graft_all(z, p);
        if (p != z) graft_all(p, z);
      }
      if (class_ == ShapeClass::kProp) {
        const auto& a = items_[z];
        const auto& b = items_[p];
        auto empty = [](const LabelledShape& x) {
          return x.body.vertex_count == 0 && x.body.edges.empty();
        };
        if (empty(a) || empty(b)) continue;
        if (a.body.edge_count() + b.body.edge_count() > bounds_.max_edges) continue;
        if (a.leaves.size() + b.leaves.size() > bounds_.max_arity ||
            a.roots.size() + b.roots.size() > bounds_.max_arity)
          continue;
        add(juxtapose(items_[p], items_[z]), false);
      }
    }
  }

  ShapeClass class_;
  Bounds bounds_;
  CertificateSet seen_;
  std::vector<LabelledShape> items_;
  std::vector<bool> connected_;
  std::vector<std::uint32_t> processed_;
  std::size_t next_ = 0;
};

// Every member of each class, in the mode.
void expand_classes(const std::vector<LabelledShape>& reps, ShapelyFunctor& out) {
  PermTable perms(out.bounds.max_arity);
  for (const auto& z : reps) {
    for (const auto& phi : perms[z.leaves.size()])
      for (const auto& psi : perms[z.roots.size()]) {
        auto y = relabel(z, phi, psi);
        if (out.mode == Mode::kSymmetric) {
          out.insert(certificate_of(y, Mode::kSymmetric));
          continue;
        }
        each_twist(y, perms, [&](const LabelledShape& t) {
          out.insert(certificate_of(t, Mode::kPlanar));
        });
      }
  }
}

}  // namespace

std::size_t ShapelyFunctor::size() const {
  std::size_t n = 0;
  for (const auto& [a, s] : shapes) n += s.size();
  return n;
}

bool ShapelyFunctor::contains(const Certificate& cert) const {
  auto it = shapes.find(certificate_header(cert).arity);
  return it != shapes.end() && it->second.count(cert) > 0;
}

bool ShapelyFunctor::contains(const LabelledShape& x) const {
  return contains(certificate_of(x, mode));
}

bool ShapelyFunctor::insert(const Certificate& cert) {
  return shapes[certificate_header(cert).arity].insert(cert).second;
}

std::vector<Certificate> ShapelyFunctor::sorted(Arity a) const {
  auto it = shapes.find(a);
  if (it == shapes.end()) return {};
  std::vector<Certificate> out(it->second.begin(), it->second.end());
  sort_by_digest(out);
  return out;
}

std::vector<Certificate> ShapelyFunctor::sorted() const {
  std::vector<Certificate> out;
  for (const auto& [a, s] : shapes) {
    auto part = sorted(a);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

ShapelyFunctor from_shapes(const std::vector<LabelledShape>& shapes, Mode mode,
                           const Bounds& bounds) {
  ShapelyFunctor f;
  f.mode = mode;
  f.bounds = bounds;
  for (std::size_t k = 0; k < shapes.size(); ++k) {
    const auto& x = shapes[k];
    if (!is_valid(x))
      throw Error(ErrorCode::kInvalidPolygraph, "shape " + std::to_string(k) + " is not valid");
    if (!within_bounds(x, bounds))
      throw Error(ErrorCode::kBoundsExceeded,
                  "shape " + std::to_string(k) + " exceeds the bounds");
    if (!well_labelled(x))
      throw Error(ErrorCode::kIllLabelled, "shape " + std::to_string(k) + " is not well labelled");
    add_shape(f, x);
  }
  return f;
}

ShapelyFunctor identity_functor(Mode mode, const Bounds& bounds) {
  ShapelyFunctor f;
  f.mode = mode;
  f.bounds = bounds;
  if (bounds.max_edges == 0) return f;
  for (std::uint32_t n = 0; n <= bounds.max_arity; ++n)
    for (std::uint32_t m = 0; m <= bounds.max_arity; ++m)
      f.insert(certificate_of(corolla(n, m), mode));
  return f;
}

ShapelyFunctor sigma(ShapeClass c, Mode mode, const Bounds& bounds) {
  ShapelyFunctor f;
  f.mode = mode;
  f.bounds = bounds;
  f.signature = c;
  const std::uint32_t a = bounds.max_arity;
  auto keep = [&](const LabelledShape& x) {
    if (within_bounds(x, bounds)) add_shape(f, x);
  };
  if (a >= 1) keep(identity_shape());
  if (c == ShapeClass::kProp) keep(empty_shape());
  if (bounds.max_edges >= 1) {
    for (std::uint32_t n = 0; n <= a; ++n)
      for (std::uint32_t m = 0; m <= a; ++m)
        for (const auto& phi : all_perms(n))
          for (const auto& psi : all_perms(m)) keep(relabel(corolla(n, m), phi, psi));
  }
  if (bounds.max_edges < 2) return f;
  for (std::uint32_t n = 0; n <= a; ++n)
    for (std::uint32_t m = 0; m <= a; ++m)
      for (std::uint32_t p = 0; p <= a; ++p)
        for (std::uint32_t q = 0; q <= a; ++q) {
          const auto lower = corolla(n, m), upper = corolla(p, q);
          const std::uint32_t widest = c == ShapeClass::kTree ? 1 : std::min(m, p);
          for (std::uint32_t w = 1; w <= widest; ++w)
            for (std::uint32_t i = 1; i + w - 1 <= m; ++i)
              for (std::uint32_t j = 1; j + w - 1 <= p; ++j)
                keep(multi_graft(upper, lower, i, j, w));
          if (c == ShapeClass::kProp) keep(juxtapose(upper, lower));
        }
  return f;
}

ShapelyFunctor join(const ShapelyFunctor& f, const ShapelyFunctor& g) {
  require_compatible(f, g);
  ShapelyFunctor out = f;
  out.signature.reset();
  for (const auto& [a, s] : g.shapes) out.shapes[a].insert(s.begin(), s.end());
  out.non_degenerate = f.non_degenerate || g.non_degenerate;
  return out;
}

bool leq(const ShapelyFunctor& f, const ShapelyFunctor& g) {
  require_compatible(f, g);
  for (const auto& [a, s] : f.shapes) {
    auto it = g.shapes.find(a);
    if (it == g.shapes.end()) return false;
    for (const auto& c : s)
      if (!it->second.count(c)) return false;
  }
  return true;
}

ShapelyFunctor substitute(const ShapelyFunctor& f, const ShapelyFunctor& g) {
  require_compatible(f, g);
  ShapelyFunctor out;
  out.mode = f.mode;
  out.bounds = f.bounds;
  std::map<Arity, std::vector<LabelledShape>> inner;
  for (const auto& y : decode_all(g)) inner[y.arity()].push_back(y);
  const std::uint32_t budget = f.bounds.max_edges;
  for (const auto& x : decode_all(f)) {
    const auto ne = x.body.edges.size();
    if (ne == 0) {
      out.insert(certificate_of(x, f.mode));
      continue;
    }
    std::vector<const std::vector<LabelledShape>*> choices(ne);
    bool fillable = true;
    for (std::size_t e = 0; e < ne && fillable; ++e) {
      auto it = inner.find(x.body.edges[e].arity());
      if (it == inner.end()) fillable = false;
      else choices[e] = &it->second;
    }
    if (!fillable) continue;
    std::vector<const LabelledShape*> fill(ne, nullptr);
    std::function<void(std::size_t, std::uint32_t)> go = [&](std::size_t e, std::uint32_t used) {
      if (e == ne) {
        auto z = substitute_edges(x, fill);
        if (arity_within(z.arity(), f.bounds)) out.insert(certificate_of(z, f.mode));
        return;
      }
      for (const auto& y : *choices[e]) {
        if (used + y.body.edge_count() > budget) continue;
        fill[e] = &y;
        go(e + 1, used + y.body.edge_count());
      }
    };
    go(0, 0);
  }
  return out;
}

bool has_all_relabelled_corollas(const ShapelyFunctor& f) {
  if (f.bounds.max_edges == 0) return true;
  auto seeds = join(identity_functor(f.mode, f.bounds), f);
  for (std::uint32_t n = 0; n <= f.bounds.max_arity; ++n)
    for (std::uint32_t m = 0; m <= f.bounds.max_arity; ++m)
      for (const auto& phi : all_perms(n))
        for (const auto& psi : all_perms(m))
          if (!seeds.contains(relabel(corolla(n, m), phi, psi))) return false;
  return true;
}

ShapelyFunctor free_monad(const ShapelyFunctor& f, ClosureStrategy strategy) {
  if (f.signature && strategy == ClosureStrategy::kAuto) {
    SignatureClosure closure(*f.signature, f.bounds);
    closure.run();
    ShapelyFunctor out;
    out.mode = f.mode;
    out.bounds = f.bounds;
    expand_classes(closure.within_bounds(), out);
    return out;
  }
  const bool orbits =
      strategy == ClosureStrategy::kOrbit ||
      (strategy == ClosureStrategy::kAuto && has_all_relabelled_corollas(f));
  if (orbits && !has_all_relabelled_corollas(f))
    throw Error(ErrorCode::kUnsupported,
                "orbit closure needs every relabelled corolla in the generators");
  auto seeds = join(identity_functor(f.mode, f.bounds), f);
  Closure closure(f.mode, f.bounds, orbits);
  for (const auto& x : decode_all(seeds)) closure.seed(x);
  closure.run();

  ShapelyFunctor out;
  out.mode = f.mode;
  out.bounds = f.bounds;
  if (!orbits) {
    for (const auto& x : closure.items()) out.insert(certificate_of(x, f.mode));
    return out;
  }
  expand_classes(closure.items(), out);
  return out;
}

Evaluation evaluate(const ShapelyFunctor& f, const Polygraph& a) {
  Evaluation out;
  out.star = a.vertex_count;
  std::set<Arity> edge_arities;
  for (const auto& e : a.edges) edge_arities.insert(e.arity());
  for (const auto& [arity, set] : f.shapes) {
    std::vector<EvaluationClass> classes;
    for (const auto& cert : f.sorted(arity)) {
      const auto x = shape_from_certificate(cert);
      if (std::any_of(x.body.edges.begin(), x.body.edges.end(),
                      [&](const Edge& e) { return !edge_arities.count(e.arity()); }))
        continue;
      const auto group = label_preserving_automorphisms(x, f.mode);
      std::map<PolyMorphism, std::size_t> orbits;
      for_each_hom(x.body, a, f.mode, {}, [&](const PolyMorphism& h) {
        ++orbits[orbit_min(h, group)];
        return true;
      });
      const auto digest = digest_of(cert);
      for (auto& [rep, count] : orbits) {
        EvaluationClass c;
        c.shape = cert;
        c.digest = digest;
        c.representative = rep;
        c.orbit_size = count;
        for (auto v : x.leaves) c.leaf_images.push_back(rep.vertex_map[v]);
        for (auto v : x.roots) c.root_images.push_back(rep.vertex_map[v]);
        classes.push_back(std::move(c));
      }
    }
    if (!classes.empty()) out.classes[arity] = std::move(classes);
  }
  return out;
}

std::size_t SpectrumData::size() const {
  std::size_t n = 0;
  for (const auto& [a, s] : stages) n += s.size();
  return n;
}

SpectrumData spectrum(const ShapelyFunctor& f) {
  SpectrumData out;
  out.mode = f.mode;
  out.bounds = f.bounds;
  const auto point = discrete(1);
  const auto point_group = trivial_group(point, f.mode);
  for (const auto& [arity, set] : f.shapes) {
    auto& stage = out.stages[arity];
    for (const auto& cert : f.sorted(arity)) {
      SpectrumEntry e;
      e.certificate = cert;
      e.digest = digest_of(cert);
      e.shape = shape_from_certificate(cert);
      e.group = label_preserving_automorphisms(e.shape, f.mode);
      auto arrow = [&](bool leaf, std::uint32_t k, Vertex v) {
        BoundaryArrow b;
        b.leaf = leaf;
        b.index = k + 1;
        b.map.mode = f.mode;
        b.map.vertex_map = {v};
        b.valid = orbit_morphism_valid(b.map, point_group, e.group);
        e.arrows.push_back(std::move(b));
      };
      for (std::uint32_t k = 0; k < e.shape.leaves.size(); ++k)
        arrow(true, k, e.shape.leaves[k]);
      for (std::uint32_t k = 0; k < e.shape.roots.size(); ++k)
        arrow(false, k, e.shape.roots[k]);
      if (f.mode == Mode::kSymmetric) {
        const auto n = e.shape.leaves.size(), m = e.shape.roots.size();
        Perm id_in(n), id_out(m);
        std::iota(id_in.begin(), id_in.end(), 0u);
        std::iota(id_out.begin(), id_out.end(), 0u);
        for (std::size_t k = 0; k + 1 < n; ++k) {
          auto t = id_in;
          std::swap(t[k], t[k + 1]);
          e.leaf_actions.push_back(digest_of(certificate_of(relabel(e.shape, t, id_out), f.mode)));
        }
        for (std::size_t k = 0; k + 1 < m; ++k) {
          auto t = id_out;
          std::swap(t[k], t[k + 1]);
          e.root_actions.push_back(digest_of(certificate_of(relabel(e.shape, id_in, t), f.mode)));
        }
      }
      stage.push_back(std::move(e));
    }
  }
  return out;
}

ShapelyFunctor universal_functor(Mode mode, const Bounds& bounds) {
  ShapelyFunctor out;
  out.mode = mode;
  out.bounds = bounds;
  const std::uint32_t a = bounds.max_arity;
  const std::uint32_t cap = a * (bounds.max_edges + 1);
  PermTable perms(a);
  // Grow every leaf complex: start from n leaves and attach lone vertices
  // and edges (along sources with fresh targets, or along targets with
  // fresh sources). Partial shapes are deduped with their roots empty.
  for (std::uint32_t n = 0; n <= a; ++n) {
    LabelledShape start;
    start.body = discrete(n);
    for (Vertex v = 0; v < n; ++v) start.leaves.push_back(v);
    CertificateSet seen{certificate_of(start, mode)};
    std::vector<LabelledShape> level{start}, complexes{start};
    while (!level.empty()) {
      std::vector<LabelledShape> next;
      auto offer = [&](LabelledShape x) {
        if (seen.insert(certificate_of(x, mode)).second) {
          complexes.push_back(x);
          next.push_back(std::move(x));
        }
      };
      for (const auto& x : level) {
        const std::uint32_t v = x.body.vertex_count;
        if (v < cap) {
          auto y = x;
          ++y.body.vertex_count;
          offer(std::move(y));
        }
        if (x.body.edges.size() == bounds.max_edges) continue;
        for (std::uint32_t p = 0; p <= a; ++p)
          for (std::uint32_t q = 0; q <= a; ++q)
            for (int side = 0; side < 2; ++side) {
              // side 0: attached along its p sources, q fresh targets
              const std::uint32_t attached = side == 0 ? p : q;
              const std::uint32_t fresh = side == 0 ? q : p;
              if (v + fresh > cap || (attached > 0 && v == 0)) continue;
              std::vector<Vertex> pick(attached, 0);
              while (true) {
                auto y = x;
                std::vector<Vertex> made;
                for (std::uint32_t k = 0; k < fresh; ++k) made.push_back(v + k);
                y.body.vertex_count = v + fresh;
                Edge e;
                e.sources = side == 0 ? pick : made;
                e.targets = side == 0 ? made : pick;
                y.body.edges.push_back(std::move(e));
                offer(std::move(y));
                std::size_t k = 0;
                while (k < attached && ++pick[k] == v) pick[k++] = 0;
                if (k == attached) break;
              }
            }
      }
      level = std::move(next);
    }
    // Roots: injective sequences whose boundary map is also a complex.
    for (const auto& x : complexes) {
      const std::uint32_t v = x.body.vertex_count;
      std::vector<std::vector<Vertex>> sequences{{}};
      for (std::size_t s = 0; s < sequences.size(); ++s) {
        if (sequences[s].size() == a) continue;
        for (Vertex w = 0; w < v; ++w) {
          if (std::find(sequences[s].begin(), sequences[s].end(), w) != sequences[s].end())
            continue;
          auto longer = sequences[s];
          longer.push_back(w);
          sequences.push_back(std::move(longer));
        }
      }
      for (auto& roots : sequences) {
        if (!is_relative_complex(boundary_map(roots), x.body)) continue;
        auto y = x;
        y.roots = roots;
        out.insert(certificate_of(y, mode));
      }
    }
  }
  return out;
}

SpectrumData universal_spectrum(const Bounds& bounds, Mode mode) {
  return spectrum(universal_functor(mode, bounds));
}

}  // namespace shapely
