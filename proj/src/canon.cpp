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

#include "shapely/canon.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <set>

#include "shapely/error.hpp"

namespace shapely {

namespace {

constexpr std::uint32_t kSeparator = 0xffffffffu;
constexpr std::uint32_t kUnset = 0xffffffffu;

enum Tag : std::uint32_t { kWalked = 0, kRefined = 1, kColoured = 2 };

// Values below 255 take one byte; larger ones an escape and four bytes.
void put(Certificate& c, std::uint32_t x) {
  if (x < 255) {
    c.push_back(static_cast<char>(x));
    return;
  }
  c.push_back(static_cast<char>(255));
  for (int k = 0; k < 4; ++k) c.push_back(static_cast<char>((x >> (8 * k)) & 0xff));
}

class Reader {
 public:
  explicit Reader(const Certificate& c) : c_(c) {}
  std::uint32_t get() {
    if (pos_ >= c_.size()) throw Error(ErrorCode::kParse, "truncated certificate");
    auto b = static_cast<unsigned char>(c_[pos_++]);
    if (b < 255) return b;
    if (pos_ + 4 > c_.size()) throw Error(ErrorCode::kParse, "truncated certificate");
    std::uint32_t x = 0;
    for (int k = 0; k < 4; ++k) x |= static_cast<std::uint32_t>(static_cast<unsigned char>(c_[pos_++])) << (8 * k);
    return x;
  }
  bool done() const { return pos_ == c_.size(); }

 private:
  const Certificate& c_;
  std::size_t pos_ = 0;
};

struct Incidence {
  EdgeIndex edge;
  std::uint32_t side;  // 0 source, 1 target
  std::uint32_t port;
};

// Individualisation-refinement over the nodes of a polygraph: vertices
// first (ids 0..V-1), then edges (V..V+E-1).
class CanonSearch {
 public:
  using Prefix = std::function<void(const std::vector<std::uint32_t>&, Certificate&)>;

  CanonSearch(const Polygraph& p, Mode mode, const std::vector<std::vector<std::uint32_t>>& keys,
              std::uint32_t tag, Prefix prefix)
      : p_(p), mode_(mode), v_(p.vertex_count), n_(p.vertex_count + p.edge_count()), tag_(tag),
        prefix_(std::move(prefix)), incidences_(p.vertex_count) {
    for (EdgeIndex e = 0; e < p.edges.size(); ++e) {
      const auto& edge = p.edges[e];
      for (std::uint32_t i = 0; i < edge.sources.size(); ++i)
        incidences_[edge.sources[i]].push_back({e, 0, i});
      for (std::uint32_t j = 0; j < edge.targets.size(); ++j)
        incidences_[edge.targets[j]].push_back({e, 1, j});
    }
    std::vector<std::vector<std::uint32_t>> init(n_);
    for (Vertex v = 0; v < v_; ++v) {
      init[v].push_back(0);
      init[v].insert(init[v].end(), keys[v].begin(), keys[v].end());
    }
    for (EdgeIndex e = 0; e < p.edges.size(); ++e)
      init[v_ + e] = {1, static_cast<std::uint32_t>(p.edges[e].sources.size()),
                      static_cast<std::uint32_t>(p.edges[e].targets.size())};
    std::vector<std::uint32_t> colours(n_);
    rank(init, colours);
    search(colours);
  }

  const Certificate& best() const { return best_; }
  const std::vector<std::vector<std::uint32_t>>& best_leaves() const { return leaves_; }

 private:
  // Dense ranks of the nodes sorted by signature; returns the cell count.
  std::uint32_t rank(const std::vector<std::vector<std::uint32_t>>& sig,
                     std::vector<std::uint32_t>& colours) const {
    std::vector<std::uint32_t> order(n_);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t a, std::uint32_t b) { return sig[a] < sig[b]; });
    std::uint32_t cells = 0;
    for (std::uint32_t k = 0; k < n_; ++k) {
      if (k > 0 && sig[order[k]] != sig[order[k - 1]]) ++cells;
      colours[order[k]] = cells;
    }
    return n_ == 0 ? 0 : cells + 1;
  }

  std::uint32_t refine(std::vector<std::uint32_t>& colours) const {
    std::uint32_t cells = count_cells(colours);
    std::vector<std::vector<std::uint32_t>> sig(n_);
    while (true) {
      for (Vertex v = 0; v < v_; ++v) {
        auto& s = sig[v];
        s.assign(1, colours[v]);
        for (const auto& inc : incidences_[v]) {
          std::uint32_t port = mode_ == Mode::kPlanar ? inc.port : 0;
          s.push_back((colours[v_ + inc.edge] << 12) | (inc.side << 11) | port);
        }
        std::sort(s.begin() + 1, s.end());
      }
      for (EdgeIndex e = 0; e < p_.edges.size(); ++e) {
        auto& s = sig[v_ + e];
        s.assign(1, colours[v_ + e]);
        append_ports(s, p_.edges[e].sources, colours);
        s.push_back(kSeparator);
        append_ports(s, p_.edges[e].targets, colours);
      }
      auto next = rank(sig, colours);
      if (next == cells) return cells;
      cells = next;
    }
  }

  void append_ports(std::vector<std::uint32_t>& s, const std::vector<Vertex>& ports,
                    const std::vector<std::uint32_t>& colours) const {
    auto start = s.size();
    for (Vertex v : ports) s.push_back(colours[v]);
    if (mode_ == Mode::kSymmetric) std::sort(s.begin() + start, s.end());
  }

  std::uint32_t count_cells(const std::vector<std::uint32_t>& colours) const {
    std::uint32_t top = 0;
    for (auto c : colours) top = std::max(top, c + 1);
    return top;
  }

  void search(std::vector<std::uint32_t> colours) {
    auto cells = refine(colours);
    if (cells == n_) {
      leaf(colours);
      return;
    }
    // First non-singleton cell in colour order.
    std::vector<std::uint32_t> size(cells, 0);
    for (auto c : colours) ++size[c];
    std::uint32_t target = 0;
    while (size[target] == 1) ++target;
    for (std::uint32_t x = 0; x < n_; ++x) {
      if (colours[x] != target) continue;
      auto next = colours;
      for (auto& c : next)
        if (c > target) ++c;
      for (std::uint32_t y = 0; y < n_; ++y)
        if (colours[y] == target && y != x) next[y] = target + 1;
      search(std::move(next));
    }
  }

  void leaf(const std::vector<std::uint32_t>& colours) {
    Certificate cert;
    cert.reserve(8 + 3 * n_);
    put(cert, tag_);
    put(cert, v_);
    put(cert, p_.edge_count());
    prefix_(colours, cert);
    std::vector<EdgeIndex> by_rank(p_.edges.size());
    for (EdgeIndex e = 0; e < p_.edges.size(); ++e) by_rank[colours[v_ + e] - v_] = e;
    std::vector<std::uint32_t> ports;
    for (EdgeIndex e : by_rank) {
      const auto& edge = p_.edges[e];
      put(cert, static_cast<std::uint32_t>(edge.sources.size()));
      put(cert, static_cast<std::uint32_t>(edge.targets.size()));
      for (const auto* side : {&edge.sources, &edge.targets}) {
        ports.clear();
        append_ports(ports, *side, colours);
        for (auto x : ports) put(cert, x);
      }
    }
    if (leaves_.empty() || cert < best_) {
      best_ = std::move(cert);
      leaves_.assign(1, colours);
    } else if (cert == best_) {
      leaves_.push_back(colours);
    }
  }

  const Polygraph& p_;
  Mode mode_;
  std::uint32_t v_;
  std::uint32_t n_;
  std::uint32_t tag_;
  Prefix prefix_;
  std::vector<std::vector<Incidence>> incidences_;
  Certificate best_;
  std::vector<std::vector<std::uint32_t>> leaves_;
};

std::vector<std::vector<std::uint32_t>> label_keys(const LabelledShape& x) {
  std::vector<std::vector<std::uint32_t>> keys(x.body.vertex_count);
  for (std::uint32_t i = 0; i < x.leaves.size(); ++i) keys[x.leaves[i]].push_back(i);
  for (auto& k : keys) k.push_back(kSeparator);
  for (std::uint32_t j = 0; j < x.roots.size(); ++j) keys[x.roots[j]].push_back(j);
  return keys;
}

CanonSearch search_shape(const LabelledShape& x, Mode mode) {
  return CanonSearch(x.body, mode, label_keys(x), kRefined,
                     [&x](const std::vector<std::uint32_t>& colours, Certificate& cert) {
                       put(cert, static_cast<std::uint32_t>(x.leaves.size()));
                       put(cert, static_cast<std::uint32_t>(x.roots.size()));
                       for (Vertex v : x.leaves) put(cert, colours[v]);
                       for (Vertex v : x.roots) put(cert, colours[v]);
                     });
}

// Breadth-first numbering from the labels. Fails when some cell is not
// reached or a vertex occupies the same port of two different edges.
struct Walk {
  std::vector<Vertex> vertex;   // old -> new
  std::vector<EdgeIndex> edge;  // old -> new
};

std::optional<Walk> walk(const LabelledShape& x) {
  const auto& p = x.body;
  const std::uint32_t nv = p.vertex_count;
  const auto ne = static_cast<std::uint32_t>(p.edges.size());
  // Incidences grouped by vertex: key = side << 16 | port.
  std::vector<std::uint32_t> start(nv + 1, 0);
  for (const auto& e : p.edges) {
    for (auto v : e.sources) ++start[v + 1];
    for (auto v : e.targets) ++start[v + 1];
  }
  for (std::uint32_t v = 0; v < nv; ++v) start[v + 1] += start[v];
  std::vector<std::pair<std::uint32_t, EdgeIndex>> inc(start[nv]);
  std::vector<std::uint32_t> fill(start.begin(), start.end() - 1);
  for (EdgeIndex e = 0; e < ne; ++e) {
    const auto& edge = p.edges[e];
    for (std::uint32_t i = 0; i < edge.sources.size(); ++i) inc[fill[edge.sources[i]]++] = {i, e};
    for (std::uint32_t j = 0; j < edge.targets.size(); ++j)
      inc[fill[edge.targets[j]]++] = {(1u << 16) | j, e};
  }
  Walk w;
  w.vertex.assign(nv, kUnset);
  w.edge.assign(ne, kUnset);
  std::vector<Vertex> queue;
  queue.reserve(nv);
  auto see = [&](Vertex v) {
    if (w.vertex[v] == kUnset) {
      w.vertex[v] = static_cast<Vertex>(queue.size());
      queue.push_back(v);
    }
  };
  for (auto v : x.leaves) see(v);
  for (auto v : x.roots) see(v);
  std::uint32_t edges_seen = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    auto first = inc.begin() + start[v], last = inc.begin() + start[v + 1];
    std::sort(first, last);
    for (auto it = first; it != last; ++it) {
      if (it != first && it->first == (it - 1)->first && it->second != (it - 1)->second)
        return std::nullopt;
      const EdgeIndex e = it->second;
      if (w.edge[e] != kUnset) continue;
      w.edge[e] = edges_seen++;
      for (auto u : p.edges[e].sources) see(u);
      for (auto u : p.edges[e].targets) see(u);
    }
  }
  if (queue.size() != nv || edges_seen != ne) return std::nullopt;
  return w;
}

Certificate walk_certificate(const LabelledShape& x, const Walk& w) {
  Certificate cert;
  const auto& p = x.body;
  cert.reserve(8 + p.vertex_count + 4 * p.edges.size());
  put(cert, kWalked);
  put(cert, p.vertex_count);
  put(cert, p.edge_count());
  put(cert, static_cast<std::uint32_t>(x.leaves.size()));
  put(cert, static_cast<std::uint32_t>(x.roots.size()));
  for (auto v : x.leaves) put(cert, w.vertex[v]);
  for (auto v : x.roots) put(cert, w.vertex[v]);
  std::vector<EdgeIndex> by_rank(p.edges.size());
  for (EdgeIndex e = 0; e < p.edges.size(); ++e) by_rank[w.edge[e]] = e;
  for (auto e : by_rank) {
    const auto& edge = p.edges[e];
    put(cert, static_cast<std::uint32_t>(edge.sources.size()));
    put(cert, static_cast<std::uint32_t>(edge.targets.size()));
    for (auto v : edge.sources) put(cert, w.vertex[v]);
    for (auto v : edge.targets) put(cert, w.vertex[v]);
  }
  return cert;
}

// All permutations p with to[p[i]] == from[i].
void port_matchings(const std::vector<Vertex>& from, const std::vector<Vertex>& to,
                    std::vector<Perm>& out) {
  const std::size_t n = from.size();
  Perm p(n);
  std::vector<bool> used(n, false);
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == n) {
      out.push_back(p);
      return;
    }
    for (std::uint32_t k = 0; k < n; ++k) {
      if (used[k] || to[k] != from[i]) continue;
      used[k] = true;
      p[i] = k;
      go(i + 1);
      used[k] = false;
    }
  };
  go(0);
}

// Positions of ports sorted by image vertex, stable.
Perm stable_order(const std::vector<Vertex>& ports, const std::vector<std::uint32_t>& colours) {
  Perm order(ports.size());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return colours[ports[a]] < colours[ports[b]];
  });
  return order;
}

// The morphism p -> canonical body determined by a leaf colouring.
PolyMorphism leaf_morphism(const Polygraph& p, const std::vector<std::uint32_t>& colours,
                           Mode mode) {
  PolyMorphism m;
  m.mode = mode;
  const std::uint32_t v = p.vertex_count;
  m.vertex_map.assign(colours.begin(), colours.begin() + v);
  for (EdgeIndex e = 0; e < p.edges.size(); ++e) {
    const auto& edge = p.edges[e];
    EdgeImage img;
    img.edge = colours[v + e] - v;
    if (mode == Mode::kPlanar) {
      img.in_perm = identity_perm(edge.sources.size());
      img.out_perm = identity_perm(edge.targets.size());
    } else {
      // sorted[k] = sources[order[k]], so source i lands at position
      // order^-1(i); target position j is filled by old target order[j].
      img.in_perm = inverse(stable_order(edge.sources, colours));
      img.out_perm = stable_order(edge.targets, colours);
    }
    m.edge_map.push_back(std::move(img));
  }
  return m;
}

Polygraph apply_body(const Polygraph& p, const PolyMorphism& iso) {
  Polygraph out;
  out.vertex_count = p.vertex_count;
  out.edges.resize(p.edges.size());
  for (EdgeIndex e = 0; e < p.edges.size(); ++e) {
    const auto& edge = p.edges[e];
    const auto& img = iso.edge_map[e];
    auto& ne = out.edges[img.edge];
    ne.sources.resize(edge.sources.size());
    ne.targets.resize(edge.targets.size());
    for (std::uint32_t i = 0; i < edge.sources.size(); ++i)
      ne.sources[img.in_perm[i]] = iso.vertex_map[edge.sources[i]];
    for (std::uint32_t j = 0; j < edge.targets.size(); ++j)
      ne.targets[j] = iso.vertex_map[edge.targets[img.out_perm[j]]];
  }
  return out;
}

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

std::string Digest::hex() const {
  char buf[33];
  std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(hi),
                static_cast<unsigned long long>(lo));
  return buf;
}

Digest digest_of(const Certificate& cert) {
  std::uint64_t a = 0xcbf29ce484222325ull;
  std::uint64_t b = 0x84222325cbf29ce4ull ^ cert.size();
  for (char ch : cert) {
    auto byte = static_cast<unsigned char>(ch);
    a = (a ^ byte) * 0x100000001b3ull;
    b = mix64(b + byte + 0x9e3779b97f4a7c15ull);
  }
  return {mix64(a), b};
}

LabelledShape shape_from_certificate(const Certificate& cert) {
  Reader r(cert);
  auto tag = r.get();
  if (tag != kWalked && tag != kRefined)
    throw Error(ErrorCode::kParse, "not a shape certificate");
  LabelledShape x;
  x.body.vertex_count = r.get();
  const auto ne = r.get();
  const auto n = r.get(), m = r.get();
  for (std::uint32_t i = 0; i < n; ++i) x.leaves.push_back(r.get());
  for (std::uint32_t j = 0; j < m; ++j) x.roots.push_back(r.get());
  x.body.edges.resize(ne);
  for (auto& e : x.body.edges) {
    const auto a = r.get(), b = r.get();
    for (std::uint32_t i = 0; i < a; ++i) e.sources.push_back(r.get());
    for (std::uint32_t j = 0; j < b; ++j) e.targets.push_back(r.get());
  }
  if (!r.done()) throw Error(ErrorCode::kParse, "trailing certificate data");
  return x;
}

CertificateHeader certificate_header(const Certificate& cert) {
  Reader r(cert);
  auto tag = r.get();
  if (tag != kWalked && tag != kRefined)
    throw Error(ErrorCode::kParse, "not a shape certificate");
  CertificateHeader h;
  h.vertex_count = r.get();
  h.edge_count = r.get();
  h.arity.in = r.get();
  h.arity.out = r.get();
  return h;
}

bool PermGroup::contains(const PolyMorphism& m) const {
  return std::find(elements.begin(), elements.end(), m) != elements.end();
}

PermGroup make_group(std::vector<PolyMorphism> elements, const Polygraph& carrier, Mode mode) {
  auto id = identity_morphism(carrier, mode);
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  auto it = std::find(elements.begin(), elements.end(), id);
  if (it == elements.end())
    throw Error(ErrorCode::kNotAutomorphism, "group elements do not contain the identity");
  std::rotate(elements.begin(), it, it + 1);
  for (auto& e : elements) e.mode = mode;

  PermGroup g;
  std::set<PolyMorphism> closure{id};
  for (std::size_t k = 1; k < elements.size(); ++k) {
    if (closure.count(elements[k])) continue;
    g.generators.push_back(elements[k]);
    std::vector<PolyMorphism> frontier(closure.begin(), closure.end());
    while (!frontier.empty()) {
      std::vector<PolyMorphism> next;
      for (const auto& a : frontier)
        for (const auto& s : g.generators) {
          auto c = compose(s, a);
          c.mode = mode;
          if (closure.insert(c).second) next.push_back(std::move(c));
        }
      frontier = std::move(next);
    }
  }
  if (closure.size() != elements.size())
    throw Error(ErrorCode::kNotAutomorphism, "group elements are not closed under composition");
  g.elements = std::move(elements);
  return g;
}

PermGroup trivial_group(const Polygraph& p, Mode mode) {
  PermGroup g;
  g.elements.push_back(identity_morphism(p, mode));
  return g;
}

CanonicalForm canonical_form(const LabelledShape& x, Mode mode) {
  CanonicalForm out;
  if (mode == Mode::kPlanar) {
    if (auto w = walk(x)) {
      out.certificate = walk_certificate(x, *w);
      out.witness = planar_morphism(x.body, w->vertex, w->edge);
      out.shape.body = apply_body(x.body, out.witness);
      for (Vertex v : x.leaves) out.shape.leaves.push_back(out.witness.vertex_map[v]);
      for (Vertex v : x.roots) out.shape.roots.push_back(out.witness.vertex_map[v]);
      out.digest = digest_of(out.certificate);
      return out;
    }
  }
  auto search = search_shape(x, mode);
  out.witness = leaf_morphism(x.body, search.best_leaves().front(), mode);
  out.shape.body = apply_body(x.body, out.witness);
  for (Vertex v : x.leaves) out.shape.leaves.push_back(out.witness.vertex_map[v]);
  for (Vertex v : x.roots) out.shape.roots.push_back(out.witness.vertex_map[v]);
  out.certificate = search.best();
  out.digest = digest_of(out.certificate);
  return out;
}

Certificate certificate_of(const LabelledShape& x, Mode mode) {
  if (mode == Mode::kPlanar)
    if (auto w = walk(x)) return walk_certificate(x, *w);
  return search_shape(x, mode).best();
}

ColouredCanon canonical_coloured(const Polygraph& p, const std::vector<std::uint32_t>& colours,
                                 Mode mode) {
  std::vector<std::vector<std::uint32_t>> keys(p.vertex_count);
  for (Vertex v = 0; v < p.vertex_count; ++v) keys[v] = {colours[v]};
  CanonSearch search(p, mode, keys, kColoured,
                     [&](const std::vector<std::uint32_t>& rank, Certificate& cert) {
                       std::vector<std::uint32_t> by_rank(p.vertex_count);
                       for (Vertex v = 0; v < p.vertex_count; ++v) by_rank[rank[v]] = colours[v];
                       for (auto c : by_rank) put(cert, c);
                     });
  ColouredCanon out;
  out.certificate = search.best();
  const auto& leaf = search.best_leaves().front();
  out.vertex_order.resize(p.vertex_count);
  for (Vertex v = 0; v < p.vertex_count; ++v) out.vertex_order[leaf[v]] = v;
  return out;
}

bool is_label_preserving_iso(const PolyMorphism& f, const LabelledShape& x,
                             const LabelledShape& y, Mode mode) {
  if (mode == Mode::kPlanar && f.mode != Mode::kPlanar) return false;
  if (x.leaves.size() != y.leaves.size() || x.roots.size() != y.roots.size()) return false;
  PolyMorphism g = f;
  g.mode = mode;
  if (!is_morphism(g, x.body, y.body) || !is_bijective(g, y.body)) return false;
  for (std::size_t i = 0; i < x.leaves.size(); ++i)
    if (f.vertex_map[x.leaves[i]] != y.leaves[i]) return false;
  for (std::size_t j = 0; j < x.roots.size(); ++j)
    if (f.vertex_map[x.roots[j]] != y.roots[j]) return false;
  return true;
}

std::optional<PolyMorphism> are_isomorphic(const LabelledShape& x, const LabelledShape& y,
                                           Mode mode) {
  auto cx = canonical_form(x, mode);
  auto cy = canonical_form(y, mode);
  if (cx.certificate != cy.certificate) return std::nullopt;
  auto back = inverse(cy.witness);
  if (!back) throw Error(ErrorCode::kInvalidMorphism, "canonical witness is not invertible");
  auto f = compose(*back, cx.witness);
  f.mode = mode;
  if (!is_label_preserving_iso(f, x, y, mode))
    throw Error(ErrorCode::kInvalidMorphism, "isomorphism witness failed verification");
  return f;
}

PermGroup label_preserving_automorphisms(const LabelledShape& x, Mode mode) {
  if (mode == Mode::kPlanar && walk(x)) return trivial_group(x.body, mode);
  auto search = search_shape(x, mode);
  const auto& leaves = search.best_leaves();
  const std::uint32_t v = x.body.vertex_count;
  const std::uint32_t n = v + x.body.edge_count();
  // Node automorphisms lambda_0^-1 . lambda_b.
  std::vector<std::uint32_t> back(n);
  for (std::uint32_t k = 0; k < n; ++k) back[leaves[0][k]] = k;
  std::vector<PolyMorphism> elements;
  for (const auto& lb : leaves) {
    std::vector<Vertex> vmap(v);
    for (Vertex a = 0; a < v; ++a) vmap[a] = back[lb[a]];
    std::vector<EdgeIndex> emap(x.body.edges.size());
    for (EdgeIndex e = 0; e < emap.size(); ++e) emap[e] = back[lb[v + e]] - v;
    if (mode == Mode::kPlanar) {
      elements.push_back(planar_morphism(x.body, std::move(vmap), std::move(emap)));
      continue;
    }
    // Every compatible choice of port permutations, edge by edge.
    std::vector<std::vector<std::pair<Perm, Perm>>> choices(emap.size());
    for (EdgeIndex e = 0; e < emap.size(); ++e) {
      const auto& from = x.body.edges[e];
      const auto& to = x.body.edges[emap[e]];
      std::vector<Vertex> src, tgt;
      for (Vertex a : from.sources) src.push_back(vmap[a]);
      for (Vertex a : from.targets) tgt.push_back(vmap[a]);
      std::vector<Perm> ins, outs;
      port_matchings(src, to.sources, ins);
      port_matchings(tgt, to.targets, outs);
      for (const auto& phi : ins)
        for (const auto& q : outs) choices[e].emplace_back(phi, inverse(q));
    }
    PolyMorphism m;
    m.mode = Mode::kSymmetric;
    m.vertex_map = vmap;
    m.edge_map.resize(emap.size());
    std::function<void(EdgeIndex)> go = [&](EdgeIndex e) {
      if (e == emap.size()) {
        elements.push_back(m);
        return;
      }
      for (const auto& [phi, psi] : choices[e]) {
        m.edge_map[e] = {emap[e], phi, psi};
        go(e + 1);
      }
    };
    go(0);
  }
  return make_group(std::move(elements), x.body, mode);
}

std::size_t raw_automorphism_count(const LabelledShape& x, Mode mode) {
  VertexPins pins(x.body.vertex_count);
  for (Vertex a : x.leaves) pins[a] = a;
  for (Vertex a : x.roots) pins[a] = a;
  std::size_t count = 0;
  for_each_hom(x.body, x.body, mode, pins, [&](const PolyMorphism& m) {
    if (is_bijective(m, x.body)) ++count;
    return true;
  });
  return count;
}

bool orbit_morphism_valid(const PolyMorphism& f, const PermGroup& g, const PermGroup& h) {
  for (const auto& tau : h.elements) {
    auto lhs = compose(tau, f);
    bool found = false;
    for (const auto& sigma : g.elements)
      if (compose(f, sigma) == lhs) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

bool orbit_equal(const PolyMorphism& f1, const PolyMorphism& f2, const PermGroup& g) {
  for (const auto& sigma : g.elements)
    if (compose(f1, sigma) == f2) return true;
  return false;
}

PolyMorphism orbit_min(const PolyMorphism& f, const PermGroup& g) {
  PolyMorphism best = f;
  for (const auto& sigma : g.elements) {
    auto c = compose(f, sigma);
    if (c < best) best = std::move(c);
  }
  best.mode = f.mode;
  return best;
}

}  // namespace shapely
