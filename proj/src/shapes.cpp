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

#include "shapely/shapes.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "shapely/error.hpp"

namespace shapely {

namespace {

std::uint32_t find_root(std::vector<std::uint32_t>& parent, std::uint32_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

using ShapeTable = std::unordered_set<Certificate, CertificateHash>;

std::vector<Certificate> sorted_by_digest(ShapeTable table) {
  std::vector<Certificate> out;
  out.reserve(table.size());
  while (!table.empty()) out.push_back(std::move(table.extract(table.begin()).value()));
  sort_by_digest(out);
  return out;
}

// Calls visit on every sequence of edge arities of the given length that is
// nondecreasing in the order (n, m).
void each_arity_multiset(std::uint32_t length, std::uint32_t max_arity,
                         const std::function<void(const std::vector<Arity>&)>& visit) {
  const std::uint32_t kinds = (max_arity + 1) * (max_arity + 1);
  std::vector<std::uint32_t> idx(length, 0);
  std::function<void(std::uint32_t, std::uint32_t)> go = [&](std::uint32_t k, std::uint32_t from) {
    if (k == length) {
      std::vector<Arity> arities;
      for (auto i : idx) arities.push_back({i / (max_arity + 1), i % (max_arity + 1)});
      visit(arities);
      return;
    }
    for (std::uint32_t i = from; i < kinds; ++i) {
      idx[k] = i;
      go(k + 1, i);
    }
  };
  go(0, 0);
}

void permutations_of(std::vector<Vertex> items,
                     const std::function<void(const std::vector<Vertex>&)>& visit) {
  std::sort(items.begin(), items.end());
  do visit(items);
  while (std::next_permutation(items.begin(), items.end()));
}

// Wiring enumeration for the three classes. Every vertex has at most one
// incoming and one outgoing port, so a body is a partial matching of target
// ports to source ports plus some isolated vertices.
class WiringEnumerator {
 public:
  WiringEnumerator(ShapeClass c, Mode mode, std::uint32_t max_arity,
                   std::optional<Arity> only, ShapeTable* sink_all,
                   std::map<Arity, ShapeTable>* sink_by_arity)
      : class_(c), mode_(mode), max_arity_(max_arity), only_(only), sink_(sink_all),
        by_arity_(sink_by_arity) {}

  void run(const std::vector<Arity>& arities) {
    arities_ = arities;
    const auto e = static_cast<std::uint32_t>(arities.size());
    src_ports_.clear();
    tgt_ports_.clear();
    for (std::uint32_t k = 0; k < e; ++k) {
      for (std::uint32_t i = 0; i < arities[k].in; ++i) src_ports_.push_back({k, i});
      for (std::uint32_t j = 0; j < arities[k].out; ++j) tgt_ports_.push_back({k, j});
    }
    const auto s = static_cast<std::int64_t>(src_ports_.size());
    const auto t = static_cast<std::int64_t>(tgt_ports_.size());
    // n - m = S - T whatever the matching.
    if (only_ && static_cast<std::int64_t>(only_->in) - only_->out != s - t) return;
    match_.assign(tgt_ports_.size(), kUnmatched);
    used_.assign(src_ports_.size(), false);
    parent_.resize(e);
    std::iota(parent_.begin(), parent_.end(), 0u);
    reach_.assign(e, 0);
    step(0, 0);
  }

 private:
  static constexpr std::uint32_t kUnmatched = static_cast<std::uint32_t>(-1);
  struct Port {
    std::uint32_t edge;
    std::uint32_t index;
  };

  bool connected_class() const { return class_ != ShapeClass::kProp; }

  void step(std::size_t t, std::uint32_t matched) {
    const auto s = static_cast<std::uint32_t>(src_ports_.size());
    const auto e = static_cast<std::uint32_t>(arities_.size());
    const auto remaining = static_cast<std::uint32_t>(tgt_ports_.size() - t);
    if (class_ == ShapeClass::kTree && matched > e - 1) return;
    if (connected_class() && matched + remaining < e - 1) return;
    // Leaves from ports alone: s - matched; cannot go below zero isolated.
    if (connected_class()) {
      std::uint32_t need = only_ ? only_->in : 0;
      if (only_ && s < need) return;
      if (only_ && matched > s - need) return;
      if (only_ && matched + remaining < s - need) return;
      if (!only_ && matched + remaining + max_arity_ < s) return;
    } else if (only_) {
      if (matched + only_->in < s && matched + remaining + only_->in < s) return;
    } else if (matched + remaining + max_arity_ < s) {
      return;
    }
    if (t == tgt_ports_.size()) {
      finish(matched);
      return;
    }
    match_[t] = kUnmatched;
    step(t + 1, matched);
    const std::uint32_t from = tgt_ports_[t].edge;
    for (std::uint32_t p = 0; p < s; ++p) {
      if (used_[p]) continue;
      const std::uint32_t to = src_ports_[p].edge;
      if (from == to) continue;
      auto saved_parent = parent_;
      auto saved_reach = reach_;
      bool ok = true;
      if (class_ == ShapeClass::kTree) {
        auto a = find_root(parent_, from), b = find_root(parent_, to);
        if (a == b) ok = false;
        else parent_[std::max(a, b)] = std::min(a, b);
      } else {
        if (reach_[to] & (1u << from)) ok = false;
        if (ok) {
          std::uint32_t add = reach_[to] | (1u << to);
          for (std::uint32_t x = 0; x < e; ++x)
            if (x == from || (reach_[x] & (1u << from))) reach_[x] |= add;
          auto a = find_root(parent_, from), b = find_root(parent_, to);
          if (a != b) parent_[std::max(a, b)] = std::min(a, b);
        }
      }
      if (ok) {
        used_[p] = true;
        match_[t] = p;
        step(t + 1, matched + 1);
        used_[p] = false;
        match_[t] = kUnmatched;
      }
      parent_ = std::move(saved_parent);
      reach_ = std::move(saved_reach);
    }
  }

  void finish(std::uint32_t matched) {
    const auto s = static_cast<std::uint32_t>(src_ports_.size());
    const auto t = static_cast<std::uint32_t>(tgt_ports_.size());
    const auto e = static_cast<std::uint32_t>(arities_.size());
    if (connected_class()) {
      for (std::uint32_t k = 1; k < e; ++k)
        if (find_root(parent_, k) != find_root(parent_, 0)) return;
    }
    // isolated vertices
    std::vector<std::uint32_t> ks;
    if (connected_class()) {
      ks.push_back(0);
    } else if (only_) {
      std::int64_t k = static_cast<std::int64_t>(only_->in) - (s - matched);
      if (k < 0) return;
      ks.push_back(static_cast<std::uint32_t>(k));
    } else {
      for (std::uint32_t k = 0; k <= max_arity_; ++k) ks.push_back(k);
    }
    for (auto k : ks) {
      const std::uint32_t n = s - matched + k, m = t - matched + k;
      if (n > max_arity_ || m > max_arity_) continue;
      if (only_ && (only_->in != n || only_->out != m)) continue;
      emit(k);
    }
  }

  void emit(std::uint32_t isolated) {
    Polygraph body;
    std::vector<std::uint32_t> colours;  // 0 internal, 1 leaf only, 2 root only, 3 both
    body.edges.resize(arities_.size());
    for (std::size_t k = 0; k < arities_.size(); ++k) {
      body.edges[k].sources.resize(arities_[k].in);
      body.edges[k].targets.resize(arities_[k].out);
    }
    for (std::size_t t = 0; t < tgt_ports_.size(); ++t) {
      Vertex v = body.vertex_count++;
      body.edges[tgt_ports_[t].edge].targets[tgt_ports_[t].index] = v;
      if (match_[t] == kUnmatched) {
        colours.push_back(2);
      } else {
        const auto& sp = src_ports_[match_[t]];
        body.edges[sp.edge].sources[sp.index] = v;
        colours.push_back(0);
      }
    }
    for (std::size_t p = 0; p < src_ports_.size(); ++p) {
      if (used_[p]) continue;
      Vertex v = body.vertex_count++;
      body.edges[src_ports_[p].edge].sources[src_ports_[p].index] = v;
      colours.push_back(1);
    }
    for (std::uint32_t k = 0; k < isolated; ++k) {
      body.vertex_count++;
      colours.push_back(3);
    }
    auto canon = canonical_coloured(body, colours, mode_);
    if (!bodies_.insert(std::move(canon.certificate)).second) return;
    std::vector<Vertex> leaves, roots;
    for (Vertex v = 0; v < body.vertex_count; ++v) {
      if (colours[v] == 1 || colours[v] == 3) leaves.push_back(v);
      if (colours[v] == 2 || colours[v] == 3) roots.push_back(v);
    }
    label_all(body, leaves, roots, class_, mode_, only_, sink_, by_arity_);
  }

 public:
  static void label_all(const Polygraph& body, const std::vector<Vertex>& leaves,
                        const std::vector<Vertex>& roots, ShapeClass c, Mode mode,
                        std::optional<Arity> only, ShapeTable* sink,
                        std::map<Arity, ShapeTable>* by_arity) {
    LabelledShape x;
    x.body = body;
    permutations_of(leaves, [&](const std::vector<Vertex>& ls) {
      permutations_of(roots, [&](const std::vector<Vertex>& rs) {
        x.leaves = ls;
        x.roots = rs;
        if (!recognises(c, x))
          throw Error(ErrorCode::kInvalidPolygraph, "enumerated wiring failed its recogniser");
        ShapeTable& table = only ? *sink : (*by_arity)[x.arity()];
        table.insert(certificate_of(x, mode));
      });
    });
  }

 private:
  ShapeClass class_;
  Mode mode_;
  std::uint32_t max_arity_;
  std::optional<Arity> only_;
  ShapeTable* sink_;
  std::map<Arity, ShapeTable>* by_arity_;
  std::vector<Arity> arities_;
  std::vector<Port> src_ports_, tgt_ports_;
  std::vector<std::uint32_t> match_;
  std::vector<bool> used_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> reach_;
  std::unordered_set<Certificate, CertificateHash> bodies_;
};

void enumerate_edgeless(ShapeClass c, Mode mode, std::uint32_t max_arity,
                        std::optional<Arity> only, ShapeTable* sink,
                        std::map<Arity, ShapeTable>* by_arity) {
  for (std::uint32_t k = 0; k <= max_arity; ++k) {
    if (c != ShapeClass::kProp && k != 1) continue;
    if (only && (only->in != k || only->out != k)) continue;
    std::vector<Vertex> all(k);
    std::iota(all.begin(), all.end(), 0u);
    WiringEnumerator::label_all(discrete(k), all, all, c, mode, only, sink, by_arity);
  }
}

// Sub-shape on a set of cells. Labels keep the order they have in x.
struct Part {
  LabelledShape shape;
  std::vector<Vertex> local;  // x vertex -> part vertex, or -1
};

Part restrict_to(const LabelledShape& x, const std::vector<bool>& keep_v,
                 const std::vector<bool>& keep_e) {
  Part part;
  part.local.assign(x.body.vertex_count, static_cast<Vertex>(-1));
  for (Vertex v = 0; v < x.body.vertex_count; ++v)
    if (keep_v[v]) part.local[v] = part.shape.body.vertex_count++;
  for (EdgeIndex e = 0; e < x.body.edges.size(); ++e) {
    if (!keep_e[e]) continue;
    Edge ne;
    for (auto v : x.body.edges[e].sources) ne.sources.push_back(part.local[v]);
    for (auto v : x.body.edges[e].targets) ne.targets.push_back(part.local[v]);
    part.shape.body.edges.push_back(std::move(ne));
  }
  for (auto v : x.leaves)
    if (keep_v[v]) part.shape.leaves.push_back(part.local[v]);
  for (auto v : x.roots)
    if (keep_v[v]) part.shape.roots.push_back(part.local[v]);
  return part;
}

}  // namespace

bool within_bounds(const LabelledShape& x, const Bounds& b) {
  if (x.body.edges.size() > b.max_edges) return false;
  if (x.leaves.size() > b.max_arity || x.roots.size() > b.max_arity) return false;
  for (const auto& e : x.body.edges)
    if (e.sources.size() > b.max_arity || e.targets.size() > b.max_arity) return false;
  return true;
}

const char* shape_class_name(ShapeClass c) {
  switch (c) {
    case ShapeClass::kTree: return "tree";
    case ShapeClass::kProperad: return "properad";
    case ShapeClass::kProp: return "prop";
  }
  return "?";
}

std::optional<ShapeClass> parse_shape_class(const std::string& name) {
  if (name == "tree" || name == "polycat") return ShapeClass::kTree;
  if (name == "properad") return ShapeClass::kProperad;
  if (name == "prop") return ShapeClass::kProp;
  return std::nullopt;
}

IncidenceGraph incidence_graph(const Polygraph& p) {
  IncidenceGraph g;
  g.vertex_count = p.vertex_count;
  g.edge_count = p.edge_count();
  for (EdgeIndex e = 0; e < p.edges.size(); ++e) {
    for (std::uint32_t i = 0; i < p.edges[e].sources.size(); ++i)
      g.arcs.push_back({p.edges[e].sources[i], e, true, i});
    for (std::uint32_t j = 0; j < p.edges[e].targets.size(); ++j)
      g.arcs.push_back({p.edges[e].targets[j], e, false, j});
  }
  return g;
}

bool IncidenceGraph::connected() const {
  const std::uint32_t n = vertex_count + edge_count;
  if (n == 0) return false;
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  std::uint32_t components = n;
  for (const auto& a : arcs) {
    auto x = find_root(parent, a.vertex), y = find_root(parent, vertex_count + a.edge);
    if (x != y) {
      parent[std::max(x, y)] = std::min(x, y);
      --components;
    }
  }
  return components == 1;
}

bool IncidenceGraph::undirected_acyclic() const {
  const std::uint32_t n = vertex_count + edge_count;
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  for (const auto& a : arcs) {
    auto x = find_root(parent, a.vertex), y = find_root(parent, vertex_count + a.edge);
    if (x == y) return false;
    parent[std::max(x, y)] = std::min(x, y);
  }
  return true;
}

bool IncidenceGraph::directed_acyclic() const {
  const std::uint32_t n = vertex_count + edge_count;
  std::vector<std::vector<std::uint32_t>> out(n);
  std::vector<std::uint32_t> indegree(n, 0);
  for (const auto& a : arcs) {
    std::uint32_t from = a.is_source ? a.vertex : vertex_count + a.edge;
    std::uint32_t to = a.is_source ? vertex_count + a.edge : a.vertex;
    out[from].push_back(to);
    ++indegree[to];
  }
  std::vector<std::uint32_t> ready;
  for (std::uint32_t x = 0; x < n; ++x)
    if (indegree[x] == 0) ready.push_back(x);
  std::uint32_t seen = 0;
  while (!ready.empty()) {
    auto x = ready.back();
    ready.pop_back();
    ++seen;
    for (auto y : out[x])
      if (--indegree[y] == 0) ready.push_back(y);
  }
  return seen == n;
}

bool degrees_at_most_one(const Polygraph& p) {
  std::vector<std::uint32_t> as_source(p.vertex_count, 0), as_target(p.vertex_count, 0);
  for (const auto& e : p.edges) {
    for (auto v : e.sources)
      if (++as_source[v] > 1) return false;
    for (auto v : e.targets)
      if (++as_target[v] > 1) return false;
  }
  return true;
}

bool labels_enumerate_boundary(const LabelledShape& x) {
  const auto& p = x.body;
  std::vector<bool> is_source(p.vertex_count, false), is_target(p.vertex_count, false);
  for (const auto& e : p.edges) {
    for (auto v : e.sources) is_source[v] = true;
    for (auto v : e.targets) is_target[v] = true;
  }
  auto exact = [&](const std::vector<Vertex>& labels, const std::vector<bool>& excluded) {
    std::vector<bool> hit(p.vertex_count, false);
    for (auto v : labels) {
      if (v >= p.vertex_count || hit[v] || excluded[v]) return false;
      hit[v] = true;
    }
    for (Vertex v = 0; v < p.vertex_count; ++v)
      if (!excluded[v] && !hit[v]) return false;
    return true;
  };
  return exact(x.leaves, is_target) && exact(x.roots, is_source);
}

bool is_polycat_tree(const LabelledShape& x) {
  if (!is_valid(x) || !degrees_at_most_one(x.body) || !labels_enumerate_boundary(x)) return false;
  auto g = incidence_graph(x.body);
  return g.connected() && g.undirected_acyclic();
}

bool is_properadic_graph(const LabelledShape& x) {
  if (!is_valid(x) || !degrees_at_most_one(x.body) || !labels_enumerate_boundary(x)) return false;
  auto g = incidence_graph(x.body);
  return g.connected() && g.directed_acyclic();
}

bool is_prop_graph(const LabelledShape& x) {
  if (!is_valid(x) || !degrees_at_most_one(x.body) || !labels_enumerate_boundary(x)) return false;
  return incidence_graph(x.body).directed_acyclic();
}

bool recognises(ShapeClass c, const LabelledShape& x) {
  switch (c) {
    case ShapeClass::kTree: return is_polycat_tree(x);
    case ShapeClass::kProperad: return is_properadic_graph(x);
    case ShapeClass::kProp: return is_prop_graph(x);
  }
  return false;
}

void sort_by_digest(std::vector<Certificate>& certs) {
  std::vector<std::pair<Digest, std::size_t>> keys;
  keys.reserve(certs.size());
  for (std::size_t k = 0; k < certs.size(); ++k) keys.push_back({digest_of(certs[k]), k});
  std::sort(keys.begin(), keys.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return certs[a.second] < certs[b.second];
  });
  std::vector<Certificate> out;
  out.reserve(certs.size());
  for (const auto& k : keys) out.push_back(std::move(certs[k.second]));
  certs = std::move(out);
}

std::vector<Certificate> enumerate_shapes(ShapeClass c, std::uint32_t n, std::uint32_t m,
                                            std::uint32_t max_edges, std::uint32_t max_arity,
                                            Mode mode) {
  ShapeTable table;
  if (n > max_arity || m > max_arity) {
    // Shapes with larger boundaries are still wanted when asked for
    // explicitly; widen the arity cap for the shape only.
    max_arity = std::max({max_arity, n, m});
  }
  Arity target{n, m};
  enumerate_edgeless(c, mode, max_arity, target, &table, nullptr);
  for (std::uint32_t e = 1; e <= max_edges; ++e) {
    WiringEnumerator gen(c, mode, max_arity, target, &table, nullptr);
    each_arity_multiset(e, max_arity, [&](const std::vector<Arity>& a) { gen.run(a); });
  }
  return sorted_by_digest(std::move(table));
}

ShapeCatalog enumerate_class(ShapeClass c, const Bounds& b, Mode mode) {
  std::map<Arity, ShapeTable> tables;
  enumerate_edgeless(c, mode, b.max_arity, std::nullopt, nullptr, &tables);
  for (std::uint32_t e = 1; e <= b.max_edges; ++e) {
    WiringEnumerator gen(c, mode, b.max_arity, std::nullopt, nullptr, &tables);
    each_arity_multiset(e, b.max_arity, [&](const std::vector<Arity>& a) { gen.run(a); });
  }
  ShapeCatalog out;
  for (auto& [arity, table] : tables) out[arity] = sorted_by_digest(std::move(table));
  return out;
}

ShapeCatalog enumerate_labelled(
    const Bounds& b, std::uint32_t max_vertices, Mode mode,
    const std::function<bool(const LabelledShape&)>& keep) {
  std::map<Arity, ShapeTable> tables;
  std::unordered_set<Certificate, CertificateHash> bodies;
  for (std::uint32_t vcount = 0; vcount <= max_vertices; ++vcount) {
    for (std::uint32_t e = 0; e <= b.max_edges; ++e) {
      each_arity_multiset(e, b.max_arity, [&](const std::vector<Arity>& arities) {
        std::uint32_t ports = 0;
        for (auto a : arities) ports += a.in + a.out;
        if (ports > 0 && vcount == 0) return;
        std::vector<Vertex> choice(ports, 0);
        while (true) {
          Polygraph body;
          body.vertex_count = vcount;
          std::size_t k = 0;
          for (auto a : arities) {
            Edge edge;
            for (std::uint32_t i = 0; i < a.in; ++i) edge.sources.push_back(choice[k++]);
            for (std::uint32_t j = 0; j < a.out; ++j) edge.targets.push_back(choice[k++]);
            body.edges.push_back(std::move(edge));
          }
          auto canon = canonical_coloured(body, std::vector<std::uint32_t>(vcount, 0), mode);
          if (bodies.insert(canon.certificate).second) {
            // Every injective leaf and root sequence within the arity cap.
            std::vector<std::vector<Vertex>> sequences{{}};
            for (std::size_t start = 0; start < sequences.size(); ++start) {
              if (sequences[start].size() == b.max_arity) continue;
              for (Vertex v = 0; v < vcount; ++v) {
                if (std::find(sequences[start].begin(), sequences[start].end(), v) !=
                    sequences[start].end())
                  continue;
                auto next = sequences[start];
                next.push_back(v);
                sequences.push_back(std::move(next));
              }
            }
            LabelledShape x;
            x.body = body;
            for (const auto& ls : sequences)
              for (const auto& rs : sequences) {
                x.leaves = ls;
                x.roots = rs;
                if (!keep(x)) continue;
                tables[x.arity()].insert(certificate_of(x, mode));
              }
          }
          std::size_t pos = 0;
          while (pos < ports && ++choice[pos] == vcount) choice[pos++] = 0;
          if (pos == ports) break;
        }
      });
    }
  }
  ShapeCatalog out;
  for (auto& [arity, table] : tables) out[arity] = sorted_by_digest(std::move(table));
  return out;
}

std::optional<GraftDecomposition> decompose_tree(const LabelledShape& x) {
  if (!is_polycat_tree(x) || x.body.edges.size() < 2) return std::nullopt;
  const auto& p = x.body;
  const std::uint32_t nv = p.vertex_count;
  std::vector<std::optional<EdgeIndex>> consumer(nv), producer(nv);
  for (EdgeIndex e = 0; e < p.edges.size(); ++e) {
    for (auto v : p.edges[e].sources) consumer[v] = e;
    for (auto v : p.edges[e].targets) producer[v] = e;
  }
  const auto expected = certificate_of(x, Mode::kPlanar);
  for (Vertex cut = 0; cut < nv; ++cut) {
    if (!consumer[cut] || !producer[cut]) continue;
    // Cells on the upper side: everything reachable from the consuming
    // edge without crossing the cut vertex.
    std::vector<bool> upper_v(nv, false), upper_e(p.edges.size(), false);
    std::vector<std::uint32_t> stack{nv + *consumer[cut]};
    upper_e[*consumer[cut]] = true;
    while (!stack.empty()) {
      auto node = stack.back();
      stack.pop_back();
      if (node >= nv) {
        const auto& edge = p.edges[node - nv];
        for (const auto* side : {&edge.sources, &edge.targets})
          for (auto v : *side)
            if (v != cut && !upper_v[v]) {
              upper_v[v] = true;
              stack.push_back(v);
            }
      } else {
        for (auto f : {consumer[node], producer[node]})
          if (f && !upper_e[*f]) {
            upper_e[*f] = true;
            stack.push_back(nv + *f);
          }
      }
    }
    std::vector<bool> lower_v(nv), lower_e(p.edges.size());
    for (Vertex v = 0; v < nv; ++v) lower_v[v] = !upper_v[v];
    for (EdgeIndex e = 0; e < p.edges.size(); ++e) lower_e[e] = !upper_e[e];

    auto lower = restrict_to(x, lower_v, lower_e);
    lower.shape.roots.push_back(lower.local[cut]);
    auto upper = restrict_to(x, upper_v, upper_e);
    Vertex copy = upper.shape.body.vertex_count++;
    for (auto& e : upper.shape.body.edges)
      for (auto& v : e.sources)
        if (v == static_cast<Vertex>(-1)) v = copy;
    upper.shape.leaves.push_back(copy);

    GraftDecomposition d;
    d.i = static_cast<std::uint32_t>(lower.shape.roots.size());
    d.j = static_cast<std::uint32_t>(upper.shape.leaves.size());
    auto legs = graft_with_legs(upper.shape, lower.shape, d.i, d.j);
    auto image = [&](Vertex v) -> std::uint64_t {
      return lower_v[v] ? legs.from_lower.vertex_map[lower.local[v]]
                        : legs.from_upper.vertex_map[upper.local[v]];
    };
    std::vector<std::uint64_t> want_l, want_r, have_l, have_r;
    for (auto v : x.leaves) want_l.push_back(image(v));
    for (auto v : x.roots) want_r.push_back(image(v));
    for (auto v : legs.shape.leaves) have_l.push_back(v);
    for (auto v : legs.shape.roots) have_r.push_back(v);
    d.phi = solve_reindexing(have_l, want_l);
    auto psi_inv = solve_reindexing(have_r, want_r);
    if (d.phi.size() != want_l.size() || psi_inv.size() != want_r.size()) continue;
    d.psi = inverse(psi_inv);
    if (!is_polycat_tree(lower.shape) || !is_polycat_tree(upper.shape)) continue;
    if (certificate_of(relabel(legs.shape, d.phi, d.psi), Mode::kPlanar) != expected) continue;
    d.upper = std::move(upper.shape);
    d.lower = std::move(lower.shape);
    return d;
  }
  return std::nullopt;
}

}  // namespace shapely
