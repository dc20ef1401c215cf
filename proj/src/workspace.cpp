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


#include "shapely/workspace.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "shapely/error.hpp"

namespace shapely {

namespace {

struct Token {
  std::string text;
  std::size_t column = 0;  // 1-based
};

bool id_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'';
}

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t k = 0;
  while (k < line.size()) {
    char c = line[k];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++k;
      continue;
    }
    if (c == '-' && k + 1 < line.size() && line[k + 1] == '>') {
      out.push_back({"->", k + 1});
      k += 2;
      continue;
    }
    if (c == '(' || c == ')' || c == ':') {
      out.push_back({std::string(1, c), k + 1});
      ++k;
      continue;
    }
    std::size_t start = k;
    while (k < line.size() && (id_char(line[k]) || line[k] == '-') &&
           !(line[k] == '-' && k + 1 < line.size() && line[k + 1] == '>'))
      ++k;
    if (k == start) {
      out.push_back({std::string(1, c), k + 1});
      ++k;
      continue;
    }
    out.push_back({std::string(line.substr(start, k - start)), start + 1});
  }
  return out;
}

}  // namespace

class WorkspaceParser {
 public:
  WorkspaceParser(Workspace& ws, std::string source) : ws_(ws), source_(std::move(source)) {}

  void line(std::string_view text, std::size_t line_number) {
    line_ = line_number;
    toks_ = tokenize(text);
    pos_ = 0;
    if (toks_.empty()) return;
    for (const auto& t : toks_)
      if (t.text.size() == 1 && !id_char(t.text[0]) && t.text != "(" && t.text != ")" &&
          t.text != ":")
        fail(ErrorCode::kParse, t.column, "unexpected character '" + t.text + "'");
    const auto& head = toks_[0];
    ++pos_;
    if (head.text == "polygraph") {
      auto name = declare_name();
      end();
      add(name, Workspace::Kind::kPolygraph, ws_.polygraphs_.size());
      ws_.polygraphs_.push_back({name, Polygraph{}});
      current_ = ws_.polygraphs_.size() - 1;
    } else if (head.text == "vertex") {
      auto& p = current(head);
      if (pos_ >= toks_.size()) fail(ErrorCode::kParse, head.column, "vertex needs ids");
      while (pos_ < toks_.size()) {
        const auto& t = ident("vertex id");
        if (find_vertex(p, t.text))
          fail(ErrorCode::kDuplicateName, t.column, "vertex '" + t.text + "' declared twice");
        p.vertex_names.push_back(t.text);
        ++p.vertex_count;
      }
    } else if (head.text == "edge") {
      auto& p = current(head);
      const auto& id = ident("edge id");
      for (const auto& n : p.edge_names)
        if (n == id.text)
          fail(ErrorCode::kDuplicateName, id.column, "edge '" + id.text + "' declared twice");
      expect(":");
      Edge e;
      e.sources = vertex_list(p);
      expect("->");
      e.targets = vertex_list(p);
      end();
      p.edges.push_back(std::move(e));
      p.edge_names.push_back(id.text);
    } else if (head.text == "shape") {
      current_.reset();
      auto name = declare_name();
      expect("of");
      const auto& pg = ident("polygraph name");
      const auto& p = polygraph_named(pg);
      expect(":");
      expect("leaves");
      auto leaves = vertex_list(p);
      expect("roots");
      auto roots = vertex_list(p);
      end();
      NamedShape s{name, pg.text, LabelledShape{p, leaves, roots}};
      s.shape.body.vertex_names.clear();
      s.shape.body.edge_names.clear();
      add(name, Workspace::Kind::kShape, ws_.shapes_.size());
      ws_.shapes_.push_back(std::move(s));
    } else if (head.text == "morphism") {
      current_.reset();
      auto name = declare_name();
      expect(":");
      const auto& dn = ident("polygraph name");
      const auto& dom = polygraph_named(dn);
      expect("->");
      const auto& cn = ident("polygraph name");
      const auto& cod = polygraph_named(cn);
      expect(":");
      const auto& vkw = toks_.size() > pos_ ? toks_[pos_] : toks_.back();
      expect("vertices");
      auto vmap = vertex_list(cod);
      std::vector<EdgeIndex> emap;
      if (pos_ < toks_.size()) {
        expect("edges");
        expect("(");
        while (pos_ < toks_.size() && toks_[pos_].text != ")") {
          const auto& t = ident("edge id");
          auto e = find_edge(cod, t.text);
          if (!e) fail(ErrorCode::kNotFound, t.column, "no edge '" + t.text + "' in " + cn.text);
          emap.push_back(*e);
        }
        expect(")");
      }
      end();
      if (vmap.size() != dom.vertex_count || emap.size() != dom.edges.size())
        fail(ErrorCode::kArityMismatch, vkw.column,
             "expected " + std::to_string(dom.vertex_count) + " vertex and " +
                 std::to_string(dom.edges.size()) + " edge images");
      auto m = planar_morphism(dom, vmap, emap);
      if (!is_morphism(m, dom, cod))
        fail(ErrorCode::kInvalidMorphism, vkw.column, "not a morphism " + dn.text + " -> " + cn.text);
      add(name, Workspace::Kind::kMorphism, ws_.morphisms_.size());
      ws_.morphisms_.push_back({name, dn.text, cn.text, std::move(m)});
    } else if (head.text == "functor") {
      current_.reset();
      auto name = declare_name();
      expect("mode");
      const auto& mt = ident("mode");
      Mode mode;
      if (mt.text == "planar")
        mode = Mode::kPlanar;
      else if (mt.text == "symmetric")
        mode = Mode::kSymmetric;
      else
        fail(ErrorCode::kParse, mt.column, "mode must be planar or symmetric");
      expect("bounds");
      Bounds b;
      b.max_edges = number();
      b.max_arity = number();
      expect(":");
      NamedFunctor f;
      f.name = name;
      std::vector<LabelledShape> shapes;
      while (pos_ < toks_.size()) {
        const auto& t = ident("shape name");
        auto it = ws_.index_.find(t.text);
        if (it == ws_.index_.end() || it->second.first != Workspace::Kind::kShape)
          fail(ErrorCode::kNotFound, t.column, "no shape '" + t.text + "'");
        f.shapes.push_back(t.text);
        shapes.push_back(ws_.shapes_[it->second.second].shape);
      }
      try {
        f.functor = from_shapes(shapes, mode, b);
      } catch (const Error& e) {
        fail(e.code(), head.column, e.what());
      }
      add(name, Workspace::Kind::kFunctor, ws_.functors_.size());
      ws_.functors_.push_back(std::move(f));
    } else {
      fail(ErrorCode::kParse, head.column, "unknown declaration '" + head.text + "'");
    }
  }

 private:
  [[noreturn]] void fail(ErrorCode code, std::size_t column, const std::string& what) const {
    throw Error(code, source_ + ":" + std::to_string(line_) + ":" + std::to_string(column) +
                          ": " + what);
  }

  std::size_t here() const {
    if (pos_ < toks_.size()) return toks_[pos_].column;
    return toks_.empty() ? 1 : toks_.back().column + toks_.back().text.size();
  }

  void expect(const std::string& text) {
    if (pos_ >= toks_.size() || toks_[pos_].text != text)
      fail(ErrorCode::kParse, here(),
           "expected '" + text + "'" +
               (pos_ < toks_.size() ? ", found '" + toks_[pos_].text + "'" : ""));
    ++pos_;
  }

  void end() {
    if (pos_ < toks_.size())
      fail(ErrorCode::kParse, toks_[pos_].column, "unexpected '" + toks_[pos_].text + "'");
  }

  const Token& ident(const std::string& what) {
    if (pos_ >= toks_.size() || !id_char(toks_[pos_].text[0]))
      fail(ErrorCode::kParse, here(), "expected " + what);
    return toks_[pos_++];
  }

  std::uint32_t number() {
    const auto& t = ident("number");
    for (char c : t.text)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        fail(ErrorCode::kParse, t.column, "expected a number");
    if (t.text.size() > 6) fail(ErrorCode::kParse, t.column, "number too large");
    return static_cast<std::uint32_t>(std::stoul(t.text));
  }

  std::string declare_name() {
    const auto& t = ident("name");
    if (ws_.index_.count(t.text))
      fail(ErrorCode::kDuplicateName, t.column, "'" + t.text + "' is already declared");
    return t.text;
  }

  void add(const std::string& name, Workspace::Kind kind, std::size_t i) {
    ws_.index_[name] = {kind, i};
    ws_.order_.push_back({kind, i});
  }

  Polygraph& current(const Token& head) {
    if (!current_) fail(ErrorCode::kParse, head.column, head.text + " outside a polygraph");
    return ws_.polygraphs_[*current_].second;
  }

  const Polygraph& polygraph_named(const Token& t) const {
    auto it = ws_.index_.find(t.text);
    if (it == ws_.index_.end() || it->second.first != Workspace::Kind::kPolygraph)
      fail(ErrorCode::kNotFound, t.column, "no polygraph '" + t.text + "'");
    return ws_.polygraphs_[it->second.second].second;
  }

  static std::optional<Vertex> find_vertex(const Polygraph& p, const std::string& id) {
    for (Vertex v = 0; v < p.vertex_names.size(); ++v)
      if (p.vertex_names[v] == id) return v;
    return std::nullopt;
  }

  static std::optional<EdgeIndex> find_edge(const Polygraph& p, const std::string& id) {
    for (EdgeIndex e = 0; e < p.edge_names.size(); ++e)
      if (p.edge_names[e] == id) return e;
    return std::nullopt;
  }

  std::vector<Vertex> vertex_list(const Polygraph& p) {
    expect("(");
    std::vector<Vertex> out;
    while (pos_ < toks_.size() && toks_[pos_].text != ")") {
      const auto& t = ident("vertex id");
      auto v = find_vertex(p, t.text);
      if (!v) fail(ErrorCode::kInvalidPolygraph, t.column, "dangling vertex '" + t.text + "'");
      out.push_back(*v);
    }
    expect(")");
    return out;
  }

  Workspace& ws_;
  std::string source_;
  std::size_t line_ = 0;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::optional<std::size_t> current_;
};

void Workspace::parse(std::string_view text, const std::string& source) {
  Workspace next = *this;
  WorkspaceParser parser(next, source);
  std::size_t number = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    parser.line(line, ++number);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  *this = std::move(next);
}

void Workspace::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kNotFound, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  parse(buf.str(), path);
}

namespace {

std::string list(const Polygraph& p, const std::vector<Vertex>& vs) {
  std::string s = "(";
  for (std::size_t k = 0; k < vs.size(); ++k) s += (k ? " " : "") + p.vertex_id(vs[k]);
  return s + ")";
}

}  // namespace

std::string Workspace::serialize() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [kind, i] : order_) {
    switch (kind) {
      case Kind::kPolygraph: {
        const auto& [name, p] = polygraphs_[i];
        if (!first) out << "\n";
        out << "polygraph " << name << "\n";
        if (p.vertex_count) {
          out << "vertex";
          for (Vertex v = 0; v < p.vertex_count; ++v) out << " " << p.vertex_id(v);
          out << "\n";
        }
        for (EdgeIndex e = 0; e < p.edges.size(); ++e)
          out << "edge " << p.edge_id(e) << " : " << list(p, p.edges[e].sources) << " -> "
              << list(p, p.edges[e].targets) << "\n";
        break;
      }
      case Kind::kShape: {
        const auto& s = shapes_[i];
        const auto& p = polygraph(s.polygraph);
        out << "shape " << s.name << " of " << s.polygraph << " : leaves "
            << list(p, s.shape.leaves) << " roots " << list(p, s.shape.roots) << "\n";
        break;
      }
      case Kind::kMorphism: {
        const auto& m = morphisms_[i];
        const auto& cod = polygraph(m.cod);
        out << "morphism " << m.name << " : " << m.dom << " -> " << m.cod << " : vertices "
            << list(cod, m.map.vertex_map);
        if (!m.map.edge_map.empty()) {
          out << " edges (";
          for (std::size_t k = 0; k < m.map.edge_map.size(); ++k)
            out << (k ? " " : "") << cod.edge_id(m.map.edge_map[k].edge);
          out << ")";
        }
        out << "\n";
        break;
      }
      case Kind::kFunctor: {
        const auto& f = functors_[i];
        out << "functor " << f.name << " mode " << mode_name(f.functor.mode) << " bounds "
            << f.functor.bounds.max_edges << " " << f.functor.bounds.max_arity << " :";
        for (const auto& s : f.shapes) out << " " << s;
        out << "\n";
        break;
      }
    }
    first = false;
  }
  return out.str();
}

namespace {

template <typename T>
const T& lookup(const std::map<std::string, std::pair<Workspace::Kind, std::size_t>>& index,
                const std::vector<T>& items, Workspace::Kind kind, const std::string& name,
                const char* what) {
  auto it = index.find(name);
  if (it == index.end() || it->second.first != kind)
    throw Error(ErrorCode::kNotFound, std::string("no ") + what + " '" + name + "'");
  return items[it->second.second];
}

}  // namespace

const Polygraph& Workspace::polygraph(const std::string& name) const {
  return lookup(index_, polygraphs_, Kind::kPolygraph, name, "polygraph").second;
}

const NamedShape& Workspace::shape(const std::string& name) const {
  return lookup(index_, shapes_, Kind::kShape, name, "shape");
}

const NamedMorphism& Workspace::morphism(const std::string& name) const {
  return lookup(index_, morphisms_, Kind::kMorphism, name, "morphism");
}

const NamedFunctor& Workspace::functor(const std::string& name) const {
  return lookup(index_, functors_, Kind::kFunctor, name, "functor");
}

std::vector<std::string> Workspace::names(Kind kind) const {
  std::vector<std::string> out;
  for (const auto& [k, i] : order_) {
    if (k != kind) continue;
    switch (k) {
      case Kind::kPolygraph:
        out.push_back(polygraphs_[i].first);
        break;
      case Kind::kShape:
        out.push_back(shapes_[i].name);
        break;
      case Kind::kMorphism:
        out.push_back(morphisms_[i].name);
        break;
      case Kind::kFunctor:
        out.push_back(functors_[i].name);
        break;
    }
  }
  return out;
}

}  // namespace shapely
