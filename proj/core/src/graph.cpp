#include "graphpoly/graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace graphpoly {

Multigraph::Multigraph(std::vector<Edge> edges, std::vector<std::string> vertices)
    : edges_(std::move(edges)), vertices_(std::move(vertices)) {
  std::set<std::string> seen(vertices_.begin(), vertices_.end());
  if (seen.size() != vertices_.size())
    throw std::invalid_argument("duplicate vertex id");
  std::set<std::string> eids;
  for (const auto& e : edges_) {
    if (!eids.insert(e.id).second)
      throw std::invalid_argument("duplicate edge id: " + e.id);
    for (const std::string& v : {e.tail, e.head})
      if (seen.insert(v).second) vertices_.push_back(v);
  }
  for (const auto& e : edges_) VarTable::intern(e.id);
}

bool Multigraph::has_edge(const std::string& id) const {
  for (const auto& e : edges_)
    if (e.id == id) return true;
  return false;
}

const Edge& Multigraph::edge(const std::string& id) const {
  return edges_[edge_index(id)];
}

std::size_t Multigraph::edge_index(const std::string& id) const {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].id == id) return i;
  throw std::invalid_argument("unknown edge id: " + id);
}

bool Multigraph::has_vertex(const std::string& v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

std::size_t Multigraph::vertex_index(const std::string& v) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end())
    throw std::invalid_argument("unknown vertex id: " + v);
  return static_cast<std::size_t>(it - vertices_.begin());
}

Var Multigraph::edge_var(const std::string& id) const {
  return VarTable::intern(edge(id).id);
}

std::vector<std::string> Multigraph::edge_ids() const {
  std::vector<std::string> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back(e.id);
  return out;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

int Multigraph::h1() const {
  UnionFind uf(vertices_.size());
  std::size_t comps = vertices_.size();
  for (const auto& e : edges_)
    if (uf.unite(vertex_index(e.tail), vertex_index(e.head))) --comps;
  return static_cast<int>(edges_.size()) - static_cast<int>(vertices_.size()) +
         static_cast<int>(comps);
}

bool Multigraph::connected() const {
  if (vertices_.empty()) return true;
  UnionFind uf(vertices_.size());
  std::size_t comps = vertices_.size();
  for (const auto& e : edges_)
    if (uf.unite(vertex_index(e.tail), vertex_index(e.head))) --comps;
  return comps == 1;
}

Multigraph parse_graph(std::istream& in) {
  std::vector<Edge> edges;
  std::vector<std::string> vertices;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "edge") {
      Edge e;
      if (!(ls >> e.id >> e.tail >> e.head))
        throw std::invalid_argument("malformed edge line: " + line);
      edges.push_back(std::move(e));
    } else if (kw == "vertex") {
      std::string v;
      if (!(ls >> v)) throw std::invalid_argument("malformed vertex line");
      vertices.push_back(std::move(v));
    } else {
      throw std::invalid_argument("unknown directive: " + kw);
    }
  }
  return Multigraph(std::move(edges), std::move(vertices));
}

Multigraph parse_graph_string(const std::string& text) {
  std::istringstream is(text);
  return parse_graph(is);
}

Multigraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return parse_graph(in);
}

std::string graph_to_text(const Multigraph& g) {
  std::ostringstream os;
  for (const auto& v : g.vertices()) os << "vertex " << v << "\n";
  for (const auto& e : g.edges())
    os << "edge " << e.id << " " << e.tail << " " << e.head << "\n";
  return os.str();
}

std::string graph_hash(const Multigraph& g) {
  const std::string text = graph_to_text(g);
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

Multigraph delete_edge(const Multigraph& g, const std::string& id) {
  g.edge_index(id);  // validate
  std::vector<Edge> edges;
  std::set<std::string> used;
  for (const auto& e : g.edges())
    if (e.id != id) {
      edges.push_back(e);
      used.insert(e.tail);
      used.insert(e.head);
    }
  std::vector<std::string> vertices;
  for (const auto& v : g.vertices())
    if (used.count(v)) vertices.push_back(v);
  return Multigraph(std::move(edges), std::move(vertices));
}

std::optional<Multigraph> contract_edge(const Multigraph& g,
                                        const std::string& id) {
  const Edge& e = g.edge(id);
  if (e.is_self_loop()) return std::nullopt;  // zero-flag
  std::vector<Edge> edges;
  for (const auto& o : g.edges()) {
    if (o.id == id) continue;
    Edge n = o;
    if (n.tail == e.head) n.tail = e.tail;
    if (n.head == e.head) n.head = e.tail;
    edges.push_back(std::move(n));
  }
  std::vector<std::string> vertices;
  for (const auto& v : g.vertices())
    if (v != e.head) vertices.push_back(v);
  return Multigraph(std::move(edges), std::move(vertices));
}

Multigraph delete_edge_keep_vertices(const Multigraph& g,
                                     const std::string& id) {
  g.edge_index(id);  // validate
  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    if (e.id != id) edges.push_back(e);
  return Multigraph(std::move(edges), g.vertices());
}

Multigraph contract_edge_keep_vertices(const Multigraph& g,
                                       const std::string& id) {
  const Edge& e = g.edge(id);
  if (e.is_self_loop())
    throw std::invalid_argument("contract_edge_keep_vertices: self-loop");
  std::vector<Edge> edges;
  for (const auto& o : g.edges()) {
    if (o.id == id) continue;
    Edge n = o;
    if (n.tail == e.head) n.tail = e.tail;
    if (n.head == e.head) n.head = e.tail;
    edges.push_back(std::move(n));
  }
  std::vector<std::string> vertices;
  for (const auto& v : g.vertices())
    if (v != e.head) vertices.push_back(v);
  return Multigraph(std::move(edges), std::move(vertices));
}

std::vector<std::vector<int>> reduced_incidence(
    const Multigraph& g, const std::string& removed_vertex,
    const std::set<std::string>& removed_edge_rows) {
  g.vertex_index(removed_vertex);  // validate
  std::vector<std::string> cols;
  for (const auto& v : g.vertices())
    if (v != removed_vertex) cols.push_back(v);
  std::map<std::string, std::size_t> colIdx;
  for (std::size_t i = 0; i < cols.size(); ++i) colIdx[cols[i]] = i;
  std::vector<std::vector<int>> m;
  for (const auto& e : g.edges()) {
    if (removed_edge_rows.count(e.id)) continue;
    std::vector<int> row(cols.size(), 0);
    if (!e.is_self_loop()) {
      if (auto it = colIdx.find(e.tail); it != colIdx.end()) row[it->second] += 1;
      if (auto it = colIdx.find(e.head); it != colIdx.end()) row[it->second] -= 1;
    }
    m.push_back(std::move(row));
  }
  return m;
}

Int int_matrix_det(std::vector<std::vector<int>> m) {
  const std::size_t n = m.size();
  for (const auto& r : m)
    if (r.size() != n) throw std::invalid_argument("int det: not square");
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pr = n;
    for (std::size_t i = k; i < n; ++i)
      if (a[i][k] != 0) {
        pr = i;
        break;
      }
    if (pr == n) return 0;
    if (pr != k) {
      std::swap(a[pr], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return n == 0 ? Int(1) : (sign < 0 ? -a[n - 1][n - 1] : a[n - 1][n - 1]);
}

namespace {

// component labels of the vertices outside `excluded`
std::map<std::string, int> components_excluding(
    const Multigraph& g, const std::set<std::string>& excluded) {
  std::map<std::string, int> comp;
  std::vector<std::string> interior;
  for (const auto& v : g.vertices())
    if (!excluded.count(v)) interior.push_back(v);
  UnionFind uf(interior.size());
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < interior.size(); ++i) idx[interior[i]] = i;
  for (const auto& e : g.edges())
    if (idx.count(e.tail) && idx.count(e.head)) uf.unite(idx[e.tail], idx[e.head]);
  std::map<std::size_t, int> roots;
  for (const auto& v : interior) {
    std::size_t r = uf.find(idx[v]);
    auto [it, fresh] = roots.emplace(r, static_cast<int>(roots.size()));
    comp[v] = it->second;
  }
  return comp;
}

// Split the edge set along the cut: side L = edges touching component 0
// (plus all edges among cut vertices), side R = the rest.
CutDecomposition make_cut(const Multigraph& g,
                          const std::vector<std::string>& cut,
                          const std::map<std::string, int>& comp) {
  CutDecomposition d;
  d.cut_vertices = cut;
  std::set<std::string> cutset(cut.begin(), cut.end());
  for (const auto& e : g.edges()) {
    int ct = cutset.count(e.tail) ? -1 : comp.at(e.tail);
    int ch = cutset.count(e.head) ? -1 : comp.at(e.head);
    int c = std::max(ct, ch);  // -1 when both endpoints are cut vertices
    if (c <= 0)
      d.side_l.push_back(e.id);
    else
      d.side_r.push_back(e.id);
  }
  return d;
}

int max_component(const std::map<std::string, int>& comp) {
  int m = -1;
  for (const auto& [v, c] : comp) m = std::max(m, c);
  return m;
}

}  // namespace

std::vector<CutDecomposition> find_two_vertex_cuts(const Multigraph& g) {
  if (!g.connected()) throw std::invalid_argument("graph is disconnected");
  std::vector<CutDecomposition> out;
  const auto& vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      std::set<std::string> cut{vs[i], vs[j]};
      auto comp = components_excluding(g, cut);
      if (max_component(comp) >= 1)
        out.push_back(make_cut(g, {vs[i], vs[j]}, comp));
    }
  return out;
}

std::vector<CutDecomposition> find_three_vertex_cuts(const Multigraph& g) {
  if (!g.connected()) throw std::invalid_argument("graph is disconnected");
  std::vector<CutDecomposition> out;
  const auto& vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      for (std::size_t k = j + 1; k < vs.size(); ++k) {
        std::set<std::string> cut{vs[i], vs[j], vs[k]};
        auto comp = components_excluding(g, cut);
        if (max_component(comp) >= 1)  // >= 2 components, interior each side
          out.push_back(make_cut(g, {vs[i], vs[j], vs[k]}, comp));
      }
  return out;
}

std::vector<std::array<std::size_t, 3>> find_triangles(const Multigraph& g) {
  std::vector<std::array<std::size_t, 3>> out;
  const auto& es = g.edges();
  for (std::size_t a = 0; a < es.size(); ++a)
    for (std::size_t b = a + 1; b < es.size(); ++b)
      for (std::size_t c = b + 1; c < es.size(); ++c) {
        std::set<std::string> vs{es[a].tail, es[a].head, es[b].tail,
                                 es[b].head, es[c].tail, es[c].head};
        if (vs.size() != 3) continue;
        if (es[a].is_self_loop() || es[b].is_self_loop() || es[c].is_self_loop())
          continue;
        // distinct endpoints pairwise -> triangle (no two edges parallel)
        auto key = [](const Edge& e) {
          return std::minmax(e.tail, e.head);
        };
        if (key(es[a]) == key(es[b]) || key(es[a]) == key(es[c]) ||
            key(es[b]) == key(es[c]))
          continue;
        out.push_back({a, b, c});
      }
  return out;
}

bool has_parallel_edges(const Multigraph& g) {
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& e : g.edges()) {
    if (e.is_self_loop()) continue;
    auto mm = std::minmax(e.tail, e.head);
    if (!seen.insert({mm.first, mm.second}).second) return true;
  }
  return false;
}

namespace {

// edges between two given vertices (no self-loops)
std::vector<std::string> edges_between(const Multigraph& g, const std::string& a,
                                       const std::string& b) {
  std::vector<std::string> out;
  for (const auto& e : g.edges())
    if ((e.tail == a && e.head == b) || (e.tail == b && e.head == a))
      out.push_back(e.id);
  return out;
}

}  // namespace

std::vector<DoubleTriangleSite> find_double_triangles(const Multigraph& g) {
  std::vector<DoubleTriangleSite> out;
  auto triangles = find_triangles(g);
  const auto& es = g.edges();

  auto other_end = [&](const Edge& e, const std::string& v) {
    return e.tail == v ? e.head : e.tail;
  };

  // Enumerate candidate (u, E, B, shared edge e2, e1, e3) from triangles.
  struct Tri {
    std::string x, y, z;              // vertices
    std::array<std::size_t, 3> eidx;  // edge indices
  };

  auto attach_pairs = [&](const std::string& u, const std::set<std::string>& site_vs,
                          const std::set<std::size_t>& site_edges) {
    // distinct edge pairs (4, 5) from u to two distinct outside vertices
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<std::size_t> cand;
    for (std::size_t i = 0; i < es.size(); ++i) {
      if (site_edges.count(i) || es[i].is_self_loop()) continue;
      if (es[i].tail != u && es[i].head != u) continue;
      std::string o = other_end(es[i], u);
      if (site_vs.count(o)) continue;
      cand.push_back(i);
    }
    for (std::size_t a = 0; a < cand.size(); ++a)
      for (std::size_t b = 0; b < cand.size(); ++b) {
        if (a == b) continue;
        if (other_end(es[cand[a]], u) == other_end(es[cand[b]], u)) continue;
        pairs.push_back({cand[a], cand[b]});
      }
    return pairs;
  };

  // Full pattern and tri-split variant: two triangles sharing one edge.
  for (std::size_t t1 = 0; t1 < triangles.size(); ++t1)
    for (std::size_t t2 = 0; t2 < triangles.size(); ++t2) {
      if (t1 == t2) continue;
      std::vector<std::size_t> shared;
      for (auto a : triangles[t1])
        for (auto b : triangles[t2])
          if (a == b) shared.push_back(a);
      if (shared.size() != 1) continue;
      std::size_t e2 = shared[0];
      // tri1 = {1,2,3}, tri2 = {2,6,7}; u,E = ends of edge 2
      for (const std::string& u : {es[e2].tail, es[e2].head}) {
        std::string Ev = other_end(es[e2], u);
        // B: third vertex of tri1, C: third vertex of tri2
        auto third = [&](const std::array<std::size_t, 3>& tri) -> std::string {
          std::set<std::string> vs;
          for (auto i : tri) {
            vs.insert(es[i].tail);
            vs.insert(es[i].head);
          }
          vs.erase(u);
          vs.erase(Ev);
          return vs.empty() ? std::string() : *vs.begin();
        };
        std::string B = third(triangles[t1]);
        std::string C = third(triangles[t2]);
        if (B.empty() || C.empty() || B == C) continue;
        auto pick = [&](const std::array<std::size_t, 3>& tri, const std::string& a,
                        const std::string& b) -> std::size_t {
          for (auto i : tri) {
            auto mm = std::minmax(es[i].tail, es[i].head);
            if (mm == std::minmax(a, b)) return i;
          }
          return es.size();
        };
        std::size_t e1 = pick(triangles[t1], B, u);
        std::size_t e3 = pick(triangles[t1], B, Ev);
        std::size_t e6 = pick(triangles[t2], C, u);
        std::size_t e7 = pick(triangles[t2], C, Ev);
        if (e1 >= es.size() || e3 >= es.size() || e6 >= es.size() ||
            e7 >= es.size())
          continue;
        std::set<std::string> site_vs{u, Ev, B, C};
        std::set<std::size_t> site_edges{e1, e2, e3, e6, e7};
        auto pairs = attach_pairs(u, site_vs, site_edges);
        for (auto [e4, e5] : pairs) {
          DoubleTriangleSite s;
          s.kind = DoubleTriangleKind::Full;
          s.e = {es[e1].id, es[e2].id, es[e3].id, es[e4].id,
                 es[e5].id, es[e6].id, es[e7].id};
          s.u = u;
          s.E = Ev;
          s.B = B;
          s.C = C;
          s.A = other_end(es[e4], u);
          s.D = other_end(es[e5], u);
          out.push_back(std::move(s));
        }
        // tri-split variant: both triangles, a single attachment edge 5
        std::vector<std::size_t> single;
        for (std::size_t i = 0; i < es.size(); ++i) {
          if (site_edges.count(i) || es[i].is_self_loop()) continue;
          if (es[i].tail != u && es[i].head != u) continue;
          if (site_vs.count(other_end(es[i], u))) continue;
          single.push_back(i);
        }
        for (auto e5 : single) {
          DoubleTriangleSite s;
          s.kind = DoubleTriangleKind::TriSplitVariant;
          s.e = {es[e1].id, es[e2].id, es[e3].id, std::string(),
                 es[e5].id, es[e6].id, es[e7].id};
          s.u = u;
          s.E = Ev;
          s.B = B;
          s.C = C;
          s.D = other_end(es[e5], u);
          out.push_back(std::move(s));
        }
      }
    }

  // edge-split variant: one triangle {1,2,3} plus attachment edges 4,5 at u
  for (const auto& tri : triangles) {
    std::set<std::string> vs;
    for (auto i : tri) {
      vs.insert(es[i].tail);
      vs.insert(es[i].head);
    }
    for (const std::string& u : vs)
      for (const std::string& Ev : vs) {
        if (u == Ev) continue;
        std::string B;
        for (const auto& v : vs)
          if (v != u && v != Ev) B = v;
        auto pick = [&](const std::string& a, const std::string& b) -> std::size_t {
          for (auto i : tri)
            if (std::minmax(es[i].tail, es[i].head) == std::minmax(a, b)) return i;
          return es.size();
        };
        std::size_t e1 = pick(B, u), e2 = pick(u, Ev), e3 = pick(B, Ev);
        if (e1 >= es.size() || e2 >= es.size() || e3 >= es.size()) continue;
        std::set<std::size_t> site_edges{e1, e2, e3};
        auto pairs = attach_pairs(u, vs, site_edges);
        for (auto [e4, e5] : pairs) {
          DoubleTriangleSite s;
          s.kind = DoubleTriangleKind::EdgeSplitVariant;
          s.e = {es[e1].id, es[e2].id, es[e3].id, es[e4].id,
                 es[e5].id, std::string(), std::string()};
          s.u = u;
          s.E = Ev;
          s.B = B;
          s.A = other_end(es[e4], u);
          s.D = other_end(es[e5], u);
          out.push_back(std::move(s));
        }
      }
  }
  // Deduplicate role-symmetric rediscoveries (B<->C, 4<->5, ...) of the
  // same underlying edge set.
  std::vector<DoubleTriangleSite> unique;
  std::set<std::pair<int, std::vector<std::string>>> seen;
  for (auto& s : out) {
    std::vector<std::string> key(s.e.begin(), s.e.end());
    std::sort(key.begin(), key.end());
    if (seen.insert({static_cast<int>(s.kind), key}).second)
      unique.push_back(std::move(s));
  }
  return unique;
}

Multigraph contract_double_triangle(const Multigraph& g,
                                    const DoubleTriangleSite& site) {
  if (site.kind != DoubleTriangleKind::Full)
    throw std::invalid_argument(
        "contract_double_triangle requires a Full site");
  for (const auto& id : site.e)
    if (!g.has_edge(id))
      throw std::invalid_argument("stale double-triangle site: missing edge " +
                                  id);
  // delete 3 and 7, contract 2 (E merges into u), relabel 6 -> "3",
  // append the chord "2" = (B, C); ids 2,3 are reused from the freed ones.
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (e.id == site.e[2] || e.id == site.e[6] || e.id == site.e[1]) continue;
    Edge n = e;
    if (n.tail == site.E) n.tail = site.u;
    if (n.head == site.E) n.head = site.u;
    if (n.id == site.e[5]) n.id = site.e[2];  // old 6 takes the freed id "3"
    edges.push_back(std::move(n));
  }
  edges.push_back(Edge{site.e[1], site.B, site.C});  // chord reuses id "2"
  std::vector<std::string> vertices;
  for (const auto& v : g.vertices())
    if (v != site.E) vertices.push_back(v);
  // drop isolated vertices
  std::set<std::string> used;
  for (const auto& e : edges) {
    used.insert(e.tail);
    used.insert(e.head);
  }
  std::vector<std::string> keep;
  for (const auto& v : vertices)
    if (used.count(v)) keep.push_back(v);
  return Multigraph(std::move(edges), std::move(keep));
}

}  // namespace graphpoly
