#include "graphpoly/forest.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace graphpoly {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // returns false when already joined
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

// --- SetPartition -----------------------------------------------------

SetPartition::SetPartition(std::vector<std::vector<std::string>> parts)
    : parts_(std::move(parts)) {
  std::set<std::string> seen;
  for (auto& part : parts_) {
    if (part.empty())
      throw std::invalid_argument("set partition: empty part");
    std::sort(part.begin(), part.end());
    part.erase(std::unique(part.begin(), part.end()), part.end());
    for (const auto& v : part)
      if (!seen.insert(v).second)
        throw std::invalid_argument("set partition: vertex '" + v +
                                    "' in two parts");
  }
  std::sort(parts_.begin(), parts_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

SetPartition SetPartition::parse(const std::string& text) {
  std::vector<std::vector<std::string>> parts;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '{')
      throw std::invalid_argument("set partition syntax: expected '{' in '" +
                                  text + "'");
    ++i;
    std::vector<std::string> part;
    std::string current;
    for (; i < text.size() && text[i] != '}'; ++i) {
      char c = text[i];
      if (c == ',') {
        if (current.empty())
          throw std::invalid_argument("set partition syntax: empty vertex id");
        part.push_back(current);
        current.clear();
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        current += c;
      }
    }
    if (i == text.size())
      throw std::invalid_argument("set partition syntax: missing '}'");
    ++i;  // consume '}'
    if (!current.empty()) part.push_back(current);
    if (part.empty())
      throw std::invalid_argument("set partition syntax: empty part");
    parts.push_back(std::move(part));
    skip_space();
  }
  return SetPartition(std::move(parts));
}

int SetPartition::part_of(const std::string& v) const {
  for (std::size_t i = 0; i < parts_.size(); ++i)
    if (std::binary_search(parts_[i].begin(), parts_[i].end(), v))
      return static_cast<int>(i);
  return -1;
}

std::vector<std::string> SetPartition::support() const {
  std::vector<std::string> all;
  for (const auto& part : parts_)
    all.insert(all.end(), part.begin(), part.end());
  std::sort(all.begin(), all.end());
  return all;
}

SetPartition SetPartition::identify(const std::string& from,
                                    const std::string& to) const {
  auto parts = parts_;
  const int pf = part_of(from), pt = part_of(to);
  if (pf >= 0) {
    auto& part = parts[static_cast<std::size_t>(pf)];
    part.erase(std::remove(part.begin(), part.end(), from), part.end());
    if (pt < 0) {
      part.push_back(to);  // `from` renames to `to`
    } else if (pt != pf) {
      auto& target = parts[static_cast<std::size_t>(pt)];
      target.insert(target.end(), part.begin(), part.end());
      part.clear();
    }
  }
  std::vector<std::vector<std::string>> kept;
  for (auto& part : parts)
    if (!part.empty()) kept.push_back(std::move(part));
  return SetPartition(std::move(kept));
}

SetPartition SetPartition::with_part(std::vector<std::string> part) const {
  auto parts = parts_;
  parts.push_back(std::move(part));
  return SetPartition(std::move(parts));
}

SetPartition SetPartition::without_part(std::size_t index) const {
  auto parts = parts_;
  parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(index));
  return SetPartition(std::move(parts));
}

std::string SetPartition::to_string() const {
  std::ostringstream out;
  for (const auto& part : parts_) {
    out << '{';
    for (std::size_t i = 0; i < part.size(); ++i) {
      if (i) out << ',';
      out << part[i];
    }
    out << '}';
  }
  return out.str();
}

// --- tree sign ----------------------------------------------------------

int tree_sign(const RootedNumberedTree& t) {
  const std::size_t n = t.edges.size();
  if (t.vertex_order.size() != n)
    throw std::invalid_argument("tree sign: need one numbered vertex per edge");
  std::map<std::string, int> vertex_number;  // non-root -> 1..n
  for (std::size_t i = 0; i < n; ++i) {
    if (t.vertex_order[i] == t.root)
      throw std::invalid_argument("tree sign: root must not be numbered");
    if (!vertex_number.emplace(t.vertex_order[i], static_cast<int>(i) + 1)
             .second)
      throw std::invalid_argument("tree sign: duplicate vertex");
  }

  // adjacency over all n+1 vertices to compute distances from the root
  std::map<std::string, std::vector<std::string>> adj;
  adj[t.root];
  for (const auto& [tail, head] : t.edges) {
    if (vertex_number.find(tail) == vertex_number.end() && tail != t.root)
      throw std::invalid_argument("tree sign: unnumbered vertex '" + tail +
                                  "'");
    if (vertex_number.find(head) == vertex_number.end() && head != t.root)
      throw std::invalid_argument("tree sign: unnumbered vertex '" + head +
                                  "'");
    adj[tail].push_back(head);
    adj[head].push_back(tail);
  }
  if (adj.size() != n + 1)
    throw std::invalid_argument("tree sign: not a tree on n+1 vertices");

  std::map<std::string, int> depth;
  depth[t.root] = 0;
  std::queue<std::string> bfs;
  bfs.push(t.root);
  while (!bfs.empty()) {
    auto v = bfs.front();
    bfs.pop();
    for (const auto& w : adj[v])
      if (depth.find(w) == depth.end()) {
        depth[w] = depth[v] + 1;
        bfs.push(w);
      }
  }
  if (depth.size() != n + 1)
    throw std::invalid_argument("tree sign: disconnected");

  std::vector<int> perm(n);  // edge i -> number of phi(edge i)
  int s_product = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& [tail, head] = t.edges[i];
    if (depth[tail] == depth[head])
      throw std::invalid_argument("tree sign: cycle detected");
    const bool head_farther = depth[head] > depth[tail];
    const std::string& far_vertex = head_farther ? head : tail;
    s_product *= head_farther ? 1 : -1;
    perm[i] = vertex_number.at(far_vertex);
  }

  // sgn of the bijection edge number -> vertex number
  std::vector<bool> used(n, false);
  int sgn = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (used[i]) continue;
    std::size_t j = i, len = 0;
    while (!used[j]) {
      used[j] = true;
      j = static_cast<std::size_t>(perm[j] - 1);
      ++len;
    }
    if (len % 2 == 0) sgn = -sgn;
  }
  return sgn * s_product;
}

// --- spanning trees -------------------------------------------------------

namespace {

// contraction/deletion recursion with connectivity pruning
void tree_rec(const Multigraph& g, std::size_t idx, Dsu dsu, int comps,
              std::vector<std::string>& chosen,
              std::vector<std::vector<std::string>>& out) {
  if (comps == 1) {
    auto tree = chosen;
    std::sort(tree.begin(), tree.end());
    out.push_back(std::move(tree));
    return;
  }
  const auto& es = g.edges();
  if (idx == es.size()) return;
  {
    // prune: the chosen edges plus everything still undecided must connect
    Dsu probe = dsu;
    int c = comps;
    for (std::size_t i = idx; i < es.size(); ++i)
      if (probe.unite(static_cast<int>(g.vertex_index(es[i].tail)),
                      static_cast<int>(g.vertex_index(es[i].head))))
        --c;
    if (c > 1) return;
  }
  const Edge& e = es[idx];
  int a = static_cast<int>(g.vertex_index(e.tail));
  int b = static_cast<int>(g.vertex_index(e.head));
  if (dsu.find(a) != dsu.find(b)) {
    Dsu with = dsu;
    with.unite(a, b);
    chosen.push_back(e.id);
    tree_rec(g, idx + 1, std::move(with), comps - 1, chosen, out);
    chosen.pop_back();
  }
  tree_rec(g, idx + 1, std::move(dsu), comps, chosen, out);
}

}  // namespace

std::vector<std::vector<std::string>> spanning_trees(const Multigraph& g) {
  if (!g.connected())
    throw std::invalid_argument("spanning_trees: graph is disconnected");
  std::vector<std::vector<std::string>> out;
  std::vector<std::string> chosen;
  tree_rec(g, 0, Dsu(g.vertex_count()), static_cast<int>(g.vertex_count()),
           chosen, out);
  std::sort(out.begin(), out.end());
  return out;
}

Poly psi(const Multigraph& g) {
  if (!g.connected())
    throw std::invalid_argument("psi: graph is disconnected");
  Poly result;
  for (const auto& tree : spanning_trees(g)) {
    std::set<std::string> in_tree(tree.begin(), tree.end());
    std::vector<Var> vars;
    for (const auto& e : g.edges())
      if (!in_tree.count(e.id)) vars.push_back(g.edge_var(e.id));
    std::sort(vars.begin(), vars.end());
    Mono m;
    for (Var v : vars) m.emplace_back(v, 1);
    result.add_term(m, 1);
  }
  return result;
}

// --- spanning-forest polynomial --------------------------------------------

namespace {

struct PhiState {
  const Multigraph& g;
  int k;  // number of parts
  Poly result;
};

// color[root(v)] = part index + 1 (0 = uncolored); comps counts components;
// colored counts distinctly colored components.
void phi_rec(PhiState& st, std::size_t idx, Dsu dsu, std::vector<int> color,
             int comps, std::vector<Var>& excluded) {
  const auto& es = st.g.edges();
  const int remaining = static_cast<int>(es.size() - idx);
  if (comps - st.k > remaining) return;
  if (idx == es.size()) {
    if (comps != st.k) return;
    // every component must carry a color (one part per tree)
    std::set<int> roots;
    for (std::size_t v = 0; v < st.g.vertex_count(); ++v)
      roots.insert(dsu.find(static_cast<int>(v)));
    for (int r : roots)
      if (color[static_cast<std::size_t>(r)] == 0) return;
    auto vars = excluded;
    std::sort(vars.begin(), vars.end());
    Mono m;
    for (Var v : vars) m.emplace_back(v, 1);
    st.result.add_term(m, 1);
    return;
  }
  const Edge& e = es[idx];
  int a = dsu.find(static_cast<int>(st.g.vertex_index(e.tail)));
  int b = dsu.find(static_cast<int>(st.g.vertex_index(e.head)));
  if (a != b &&
      !(color[static_cast<std::size_t>(a)] != 0 &&
        color[static_cast<std::size_t>(b)] != 0 &&
        color[static_cast<std::size_t>(a)] !=
            color[static_cast<std::size_t>(b)])) {
    Dsu with = dsu;
    auto col = color;
    with.unite(a, b);
    int root = with.find(a);
    col[static_cast<std::size_t>(root)] =
        std::max(color[static_cast<std::size_t>(a)],
                 color[static_cast<std::size_t>(b)]);
    phi_rec(st, idx + 1, std::move(with), std::move(col), comps - 1, excluded);
  }
  excluded.push_back(st.g.edge_var(e.id));
  phi_rec(st, idx + 1, std::move(dsu), std::move(color), comps, excluded);
  excluded.pop_back();
}

}  // namespace

Poly phi(const Multigraph& g, const SetPartition& p) {
  std::vector<int> color(g.vertex_count(), 0);
  for (std::size_t i = 0; i < p.parts().size(); ++i)
    for (const auto& v : p.parts()[i]) {
      if (!g.has_vertex(v))
        throw std::invalid_argument("phi: partition vertex '" + v +
                                    "' not in graph");
      color[g.vertex_index(v)] = static_cast<int>(i) + 1;
    }
  PhiState st{g, static_cast<int>(p.part_count()), Poly()};
  std::vector<Var> excluded;
  phi_rec(st, 0, Dsu(g.vertex_count()), std::move(color),
          static_cast<int>(g.vertex_count()), excluded);
  return st.result;
}

// --- contraction/deletion relation ------------------------------------------

namespace {

// all ordered splits (p1, p2) of `pool` into two disjoint (possibly empty)
// halves
std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>
ordered_splits(const std::vector<std::string>& pool) {
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>
      out;
  const std::size_t n = pool.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::string> p1, p2;
    for (std::size_t i = 0; i < n; ++i)
      ((mask >> i) & 1 ? p1 : p2).push_back(pool[i]);
    out.emplace_back(std::move(p1), std::move(p2));
  }
  return out;
}

}  // namespace

RelationCheck phi_contraction_deletion(const Multigraph& g,
                                       const SetPartition& p,
                                       const std::string& edge_id) {
  const Edge& e = g.edge(edge_id);
  const std::string v = e.tail, w = e.head;
  const Poly lhs = phi(g, p);
  const Multigraph g_del = delete_edge_keep_vertices(g, edge_id);
  const Poly alpha = Poly::variable(g.edge_var(edge_id));
  const Poly del_term = alpha * phi(g_del, p);

  const int pv = p.part_of(v), pw = p.part_of(w);
  const bool different_parts =
      !e.is_self_loop() && pv >= 0 && pw >= 0 && pv != pw;

  RelationCheck check;
  if (different_parts || e.is_self_loop()) {
    // a self-loop never lies in a forest, so the deletion term stands alone
    Poly diff = lhs - del_term;
    check.pass = diff.is_zero();
    check.witness = diff;
    check.detail = "deletion-only clause";
    return check;
  }

  const Multigraph g_con = contract_edge_keep_vertices(g, edge_id);
  const SetPartition p_con = p.identify(w, v);
  const Poly con_term = phi(g_con, p_con);
  Poly diff = lhs - del_term - con_term;
  if (!diff.is_zero()) {
    check.pass = false;
    check.witness = diff;
    check.detail = "contraction/deletion clause";
    return check;
  }

  // part-splitting expansion of Phi^{P/e}_{G\e}: the part absorbing the
  // contracted vertex splits into ordered halves p1+{v} | p2+{w}
  Poly split_sum;
  if (pv < 0 && pw < 0) {
    for (std::size_t i = 0; i < p.part_count(); ++i) {
      for (auto& [p1, p2] : ordered_splits(p.parts()[i])) {
        auto q = p.without_part(i);
        auto part1 = p1;
        part1.push_back(v);
        auto part2 = p2;
        part2.push_back(w);
        split_sum = split_sum + phi(g_del, q.with_part(part1).with_part(part2));
      }
    }
  } else {
    const std::size_t i =
        static_cast<std::size_t>(pv >= 0 ? pv : pw);  // same part if both
    std::vector<std::string> pool;
    for (const auto& x : p.parts()[i])
      if (x != v && x != w) pool.push_back(x);
    for (auto& [p1, p2] : ordered_splits(pool)) {
      auto q = p.without_part(i);
      auto part1 = p1;
      part1.push_back(v);
      auto part2 = p2;
      part2.push_back(w);
      split_sum = split_sum + phi(g_del, q.with_part(part1).with_part(part2));
    }
  }
  diff = con_term - split_sum;
  check.pass = diff.is_zero();
  check.witness = diff;
  check.detail = check.pass ? "all clauses" : "part-splitting expansion";
  return check;
}

}  // namespace graphpoly
