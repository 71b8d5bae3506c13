#include "graphpoly/dodgson.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace graphpoly {

namespace {

std::set<std::string> parse_edge_list(const std::string& text) {
  std::set<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      if (!current.empty()) out.insert(current);
      current.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      current += c;
    }
  }
  if (!current.empty()) out.insert(current);
  return out;
}

void validate_spec(const Multigraph& g, const DodgsonSpec& spec) {
  if (spec.I.size() != spec.J.size())
    throw std::invalid_argument("dodgson: |I| != |J|");
  for (const auto* side : {&spec.I, &spec.J, &spec.K})
    for (const auto& id : *side)
      if (!g.has_edge(id))
        throw std::invalid_argument("dodgson: unknown edge '" + id + "'");
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

bool is_spanning_tree(const Multigraph& g,
                      const std::vector<std::size_t>& edge_indices) {
  if (edge_indices.size() + 1 != g.vertex_count()) return false;
  Dsu dsu(g.vertex_count());
  for (std::size_t i : edge_indices) {
    const Edge& e = g.edges()[i];
    if (!dsu.unite(static_cast<int>(g.vertex_index(e.tail)),
                   static_cast<int>(g.vertex_index(e.head))))
      return false;
  }
  return true;
}

// det of the reduced incidence matrix keeping exactly the given edge rows
// (last vertex column removed)
Int kept_rows_incidence_det(const Multigraph& g,
                            const std::vector<std::size_t>& kept) {
  std::set<std::string> removed;
  std::set<std::size_t> keep_set(kept.begin(), kept.end());
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    if (!keep_set.count(i)) removed.insert(g.edges()[i].id);
  return int_matrix_det(
      reduced_incidence(g, g.vertices().back(), removed));
}

}  // namespace

DodgsonSpec DodgsonSpec::parse(const std::string& i_list,
                               const std::string& j_list,
                               const std::string& k_list) {
  return DodgsonSpec{parse_edge_list(i_list), parse_edge_list(j_list),
                     parse_edge_list(k_list)};
}

std::string DodgsonSpec::to_string() const {
  auto join = [](const std::set<std::string>& s) {
    std::string out;
    for (const auto& id : s) {
      if (!out.empty()) out += ',';
      out += id;
    }
    return out.empty() ? std::string("-") : out;
  };
  return "I=" + join(I) + " J=" + join(J) + " K=" + join(K);
}

std::vector<std::vector<Poly>> expanded_laplacian(
    const Multigraph& g, const std::set<std::string>& K) {
  const std::size_t m = g.edge_count();
  const std::size_t nv = g.vertex_count();
  if (nv == 0) throw std::invalid_argument("expanded_laplacian: empty graph");
  const auto inc = reduced_incidence(g, g.vertices().back(), {});
  const std::size_t size = m + nv - 1;
  std::vector<std::vector<Poly>> M(size, std::vector<Poly>(size));
  for (std::size_t i = 0; i < m; ++i) {
    const Edge& e = g.edges()[i];
    if (!K.count(e.id)) M[i][i] = Poly::variable(g.edge_var(e.id));
    for (std::size_t j = 0; j + 1 < nv; ++j) {
      if (inc[i][j] == 0) continue;
      M[i][m + j] = Poly::constant(inc[i][j]);
      M[m + j][i] = Poly::constant(-inc[i][j]);
    }
  }
  return M;
}

Poly dodgson_raw(const Multigraph& g, const DodgsonSpec& spec) {
  validate_spec(g, spec);
  auto M = expanded_laplacian(g, spec.K);
  std::vector<std::size_t> row_removed, col_removed;
  for (const auto& id : spec.I) row_removed.push_back(g.edge_index(id));
  for (const auto& id : spec.J) col_removed.push_back(g.edge_index(id));
  std::sort(row_removed.begin(), row_removed.end());
  std::sort(col_removed.begin(), col_removed.end());

  std::vector<std::vector<Poly>> sub;
  for (std::size_t i = 0; i < M.size(); ++i) {
    if (std::binary_search(row_removed.begin(), row_removed.end(), i))
      continue;
    std::vector<Poly> row;
    for (std::size_t j = 0; j < M.size(); ++j) {
      if (std::binary_search(col_removed.begin(), col_removed.end(), j))
        continue;
      row.push_back(M[i][j]);
    }
    sub.push_back(std::move(row));
  }
  return det(sub);
}

Poly dodgson(const Multigraph& g, const DodgsonSpec& spec) {
  return normalize_sign(dodgson_raw(g, spec));
}

Poly dodgson_tree_pairs_raw(const Multigraph& g, const DodgsonSpec& spec) {
  validate_spec(g, spec);
  for (const auto& id : spec.I)
    if (spec.J.count(id))
      throw std::invalid_argument("tree pairs: I and J must be disjoint");

  std::vector<std::size_t> i_rows, j_rows, pool;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& id = g.edges()[i].id;
    if (spec.I.count(id))
      i_rows.push_back(i);
    else if (spec.J.count(id))
      j_rows.push_back(i);
    else
      pool.push_back(i);
  }
  const std::size_t nv = g.vertex_count();
  if (nv == 0 || spec.I.size() > nv - 1) return Poly::zero();
  const std::size_t u_size = nv - 1 - spec.I.size();
  if (u_size > pool.size()) return Poly::zero();

  auto below = [](const std::vector<std::size_t>& s, std::size_t x) {
    return static_cast<std::size_t>(
        std::lower_bound(s.begin(), s.end(), x) - s.begin());
  };

  Poly result;
  std::vector<bool> take(pool.size(), false);
  std::fill(take.begin(), take.begin() + static_cast<std::ptrdiff_t>(u_size),
            true);
  // iterate all U of the right size via selector permutations
  do {
    std::vector<std::size_t> with_i = i_rows, with_j = j_rows, u;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (take[i]) u.push_back(pool[i]);
    with_i.insert(with_i.end(), u.begin(), u.end());
    with_j.insert(with_j.end(), u.begin(), u.end());
    if (!is_spanning_tree(g, with_i) || !is_spanning_tree(g, with_j)) continue;
    const Int det_i = kept_rows_incidence_det(g, with_i);
    const Int det_j = kept_rows_incidence_det(g, with_j);
    // The term sign from expanding det M(I,J): generalized Laplace along
    // the vertex columns picks the rows J+U (positions taken within the
    // rows of M(I,J), i.e. edge order with I removed); the complementary
    // minor reduces through the remaining diagonal alpha entries (column
    // positions within edge order with J removed, rows consumed top-down)
    // down to det(-B^T) on the columns I+U.
    const std::size_t n_b = nv - 1;
    std::size_t expo = n_b * (g.edge_count() - j_rows.size()) +
                       n_b * (n_b + 1) / 2 + n_b;
    for (std::size_t x : j_rows) expo += x + 1 - below(i_rows, x);
    for (std::size_t x : u) expo += x + 1 - below(i_rows, x);
    std::vector<std::size_t> w_rows;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (!take[i]) w_rows.push_back(pool[i]);
    for (std::size_t x : w_rows) expo += x + 2 - below(j_rows, x);
    expo += w_rows.size() * (w_rows.size() - 1) / 2;
    const Int sign = (expo % 2 == 0) ? 1 : -1;
    std::vector<Var> vars;
    for (std::size_t x : w_rows) vars.push_back(g.edge_var(g.edges()[x].id));
    std::sort(vars.begin(), vars.end());
    Mono mono;
    for (Var v : vars) mono.emplace_back(v, 1);
    result.add_term(mono, sign * det_i * det_j);
  } while (std::prev_permutation(take.begin(), take.end()));

  if (!spec.K.empty()) {
    std::set<Var> zeros;
    for (const auto& id : spec.K) zeros.insert(g.edge_var(id));
    result = result.substitute_zero(zeros);
  }
  return result;
}

Poly dodgson_via_tree_pairs(const Multigraph& g, const DodgsonSpec& spec) {
  if (!spec.K.empty())
    throw std::invalid_argument("dodgson_via_tree_pairs: K must be empty");
  return normalize_sign(dodgson_tree_pairs_raw(g, spec));
}

DisjointReduction reduce_to_disjoint(const Multigraph& g,
                                     const DodgsonSpec& spec) {
  validate_spec(g, spec);
  std::set<std::string> common;
  for (const auto& id : spec.I)
    if (spec.J.count(id)) common.insert(id);

  Multigraph current = g;
  for (const auto& id : common) current = delete_edge(current, id);
  for (const auto& id : spec.K) {
    if (common.count(id)) continue;
    if (!current.has_edge(id)) continue;  // vanished with a dropped vertex
    auto contracted = contract_edge(current, id);
    if (!contracted) return DisjointReduction{true, Multigraph(), {}};
    current = std::move(*contracted);
  }

  DodgsonSpec reduced;
  for (const auto& id : spec.I)
    if (!common.count(id) && current.has_edge(id)) reduced.I.insert(id);
  for (const auto& id : spec.J)
    if (!common.count(id) && current.has_edge(id)) reduced.J.insert(id);
  return DisjointReduction{false, std::move(current), std::move(reduced)};
}

std::pair<Poly, Poly> contraction_deletion(const Multigraph& g,
                                           const DodgsonSpec& spec,
                                           const std::string& e) {
  validate_spec(g, spec);
  if (spec.I.count(e) || spec.J.count(e) || spec.K.count(e))
    throw std::invalid_argument("contraction_deletion: e must avoid I, J, K");
  const Poly raw = dodgson_raw(g, spec);
  const Var var = g.edge_var(e);
  auto coeffs = raw.coefficients_in(var);  // [const, linear, ...]
  Poly contraction = coeffs.empty() ? Poly::zero() : coeffs[0];
  Poly deletion = coeffs.size() > 1 ? coeffs[1] : Poly::zero();
  if (coeffs.size() > 2)
    throw std::logic_error("dodgson polynomial not multilinear");
  // flip both parts together so they reassemble the normalized value
  if (!(normalize_sign(raw) == raw)) {
    deletion = -deletion;
    contraction = -contraction;
  }
  return {std::move(deletion), std::move(contraction)};
}

ForestExpansion forest_expansion(const Multigraph& g,
                                 const std::set<std::string>& I,
                                 const std::set<std::string>& J) {
  if (I.size() != J.size())
    throw std::invalid_argument("forest_expansion: |I| != |J|");
  for (const auto& id : I)
    if (J.count(id))
      throw std::invalid_argument("forest_expansion: I and J must be disjoint");

  std::set<std::string> vertex_set;
  std::vector<std::size_t> i_rows, j_rows;
  for (const auto* side : {&I, &J})
    for (const auto& id : *side) {
      const Edge& e = g.edge(id);
      vertex_set.insert(e.tail);
      vertex_set.insert(e.head);
    }
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& id = g.edges()[i].id;
    if (I.count(id)) i_rows.push_back(i);
    if (J.count(id)) j_rows.push_back(i);
  }
  const std::vector<std::string> verts(vertex_set.begin(), vertex_set.end());
  const std::size_t t = verts.size();
  const std::size_t want_parts = I.size() + 1;

  ForestExpansion fe;
  if (t == 0) return fe;

  // restricted-growth enumeration of the set partitions of verts; block
  // order = first-occurrence order = minimal-vertex order, so the root part
  // (containing the globally minimal vertex) is part 0
  auto emit = [&](const std::vector<int>& assign, int k) {
    if (static_cast<std::size_t>(k) != want_parts) return;
    auto part_of = [&](const std::string& v) {
      auto it = std::lower_bound(verts.begin(), verts.end(), v);
      return assign[static_cast<std::size_t>(it - verts.begin())];
    };
    auto quotient_det = [&](const std::vector<std::size_t>& rows) {
      std::vector<std::vector<int>> m(
          rows.size(), std::vector<int>(static_cast<std::size_t>(k) - 1, 0));
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const Edge& e = g.edges()[rows[r]];
        const int a = part_of(e.tail), b = part_of(e.head);
        if (a > 0) m[r][static_cast<std::size_t>(a) - 1] += 1;
        if (b > 0) m[r][static_cast<std::size_t>(b) - 1] -= 1;
      }
      return int_matrix_det(std::move(m));
    };
    const Int det_i = quotient_det(i_rows);
    if (det_i == 0) return;
    const Int det_j = quotient_det(j_rows);
    if (det_j == 0) return;
    std::vector<std::vector<std::string>> parts(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < t; ++i)
      parts[static_cast<std::size_t>(assign[i])].push_back(verts[i]);
    fe.terms.emplace_back(static_cast<int>(det_i * det_j),
                          SetPartition(std::move(parts)));
  };

  // depth-first over restricted-growth strings
  std::vector<int> assign(t, 0);
  auto rec = [&](auto&& self, std::size_t idx, int max_used) -> void {
    if (idx == t) {
      emit(assign, max_used + 1);
      return;
    }
    for (int b = 0; b <= max_used + 1; ++b) {
      assign[idx] = b;
      self(self, idx + 1, std::max(max_used, b));
    }
  };
  assign[0] = 0;
  rec(rec, 1, 0);
  return fe;
}

Poly forest_expansion_sum(const Multigraph& g, const ForestExpansion& fe) {
  Poly sum;
  for (const auto& [coeff, part] : fe.terms)
    sum = sum + Int(coeff) * phi(g, part);
  return sum;
}

}  // namespace graphpoly
