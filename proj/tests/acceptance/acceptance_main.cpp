// Acceptance suite: one pass/fail line per criterion.
//
// Each criterion is self-contained and prints
//   criterion NN [name]: pass|FAIL (elapsed)
// The process exits nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "graphpoly/dodgson.hpp"
#include "graphpoly/forest.hpp"
#include "graphpoly/graph.hpp"
#include "graphpoly/identities.hpp"
#include "graphpoly/poly.hpp"
#include "graphpoly/predictor.hpp"
#include "graphpoly/reduction.hpp"

using namespace graphpoly;

namespace {

const std::string kFixtures = GRAPHPOLY_FIXTURES;

std::vector<std::string> fixture_files() {
  std::vector<std::string> files;
  for (const auto& ent : std::filesystem::directory_iterator(kFixtures))
    if (ent.path().extension() == ".g") files.push_back(ent.path().string());
  std::sort(files.begin(), files.end());
  return files;
}

// --- random instances ----------------------------------------------------

Multigraph random_connected_graph(std::mt19937_64& rng, int min_v, int max_v,
                                  int max_edges) {
  std::uniform_int_distribution<int> nv_dist(min_v, max_v);
  const int nv = nv_dist(rng);
  std::uniform_int_distribution<int> ne_dist(nv - 1, max_edges);
  const int ne = std::max(nv - 1, ne_dist(rng));
  std::vector<std::string> vs;
  for (int i = 0; i < nv; ++i) vs.push_back("v" + std::to_string(i));
  std::vector<Edge> edges;
  for (int i = 1; i < nv; ++i) {  // random spanning tree
    std::uniform_int_distribution<int> to(0, i - 1);
    edges.push_back({"g" + std::to_string(edges.size()),
                     vs[static_cast<std::size_t>(to(rng))],
                     vs[static_cast<std::size_t>(i)]});
  }
  std::uniform_int_distribution<int> pick(0, nv - 1);
  while (static_cast<int>(edges.size()) < ne) {
    int a = pick(rng), b = pick(rng);
    if (a == b) continue;  // no self-loops; parallel edges are welcome
    edges.push_back({"g" + std::to_string(edges.size()),
                     vs[static_cast<std::size_t>(a)],
                     vs[static_cast<std::size_t>(b)]});
  }
  return Multigraph(std::move(edges), std::move(vs));
}

// --- criterion harness ----------------------------------------------------

struct Tally {
  bool pass = true;
  int checked = 0;
  std::string note;
  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok && pass) {
      pass = false;
      note = what;
    }
  }
};

bool run(int id, const std::string& name, void (*body)(Tally&)) {
  Tally t;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(t);
  } catch (const std::exception& ex) {
    t.pass = false;
    t.note = std::string("exception: ") + ex.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  std::ostringstream line;
  line << "criterion " << (id < 10 ? " " : "") << id << " [" << name
       << "]: " << (t.pass ? "pass" : "FAIL") << " (" << t.checked
       << " checks, " << static_cast<int>(secs * 10) / 10.0 << " s)";
  if (!t.pass) line << " -- " << t.note;
  std::cout << line.str() << std::endl;
  return t.pass;
}

// --- criterion 1 ----------------------------------------------------------

// det(M_G) by generalized Laplace expansion along the incidence-block
// columns (Cauchy-Binet): sum over (v-1)-subsets S of edge rows of
// det(B_S)^2 * prod_{e not in S} alpha_e.  Used for the largest fixtures,
// where fraction-free elimination is too slow for the time budget.
Poly laplace_det_psi(const Multigraph& g) {
  const std::size_t e = g.edge_count();
  const std::size_t n = g.vertex_count() - 1;
  const auto ids = g.edge_ids();
  Poly out;
  std::vector<std::size_t> c(n);
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    std::set<std::string> removed(ids.begin(), ids.end());
    for (std::size_t idx : c) removed.erase(ids[idx]);
    auto b = reduced_incidence(g, g.vertices().back(), removed);
    Int d = int_matrix_det(b);
    if (d != 0) {
      Mono m;
      for (const auto& id : removed)
        m.push_back({VarTable::intern(id), 1});
      std::sort(m.begin(), m.end());
      out.add_term(m, d * d);
    }
    // next combination
    int i = static_cast<int>(n) - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] ==
                         e - n + static_cast<std::size_t>(i))
      --i;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < n; ++j)
      c[j] = c[j - 1] + 1;
  }
  return out;
}

void criterion1(Tally& t) {
  for (const auto& f : fixture_files()) {
    Multigraph g = load_graph_file(f);
    if (!g.connected()) continue;
    Poly p = normalize_sign(psi(g));
    Poly d = g.edge_count() <= 12
                 ? normalize_sign(det(expanded_laplacian(g, {})))
                 : normalize_sign(laplace_det_psi(g));
    t.expect(p == d, "psi != det(M_G) for " + f);
  }
  std::mt19937_64 rng(20260826);
  for (int i = 0; i < 500; ++i) {
    Multigraph g = random_connected_graph(rng, 3, 8, 12);
    t.expect(normalize_sign(psi(g)) ==
                 normalize_sign(det(expanded_laplacian(g, {}))),
             "psi != det(M_G) on random instance " + std::to_string(i));
  }
}

// --- criteria 2 and 3 -------------------------------------------------------

struct ExpansionInstance {
  Multigraph g;
  std::set<std::string> I, J;
  ForestExpansion fe;
};

std::vector<ExpansionInstance> g_expansions;  // shared between 2 and 3

void criterion2(Tally& t) {
  std::mt19937_64 rng(424243);
  int made = 0;
  while (made < 200) {
    Multigraph g = random_connected_graph(rng, 3, 6, 10);
    const auto ids = g.edge_ids();
    const int s = made % 3 + 1;
    if (static_cast<int>(ids.size()) < 2 * s || g.h1() < 1) continue;
    std::vector<std::string> pool = ids;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::set<std::string> I(pool.begin(), pool.begin() + s);
    std::set<std::string> J(pool.begin() + s, pool.begin() + 2 * s);
    ++made;
    DodgsonSpec spec{I, J, {}};
    Poly via_det = dodgson(g, spec);
    // raw routes must agree exactly, signs included
    t.expect(dodgson_raw(g, spec) == dodgson_tree_pairs_raw(g, spec),
             "tree pairs != det at instance " + std::to_string(made));
    ForestExpansion fe = forest_expansion(g, I, J);
    Poly via_forest = forest_expansion_sum(g, fe);
    Poly alpha = Poly::constant(1);
    for (const auto& id : I) alpha = alpha * Poly::variable(id);
    for (const auto& id : J) alpha = alpha * Poly::variable(id);
    t.expect(equal_up_to_sign(via_forest, alpha * via_det),
             "forest expansion != alpha * det at instance " +
                 std::to_string(made));
    g_expansions.push_back(ExpansionInstance{g, I, J, fe});
  }
}

std::set<std::string> edge_vertices(const Multigraph& g,
                                    const std::set<std::string>& edges) {
  std::set<std::string> out;
  for (const auto& id : edges) {
    out.insert(g.edge(id).tail);
    out.insert(g.edge(id).head);
  }
  return out;
}

SetPartition rename_vertex(const SetPartition& p, const std::string& a,
                           const std::string& b) {
  // swap a and b throughout
  std::vector<std::vector<std::string>> parts = p.parts();
  for (auto& part : parts)
    for (auto& v : part) {
      if (v == a)
        v = b;
      else if (v == b)
        v = a;
    }
  return SetPartition(parts);
}

SetPartition drop_vertex(const SetPartition& p, const std::string& v) {
  std::vector<std::vector<std::string>> parts;
  for (const auto& part : p.parts()) {
    std::vector<std::string> q;
    for (const auto& u : part)
      if (u != v) q.push_back(u);
    if (!q.empty()) parts.push_back(std::move(q));
  }
  return SetPartition(parts);
}

void criterion3(Tally& t) {
  // The two worked matrix examples: determinants (-1, +1) and (-1, -1).
  RootedNumberedTree ex1_p1{
      "r", {{"1", "2"}, {"2", "3"}, {"2", "r"}}, {"1", "2", "3"}};
  RootedNumberedTree ex1_p2{
      "r", {{"1", "2"}, {"3", "2"}, {"3", "r"}}, {"1", "2", "3"}};
  RootedNumberedTree ex2_p1{"r",
                            {{"1", "r"}, {"r", "2"}, {"2", "3"}, {"2", "4"}},
                            {"1", "2", "3", "4"}};
  RootedNumberedTree ex2_p2{"r",
                            {{"1", "r"}, {"r", "2"}, {"1", "3"}, {"1", "4"}},
                            {"1", "2", "3", "4"}};
  t.expect(tree_sign(ex1_p1) == -1, "worked example 1, partition 1");
  t.expect(tree_sign(ex1_p2) == +1, "worked example 1, partition 2");
  t.expect(tree_sign(ex2_p1) == -1, "worked example 2, partition 1");
  t.expect(tree_sign(ex2_p2) == -1, "worked example 2, partition 2");

  // sign corollaries over every expansion computed in criterion 2
  for (const auto& inst : g_expansions) {
    const auto vi = edge_vertices(inst.g, inst.I);
    const auto vj = edge_vertices(inst.g, inst.J);
    std::vector<std::string> vj_only(vj.begin(), vj.end());
    bool overlap = false;
    for (const auto& v : vi)
      if (vj.count(v)) overlap = true;
    if (overlap) continue;  // the corollaries order V(I) before V(J)
    // union-find over J's edges: "same tree of J"
    std::map<std::string, std::string> parent;
    for (const auto& v : vj) parent[v] = v;
    std::function<std::string(const std::string&)> find =
        [&](const std::string& v) -> std::string {
      return parent[v] == v ? v : parent[v] = find(parent[v]);
    };
    for (const auto& id : inst.J)
      parent[find(inst.g.edge(id).tail)] = find(inst.g.edge(id).head);

    const auto& terms = inst.fe.terms;
    for (std::size_t a = 0; a < terms.size(); ++a)
      for (std::size_t b = a + 1; b < terms.size(); ++b) {
        const auto& [fa, pa] = terms[a];
        const auto& [fb, pb] = terms[b];
        // transposition of two J-vertices in the same tree of J
        for (std::size_t x = 0; x < vj_only.size(); ++x)
          for (std::size_t y = x + 1; y < vj_only.size(); ++y) {
            const std::string &v = vj_only[x], &w = vj_only[y];
            if (find(v) != find(w)) continue;
            if (rename_vertex(pa, v, w) == pb && !(pa == pb))
              t.expect(fa == -fb, "Cor trans violated on " +
                                      pa.to_string() + " / " +
                                      pb.to_string());
          }
        // a single J-vertex switching parts
        if (!(pa == pb))
          for (const auto& v : vj_only) {
            bool only_v_differs = drop_vertex(pa, v) == drop_vertex(pb, v);
            if (only_v_differs)
              t.expect(fa == fb, "Cor treeswitch violated on " +
                                     pa.to_string() + " / " +
                                     pb.to_string());
          }
      }
  }
}

// --- criterion 4 -----------------------------------------------------------

void criterion4(Tally& t) {
  auto note = [&](const IdentityReport& r) {
    t.expect(r.pass, r.identity + " failed on " + r.instance);
  };
  // corpus instances
  Multigraph tri_s = parse_graph_string(
      "edge s1 sa sb\nedge s2 sb sc\nedge s3 sc sa\n");
  Multigraph tri_t = parse_graph_string(
      "edge t1 ta tb\nedge t2 tb tc\nedge t3 tc ta\n");
  note(check_two_join(tri_s, "s1", tri_t, "t1", "s2", "s3", "t2", "t3"));
  for (const auto& f : fixture_files()) {
    Multigraph g = load_graph_file(f);
    if (!g.connected() || g.edge_count() > 12) continue;
    const auto& vs = g.vertices();
    if (vs.size() >= 3) note(check_transfer(g, vs[0], vs[1], vs[2]));
    const auto ids = g.edge_ids();
    if (ids.size() >= 4) note(check_pluecker(g, ids[0], ids[1], ids[2], ids[3]));
  }
  Multigraph l62 = parse_graph_string(
      "edge e0 a 1\nedge e1 a 2\nedge e2 a 3\nedge e3 b 1\n"
      "edge e4 b 2\nedge e5 b 3\n");
  Multigraph r62 = parse_graph_string(
      "edge f0 c 1\nedge f1 c 2\nedge f2 c 3\nedge f3 d 1\n"
      "edge f4 d 2\nedge f5 d 3\n");
  note(check_three_join(l62, r62, {"1", "2", "3"}));

  // 50 random instances per checker
  std::mt19937_64 rng(515253);
  for (int i = 0; i < 50; ++i) {  // transfer
    Multigraph g = random_connected_graph(rng, 3, 6, 10);
    const auto& vs = g.vertices();
    note(check_transfer(g, vs[0], vs[1], vs[2]));
  }
  for (int i = 0; i < 50; ++i) {  // pluecker
    Multigraph g = random_connected_graph(rng, 3, 6, 8);
    const auto ids = g.edge_ids();
    if (ids.size() < 4) { --i; continue; }
    note(check_pluecker(g, ids[0], ids[1], ids[2], ids[3]));
  }
  int done = 0;
  while (done < 50) {  // two-join of 4-6-edge pieces
    Multigraph g1 = random_connected_graph(rng, 3, 5, 6);
    Multigraph g2_raw = random_connected_graph(rng, 3, 5, 6);
    // the join requires disjoint vertex and edge names
    std::vector<Edge> renamed;
    for (const auto& e : g2_raw.edges())
      renamed.push_back({"h" + e.id, "w" + e.tail, "w" + e.head});
    Multigraph g2(renamed, {});
    if (g1.edge_count() < 4 || g2.edge_count() < 4) continue;
    if (g1.edges()[0].is_self_loop() || g2.edges()[0].is_self_loop())
      continue;
    // a genuine join needs both endpoints of each join edge to keep
    // degree >= 1 after the edge is cut, or a join vertex vanishes
    auto degree = [](const Multigraph& g, const std::string& v) {
      int d = 0;
      for (const auto& e : g.edges()) d += (e.tail == v) + (e.head == v);
      return d;
    };
    const Edge& je1 = g1.edges()[0];
    const Edge& je2 = g2.edges()[0];
    if (degree(g1, je1.tail) < 2 || degree(g1, je1.head) < 2 ||
        degree(g2, je2.tail) < 2 || degree(g2, je2.head) < 2)
      continue;
    std::vector<std::string> r1, r2;
    for (const auto& e : g1.edges())
      if (e.id != g1.edges()[0].id) r1.push_back(e.id);
    for (const auto& e : g2.edges())
      if (e.id != g2.edges()[0].id) r2.push_back(e.id);
    note(check_two_join(g1, g1.edges()[0].id, g2, g2.edges()[0].id, r1[0],
                        r1[1], r2[0], r2[1]));
    ++done;
  }
  done = 0;
  while (done < 50) {  // three-join of <= 7-edge halves
    auto make_side = [&](const std::string& tag) {
      Multigraph g = random_connected_graph(rng, 4, 5, 7);
      const auto vs = g.vertices();
      std::vector<Edge> edges;
      auto fix = [&](const std::string& v) {
        for (int i = 0; i < 3; ++i)
          if (v == vs[static_cast<std::size_t>(i)])
            return std::string("c") + std::to_string(i);
        return tag + v;
      };
      for (const auto& e : g.edges())
        edges.push_back({tag + e.id, fix(e.tail), fix(e.head)});
      return Multigraph(edges, {});
    };
    note(check_three_join(make_side("L"), make_side("R"),
                          {"c0", "c1", "c2"}));
    ++done;
  }
}

// --- criterion 5 -----------------------------------------------------------

void criterion5(Tally& t) {
  // permutation invariance over all 120 orderings, on three fixtures
  const std::vector<std::pair<std::string, std::vector<std::string>>> cases{
      {"/w3.g", {"a", "b", "c", "d", "e"}},
      {"/k4.g", {"e0", "e1", "e2", "e3", "e4"}},
      {"/5_2.g", {"e0", "e1", "e2", "e3", "e4"}}};
  for (const auto& [name, edges] : cases) {
    Multigraph g = load_graph_file(kFixtures + name);
    Poly ref = five_invariant(g, edges);
    std::vector<std::string> perm = edges;
    std::sort(perm.begin(), perm.end());
    do {
      t.expect(five_invariant(g, perm) == ref,
               "permutation variance on " + name);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  // triangle factorization on every triangle-containing 5-tuple
  for (const auto* name : {"/w3.g", "/k4.g"}) {
    Multigraph g = load_graph_file(kFixtures + name);
    const auto ids = g.edge_ids();
    const auto triangles = find_triangles(g);
    std::vector<std::size_t> c{0, 1, 2, 3, 4};
    const std::size_t n = ids.size();
    while (true) {
      std::set<std::size_t> chosen(c.begin(), c.end());
      for (const auto& tri : triangles) {
        if (!chosen.count(tri[0]) || !chosen.count(tri[1]) ||
            !chosen.count(tri[2]))
          continue;
        std::vector<std::string> extras;
        for (std::size_t idx : chosen)
          if (idx != tri[0] && idx != tri[1] && idx != tri[2])
            extras.push_back(ids[idx]);
        // ^5Psi(1,2,3,4,5) = +-Psi^{123,245} Psi^{14,35}_{,2}
        const std::string &e1 = ids[tri[0]], &e2 = ids[tri[1]],
                          &e3 = ids[tri[2]], &e4 = extras[0],
                          &e5 = extras[1];
        Poly five = five_invariant(g, {e1, e2, e3, e4, e5});
        Poly f1 = dodgson(g, DodgsonSpec{{e1, e2, e3}, {e2, e4, e5}, {}});
        Poly f2 = dodgson(g, DodgsonSpec{{e1, e4}, {e3, e5}, {e2}});
        t.expect(equal_up_to_sign(five, normalize_sign(f1 * f2)),
                 std::string("triangle factorization on ") + name);
      }
      int i = 4;
      while (i >= 0 && c[static_cast<std::size_t>(i)] ==
                           n - 5 + static_cast<std::size_t>(i))
        --i;
      if (i < 0) break;
      ++c[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < 5; ++j)
        c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

// --- criterion 6 -----------------------------------------------------------

void criterion6(Tally& t) {
  std::mt19937_64 rng(616263);
  int made = 0;
  while (made < 10) {
    // random blob K on A,B,C,D (plus up to one extra vertex), <= 6 edges
    std::uniform_int_distribution<int> extra(0, 1);
    std::vector<std::string> vs{"A", "B", "C", "D"};
    if (extra(rng)) vs.push_back("F");
    std::uniform_int_distribution<int> ne(static_cast<int>(vs.size()) - 1, 6);
    const int want = ne(rng);
    std::vector<Edge> blob;
    for (std::size_t i = 1; i < vs.size(); ++i) {
      std::uniform_int_distribution<std::size_t> to(0, i - 1);
      blob.push_back({"k" + std::to_string(blob.size()), vs[to(rng)], vs[i]});
    }
    std::uniform_int_distribution<std::size_t> pick(0, vs.size() - 1);
    while (static_cast<int>(blob.size()) < want) {
      std::size_t a = pick(rng), b = pick(rng);
      if (a == b) continue;
      blob.push_back({"k" + std::to_string(blob.size()), vs[a], vs[b]});
    }
    // G: triangle pattern 1..5; G': split pattern 1..7; same blob
    std::vector<Edge> ge = blob, gpe = blob;
    ge.push_back({"1", "B", "u"});
    ge.push_back({"2", "B", "C"});
    ge.push_back({"3", "C", "u"});
    ge.push_back({"4", "A", "u"});
    ge.push_back({"5", "D", "u"});
    gpe.push_back({"1", "B", "u"});
    gpe.push_back({"2", "u", "E"});
    gpe.push_back({"3", "B", "E"});
    gpe.push_back({"4", "A", "u"});
    gpe.push_back({"5", "D", "u"});
    gpe.push_back({"6", "C", "u"});
    gpe.push_back({"7", "C", "E"});
    Multigraph g(ge), gp(gpe);
    if (!g.connected() || !gp.connected()) continue;
    ++made;
    Poly five = five_invariant(g, {"1", "2", "3", "4", "5"});
    ReductionTrace tr =
        denominator_reduce(gp, {"1", "2", "3", "4", "5", "6", "7"});
    if (tr.outcome == ReductionOutcome::WeightDrop) {
      t.expect(five.is_zero(),
               "G' dropped by stage 7 but ^5Psi_G is nonzero");
      continue;
    }
    t.expect(tr.outcome == ReductionOutcome::Reduced && tr.consumed == 7,
             "G' did not reduce through edges 1..7");
    if (tr.outcome == ReductionOutcome::Reduced)
      t.expect(equal_up_to_sign(five, tr.final_poly),
               "^5Psi_G != ^7Psi_G' at pair " + std::to_string(made));
  }
}

// --- criteria 7 and 8 --------------------------------------------------------

void criterion7(Tally& t) {
  auto entries = rho_table_check(kFixtures);
  t.expect(entries.size() == 14, "catalog size");
  for (const auto& e : entries)
    t.expect(e.pass, "rho mismatch for " + e.name + ": computed " +
                         e.computed.to_string() + ", table " +
                         e.expected.to_string());
}

void criterion8(Tally& t) {
  auto expect_outcome = [&](const std::string& file, ReductionOutcome want) {
    Multigraph g = load_graph_file(kFixtures + file);
    ReductionTrace tr = auto_order_search(g);
    t.expect(tr.outcome == want, file + ": unexpected outcome");
  };
  expect_outcome("/k34.g", ReductionOutcome::WeightDrop);
  expect_outcome("/cor-G.g", ReductionOutcome::WeightDrop);
  expect_outcome("/twojoin.g", ReductionOutcome::WeightDrop);
  expect_outcome("/double-edge.g", ReductionOutcome::WeightDrop);
  expect_outcome("/w3.g", ReductionOutcome::Reduced);
  expect_outcome("/k4.g", ReductionOutcome::Reduced);
  // Reduced outcomes must really be drop-free: a zero final would have
  // been classified WeightDrop, so a nonzero final suffices.
  for (const auto* f : {"/w3.g", "/k4.g"}) {
    Multigraph g = load_graph_file(kFixtures + f);
    ReductionTrace tr = auto_order_search(g);
    t.expect(!tr.final_poly.is_zero(), std::string(f) + ": zero final");
  }
}

// --- criterion 9 -----------------------------------------------------------

void criterion9(Tally& t) {
  // all successful orders agree (sign-normalized) at equal consumed sets
  auto sweep = [&](const std::string& file, int tail_perms) {
    Multigraph g = load_graph_file(kFixtures + file);
    const auto ids = g.edge_ids();
    const std::size_t n = ids.size();
    std::map<std::set<std::string>, Poly> seen;
    auto record = [&](const std::set<std::string>& consumed, const Poly& p) {
      auto [it, fresh] = seen.emplace(consumed, p);
      if (!fresh)
        t.expect(it->second == p,
                 file + ": order-dependent denominator at a shared set");
    };
    // every 5-subset as a seed...
    std::vector<std::size_t> c{0, 1, 2, 3, 4};
    while (true) {
      std::vector<std::string> order;
      for (std::size_t idx : c) order.push_back(ids[idx]);
      std::vector<std::string> rest;
      for (std::size_t i = 0; i < n; ++i)
        if (std::find(c.begin(), c.end(), i) == c.end())
          rest.push_back(ids[i]);
      // ...continued by up to `tail_perms` orderings of the remaining edges
      std::sort(rest.begin(), rest.end());
      int used = 0;
      do {
        std::vector<std::string> full = order;
        full.insert(full.end(), rest.begin(), rest.end());
        ReductionTrace tr = denominator_reduce(g, full);
        if (tr.outcome == ReductionOutcome::Stuck) continue;
        std::set<std::string> consumed(order.begin(), order.end());
        record(consumed, tr.d5);
        for (const auto& step : tr.steps) {
          consumed.insert(step.edge);
          record(consumed, step.result);
        }
        ++used;
      } while (std::next_permutation(rest.begin(), rest.end()) &&
               used < tail_perms);
      int i = 4;
      while (i >= 0 && c[static_cast<std::size_t>(i)] ==
                           n - 5 + static_cast<std::size_t>(i))
        --i;
      if (i < 0) break;
      ++c[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < 5; ++j)
        c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
  };
  sweep("/w3.g", 2);    // 6 seeds, one tail edge
  sweep("/k4.g", 2);    // 6 seeds
  sweep("/8_a.g", 6);   // 56 seeds x up to 6 tail orderings
}

// --- criterion 10 ----------------------------------------------------------

void criterion10(Tally& t) {
  // K34: substitution equals the engine's stage-e_L denominator
  Multigraph k34 = load_graph_file(kFixtures + "/k34.g");
  CutDecomposition cut;
  cut.cut_vertices = {"1", "2", "3"};
  for (const auto& e : k34.edges())
    ((e.tail == "a" || e.tail == "b" || e.head == "a" || e.head == "b")
         ? cut.side_l
         : cut.side_r)
        .push_back(e.id);
  Poly substituted = three_join_reduce(k34, cut);
  ReductionTrace tr =
      restricted_order_search(k34, cut.side_l, cut.side_l.size());
  t.expect(tr.outcome == ReductionOutcome::Reduced,
           "K34 L-side reduction did not complete");
  if (tr.outcome == ReductionOutcome::Reduced)
    t.expect(equal_up_to_sign(substituted, tr.final_poly),
             "K34: substitution != engine denominator");

  // composites: pairwise-equal reduced denominators over the shared side
  auto side_cut = [&](const Multigraph& g, char l_prefix) {
    CutDecomposition d;
    d.cut_vertices = {"1", "2", "3"};
    for (const auto& e : g.edges())
      (e.id[0] == l_prefix ? d.side_l : d.side_r).push_back(e.id);
    return d;
  };
  Multigraph aa = load_graph_file(kFixtures + "/composite-8a-8a.g");
  Multigraph ab = load_graph_file(kFixtures + "/composite-8a-8b.g");
  Multigraph bb = load_graph_file(kFixtures + "/composite-8b-8b.g");
  // shared R = the 8_b copy on q-edges: L in {8_a, 8_b}
  Poly d_ab = three_join_reduce(ab, side_cut(ab, 'p'));
  Poly d_bb = three_join_reduce(bb, side_cut(bb, 'p'));
  t.expect(equal_up_to_sign(d_ab, d_bb),
           "8a|8b and 8b|8b disagree over the shared 8_b side");
  // shared R = the 8_a copy on p-edges: L in {8_a, 8_b} on q-edges
  Poly d_aa = three_join_reduce(aa, side_cut(aa, 'q'));
  Poly d_ab2 = three_join_reduce(ab, side_cut(ab, 'q'));
  t.expect(equal_up_to_sign(d_aa, d_ab2),
           "8a|8a and 8a|8b disagree over the shared 8_a side");
}

// --- criterion 11 ----------------------------------------------------------

void criterion11(Tally& t) {
  // soundness: every drop verdict must be confirmed by some engine trace
  // that exhibits the drop.  A Reduced trace through one order is not a
  // no-drop certificate (the verdict is "no drop detected"), so when the
  // auto search happens to complete first, scan 5-edge seeds for a
  // vanishing 5-invariant, which the engine classifies as a drop at D_5.
  auto drop_exhibited = [](const Multigraph& g) {
    ReductionTrace tr = auto_order_search(g);
    if (tr.outcome == ReductionOutcome::WeightDrop) return true;
    if (tr.outcome == ReductionOutcome::Stuck) return false;
    const auto ids = g.edge_ids();
    const std::size_t n = ids.size();
    std::vector<std::size_t> c{0, 1, 2, 3, 4};
    while (true) {
      std::vector<std::string> five;
      for (std::size_t idx : c) five.push_back(ids[idx]);
      if (five_invariant(g, five).is_zero()) {
        std::vector<std::string> order = five;
        for (std::size_t i = 0; i < n; ++i)
          if (std::find(c.begin(), c.end(), i) == c.end())
            order.push_back(ids[i]);
        return denominator_reduce(g, order).outcome ==
               ReductionOutcome::WeightDrop;
      }
      int i = 4;
      while (i >= 0 && c[static_cast<std::size_t>(i)] ==
                           n - 5 + static_cast<std::size_t>(i))
        --i;
      if (i < 0) return false;
      ++c[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < 5; ++j)
        c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
  };
  for (const auto& f : fixture_files()) {
    Multigraph g = load_graph_file(kFixtures + f.substr(f.rfind('/')));
    if (!g.connected() || g.edge_count() < 5) continue;
    Prediction p = predict(g);
    if (p.verdict != PredictionVerdict::Drop) continue;
    t.expect(drop_exhibited(g),
             f + ": predicted drop but no engine trace exhibits one");
  }
  // the weight-drop family member: double-triangle + 2VR chain
  Multigraph member = load_graph_file(kFixtures + "/wtdrop.g");
  std::optional<DoubleTriangleSite> full;
  for (const auto& site : find_double_triangles(member))
    if (site.kind == DoubleTriangleKind::Full) {
      full = site;
      break;
    }
  t.expect(full.has_value(), "no Full double-triangle site on wtdrop.g");
  if (full) {
    Multigraph contracted = contract_double_triangle(member, *full);
    t.expect(!find_two_vertex_cuts(contracted).empty(),
             "contracted family member is not 2-vertex reducible");
  }
  Prediction p = predict(member);
  t.expect(p.verdict == PredictionVerdict::Drop,
           "family member not predicted as a drop");
  ReductionTrace tr = auto_order_search(member);
  t.expect(tr.outcome == ReductionOutcome::WeightDrop,
           "family member engine run did not drop");
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run(1, "dual construction psi = det M_G", criterion1);
  ok &= run(2, "Dodgson three-way agreement", criterion2);
  ok &= run(3, "sign corollaries + worked examples", criterion3);
  ok &= run(4, "identity suite", criterion4);
  ok &= run(5, "5-invariant properties", criterion5);
  ok &= run(6, "double-triangle theorem", criterion6);
  ok &= run(7, "rho-table regression", criterion7);
  ok &= run(8, "weight-drop verdicts", criterion8);
  ok &= run(9, "order independence", criterion9);
  ok &= run(10, "3-join substitution", criterion10);
  ok &= run(11, "predictor soundness + family chain", criterion11);
  std::cout << (ok ? "ACCEPTANCE: all criteria pass"
                   : "ACCEPTANCE: FAILURES PRESENT")
            << std::endl;
  return ok ? 0 : 1;
}
