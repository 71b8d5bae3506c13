#include <doctest.h>

#include "graphpoly/forest.hpp"
#include "graphpoly/graph.hpp"

using namespace graphpoly;

namespace {
const std::string kFixtures = GRAPHPOLY_FIXTURES;
}

TEST_CASE("set partition parsing and canonical form") {
  SetPartition p = SetPartition::parse("{2,4}{1}");
  CHECK(p.to_string() == "{1}{2,4}");  // parts ordered by minimal vertex
  CHECK(p.part_count() == 2);
  CHECK(p.part_of("4") == 1);
  CHECK(p.covers("1"));
  CHECK(!p.covers("3"));
  CHECK_THROWS_AS(SetPartition::parse("{1}{1,2}"), std::invalid_argument);

  SetPartition merged = p.identify("4", "1");
  CHECK(merged.to_string() == "{1,2}");
  SetPartition renamed = p.identify("4", "9");
  CHECK(renamed.to_string() == "{1}{2,9}");
}

TEST_CASE("spanning trees of W3") {
  Multigraph w3 = load_graph_file(kFixtures + "/w3.g");
  auto trees = spanning_trees(w3);
  CHECK(trees.size() == 16);
  for (const auto& t : trees) CHECK(t.size() == 3);
}

TEST_CASE("psi of W3 is the 16-term cubic") {
  Multigraph w3 = load_graph_file(kFixtures + "/w3.g");
  Poly p = psi(w3);
  CHECK(p.term_count() == 16);
  CHECK(p.degree() == 3);
  CHECK(p.is_multilinear());
}

TEST_CASE("phi reproduces the worked W3 example") {
  Multigraph w3 = load_graph_file(kFixtures + "/w3.g");
  Poly lhs = phi(w3, SetPartition::parse("{1}{2,4}"));
  auto v = [](const std::string& s) { return Poly::variable(s); };
  Poly rhs = v("a") * v("f") *
             (v("b") * v("e") + v("c") * v("d") + v("c") * v("e") +
              v("d") * v("e"));
  CHECK(lhs == rhs);
}

TEST_CASE("phi with a single part is psi") {
  Multigraph k4 = load_graph_file(kFixtures + "/k4.g");
  CHECK(phi(k4, SetPartition({{"1"}})) == psi(k4));
}

TEST_CASE("phi vanishes when marked vertices cannot be separated") {
  // path 1-2-3: a forest with {1,3} together but 2 apart cannot exist
  Multigraph path = parse_graph_string("edge a 1 2\nedge b 2 3\n");
  CHECK(phi(path, SetPartition::parse("{1,3}{2}")).is_zero());
}

TEST_CASE("tree_sign on the paper's worked matrix examples") {
  // First example, both partitions: determinants -1 and +1.
  RootedNumberedTree ex1_p1{
      "r", {{"1", "2"}, {"2", "3"}, {"2", "r"}}, {"1", "2", "3"}};
  RootedNumberedTree ex1_p2{
      "r", {{"1", "2"}, {"3", "2"}, {"3", "r"}}, {"1", "2", "3"}};
  CHECK(tree_sign(ex1_p1) == -1);
  CHECK(tree_sign(ex1_p2) == +1);
  // Second example, both partitions: determinants -1 and -1.
  RootedNumberedTree ex2_p1{"r",
                            {{"1", "r"}, {"r", "2"}, {"2", "3"}, {"2", "4"}},
                            {"1", "2", "3", "4"}};
  RootedNumberedTree ex2_p2{"r",
                            {{"1", "r"}, {"r", "2"}, {"1", "3"}, {"1", "4"}},
                            {"1", "2", "3", "4"}};
  CHECK(tree_sign(ex2_p1) == -1);
  CHECK(tree_sign(ex2_p2) == -1);
}

TEST_CASE("tree_sign matches the incidence determinant") {
  // eps(T) equals det of the incidence matrix with rows = edges in
  // numbering order, columns = non-root vertices in numbering order, and
  // entries +1 at the head, -1 at the tail.  reduced_incidence uses the
  // opposite orientation, so negate every row before taking the det.
  auto check_matches = [](const RootedNumberedTree& t) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < t.edges.size(); ++i)
      edges.push_back(Edge{"t" + std::to_string(i), t.edges[i].first,
                           t.edges[i].second});
    std::vector<std::string> order = t.vertex_order;
    order.push_back(t.root);  // root last so the removed column is the root
    Multigraph g(edges, order);
    auto m = reduced_incidence(g, t.root, {});
    for (auto& row : m)
      for (auto& x : row) x = -x;
    CHECK(int_matrix_det(m) == tree_sign(t));
  };
  check_matches({"r", {{"1", "2"}, {"2", "3"}, {"2", "r"}}, {"1", "2", "3"}});
  check_matches({"r", {{"1", "2"}, {"3", "2"}, {"3", "r"}}, {"1", "2", "3"}});
  check_matches(
      {"r", {{"1", "r"}, {"r", "2"}, {"2", "3"}, {"2", "4"}},
       {"1", "2", "3", "4"}});
  check_matches(
      {"r", {{"1", "r"}, {"r", "2"}, {"1", "3"}, {"1", "4"}},
       {"1", "2", "3", "4"}});
}

TEST_CASE("phi contraction-deletion relation") {
  Multigraph w3 = load_graph_file(kFixtures + "/w3.g");
  for (const auto& part :
       {"{1}{2,4}", "{1,3}{2}", "{1}{2}{3}", "{1,2}{3,4}"}) {
    SetPartition p = SetPartition::parse(part);
    for (const auto& e : w3.edge_ids()) {
      RelationCheck rc = phi_contraction_deletion(w3, p, e);
      INFO(part, " at edge ", e, ": ", rc.detail);
      CHECK(rc.pass);
    }
  }
}
