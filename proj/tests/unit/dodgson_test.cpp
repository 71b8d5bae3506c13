#include <doctest.h>

#include "graphpoly/dodgson.hpp"
#include "graphpoly/forest.hpp"
#include "graphpoly/graph.hpp"

using namespace graphpoly;

namespace {
const std::string kFixtures = GRAPHPOLY_FIXTURES;

Poly alpha(const Multigraph& g, const std::set<std::string>& ids) {
  Poly p = Poly::constant(1);
  for (const auto& id : ids) p = p * Poly::variable(g.edge(id).id);
  return p;
}
}  // namespace

TEST_CASE("dodgson spec parsing") {
  DodgsonSpec s = DodgsonSpec::parse("a,b", "c", "");
  CHECK(s.I == std::set<std::string>{"a", "b"});
  CHECK(s.J == std::set<std::string>{"c"});
  CHECK(s.K.empty());
}

TEST_CASE("psi equals the empty Dodgson determinant") {
  for (const auto* name : {"/w3.g", "/k4.g", "/5_2.g"}) {
    Multigraph g = load_graph_file(kFixtures + name);
    CHECK(dodgson(g, DodgsonSpec{}) == normalize_sign(psi(g)));
  }
}

TEST_CASE("single-edge pair with a common vertex (worked example)") {
  // I = {i}, J = {j} with common vertex v, other endpoints u and w:
  // Psi^{i,j}_G = +-Phi^{{v},{u,w}}_{G\{i,j}}
  Multigraph k4 = load_graph_file(kFixtures + "/k4.g");
  // e0 = (1,2), e1 = (1,3): common vertex 1, others 2 and 3
  Poly d = dodgson(k4, DodgsonSpec{{"e0"}, {"e1"}, {}});
  Multigraph minor = delete_edge(delete_edge(k4, "e0"), "e1");
  Poly f = phi(minor, SetPartition::parse("{1}{2,3}"));
  CHECK(equal_up_to_sign(d, f));
}

TEST_CASE("three-way agreement on fixed instances") {
  Multigraph w3 = load_graph_file(kFixtures + "/w3.g");
  for (const auto& [i, j] :
       std::vector<std::pair<std::string, std::string>>{
           {"a", "b"}, {"a", "d"}, {"c", "f"}}) {
    DodgsonSpec spec{{i}, {j}, {}};
    Poly via_det = dodgson(w3, spec);
    Poly via_pairs = dodgson_via_tree_pairs(w3, spec);
    CHECK(via_det == via_pairs);
    // forest route carries the alpha_{I u J} factor
    ForestExpansion fe = forest_expansion(w3, spec.I, spec.J);
    Poly via_forest = forest_expansion_sum(w3, fe);
    CHECK(equal_up_to_sign(via_forest,
                           alpha(w3, {i, j}) * via_det));
  }
}

TEST_CASE("two-edge Dodgson agreement on K4") {
  Multigraph k4 = load_graph_file(kFixtures + "/k4.g");
  DodgsonSpec spec{{"e0", "e1"}, {"e4", "e5"}, {}};
  Poly via_det = dodgson(k4, spec);
  Poly via_pairs = dodgson_via_tree_pairs(k4, spec);
  CHECK(via_det == via_pairs);
  ForestExpansion fe = forest_expansion(k4, spec.I, spec.J);
  Poly via_forest = forest_expansion_sum(k4, fe);
  CHECK(equal_up_to_sign(via_forest,
                         alpha(k4, {"e0", "e1", "e4", "e5"}) * via_det));
}

TEST_CASE("K variables zero the diagonal") {
  Multigraph w3 = load_graph_file(kFixtures + "/w3.g");
  DodgsonSpec spec{{"a"}, {"b"}, {"c"}};
  Poly with_k = dodgson(w3, spec);
  std::set<Var> kill{w3.edge_var("c")};
  Poly by_subst =
      normalize_sign(dodgson_raw(w3, DodgsonSpec{{"a"}, {"b"}, {}})
                         .substitute_zero(kill));
  CHECK(with_k == by_subst);
}

TEST_CASE("deletion lemma: shared edge in I and J") {
  // Psi^{I+e,J+e}_G = Psi^{I,J}_{G\e}
  Multigraph k4 = load_graph_file(kFixtures + "/k4.g");
  Poly lhs = dodgson(k4, DodgsonSpec{{"e0", "e2"}, {"e1", "e2"}, {}});
  Poly rhs = dodgson(delete_edge(k4, "e2"), DodgsonSpec{{"e0"}, {"e1"}, {}});
  CHECK(equal_up_to_sign(lhs, rhs));
}

TEST_CASE("reduce_to_disjoint") {
  Multigraph k4 = load_graph_file(kFixtures + "/k4.g");
  DodgsonSpec spec{{"e0", "e2"}, {"e1", "e2"}, {"e3"}};
  DisjointReduction red = reduce_to_disjoint(k4, spec);
  REQUIRE(!red.zero);
  CHECK(red.spec.K.empty());
  std::set<std::string> inter;
  CHECK(red.spec.I.count("e2") == 0);
  CHECK(red.spec.J.count("e2") == 0);
  CHECK(equal_up_to_sign(dodgson(k4, spec),
                         dodgson(red.graph, red.spec)));
}

TEST_CASE("contraction-deletion reassembles the Dodgson polynomial") {
  Multigraph w3 = load_graph_file(kFixtures + "/w3.g");
  DodgsonSpec spec{{"a"}, {"b"}, {}};
  for (const auto* e : {"c", "d", "e", "f"}) {
    auto [del, con] = contraction_deletion(w3, spec, e);
    Poly reassembled = del * Poly::variable(w3.edge(e).id) + con;
    CHECK(equal_up_to_sign(reassembled, dodgson(w3, spec)));
  }
}

TEST_CASE("forest expansion partition count") {
  Multigraph k4 = load_graph_file(kFixtures + "/k4.g");
  ForestExpansion fe = forest_expansion(k4, {"e0"}, {"e5"});
  for (const auto& [coeff, part] : fe.terms) {
    CHECK((coeff == 1 || coeff == -1));
    CHECK(part.part_count() == 2);  // |I| + 1 parts
  }
}
