#include <doctest.h>

#include "graphpoly/identities.hpp"

using namespace graphpoly;

namespace {
const std::string kFixtures = GRAPHPOLY_FIXTURES;

Multigraph triangle(const std::string& p) {
  return parse_graph_string("edge " + p + "1 " + p + "a " + p + "b\n" +
                            "edge " + p + "2 " + p + "b " + p + "c\n" +
                            "edge " + p + "3 " + p + "c " + p + "a\n");
}
}  // namespace

TEST_CASE("two-vertex join of two triangles") {
  Multigraph g1 = triangle("s");
  Multigraph g2 = triangle("t");
  IdentityReport r =
      check_two_join(g1, "s1", g2, "t1", "s2", "s3", "t2", "t3");
  INFO(r.instance, " witness: ", r.witness.to_string());
  CHECK(r.pass);
}

TEST_CASE("two-vertex join of K4 pieces") {
  Multigraph k4a = load_graph_file(kFixtures + "/k4.g");
  Multigraph k4b = parse_graph_string(
      "edge f0 5 6\nedge f1 5 7\nedge f2 5 8\nedge f3 6 7\n"
      "edge f4 6 8\nedge f5 7 8\n");
  IdentityReport r =
      check_two_join(k4a, "e0", k4b, "f0", "e1", "e5", "f1", "f5");
  INFO(r.instance, " witness: ", r.witness.to_string());
  CHECK(r.pass);
}

TEST_CASE("transfer identity on K4 and W3") {
  for (const auto* name : {"/k4.g", "/w3.g"}) {
    Multigraph g = load_graph_file(kFixtures + name);
    const auto& vs = g.vertices();
    IdentityReport r = check_transfer(g, vs[0], vs[1], vs[2]);
    INFO(name, ": ", r.instance);
    CHECK(r.pass);
  }
}

TEST_CASE("transfer identity on a tree") {
  Multigraph tree = parse_graph_string(
      "edge a 1 2\nedge b 2 3\nedge c 2 4\n");
  IdentityReport r = check_transfer(tree, "1", "3", "4");
  CHECK(r.pass);
}

TEST_CASE("transfer rejects repeated vertices") {
  Multigraph k4 = load_graph_file(kFixtures + "/k4.g");
  CHECK_THROWS_AS(check_transfer(k4, "1", "1", "2"), std::invalid_argument);
}

TEST_CASE("three-vertex join: triangle halves") {
  Multigraph l = parse_graph_string(
      "edge l1 c0 c1\nedge l2 c1 c2\nedge l3 c2 c0\n");
  Multigraph r = parse_graph_string(
      "edge r1 c0 c1\nedge r2 c1 c2\nedge r3 c2 c0\n");
  IdentityReport rep = check_three_join(l, r, {"c0", "c1", "c2"});
  INFO(rep.instance, " witness: ", rep.witness.to_string());
  CHECK(rep.pass);
}

TEST_CASE("three-vertex join: K_{3,4} as 6_2 u 6_2") {
  Multigraph l = parse_graph_string(
      "edge e0 a 1\nedge e1 a 2\nedge e2 a 3\nedge e3 b 1\n"
      "edge e4 b 2\nedge e5 b 3\n");
  Multigraph r = parse_graph_string(
      "edge f0 c 1\nedge f1 c 2\nedge f2 c 3\nedge f3 d 1\n"
      "edge f4 d 2\nedge f5 d 3\n");
  IdentityReport rep = check_three_join(l, r, {"1", "2", "3"});
  INFO(rep.instance, " witness: ", rep.witness.to_string());
  CHECK(rep.pass);
}

TEST_CASE("three-vertex join validates the cut") {
  Multigraph l = triangle("s");
  Multigraph r = triangle("t");
  CHECK_THROWS_AS(three_vertex_join(l, r, {"sa", "sb", "sc"}),
                  std::invalid_argument);
}

TEST_CASE("Pluecker identity") {
  Multigraph w3 = load_graph_file(kFixtures + "/w3.g");
  IdentityReport r1 = check_pluecker(w3, "a", "b", "c", "d");
  CHECK(r1.pass);
  Multigraph k4 = load_graph_file(kFixtures + "/k4.g");
  // all 4-edge tuples of K4
  auto ids = k4.edge_ids();
  for (std::size_t a = 0; a < ids.size(); ++a)
    for (std::size_t b = a + 1; b < ids.size(); ++b)
      for (std::size_t c = b + 1; c < ids.size(); ++c)
        for (std::size_t d = c + 1; d < ids.size(); ++d) {
          IdentityReport r =
              check_pluecker(k4, ids[a], ids[b], ids[c], ids[d]);
          INFO(r.instance);
          CHECK(r.pass);
        }
  CHECK_THROWS_AS(check_pluecker(k4, "e0", "e0", "e1", "e2"),
                  std::invalid_argument);
}
