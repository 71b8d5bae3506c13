#pragma once
// Verifiers for the algebraic identities tying graph, Dodgson and
// spanning-forest polynomials together.  Each checker returns pass or a
// counterexample witness.

#include <map>
#include <string>
#include <vector>

#include "graphpoly/dodgson.hpp"
#include "graphpoly/forest.hpp"
#include "graphpoly/graph.hpp"
#include "graphpoly/poly.hpp"

namespace graphpoly {

struct IdentityReport {
  std::string identity;
  std::string instance;
  bool pass = false;
  Poly witness;  // nonzero difference when failing
};

// A two-vertex join of g1 and g2: identify edge e1 of g1 with edge e2 of
// g2, then cut the identified edge.  `flip` selects the second of the two
// possible gluings.  g2's vertices and edges are renamed when they would
// collide with g1's.
struct TwoVertexJoin {
  Multigraph graph;
  std::string v1, v2;  // join vertices (names in `graph`)
  // original g2 edge id -> id in `graph`
  std::map<std::string, std::string> g2_edges;
};
TwoVertexJoin two_vertex_join(const Multigraph& g1, const std::string& e1,
                              const Multigraph& g2, const std::string& e2,
                              bool flip);

// Verifies, for both gluings: the Psi decomposition over the join
// vertices, Psi^{ij,kl} = 0, and Psi^{ik,jl} = +-Psi^{il,jk};
// i, j are edge ids of g1 and k, l edge ids of g2.
IdentityReport check_two_join(const Multigraph& g1, const std::string& e1,
                              const Multigraph& g2, const std::string& e2,
                              const std::string& i, const std::string& j,
                              const std::string& k, const std::string& l);

// Phi^{uvw} * Phi^{u|v|w} = sum over pairs of the three two-part splits.
IdentityReport check_transfer(const Multigraph& g, const std::string& u,
                              const std::string& v, const std::string& w);

// The disjoint union of l and r along exactly the shared cut vertices.
// Vertex ids in the cut must match; all other vertex ids and all edge ids
// must be disjoint between l and r.
Multigraph three_vertex_join(const Multigraph& l, const Multigraph& r,
                             const std::vector<std::string>& cut);

// Verifies both the unscaled spanning-forest decomposition of Psi_G over a
// 3-vertex cut and the scaled 12-term identity
// f^{2n+1} g Psi_G = (...)|_{beta -> f beta},  n = deg g.
IdentityReport check_three_join(const Multigraph& l, const Multigraph& r,
                                const std::vector<std::string>& cut);

// Psi^{ij,kl} - Psi^{ik,jl} + Psi^{il,jk} = 0 under the sign-resolution
// search over the normalized Dodgson values.
IdentityReport check_pluecker(const Multigraph& g, const std::string& i,
                              const std::string& j, const std::string& k,
                              const std::string& l);

}  // namespace graphpoly
