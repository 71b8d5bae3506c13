#pragma once
// Dodgson polynomials by three independent routes: the determinant of the
// expanded Laplacian, spanning-tree pairs, and the signed spanning-forest
// expansion.

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "graphpoly/forest.hpp"
#include "graphpoly/graph.hpp"
#include "graphpoly/poly.hpp"

namespace graphpoly {

struct DodgsonSpec {
  std::set<std::string> I, J, K;

  // Parses comma-separated edge-id lists (the CLI's --I/--J/--K values).
  static DodgsonSpec parse(const std::string& i_list,
                           const std::string& j_list,
                           const std::string& k_list);
  std::string to_string() const;
};

// The expanded Laplacian M_G as a polynomial matrix: block
// [[diag(a_e), B], [-B^T, 0]] with B the reduced incidence matrix (last
// vertex column removed); diagonal entries for e in K are zero.
std::vector<std::vector<Poly>> expanded_laplacian(const Multigraph& g,
                                                  const std::set<std::string>& K);

// det M_G(I,J)_K with rows I and columns J removed, before sign
// normalization.  Throws std::invalid_argument on |I| != |J| or unknown
// edge ids.
Poly dodgson_raw(const Multigraph& g, const DodgsonSpec& spec);

// Sign-normalized Dodgson polynomial Psi^{I,J}_{G,K}.
Poly dodgson(const Multigraph& g, const DodgsonSpec& spec);

// Spanning-tree-pair route, before sign normalization:
// sum over U with U+I and U+J spanning trees of
// prod_{u not in U+I+J} a_u * det E_G(U+I) * det E_G(U+J).
// Requires I and J disjoint; K is applied by substituting a_e = 0.
Poly dodgson_tree_pairs_raw(const Multigraph& g, const DodgsonSpec& spec);

// Sign-normalized tree-pair route; requires I disjoint from J and K empty.
Poly dodgson_via_tree_pairs(const Multigraph& g, const DodgsonSpec& spec);

struct DisjointReduction {
  // true when contracting K\(I^J) hits a self-loop: the Dodgson polynomial
  // is identically zero and `graph`/`spec` are not meaningful.
  bool zero = false;
  Multigraph graph;
  DodgsonSpec spec;
};

// Passes to the minor g\(I^J)/(K\(I^J)) so that the new spec has disjoint
// I, J and empty K; dodgson agrees on both sides up to sign.
DisjointReduction reduce_to_disjoint(const Multigraph& g,
                                     const DodgsonSpec& spec);

// For e outside I, J, K: returns (deletion, contraction) with
// dodgson(g, spec) = deletion * a_e + contraction, where deletion and
// contraction equal Psi^{I,J}_{G\e,K} and Psi^{I,J}_{G/e,K} up to sign.
std::pair<Poly, Poly> contraction_deletion(const Multigraph& g,
                                           const DodgsonSpec& spec,
                                           const std::string& e);

// Signed spanning-forest expansion Psi^{I,J}_G = sum f_k Phi^{P_k}.
struct ForestExpansion {
  // (f_k, P_k) with f_k in {-1, +1}; omitted partitions have f_k = 0.
  std::vector<std::pair<int, SetPartition>> terms;
};

// Enumerates set partitions of V(I+J); a partition's coefficient is
// eps(I_P) * eps(J_P) when both quotients are trees with one vertex per
// part, else zero.  Requires I disjoint from J, |I| = |J|.
ForestExpansion forest_expansion(const Multigraph& g,
                                 const std::set<std::string>& I,
                                 const std::set<std::string>& J);

// The signed sum of the expansion, sum f_k * phi(g, P_k).  This equals
// the Dodgson polynomial scaled by the product of the deleted variables:
// sum f_k * Phi^{P_k}_G = +/- alpha_{I+J} * Psi^{I,J}_G.
Poly forest_expansion_sum(const Multigraph& g, const ForestExpansion& fe);

}  // namespace graphpoly
