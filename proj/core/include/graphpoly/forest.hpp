#pragma once
// Spanning trees, spanning-forest polynomials and tree signs.

#include <string>
#include <utility>
#include <vector>

#include "graphpoly/graph.hpp"
#include "graphpoly/poly.hpp"

namespace graphpoly {

// A set partition of a subset of the vertices of some graph.  Parts are
// pairwise disjoint, nonempty, and ordered by their minimal vertex id; the
// vertices inside each part are sorted.
class SetPartition {
 public:
  SetPartition() = default;
  explicit SetPartition(std::vector<std::vector<std::string>> parts);

  // Parses the text syntax "{1,3}{2}{4,5}".
  static SetPartition parse(const std::string& text);

  const std::vector<std::vector<std::string>>& parts() const {
    return parts_;
  }
  std::size_t part_count() const { return parts_.size(); }

  // Index of the part containing v, or -1 when v is not covered.
  int part_of(const std::string& v) const;
  bool covers(const std::string& v) const { return part_of(v) >= 0; }

  // All covered vertices, sorted.
  std::vector<std::string> support() const;

  // The partition P/e obtained by identifying vertex `from` with vertex
  // `to` (the surviving vertex), merging their parts when both occur.
  SetPartition identify(const std::string& from, const std::string& to) const;

  // The partition with one extra part appended (re-canonicalized).
  SetPartition with_part(std::vector<std::string> part) const;

  // The partition with part `index` removed.
  SetPartition without_part(std::size_t index) const;

  std::string to_string() const;

  bool operator==(const SetPartition& other) const {
    return parts_ == other.parts_;
  }

 private:
  std::vector<std::vector<std::string>> parts_;
};

// A rooted tree with oriented edges, a numbering of the edges (their order
// in `edges`) and a numbering of the non-root vertices (their order in
// `vertex_order`).  Both numberings run 1..n where n = |edges|.
struct RootedNumberedTree {
  std::string root;
  // Oriented edges (tail, head); edge i in the numbering is edges[i-1].
  std::vector<std::pair<std::string, std::string>> edges;
  // Non-root vertices; vertex numbered i is vertex_order[i-1].
  std::vector<std::string> vertex_order;
};

// The sign of a rooted, oriented, numbered tree: sgn(phi) * prod s(e),
// where phi maps each edge to its endpoint farther from the root and s(e)
// is +1 when that endpoint is the head of e.  Throws std::invalid_argument
// on malformed input.
int tree_sign(const RootedNumberedTree& t);

// All spanning trees of a connected multigraph, as sorted lists of edge
// ids, in deterministic order.  Throws std::invalid_argument when g is
// disconnected.
std::vector<std::vector<std::string>> spanning_trees(const Multigraph& g);

// The graph polynomial: sum over spanning trees T of prod_{e not in T} a_e.
Poly psi(const Multigraph& g);

// The spanning-forest polynomial Phi^P_G: sum over spanning forests with
// exactly one tree per part of p, each tree containing that part's vertices
// and no vertex of any other part.  Throws std::invalid_argument when p
// mentions unknown vertices.
Poly phi(const Multigraph& g, const SetPartition& p);

struct RelationCheck {
  bool pass = false;
  // Nonzero difference witness when a clause fails.
  Poly witness;
  std::string detail;
};

// Verifies the contraction/deletion relation for Phi^P_G at edge `edge_id`,
// and, in the contraction case, the part-splitting expansion of
// Phi^{P/e}_{G/e} as a sum over ordered splits p1 | p2.
RelationCheck phi_contraction_deletion(const Multigraph& g,
                                       const SetPartition& p,
                                       const std::string& edge_id);

}  // namespace graphpoly
