#pragma once
// Multigraph representation, minors, connectivity, cut detection and the
// double-triangle patterns.

#include "graphpoly/poly.hpp"

#include <array>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace graphpoly {

struct Edge {
  std::string id;
  std::string tail;  // orientation: tail = first-listed endpoint
  std::string head;
  bool is_self_loop() const { return tail == head; }
};

class Multigraph {
 public:
  Multigraph() = default;
  // Vertices default to first-appearance order over the edge list; an
  // explicit vertex list fixes the vertex order (and may add isolated
  // vertices).
  explicit Multigraph(std::vector<Edge> edges,
                      std::vector<std::string> vertices = {});

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t vertex_count() const { return vertices_.size(); }

  bool has_edge(const std::string& id) const;
  const Edge& edge(const std::string& id) const;     // throws on unknown id
  std::size_t edge_index(const std::string& id) const;
  bool has_vertex(const std::string& v) const;
  std::size_t vertex_index(const std::string& v) const;

  // Schwinger parameter variable of an edge (interned edge id).
  Var edge_var(const std::string& id) const;
  std::vector<std::string> edge_ids() const;

  int h1() const;  // e - v + c (first Betti number; c = #components)
  bool connected() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
};

// --- I/O --------------------------------------------------------------
// Text format, one item per line:   edge <id> <tail> <head>
// optional:                         vertex <id>      (fixes order/isolated)
// Comment lines start with '#'.  Round-trips with graph_to_text.
Multigraph parse_graph(std::istream& in);
Multigraph parse_graph_string(const std::string& text);
Multigraph load_graph_file(const std::string& path);
std::string graph_to_text(const Multigraph& g);
std::string graph_hash(const Multigraph& g);  // FNV-1a of canonical text

// --- minors ------------------------------------------------------------
// G\e with isolated vertices removed.
Multigraph delete_edge(const Multigraph& g, const std::string& e);
// G/e; nullopt is the distinguished zero-flag for contracting a self-loop
// ("contraction of tadpoles is zero").  The head merges into the tail.
std::optional<Multigraph> contract_edge(const Multigraph& g,
                                        const std::string& e);
// Variants that keep isolated/merged vertices in the vertex list (needed
// when a set partition still refers to them).  The contraction variant
// must not be given a self-loop.
Multigraph delete_edge_keep_vertices(const Multigraph& g,
                                     const std::string& e);
Multigraph contract_edge_keep_vertices(const Multigraph& g,
                                       const std::string& e);

// Incidence matrix with one vertex column removed and the given edge rows
// removed; rows ordered by edge order, columns by vertex order; entries
// +1 where the edge begins, -1 where it ends, 0 on self-loop rows.
std::vector<std::vector<int>> reduced_incidence(
    const Multigraph& g, const std::string& removed_vertex,
    const std::set<std::string>& removed_edge_rows);

Int int_matrix_det(std::vector<std::vector<int>> m);

// --- cuts ---------------------------------------------------------------
struct CutDecomposition {
  std::vector<std::string> cut_vertices;  // 2 or 3
  std::vector<std::string> side_l;        // edge ids
  std::vector<std::string> side_r;        // edge ids; L and R partition E(G)
};

// All unordered vertex pairs/triples whose removal disconnects the interior
// (brute force; triples additionally require an interior vertex per side).
std::vector<CutDecomposition> find_two_vertex_cuts(const Multigraph& g);
std::vector<CutDecomposition> find_three_vertex_cuts(const Multigraph& g);

// --- double triangles -----------------------------------------------------
enum class DoubleTriangleKind { Full, EdgeSplitVariant, TriSplitVariant };

// The 7-edge split pattern: triangle {1,2,3} on {B,u,E} and triangle
// {2,6,7} on {C,u,E} share edge 2=(u,E); 4=(A,u) and 5=(D,u) attach the
// hub u to two further vertices.  Variants match sub-patterns: the
// edge-split variant omits {6,7}, the tri-split variant omits {4}.
struct DoubleTriangleSite {
  DoubleTriangleKind kind = DoubleTriangleKind::Full;
  // edge ids e[0..6] correspond to pattern edges 1..7 (empty string for
  // edges the variant omits)
  std::array<std::string, 7> e;
  std::string A, B, C, D;  // attachment vertices (A, D via edges 4, 5)
  std::string u;           // hub (endpoint of edges 1,2,4,5,6)
  std::string E;           // split apex (endpoint of edges 2,3,7)
};

std::vector<DoubleTriangleSite> find_double_triangles(const Multigraph& g);

// Contract a Full site: the 7-edge configuration is replaced by the 5-edge
// one (delete edges 3 and 7, contract edge 2, relabel edge 6 as "3", add
// the chord edge "2" = (B, C)); attachments A,B,C,D are preserved.
Multigraph contract_double_triangle(const Multigraph& g,
                                    const DoubleTriangleSite& site);

// --- misc helpers ----------------------------------------------------------
// triples of edge indices forming a triangle on three distinct vertices
std::vector<std::array<std::size_t, 3>> find_triangles(const Multigraph& g);
bool has_parallel_edges(const Multigraph& g);

}  // namespace graphpoly
