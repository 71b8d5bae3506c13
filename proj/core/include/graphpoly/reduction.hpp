#pragma once
// The 5-invariant and the denominator-reduction engine: iterated
// discriminants, weight-drop detection, stuck detection and order search.

#include <string>
#include <vector>

#include "graphpoly/graph.hpp"
#include "graphpoly/poly.hpp"

namespace graphpoly {

// The 5-invariant ^5Psi_G(i,j,k,l,m): the 2x2 determinant of Dodgson
// polynomials, sign-normalized; permutation-invariant up to sign.
// Throws std::invalid_argument on repeated or unknown edges.
Poly five_invariant(const Multigraph& g, const std::vector<std::string>& edges);

enum class StepKind { Discriminant, LinearCollapse };

struct ReductionStep {
  std::string edge;   // the variable this step consumed
  Poly result;        // D_{n+1} after the step (content-stripped)
  StepKind kind = StepKind::Discriminant;
};

enum class ReductionOutcome { Reduced, WeightDrop, Stuck };

struct ReductionTrace {
  std::vector<std::string> initial_edges;  // the 5 edges of D_5
  Poly d5;                                 // content-stripped 5-invariant
  std::vector<ReductionStep> steps;
  ReductionOutcome outcome = ReductionOutcome::Stuck;
  // n of D_n when the run ended (5 + completed steps; the drop stage for
  // WeightDrop)
  int stage = 0;
  int consumed = 0;             // edges consumed in total
  std::string evidence;         // WeightDrop: which quantity vanished
  std::vector<std::string> stuck_reasons;  // per-variable failure reasons
  Poly final_poly;              // surviving D_n for Reduced outcomes
};

// One reduction pass following the given edge order: the first five edges
// seed D_5, each further edge takes the discriminant in that variable and
// extracts its perfect square root.  Throws std::invalid_argument when
// e_G < 5 or the order repeats/omits required edges.
ReductionTrace denominator_reduce(const Multigraph& g,
                                  const std::vector<std::string>& order);

// Depth-first search over reduction orders: 5-edge seed sets preferring
// those containing a triangle, then those containing a 3-valent vertex's
// star, then the rest (lexicographic within each class); the next variable
// is always the lowest remaining edge id first.  Returns the first
// non-Stuck trace, else the deepest Stuck trace; exceeding the node budget
// yields Stuck with a budget-exhausted reason.
ReductionTrace auto_order_search(const Multigraph& g, int budget = 10000);

// Order search restricted to a subset of edges with a custom target length
// (used by the predictor's rho computation, which must consume exactly the
// L-side edges).
ReductionTrace restricted_order_search(const Multigraph& g,
                                       const std::vector<std::string>& allowed,
                                       std::size_t target_consumed,
                                       int budget = 10000);

// Continues a reduction from an intermediate denominator `start` (stored
// in the trace's d5 slot): depth-first search over the given variables,
// consuming `extra_steps` of them.  Counters in the returned trace count
// continuation steps only.  Used by the predictor to push a reduction
// through a 3-join's substituted denominator.
ReductionTrace continue_reduction(const Poly& start,
                                  const std::vector<std::string>& variables,
                                  std::size_t extra_steps, int budget = 10000);

enum class WeightVerdict { NoDropDetected, Drop, NotReducible };

struct WeightEstimate {
  int edge_count = 0;
  int maximal_weight_bound = 0;  // e_G - 3
  int drop_bound = 0;            // e_G - 4
  WeightVerdict verdict = WeightVerdict::NotReducible;
};

WeightEstimate weight_estimate(const Multigraph& g,
                               const ReductionTrace& trace);

}  // namespace graphpoly
