#pragma once
// Combinatorial weight-drop prediction: double-edge rule, 2-vertex
// reducibility, double-triangle contraction chains, and the 3-join rho
// classification.

#include <optional>
#include <string>
#include <vector>

#include "graphpoly/graph.hpp"
#include "graphpoly/poly.hpp"
#include "graphpoly/reduction.hpp"

namespace graphpoly {

// rho_L in the three variables x, y, z attached to the terminals v1, v2,
// v3 (edge ids "x", "y", "z" in the augmented graph L~).
struct RhoPolynomial {
  Poly poly;
  std::vector<std::string> terminals;  // v1, v2, v3
};

// Builds L~ = l plus an apex vertex joined to the three terminals by edges
// x, y, z, and reduces away exactly l's edges; the survivor is rho_L.
// Throws std::invalid_argument on bad input (including edge ids x/y/z
// already taken) and std::runtime_error when L~ is not denominator
// reducible over l's edges.
RhoPolynomial rho(const Multigraph& l, const std::string& v1,
                  const std::string& v2, const std::string& v3,
                  int budget = 10000);

// One catalog entry of the paper's rho table.
struct RhoTableEntry {
  std::string name;         // e.g. "6_2"
  std::string fixture;      // fixture file name, e.g. "6_2.g"
  Poly expected;            // table value in x, y, z
  bool pass = false;
  Poly computed;
};

// The stored table values (in variables x, y, z).
std::vector<RhoTableEntry> rho_table();

// Recomputes every catalog rho from fixtures in `catalog_dir` and compares
// with the stored value up to permutations of {x, y, z} and sign.
std::vector<RhoTableEntry> rho_table_check(const std::string& catalog_dir,
                                           int budget = 10000);

// (Psi_R)^{2-deg rho} * rho_L(x_R, y_R, z_R) for a 3-cut, where
// x_R = Phi_R^{{v1},{v2,v3}}, y_R = Phi_R^{{v2},{v1,v3}},
// z_R = Phi_R^{{v1,v2},{v3}}.  A negative exponent divides exactly by
// Psi_R^{deg rho - 2}; failure to divide throws std::runtime_error.
Poly three_join_reduce(const Multigraph& g, const CutDecomposition& cut,
                       int budget = 10000);

enum class PredictionVerdict { Drop, NoDropKnown, Unknown };

struct RuleApplication {
  std::string rule;  // "double-edge", "2-vertex-reducible",
                     // "double-triangle-contract", "3-join-rho"
  std::string site;  // human-readable site description
};

struct Prediction {
  PredictionVerdict verdict = PredictionVerdict::Unknown;
  std::vector<RuleApplication> rule_chain;
};

// Applies, in order: double-edge rule; 2-vertex reducibility;
// double-triangle contraction (retesting the first two rules after each
// contraction); the 3-join rho criterion (degree 0 or perfect square).
// Never claims no-drop from rules alone: NoDropKnown requires a witness
// trace that Reduced without a drop.
Prediction predict(const Multigraph& g,
                   const ReductionTrace* witness = nullptr,
                   int budget = 10000);

}  // namespace graphpoly
