#pragma once
// Exact sparse multivariate polynomial arithmetic over the integers.
//
// Variables are interned strings (typically edge ids / Schwinger
// parameters).  The canonical term order is graded lexicographic over the
// global variable order (interning order), leading term first; it drives
// printing, sign normalization and the long division used by the
// perfect-square-root routine.  NOTE: the division order must be a genuine
// term order (compatible with multiplication) or exact division can fail
// on valid inputs.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace graphpoly {

using Int = boost::multiprecision::cpp_int;
using Var = int;

// Process-wide variable interner.  Variable ids are assigned in first-use
// order; graph parsing interns edge variables in edge-list order, so the
// canonical order coincides with the "global edge order" of the input.
class VarTable {
 public:
  static Var intern(const std::string& name);
  static const std::string& name(Var v);
  static std::optional<Var> lookup(const std::string& name);
};

// A monomial: sorted (var, exponent) pairs, exponents > 0.
using Mono = std::vector<std::pair<Var, int>>;

int mono_degree(const Mono& m);
Mono mono_mul(const Mono& a, const Mono& b);
// True when a precedes b in canonical (print) order: higher total degree
// first, then lexicographically greater exponent vector first.
bool mono_canonical_before(const Mono& a, const Mono& b);

struct MonoBefore {
  bool operator()(const Mono& a, const Mono& b) const {
    return mono_canonical_before(a, b);
  }
};

class Poly {
 public:
  using TermMap = std::map<Mono, Int, MonoBefore>;

  Poly() = default;
  static Poly zero() { return Poly(); }
  static Poly constant(Int c);
  static Poly variable(Var v);
  static Poly variable(const std::string& name);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  // Every exponent equal to 1 (holds for Psi, Phi and Dodgson polynomials).
  bool is_multilinear() const;

  int degree() const;           // total degree, -1 for the zero polynomial
  int degree_in(Var v) const;   // 0 when absent

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Int& k) const;
  Poly pow(int e) const;
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  // coefficient polynomials by exponent of v (index = exponent)
  std::vector<Poly> coefficients_in(Var v) const;

  Poly substitute_zero(const std::set<Var>& vars) const;
  Poly substitute(const std::map<Var, Poly>& bindings) const;
  Int evaluate(const std::map<Var, Int>& point) const;

  // gcd of coefficients with the sign of the leading coefficient; 0 -> 0.
  Int content() const;
  // divide every coefficient by the (positive) integer content
  Poly primitive_part() const;

  std::string to_string() const;

  void add_term(const Mono& m, const Int& c);  // maintains canonical form

 private:
  TermMap terms_;
};

Poly operator*(const Int& k, const Poly& p);

// +/- p so the leading (first canonical) coefficient is positive; 0 -> 0.
Poly normalize_sign(const Poly& p);
bool equal_up_to_sign(const Poly& a, const Poly& b);

struct QuadraticDecomposition {
  Var variable;
  Poly a2, a1, a0;  // p = a2*x^2 + a1*x + a0
};

// nullopt means degree exceeded (deg_x p > 2).
std::optional<QuadraticDecomposition> quadratic_in(const Poly& p, Var x);
// a1^2 - 4*a2*a0; nullopt when deg_x p > 2.
std::optional<Poly> discriminant_in(const Poly& p, Var x);

// Exact division a / b; nullopt when not exactly divisible.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

// E with E*E == p, sign-normalized; nullopt when p is not a perfect square.
std::optional<Poly> perfect_square_root(const Poly& p);

// Exact determinant of a square polynomial matrix: cofactor expansion for
// dimension <= 4, fraction-free (Bareiss-style, full pivoting on fewest
// terms) elimination with exact division above that.
Poly det(const std::vector<std::vector<Poly>>& m);

}  // namespace graphpoly
