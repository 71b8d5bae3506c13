#include "graphpoly/poly.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace graphpoly {

namespace {

struct VarTableImpl {
  std::vector<std::string> names;
  std::unordered_map<std::string, Var> ids;
  std::mutex mu;
  static VarTableImpl& get() {
    static VarTableImpl t;
    return t;
  }
};

}  // namespace

Var VarTable::intern(const std::string& name) {
  auto& t = VarTableImpl::get();
  std::lock_guard<std::mutex> lock(t.mu);
  auto it = t.ids.find(name);
  if (it != t.ids.end()) return it->second;
  Var v = static_cast<Var>(t.names.size());
  t.names.push_back(name);
  t.ids.emplace(name, v);
  return v;
}

const std::string& VarTable::name(Var v) {
  auto& t = VarTableImpl::get();
  std::lock_guard<std::mutex> lock(t.mu);
  return t.names.at(static_cast<std::size_t>(v));
}

std::optional<Var> VarTable::lookup(const std::string& name) {
  auto& t = VarTableImpl::get();
  std::lock_guard<std::mutex> lock(t.mu);
  auto it = t.ids.find(name);
  if (it == t.ids.end()) return std::nullopt;
  return it->second;
}

int mono_degree(const Mono& m) {
  int d = 0;
  for (const auto& [v, e] : m) d += e;
  return d;
}

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) {
      r.push_back(a[i++]);
    } else if (a[i].first > b[j].first) {
      r.push_back(b[j++]);
    } else {
      r.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) r.push_back(a[i]);
  for (; j < b.size(); ++j) r.push_back(b[j]);
  return r;
}

bool mono_canonical_before(const Mono& a, const Mono& b) {
  int da = mono_degree(a), db = mono_degree(b);
  if (da != db) return da > db;
  // graded lex: compare exponent vectors over ascending variable ids; the
  // monomial with the higher exponent on the earliest differing variable
  // is "greater" and prints first.
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first != b[j].first) return a[i].first < b[j].first;
    if (a[i].second != b[j].second) return a[i].second > b[j].second;
    ++i;
    ++j;
  }
  return false;  // equal (same degree forbids a strict prefix)
}

Poly Poly::constant(Int c) {
  Poly p;
  if (c != 0) p.terms_.emplace(Mono{}, std::move(c));
  return p;
}

Poly Poly::variable(Var v) {
  Poly p;
  p.terms_.emplace(Mono{{v, 1}}, Int(1));
  return p;
}

Poly Poly::variable(const std::string& name) {
  return variable(VarTable::intern(name));
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

bool Poly::is_multilinear() const {
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m)
      if (e != 1) return false;
  return true;
}

int Poly::degree() const {
  if (terms_.empty()) return -1;
  return mono_degree(terms_.begin()->first);  // leading term has max degree
}

int Poly::degree_in(Var v) const {
  int d = 0;
  for (const auto& [m, c] : terms_)
    for (const auto& [mv, e] : m)
      if (mv == v) d = std::max(d, e);
  return d;
}

void Poly::add_term(const Mono& m, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(mono_mul(m1, m2), c1 * c2);
  return r;
}

Poly Poly::scaled(const Int& k) const {
  Poly r;
  if (k == 0) return r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * k);
  return r;
}

Poly Poly::pow(int e) const {
  Poly r = Poly::constant(1);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

Poly operator*(const Int& k, const Poly& p) { return p.scaled(k); }

std::vector<Poly> Poly::coefficients_in(Var v) const {
  std::vector<Poly> out(static_cast<std::size_t>(degree_in(v)) + 1);
  for (const auto& [m, c] : terms_) {
    int e = 0;
    Mono rest;
    rest.reserve(m.size());
    for (const auto& [mv, me] : m) {
      if (mv == v)
        e = me;
      else
        rest.push_back({mv, me});
    }
    out[static_cast<std::size_t>(e)].add_term(rest, c);
  }
  return out;
}

Poly Poly::substitute_zero(const std::set<Var>& vars) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    bool hit = false;
    for (const auto& [v, e] : m)
      if (vars.count(v)) {
        hit = true;
        break;
      }
    if (!hit) r.terms_.emplace(m, c);
  }
  return r;
}

Poly Poly::substitute(const std::map<Var, Poly>& bindings) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    Poly t = Poly::constant(c);
    for (const auto& [v, e] : m) {
      auto it = bindings.find(v);
      const Poly f = (it != bindings.end()) ? it->second : Poly::variable(v);
      for (int i = 0; i < e; ++i) t = t * f;
    }
    out = out + t;
  }
  return out;
}

Int Poly::evaluate(const std::map<Var, Int>& point) const {
  Int total = 0;
  for (const auto& [m, c] : terms_) {
    Int t = c;
    for (const auto& [v, e] : m) {
      auto it = point.find(v);
      Int x = (it != point.end()) ? it->second : Int(0);
      for (int i = 0; i < e; ++i) t *= x;
    }
    total += t;
  }
  return total;
}

Int Poly::content() const {
  Int g = 0;
  for (const auto& [m, c] : terms_) g = boost::multiprecision::gcd(g, c);
  if (g == 0) return 0;
  if (terms_.begin()->second < 0) g = -g;
  return g;
}

Poly Poly::primitive_part() const {
  Int c = content();
  if (c == 0) return Poly();
  Poly r;
  for (const auto& [m, coef] : terms_) {
    Poly::TermMap::value_type kv(m, coef / boost::multiprecision::abs(c));
    r.add_term(kv.first, kv.second);
  }
  return r;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Int a = boost::multiprecision::abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool wrote = false;
    if (a != 1 || m.empty()) {
      os << a.str();
      wrote = true;
    }
    for (const auto& [v, e] : m) {
      if (wrote) os << "*";
      os << VarTable::name(v);
      if (e > 1) os << "^" << e;
      wrote = true;
    }
  }
  return os.str();
}

Poly normalize_sign(const Poly& p) {
  if (p.is_zero()) return p;
  if (p.terms().begin()->second < 0) return -p;
  return p;
}

bool equal_up_to_sign(const Poly& a, const Poly& b) {
  return a == b || a == -b;
}

std::optional<QuadraticDecomposition> quadratic_in(const Poly& p, Var x) {
  if (p.degree_in(x) > 2) return std::nullopt;
  auto cs = p.coefficients_in(x);
  cs.resize(3);
  return QuadraticDecomposition{x, cs[2], cs[1], cs[0]};
}

std::optional<Poly> discriminant_in(const Poly& p, Var x) {
  auto q = quadratic_in(p, x);
  if (!q) return std::nullopt;
  return q->a1 * q->a1 - Int(4) * (q->a2 * q->a0);
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) {
    if (a.is_zero()) return Poly();
    return std::nullopt;
  }
  const auto& blead = *b.terms().begin();
  Poly rem = a;
  Poly q;
  while (!rem.is_zero()) {
    const auto& alead = *rem.terms().begin();
    // monomial division alead.first / blead.first
    Mono mq;
    {
      std::size_t i = 0, j = 0;
      const Mono& ma = alead.first;
      const Mono& mb = blead.first;
      bool ok = true;
      while (j < mb.size()) {
        if (i >= ma.size() || ma[i].first > mb[j].first) {
          ok = false;
          break;
        }
        if (ma[i].first < mb[j].first) {
          mq.push_back(ma[i++]);
          continue;
        }
        if (ma[i].second < mb[j].second) {
          ok = false;
          break;
        }
        if (ma[i].second > mb[j].second)
          mq.emplace_back(ma[i].first, ma[i].second - mb[j].second);
        ++i;
        ++j;
      }
      if (!ok) return std::nullopt;
      for (; i < ma.size(); ++i) mq.push_back(ma[i]);
    }
    if (alead.second % blead.second != 0) return std::nullopt;
    Int qc = alead.second / blead.second;
    Poly term;
    term.add_term(mq, qc);
    q = q + term;
    rem = rem - term * b;
  }
  return q;
}

namespace {

Int floor_sqrt(const Int& n) { return boost::multiprecision::sqrt(n); }

bool random_eval_could_be_square(const Poly& p) {
  std::set<Var> vars;
  for (const auto& [m, c] : p.terms())
    for (const auto& [v, e] : m) vars.insert(v);
  std::mt19937 rng(0x5eed);
  std::uniform_int_distribution<int> dist(0, 99);
  for (int trial = 0; trial < 3; ++trial) {
    std::map<Var, Int> point;
    for (Var v : vars) point[v] = Int(dist(rng));
    Int val = p.evaluate(point);
    if (val < 0) return false;
    Int r = floor_sqrt(val);
    if (r * r != val) return false;
  }
  return true;
}

std::optional<Poly> sqrt_rec(const Poly& p) {
  if (p.is_zero()) return Poly();
  if (p.is_constant()) {
    Int c = p.terms().begin()->second;
    if (c < 0) return std::nullopt;
    Int r = floor_sqrt(c);
    if (r * r != c) return std::nullopt;
    return Poly::constant(r);
  }
  // recurse on the smallest variable present
  Var x = -1;
  for (const auto& [m, c] : p.terms())
    for (const auto& [v, e] : m)
      if (x < 0 || v < x) x = v;
  auto cs = p.coefficients_in(x);
  int d = static_cast<int>(cs.size()) - 1;
  if (d % 2 != 0) return std::nullopt;
  int half = d / 2;
  auto lead = sqrt_rec(cs[static_cast<std::size_t>(d)]);
  if (!lead) return std::nullopt;
  std::vector<Poly> res(static_cast<std::size_t>(half) + 1);
  res[static_cast<std::size_t>(half)] = *lead;
  Poly two_s = lead->scaled(2);
  // coefficient matching from the top degree down:
  // coeff of x^{half+k} in p = 2*s*res[k] + cross terms res[i]*res[j]
  for (int k = half - 1; k >= 0; --k) {
    Poly acc = (half + k < static_cast<int>(cs.size()))
                   ? cs[static_cast<std::size_t>(half + k)]
                   : Poly();
    for (int i = k + 1; i < half; ++i) {
      int j = half + k - i;
      if (j <= i && j > k) {
        Poly prod = res[static_cast<std::size_t>(i)] * res[static_cast<std::size_t>(j)];
        acc = acc - (i == j ? prod : prod.scaled(2));
      }
    }
    auto quot = divide_exact(acc, two_s);
    if (!quot) return std::nullopt;
    res[static_cast<std::size_t>(k)] = *quot;
  }
  Poly out;
  for (int k = 0; k <= half; ++k) {
    Poly xk;
    xk.add_term(k == 0 ? Mono{} : Mono{{x, k}}, Int(1));
    out = out + res[static_cast<std::size_t>(k)] * xk;
  }
  if (!(out * out == p)) return std::nullopt;
  return out;
}

}  // namespace

std::optional<Poly> perfect_square_root(const Poly& p) {
  if (p.is_zero()) return Poly();
  if (!random_eval_could_be_square(p)) return std::nullopt;
  auto r = sqrt_rec(p);
  if (!r) return std::nullopt;
  return normalize_sign(*r);
}

namespace {

Poly det_cofactor(const std::vector<std::vector<Poly>>& m,
                  std::vector<std::size_t> rows, std::vector<std::size_t> cols) {
  const std::size_t n = rows.size();
  if (n == 0) return Poly::constant(1);
  if (n == 1) return m[rows[0]][cols[0]];
  Poly acc;
  for (std::size_t i = 0; i < n; ++i) {
    const Poly& e = m[rows[i]][cols[0]];
    if (e.is_zero()) continue;
    std::vector<std::size_t> sub;
    for (std::size_t k = 0; k < n; ++k)
      if (k != i) sub.push_back(rows[k]);
    Poly minor = det_cofactor(m, sub, {cols.begin() + 1, cols.end()});
    Poly term = e * minor;
    acc = (i % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

Poly det(const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("det: matrix not square");
  if (n == 0) return Poly::constant(1);
  if (n <= 4) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    return det_cofactor(m, idx, idx);
  }
  // Fraction-free elimination (Bareiss) with full pivoting on the entry
  // with the fewest terms; intermediate divisions are exact.
  auto a = m;
  int sign = 1;
  Poly prev = Poly::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // pick pivot
    std::size_t pr = n, pc = n;
    std::size_t best = 0;
    for (std::size_t i = k; i < n; ++i)
      for (std::size_t j = k; j < n; ++j) {
        const auto& e = a[i][j];
        if (e.is_zero()) continue;
        std::size_t sz = e.term_count();
        if (pr == n || sz < best) {
          pr = i;
          pc = j;
          best = sz;
        }
      }
    if (pr == n) return Poly();  // all-zero block
    if (pr != k) {
      std::swap(a[pr], a[k]);
      sign = -sign;
    }
    if (pc != k) {
      for (std::size_t i = 0; i < n; ++i) std::swap(a[i][pc], a[i][k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        auto q = divide_exact(num, prev);
        if (!q) throw std::logic_error("det: exact division failed");
        a[i][j] = std::move(*q);
      }
      a[i][k] = Poly();
    }
    prev = a[k][k];
  }
  Poly d = a[n - 1][n - 1];
  return sign < 0 ? -d : d;
}

}  // namespace graphpoly
