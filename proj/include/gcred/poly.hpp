#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gcred/numeric.hpp"

namespace gcred {

// Exponent vector over a fixed symbol table (coordinates followed by
// generators). Width is implicit: trailing zero exponents are trimmed, so
// monomials from the same field compare consistently regardless of width.
struct Mono {
  std::vector<std::uint32_t> e;

  void trim() {
    while (!e.empty() && e.back() == 0) e.pop_back();
  }

  bool operator==(const Mono& o) const { return e == o.e; }
  bool operator<(const Mono& o) const {  // graded lex, stable total order
    std::uint64_t da = 0, db = 0;
    for (auto x : e) da += x;
    for (auto x : o.e) db += x;
    if (da != db) return da < db;
    return std::lexicographical_compare(e.begin(), e.end(), o.e.begin(), o.e.end());
  }

  std::uint32_t deg(std::size_t sym) const { return sym < e.size() ? e[sym] : 0; }

  void set_deg(std::size_t sym, std::uint32_t d) {
    if (sym >= e.size()) e.resize(sym + 1, 0);
    e[sym] = d;
    trim();
  }

  Mono times(const Mono& o) const {
    Mono r;
    r.e.resize(std::max(e.size(), o.e.size()), 0);
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = deg(i) + o.deg(i);
    return r;
  }

  bool divides(const Mono& o) const {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > o.deg(i)) return false;
    return true;
  }

  Mono quotient(const Mono& o) const {  // *this / o, assumes divisibility
    Mono r;
    r.e.resize(std::max(e.size(), o.e.size()), 0);
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = deg(i) - o.deg(i);
    r.trim();
    return r;
  }

  int max_sym() const {  // highest symbol present, -1 for the unit monomial
    for (int i = static_cast<int>(e.size()) - 1; i >= 0; --i)
      if (e[i] != 0) return i;
    return -1;
  }
};

// Sparse multivariate polynomial over Q.
class Poly {
 public:
  Poly() = default;

  static Poly constant(const Rat& c) {
    Poly p;
    if (c != 0) p.t_[Mono{}] = c;
    return p;
  }

  static Poly variable(std::size_t sym) {
    Poly p;
    Mono m;
    m.set_deg(sym, 1);
    p.t_[m] = 1;
    return p;
  }

  bool is_zero() const { return t_.empty(); }

  bool is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first.e.empty());
  }

  Rat constant_value() const {
    if (t_.empty()) return Rat(0);
    return t_.begin()->second;
  }

  int max_sym() const {
    int m = -1;
    for (const auto& [mono, c] : t_) m = std::max(m, mono.max_sym());
    return m;
  }

  bool uses(std::size_t sym) const {
    for (const auto& [mono, c] : t_)
      if (mono.deg(sym) != 0) return true;
    return false;
  }

  std::uint32_t degree_in(std::size_t sym) const {
    std::uint32_t d = 0;
    for (const auto& [mono, c] : t_) d = std::max(d, mono.deg(sym));
    return d;
  }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [mono, c] : t_) {
      std::uint64_t s = 0;
      for (auto x : mono.e) s += x;
      d = std::max(d, s);
    }
    return d;
  }

  std::size_t term_count() const { return t_.size(); }

  const std::map<Mono, Rat>& terms() const { return t_; }

  void add_term(const Mono& m, const Rat& c) {
    if (c == 0) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
      t_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
  }

  Poly operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [m, c] : o.t_) r.add_term(m, c);
    return r;
  }

  Poly operator-(const Poly& o) const {
    Poly r = *this;
    for (const auto& [m, c] : o.t_) r.add_term(m, -c);
    return r;
  }

  Poly operator*(const Poly& o) const {
    Poly r;
    for (const auto& [ma, ca] : t_)
      for (const auto& [mb, cb] : o.t_) r.add_term(ma.times(mb), ca * cb);
    return r;
  }

  Poly scaled(const Rat& c) const {
    Poly r;
    if (c == 0) return r;
    for (const auto& [m, k] : t_) r.t_[m] = k * c;
    return r;
  }

  Poly pow(std::uint32_t n) const {
    Poly r = constant(1);
    Poly b = *this;
    while (n) {
      if (n & 1) r = r * b;
      b = b * b;
      n >>= 1;
    }
    return r;
  }

  Poly derivative(std::size_t sym) const {
    Poly r;
    for (const auto& [m, c] : t_) {
      std::uint32_t d = m.deg(sym);
      if (d == 0) continue;
      Mono n = m;
      n.set_deg(sym, d - 1);
      r.add_term(n, c * d);
    }
    return r;
  }

  Rat eval(const std::vector<Rat>& vals) const {
    Rat acc(0);
    for (const auto& [m, c] : t_) {
      Rat term = c;
      for (std::size_t i = 0; i < m.e.size(); ++i)
        for (std::uint32_t k = 0; k < m.e[i]; ++k) term *= vals[i];
      acc += term;
    }
    return acc;
  }

  double eval_d(const std::vector<double>& vals) const {
    double acc = 0;
    for (const auto& [m, c] : t_) {
      double term = c.get_d();
      for (std::size_t i = 0; i < m.e.size(); ++i)
        for (std::uint32_t k = 0; k < m.e[i]; ++k) term *= vals[i];
      acc += term;
    }
    return acc;
  }

  // Leading term in graded-lex order.
  std::pair<Mono, Rat> leading() const { return *t_.rbegin(); }

  bool operator==(const Poly& o) const { return t_ == o.t_; }

  std::string to_string(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    std::string s;
    bool first = true;
    // print highest-order terms first
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      const auto& [m, c] = *it;
      Rat a = c;
      if (first) {
        if (a < 0) {
          s += "-";
          a = -a;
        }
      } else {
        s += (a < 0) ? " - " : " + ";
        if (a < 0) a = -a;
      }
      first = false;
      std::string vars;
      for (std::size_t i = 0; i < m.e.size(); ++i) {
        if (m.e[i] == 0) continue;
        if (!vars.empty()) vars += "*";
        vars += names[i];
        if (m.e[i] > 1) vars += "^" + std::to_string(m.e[i]);
      }
      if (vars.empty()) {
        s += rat_str(a);
      } else {
        if (a != 1) s += rat_str(a) + "*";
        s += vars;
      }
    }
    return s;
  }

 private:
  std::map<Mono, Rat> t_;
};

// Exact division; returns false if d does not divide p.
inline bool try_divide(const Poly& p, const Poly& d, Poly& q) {
  if (d.is_zero()) return false;
  q = Poly();
  Poly rem = p;
  auto [dm, dc] = d.is_zero() ? std::pair<Mono, Rat>{} : d.leading();
  while (!rem.is_zero()) {
    auto [rm, rc] = rem.leading();
    if (!dm.divides(rm)) return false;
    Mono qm = rm.quotient(dm);
    Rat qc = rc / dc;
    Poly t;
    t.add_term(qm, qc);
    q = q + t;
    rem = rem - t * d;
  }
  return true;
}

inline Poly divide_exact(const Poly& p, const Poly& d) {
  Poly q;
  if (!try_divide(p, d, q)) throw std::logic_error("divide_exact: not divisible");
  return q;
}

namespace detail {

// Univariate view: coefficients (polynomials in lower symbols) by degree in v.
inline std::vector<Poly> coeffs_in(const Poly& p, std::size_t v) {
  std::vector<Poly> out(p.degree_in(v) + 1);
  for (const auto& [m, c] : p.terms()) {
    Mono n = m;
    std::uint32_t d = m.deg(v);
    n.set_deg(v, 0);
    out[d].add_term(n, c);
  }
  return out;
}

inline Poly from_coeffs(const std::vector<Poly>& cs, std::size_t v) {
  Poly r;
  Poly x = Poly::variable(v);
  for (std::size_t d = 0; d < cs.size(); ++d) r = r + cs[d] * x.pow(static_cast<std::uint32_t>(d));
  return r;
}

inline int udeg(const std::vector<Poly>& cs) {
  for (int d = static_cast<int>(cs.size()) - 1; d >= 0; --d)
    if (!cs[d].is_zero()) return d;
  return -1;
}

}  // namespace detail

Poly poly_gcd(const Poly& a, const Poly& b);

namespace detail {

// gcd of the coefficient list (content w.r.t. the main variable).
inline Poly content(const std::vector<Poly>& cs) {
  Poly g;
  for (const auto& c : cs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c : poly_gcd(g, c);
    if (g.is_constant()) break;
  }
  return g.is_zero() ? Poly() : g;
}

// Pseudo-remainder of A by B as univariate polynomials in v.
inline std::vector<Poly> pseudo_rem(std::vector<Poly> A, const std::vector<Poly>& B, std::size_t v) {
  int db = udeg(B);
  const Poly& lb = B[db];
  int da = udeg(A);
  while (da >= db) {
    Poly la = A[da];
    // A = lb*A - la * B * x^(da-db)
    for (auto& c : A) c = c * lb;
    for (int i = 0; i <= db; ++i) A[da - db + i] = A[da - db + i] - la * B[i];
    while (!A.empty() && A.back().is_zero()) A.pop_back();
    int nd = udeg(A);
    if (nd < 0) return {};
    da = nd;
  }
  A.resize(da + 1);
  return A;
}

}  // namespace detail

// GCD over Q[symbols], primitive PRS. Result is an arbitrary associate; the
// caller normalizes. Inputs here stay small (chart expressions), so the
// classical algorithm is adequate.
inline Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_constant() || b.is_constant()) return Poly::constant(1);
  if (a == b) return a;

  std::size_t v = static_cast<std::size_t>(std::max(a.max_sym(), b.max_sym()));

  auto A = detail::coeffs_in(a, v);
  auto B = detail::coeffs_in(b, v);
  if (detail::udeg(A) < detail::udeg(B)) std::swap(A, B);

  Poly contA = detail::content(A);
  Poly contB = detail::content(B);
  Poly gamma = poly_gcd(contA, contB);
  for (auto& c : A) c = c.is_zero() ? c : divide_exact(c, contA);
  for (auto& c : B) c = c.is_zero() ? c : divide_exact(c, contB);

  if (detail::udeg(B) == 0) return gamma;  // primitive => coprime to any v-free poly

  while (true) {
    auto R = detail::pseudo_rem(A, B, v);
    if (detail::udeg(R) < 0) break;
    Poly contR = detail::content(R);
    for (auto& c : R) c = c.is_zero() ? c : divide_exact(c, contR);
    A = std::move(B);
    B = std::move(R);
    if (detail::udeg(B) == 0) return gamma;
  }
  return gamma * detail::from_coeffs(B, v);
}

}  // namespace gcred
