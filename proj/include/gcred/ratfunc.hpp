#pragma once

#include "gcred/poly.hpp"

namespace gcred {

// Rational function num/den in normal form: gcd cancelled, denominator's
// leading coefficient scaled to 1. Normal form is unique, which makes
// syntactic equality meaningful for generator-free expressions.
struct RatFunc {
  Poly num;
  Poly den = Poly::constant(1);

  RatFunc() = default;
  RatFunc(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) { normalize(); }
  explicit RatFunc(Poly n) : num(std::move(n)) {}

  static RatFunc constant(const Rat& c) { return RatFunc(Poly::constant(c)); }
  static RatFunc variable(std::size_t sym) { return RatFunc(Poly::variable(sym)); }

  bool is_zero_form() const { return num.is_zero(); }
  bool is_polynomial() const { return den.is_constant(); }

  void normalize() {
    if (den.is_zero()) throw std::domain_error("zero denominator");
    if (num.is_zero()) {
      den = Poly::constant(1);
      return;
    }
    if (den.is_constant()) {
      num = num.scaled(1 / den.constant_value());
      den = Poly::constant(1);
      return;
    }
    Poly g = poly_gcd(num, den);
    if (!g.is_constant()) {
      num = divide_exact(num, g);
      den = divide_exact(den, g);
    }
    Rat lc = den.leading().second;
    num = num.scaled(1 / lc);
    den = den.scaled(1 / lc);
  }

  RatFunc operator-() const {
    RatFunc r;
    r.num = -num;
    r.den = den;
    return r;
  }

  RatFunc operator+(const RatFunc& o) const {
    if (den == o.den) return RatFunc(num + o.num, den);
    return RatFunc(num * o.den + o.num * den, den * o.den);
  }

  RatFunc operator-(const RatFunc& o) const {
    if (den == o.den) return RatFunc(num - o.num, den);
    return RatFunc(num * o.den - o.num * den, den * o.den);
  }

  RatFunc operator*(const RatFunc& o) const { return RatFunc(num * o.num, den * o.den); }

  RatFunc operator/(const RatFunc& o) const {
    if (o.num.is_zero()) throw std::domain_error("division by zero expression");
    return RatFunc(num * o.den, den * o.num);
  }

  RatFunc pow(int k) const {
    if (k >= 0) return RatFunc(num.pow(static_cast<std::uint32_t>(k)), den.pow(static_cast<std::uint32_t>(k)));
    if (num.is_zero()) throw std::domain_error("zero to a negative power");
    return RatFunc(den.pow(static_cast<std::uint32_t>(-k)), num.pow(static_cast<std::uint32_t>(-k)));
  }

  bool operator==(const RatFunc& o) const { return num == o.num && den == o.den; }

  int max_sym() const { return std::max(num.max_sym(), den.max_sym()); }

  bool uses(std::size_t sym) const { return num.uses(sym) || den.uses(sym); }

  // Formal partial derivative w.r.t. a symbol (quotient rule).
  RatFunc formal_derivative(std::size_t sym) const {
    if (is_polynomial()) return RatFunc(num.derivative(sym));
    return RatFunc(num.derivative(sym) * den - num * den.derivative(sym), den * den);
  }
};

}  // namespace gcred
