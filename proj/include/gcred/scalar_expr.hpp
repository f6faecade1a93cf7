#pragma once

#include <cstdlib>
#include <map>

#include "gcred/field_spec.hpp"

namespace gcred {

// Element of the declared differential field: a rational function in the
// chart coordinates and the registered generators, kept in normal form.
class ScalarExpr {
 public:
  ScalarExpr() = default;
  ScalarExpr(FieldPtr spec, RatFunc f) : spec_(std::move(spec)), f_(std::move(f)) {}

  static ScalarExpr constant(FieldPtr spec, const Rat& c) {
    return ScalarExpr(std::move(spec), RatFunc::constant(c));
  }
  static ScalarExpr zero(FieldPtr spec) { return constant(std::move(spec), Rat(0)); }
  static ScalarExpr one(FieldPtr spec) { return constant(std::move(spec), Rat(1)); }
  static ScalarExpr symbol(FieldPtr spec, std::size_t sym) {
    return ScalarExpr(std::move(spec), RatFunc::variable(sym));
  }
  static ScalarExpr symbol(const FieldPtr& spec, const std::string& name) {
    return ScalarExpr(spec, RatFunc::variable(spec->index_of(name)));
  }

  const FieldPtr& spec() const { return spec_; }
  const RatFunc& fraction() const { return f_; }
  bool valid() const { return spec_ != nullptr; }

  bool is_zero_form() const { return f_.is_zero_form(); }
  bool is_polynomial() const { return f_.is_polynomial(); }
  bool is_constant_form() const { return f_.is_polynomial() && f_.num.is_constant(); }
  Rat constant_value() const { return f_.num.constant_value(); }

  bool uses_generators() const {
    return f_.max_sym() >= static_cast<int>(spec_->n_coords());
  }

  ScalarExpr operator-() const { return ScalarExpr(spec_, -f_); }
  ScalarExpr operator+(const ScalarExpr& o) const { return ScalarExpr(merge(o), f_ + o.f_); }
  ScalarExpr operator-(const ScalarExpr& o) const { return ScalarExpr(merge(o), f_ - o.f_); }
  ScalarExpr operator*(const ScalarExpr& o) const { return ScalarExpr(merge(o), f_ * o.f_); }
  ScalarExpr operator/(const ScalarExpr& o) const { return ScalarExpr(merge(o), f_ / o.f_); }
  ScalarExpr pow(int k) const { return ScalarExpr(spec_, f_.pow(k)); }

  ScalarExpr operator*(const Rat& c) const { return ScalarExpr(spec_, f_ * RatFunc::constant(c)); }
  ScalarExpr operator+(const Rat& c) const { return ScalarExpr(spec_, f_ + RatFunc::constant(c)); }

  ScalarExpr& operator+=(const ScalarExpr& o) { return *this = *this + o; }
  ScalarExpr& operator-=(const ScalarExpr& o) { return *this = *this - o; }
  ScalarExpr& operator*=(const ScalarExpr& o) { return *this = *this * o; }

  bool same_form(const ScalarExpr& o) const { return f_ == o.f_; }

  // Total derivative w.r.t. a coordinate, applying the generators' declared
  // rules by the chain rule.
  ScalarExpr differentiate(std::size_t coord) const {
    if (coord >= spec_->n_coords()) throw name_error("not a coordinate index");
    RatFunc total = f_.formal_derivative(coord);
    int top = f_.max_sym();
    for (std::size_t g = spec_->n_coords(); g <= static_cast<std::size_t>(std::max(top, -1)) && top >= 0; ++g) {
      if (!f_.uses(g)) continue;
      RatFunc rule = spec_->symbol_partial(g, coord);
      if (rule.is_zero_form()) continue;
      total = total + f_.formal_derivative(g) * rule;
    }
    return ScalarExpr(spec_, total);
  }

  ScalarExpr differentiate(const std::string& coord) const {
    return differentiate(spec_->coord_index(coord));
  }

  // Exact evaluation at a rational point (all symbols assigned).
  Rat eval(const Point& p) const {
    Rat d = f_.den.eval(p.v);
    if (d == 0) throw pole_error("pole at sample point");
    return f_.num.eval(p.v) / d;
  }

  double eval_double(const std::vector<double>& vals) const {
    double d = f_.den.eval_d(vals);
    if (d == 0) throw pole_error("pole at evaluation point");
    return f_.num.eval_d(vals) / d;
  }

  // Evaluation at user-supplied coordinate values. Exact when the expression
  // is rational in the coordinates alone; floating otherwise.
  struct EvalResult {
    bool exact = false;
    Rat rational;
    double approx = 0;
  };

  EvalResult eval_at_coords(const std::vector<Rat>& coord_vals) const {
    EvalResult r;
    if (!uses_generators()) {
      Point p;
      p.v = coord_vals;
      p.v.resize(spec_->n_syms(), Rat(0));
      r.exact = true;
      r.rational = eval(p);
      r.approx = r.rational.get_d();
      return r;
    }
    r.approx = eval_double(spec_->double_point(coord_vals));
    return r;
  }

  // Two-tier equality with zero: unique normal form decides generator-free
  // expressions; otherwise randomized evaluation at exactly parametrized
  // rational points (trig values from the half-angle parametrization, so the
  // declared algebraic relations hold exactly at every sample).
  bool is_zero() const {
    if (f_.is_zero_form()) return true;
    if (!uses_generators()) return false;
    const auto& cfg = spec_->sampler();
    Rng rng(cfg.seed);
    int done = 0, attempts = 0;
    while (done < cfg.count) {
      if (++attempts > cfg.count * 20)
        throw pole_error("is_zero: could not sample enough pole-free points");
      Point p = spec_->rational_point(rng);
      Rat d = f_.den.eval(p.v);
      if (d == 0) continue;  // resample
      if (f_.num.eval(p.v) != 0) return false;
      ++done;
    }
    return true;
  }

  // Substitution of every symbol by an expression over a target field.
  // Generator symbols must be given images as well (or be absent).
  ScalarExpr substitute(const FieldPtr& target, const std::vector<ScalarExpr>& images) const {
    auto sub_poly = [&](const Poly& p) {
      RatFunc acc;
      for (const auto& [m, c] : p.terms()) {
        RatFunc term = RatFunc::constant(c);
        for (std::size_t i = 0; i < m.e.size(); ++i) {
          if (m.e[i] == 0) continue;
          if (!images[i].valid())
            throw name_error("substitute: no image for symbol " + spec_->symbol_name(i));
          term = term * images[i].fraction().pow(static_cast<int>(m.e[i]));
        }
        acc = acc + term;
      }
      return acc;
    };
    RatFunc dn = sub_poly(f_.den);
    if (dn.is_zero_form()) throw pole_error("substitution hits a pole identically");
    return ScalarExpr(target, sub_poly(f_.num) / dn);
  }

  std::string to_string() const {
    auto names = spec_->symbol_names();
    std::string n = f_.num.to_string(names);
    if (f_.is_polynomial()) return n;
    return "(" + n + ")/(" + f_.den.to_string(names) + ")";
  }

 private:
  FieldPtr merge(const ScalarExpr& o) const {
    if (spec_ && o.spec_ && spec_ != o.spec_)
      throw name_error("mixing expressions from different fields");
    return spec_ ? spec_ : o.spec_;
  }

  FieldPtr spec_;
  RatFunc f_;
};

inline ScalarExpr operator*(const Rat& c, const ScalarExpr& e) { return e * c; }

}  // namespace gcred
