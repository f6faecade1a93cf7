#pragma once

#include "gcred/exact_linalg.hpp"
#include "gcred/forms.hpp"

namespace gcred {

// Generalized section X + xi of TM + T*M over the chart.
struct Section {
  FieldPtr spec;
  VectorField X;
  std::vector<ScalarExpr> xi;

  Section() = default;
  explicit Section(FieldPtr s)
      : spec(std::move(s)), X(zero_vector_field(spec)), xi(zero_vector_field(spec)) {}
  Section(FieldPtr s, VectorField x, std::vector<ScalarExpr> c)
      : spec(std::move(s)), X(std::move(x)), xi(std::move(c)) {}

  static Section tangent(const FieldPtr& s, std::size_t i) {
    Section e(s);
    e.X[i] = ScalarExpr::one(s);
    return e;
  }

  static Section cotangent(const FieldPtr& s, std::size_t i) {
    Section e(s);
    e.xi[i] = ScalarExpr::one(s);
    return e;
  }

  static Section from_vector(const VectorField& x) {
    Section e(x[0].spec());
    e.X = x;
    return e;
  }

  static Section from_one_form(const Form& w) {
    Section e(w.spec());
    e.xi = covector_components(w);
    return e;
  }

  std::size_t dim() const { return spec->n_coords(); }

  Section operator+(const Section& o) const {
    Section r = *this;
    for (std::size_t i = 0; i < dim(); ++i) {
      r.X[i] += o.X[i];
      r.xi[i] += o.xi[i];
    }
    return r;
  }

  Section operator-(const Section& o) const {
    Section r = *this;
    for (std::size_t i = 0; i < dim(); ++i) {
      r.X[i] -= o.X[i];
      r.xi[i] -= o.xi[i];
    }
    return r;
  }

  Section operator-() const { return scaled(ScalarExpr::constant(spec, Rat(-1))); }

  Section scaled(const ScalarExpr& f) const {
    Section r = *this;
    for (std::size_t i = 0; i < dim(); ++i) {
      r.X[i] = r.X[i] * f;
      r.xi[i] = r.xi[i] * f;
    }
    return r;
  }

  Form covector_form() const { return one_form(spec, xi); }

  bool is_zero_form() const {
    for (std::size_t i = 0; i < dim(); ++i)
      if (!X[i].is_zero_form() || !xi[i].is_zero_form()) return false;
    return true;
  }

  bool is_zero() const {
    for (std::size_t i = 0; i < dim(); ++i)
      if (!X[i].is_zero() || !xi[i].is_zero()) return false;
    return true;
  }

  QVec eval(const Point& p) const {
    QVec v(2 * dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      v[i] = X[i].eval(p);
      v[dim() + i] = xi[i].eval(p);
    }
    return v;
  }
};

// <X1+xi1, X2+xi2> = 1/2 (xi2(X1) + xi1(X2))
inline ScalarExpr pairing(const Section& a, const Section& b) {
  ScalarExpr acc = ScalarExpr::zero(a.spec);
  for (std::size_t i = 0; i < a.dim(); ++i) acc += b.xi[i] * a.X[i] + a.xi[i] * b.X[i];
  return acc * Rat(1, 2);
}

// [X1+xi1, X2+xi2]_H = [X1,X2] + L_{X1} xi2 - i_{X2} d xi1 + i_{X2} i_{X1} H
inline Section twisted_bracket(const Section& a, const Section& b, const Form& h) {
  Section r(a.spec);
  r.X = lie_bracket(a.X, b.X);
  Form cov = b.covector_form().lie_derivative(a.X) -
             a.covector_form().exterior_derivative().interior(b.X) +
             h.interior(a.X).interior(b.X);
  r.xi = covector_components(cov);
  return r;
}

// D f = 0 + (1/2) df
inline Section d_operator(const ScalarExpr& f) {
  Section r(f.spec());
  for (std::size_t i = 0; i < r.dim(); ++i) r.xi[i] = f.differentiate(i) * Rat(1, 2);
  return r;
}

// e^B (X + xi) = X + xi + i_X B
inline Section gauge_section(const Form& b, const Section& e) {
  Section r = e;
  Form extra = b.interior(e.X);
  auto add = covector_components(extra);
  for (std::size_t i = 0; i < r.dim(); ++i) r.xi[i] += add[i];
  return r;
}

// Twist paired with H under the gauge identity:
// [e^B e1, e^B e2]_H = e^B [e1, e2]_{H + dB}.
inline Form gauge_twist(const Form& b, const Form& h) {
  return h + b.exterior_derivative();
}

// Split pairing of the generalized tangent bundle as a 2n x 2n matrix.
inline QMat split_pairing_matrix(std::size_t n) {
  QMat g(2 * n, QVec(2 * n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    g[i][n + i] = Rat(1, 2);
    g[n + i][i] = Rat(1, 2);
  }
  return g;
}

}  // namespace gcred
