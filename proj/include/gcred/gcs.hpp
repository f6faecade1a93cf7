#pragma once

#include "gcred/check_report.hpp"
#include "gcred/expr_matrix.hpp"
#include "gcred/section.hpp"

namespace gcred {

// Generalized complex structure in block form
//   ( A   Pi )
//   ( om  -A* )
// with A an endomorphism of TM, Pi a bivector and om a 2-form; the -A* block
// is derived, never stored.
class GCS {
 public:
  GCS() = default;
  GCS(ExprMatrix a, Form pi, Form om)
      : A_(std::move(a)), Pi_(std::move(pi)), omega_(std::move(om)) {}

  const ExprMatrix& A() const { return A_; }
  const Form& Pi() const { return Pi_; }
  const Form& omega() const { return omega_; }
  const FieldPtr& spec() const { return Pi_.spec(); }
  std::size_t dim() const { return Pi_.dim(); }

  // sharp map of the Pi block: xi -> i_xi Pi
  VectorField sharp(const std::vector<ScalarExpr>& xi) const {
    Form contracted = Pi_.interior(xi);
    return covector_components(contracted);  // degree-1 table, upper index
  }

  Section apply(const Section& e) const {
    Section r(e.spec);
    VectorField ax = A_.apply(e.X);
    VectorField px = sharp(e.xi);
    r.X = vf_add(ax, px);
    auto ox = covector_components(omega_.interior(e.X));
    auto at_xi = A_.transpose().apply(e.xi);
    for (std::size_t i = 0; i < r.dim(); ++i) r.xi[i] = ox[i] - at_xi[i];
    return r;
  }

  // Full 2n x 2n matrix acting on (X; xi) columns.
  ExprMatrix as_matrix() const {
    std::size_t n = dim();
    const FieldPtr& f = spec();
    ExprMatrix m(f, 2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        m.at(i, j) = A_.at(i, j);
        m.at(i, n + j) = Pi_.coeff({j, i});        // (sharp xi)^i = Pi^{ji} xi_j
        m.at(n + i, j) = omega_.coeff({j, i});     // (i_X om)_i = om_{ji} X^j
        m.at(n + i, n + j) = -A_.at(j, i);
      }
    return m;
  }

  static GCS from_matrix(const ExprMatrix& m) {
    std::size_t n = m.rows() / 2;
    const FieldPtr& f = m.spec();
    ExprMatrix a(f, n, n);
    Form pi(f, 2), om(f, 2);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        a.at(i, j) = m.at(i, j);
        if (j < i) {
          pi.add_term({j, i}, m.at(i, n + j));
          om.add_term({j, i}, m.at(n + i, j));
        }
      }
    return GCS(std::move(a), std::move(pi), std::move(om));
  }

  // Algebraic validity: J^2 = -Id and pairing preservation, entry-exact.
  CheckReport validate() const {
    CheckReport rep;
    std::size_t n = dim();
    ExprMatrix j = as_matrix();
    ExprMatrix sq = j * j + ExprMatrix::identity(spec(), 2 * n);
    rep.add("gcs.square", sq.is_zero(), "J^2 + Id residual");
    // J^T G J = G with G the split pairing
    ExprMatrix g(spec(), 2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      g.at(i, n + i) = ScalarExpr::constant(spec(), Rat(1, 2));
      g.at(n + i, i) = ScalarExpr::constant(spec(), Rat(1, 2));
    }
    ExprMatrix orth = j.transpose() * g * j - g;
    rep.add("gcs.orthogonal", orth.is_zero(), "pairing preservation residual");
    return rep;
  }

 private:
  ExprMatrix A_;
  Form Pi_;
  Form omega_;
};

// GCS of a symplectic form: (0, -om^{-1}, om).
inline GCS symplectic_gcs(const Form& om) {
  const FieldPtr& f = om.spec();
  std::size_t n = om.dim();
  ExprMatrix omap(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) omap.at(j, i) = om.coeff({i, j});
  auto inv = symbolic_inverse(omap);
  if (!inv) throw std::invalid_argument("symplectic_gcs: degenerate form");
  Form pi(f, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      pi.add_term({i, j}, -inv->at(j, i));  // Pi^{ij} = -(om^{-1})^{ij}
  return GCS(ExprMatrix(f, n, n), std::move(pi), om);
}

// Gauge action on the structure: J -> e^{sB} J e^{-sB} for s = +-1,
// realized on the block matrix.
inline GCS gauge_gcs(const Form& b, const GCS& j, int sign = 1) {
  const FieldPtr& f = j.spec();
  std::size_t n = j.dim();
  ExprMatrix eb(f, 2 * n, 2 * n), ebinv(f, 2 * n, 2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) {
    eb.at(i, i) = ScalarExpr::one(f);
    ebinv.at(i, i) = ScalarExpr::one(f);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t jj = 0; jj < n; ++jj) {
      ScalarExpr bij = b.coeff({jj, i});  // (i_X B)_i = B_{ji} X^j
      if (bij.is_zero_form()) continue;
      eb.at(n + i, jj) = bij * Rat(sign);
      ebinv.at(n + i, jj) = bij * Rat(-sign);
    }
  return GCS::from_matrix(eb * j.as_matrix() * ebinv);
}

// Nijenhuis tensor: N(e1,e2) = [Je1,Je2] - [e1,e2] - J([e1,Je2] + [Je1,e2]).
inline Section nijenhuis(const GCS& j, const Section& e1, const Section& e2, const Form& h) {
  Section je1 = j.apply(e1), je2 = j.apply(e2);
  return twisted_bracket(je1, je2, h) - twisted_bracket(e1, e2, h) -
         j.apply(twisted_bracket(e1, je2, h) + twisted_bracket(je1, e2, h));
}

// Canonical Poisson bivector of a GCS: sharp = pi o J o pi^*, i.e. the Pi
// block.
inline Form poisson_of_gcs(const GCS& j) { return j.Pi(); }

// Schouten self-bracket [Pi,Pi] of a bivector, as a trivector table; the
// Jacobi identity holds iff it vanishes.
inline Form schouten_self(const Form& pi) {
  const FieldPtr& f = pi.spec();
  std::size_t n = pi.dim();
  auto P = [&](std::size_t i, std::size_t j) { return pi.coeff({i, j}); };
  Form tri(f, 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        ScalarExpr acc = ScalarExpr::zero(f);
        for (std::size_t l = 0; l < n; ++l) {
          acc += P(l, i) * P(j, k).differentiate(l);
          acc += P(l, j) * P(k, i).differentiate(l);
          acc += P(l, k) * P(i, j).differentiate(l);
        }
        tri.add_term({i, j, k}, acc * Rat(2));
      }
  return tri;
}

}  // namespace gcred
