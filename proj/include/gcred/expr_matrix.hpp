#pragma once

#include "gcred/exact_linalg.hpp"
#include "gcred/scalar_expr.hpp"

namespace gcred {

// Rectangular matrix with ScalarExpr entries. Symbolic where possible, exact
// rational after evaluation at a point.
class ExprMatrix {
 public:
  ExprMatrix() = default;
  ExprMatrix(FieldPtr spec, std::size_t rows, std::size_t cols)
      : spec_(std::move(spec)), rows_(rows), cols_(cols),
        e_(rows * cols, ScalarExpr::zero(spec_)) {}

  static ExprMatrix identity(const FieldPtr& spec, std::size_t n) {
    ExprMatrix m(spec, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ScalarExpr::one(spec);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldPtr& spec() const { return spec_; }

  ScalarExpr& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const ScalarExpr& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  ExprMatrix operator+(const ExprMatrix& o) const {
    ExprMatrix r(spec_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
  }

  ExprMatrix operator-(const ExprMatrix& o) const {
    ExprMatrix r(spec_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
  }

  ExprMatrix operator*(const ExprMatrix& o) const {
    ExprMatrix r(spec_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        if (at(i, k).is_zero_form()) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          r.at(i, j) += at(i, k) * o.at(k, j);
      }
    return r;
  }

  ExprMatrix scaled(const ScalarExpr& f) const {
    ExprMatrix r(spec_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * f;
    return r;
  }

  ExprMatrix transpose() const {
    ExprMatrix r(spec_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  std::vector<ScalarExpr> apply(const std::vector<ScalarExpr>& x) const {
    std::vector<ScalarExpr> r(rows_, ScalarExpr::zero(spec_));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!at(i, j).is_zero_form()) r[i] += at(i, j) * x[j];
    return r;
  }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

  QMat eval(const Point& p) const {
    QMat m(rows_, QVec(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m[i][j] = at(i, j).eval(p);
    return m;
  }

 private:
  FieldPtr spec_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<ScalarExpr> e_;
};

// Exact column space and rank at a point.
inline std::pair<PointSubspace, std::size_t> rank_basis(const ExprMatrix& m, const Point& p) {
  QMat cols = q_transpose(m.eval(p));
  PointSubspace s(m.rows(), std::move(cols));
  return {s, s.dim()};
}

// Gaussian elimination over the expression field. Pivot selection uses the
// two-tier zero test, so it is probabilistically safe in the presence of
// transcendental generators.
struct SymbolicSolveResult {
  bool consistent = true;
  ExprMatrix solution;  // cols(A) x cols(B), free variables set to zero
  std::string message;
};

inline SymbolicSolveResult solve_linear(const ExprMatrix& a, const ExprMatrix& b) {
  const FieldPtr& spec = a.spec();
  std::size_t m = a.rows(), n = a.cols(), k = b.cols();
  // augmented working copy
  ExprMatrix w(spec, m, n + k);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) w.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < k; ++j) w.at(i, n + j) = b.at(i, j);
  }
  std::vector<std::size_t> pivot_of_col(n, SIZE_MAX);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t sel = SIZE_MAX;
    // prefer syntactically nonzero constants as pivots, then anything nonzero
    for (std::size_t i = r; i < m; ++i)
      if (w.at(i, c).is_constant_form() && !w.at(i, c).is_zero_form()) {
        sel = i;
        break;
      }
    if (sel == SIZE_MAX)
      for (std::size_t i = r; i < m; ++i)
        if (!w.at(i, c).is_zero() ) {
          sel = i;
          break;
        }
    if (sel == SIZE_MAX) continue;
    for (std::size_t j = 0; j < n + k; ++j) std::swap(w.at(r, j), w.at(sel, j));
    ScalarExpr inv = ScalarExpr::one(spec) / w.at(r, c);
    for (std::size_t j = 0; j < n + k; ++j) w.at(r, j) = w.at(r, j) * inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || w.at(i, c).is_zero_form()) continue;
      ScalarExpr f = w.at(i, c);
      for (std::size_t j = 0; j < n + k; ++j) w.at(i, j) = w.at(i, j) - f * w.at(r, j);
    }
    pivot_of_col[c] = r;
    ++r;
  }
  SymbolicSolveResult res;
  res.solution = ExprMatrix(spec, n, k);
  // consistency: rows beyond the pivot ones must have zero rhs
  for (std::size_t i = r; i < m; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (!w.at(i, n + j).is_zero()) {
        res.consistent = false;
        res.message = "inconsistent system: residual in row " + std::to_string(i);
        return res;
      }
  for (std::size_t c = 0; c < n; ++c) {
    if (pivot_of_col[c] == SIZE_MAX) continue;
    for (std::size_t j = 0; j < k; ++j) res.solution.at(c, j) = w.at(pivot_of_col[c], n + j);
  }
  return res;
}

inline std::optional<ExprMatrix> symbolic_inverse(const ExprMatrix& a) {
  auto res = solve_linear(a, ExprMatrix::identity(a.spec(), a.rows()));
  if (!res.consistent) return std::nullopt;
  // verify: a * inv == id (catches rank deficiency hidden by free variables)
  ExprMatrix check = a * res.solution - ExprMatrix::identity(a.spec(), a.rows());
  if (!check.is_zero()) return std::nullopt;
  return res.solution;
}

}  // namespace gcred
