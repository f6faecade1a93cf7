#pragma once

#include <optional>

#include "gcred/numeric.hpp"

#include <vector>

namespace gcred {

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;  // row-major

inline QMat q_identity(std::size_t n) {
  QMat m(n, QVec(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline QMat q_transpose(const QMat& m) {
  if (m.empty()) return {};
  QMat t(m[0].size(), QVec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[0].size(); ++j) t[j][i] = m[i][j];
  return t;
}

inline QMat q_mul(const QMat& a, const QMat& b) {
  QMat r(a.size(), QVec(b.empty() ? 0 : b[0].size(), Rat(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

inline QVec q_apply(const QMat& a, const QVec& x) {
  QVec r(a.size(), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (a[i][j] != 0) r[i] += a[i][j] * x[j];
  return r;
}

// In-place reduced row echelon form; returns the pivot column of each
// surviving row. Zero rows are erased, so the result is the canonical basis
// of the row space.
inline std::vector<std::size_t> rref(QMat& m) {
  std::vector<std::size_t> pivots;
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[r], m[sel]);
    Rat inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

inline std::size_t q_rank(QMat m) {
  rref(m);
  return m.size();
}

// Basis of { x : m x = 0 }, canonicalized.
inline QMat q_kernel(QMat m, std::size_t ncols) {
  auto pivots = rref(m);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : pivots) is_pivot[p] = true;
  QMat out;
  for (std::size_t free_c = 0; free_c < ncols; ++free_c) {
    if (is_pivot[free_c]) continue;
    QVec v(ncols, Rat(0));
    v[free_c] = 1;
    for (std::size_t r = 0; r < m.size(); ++r) v[pivots[r]] = -m[r][free_c];
    out.push_back(std::move(v));
  }
  rref(out);
  return out;
}

// Solves a x = b exactly; empty optional when inconsistent.
inline std::optional<QVec> q_solve(QMat a, QVec b) {
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
  auto pivots = rref(a);
  QVec x(cols, Rat(0));
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (pivots[r] == cols) return std::nullopt;  // 0 = 1 row
    x[pivots[r]] = a[r][cols];
  }
  return x;
}

inline std::optional<QMat> q_inverse(const QMat& a) {
  std::size_t n = a.size();
  QMat aug = a;
  QMat id = q_identity(n);
  for (std::size_t i = 0; i < n; ++i)
    aug[i].insert(aug[i].end(), id[i].begin(), id[i].end());
  auto pivots = rref(aug);
  if (aug.size() < n) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    if (pivots[i] != i) return std::nullopt;
  QMat inv(n, QVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

// Exact subspace of Q^n at a point, stored in canonical (reduced echelon)
// form so equal subspaces compare syntactically equal.
struct PointSubspace {
  std::size_t ambient = 0;
  QMat basis;  // canonical rows, each a vector of length `ambient`

  PointSubspace() = default;
  PointSubspace(std::size_t amb, QMat vectors) : ambient(amb), basis(std::move(vectors)) {
    rref(basis);
  }

  std::size_t dim() const { return basis.size(); }

  bool contains(const QVec& v) const {
    QMat m = basis;
    m.push_back(v);
    return q_rank(std::move(m)) == dim();
  }

  bool contains(const PointSubspace& o) const {
    QMat m = basis;
    for (const auto& v : o.basis) m.push_back(v);
    return q_rank(std::move(m)) == dim();
  }

  bool operator==(const PointSubspace& o) const {
    return ambient == o.ambient && basis == o.basis;
  }
};

inline PointSubspace span_of(std::size_t ambient, QMat vectors) {
  return PointSubspace(ambient, std::move(vectors));
}

inline PointSubspace subspace_sum(const PointSubspace& a, const PointSubspace& b) {
  if (a.ambient != b.ambient) throw std::invalid_argument("subspace_sum: dimension mismatch");
  QMat m = a.basis;
  for (const auto& v : b.basis) m.push_back(v);
  return PointSubspace(a.ambient, std::move(m));
}

inline PointSubspace subspace_meet(const PointSubspace& a, const PointSubspace& b) {
  if (a.ambient != b.ambient) throw std::invalid_argument("subspace_meet: dimension mismatch");
  // x in meet iff x = sum c_i a_i = sum d_j b_j: kernel of [A^T | -B^T]
  std::size_t ra = a.dim(), rb = b.dim();
  QMat sys(a.ambient, QVec(ra + rb, Rat(0)));
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t r = 0; r < a.ambient; ++r) sys[r][i] = a.basis[i][r];
  for (std::size_t j = 0; j < rb; ++j)
    for (std::size_t r = 0; r < a.ambient; ++r) sys[r][ra + j] = -b.basis[j][r];
  QMat ker = q_kernel(std::move(sys), ra + rb);
  QMat vecs;
  for (const auto& k : ker) {
    QVec v(a.ambient, Rat(0));
    for (std::size_t i = 0; i < ra; ++i)
      for (std::size_t r = 0; r < a.ambient; ++r) v[r] += k[i] * a.basis[i][r];
    vecs.push_back(std::move(v));
  }
  return PointSubspace(a.ambient, std::move(vecs));
}

inline std::pair<PointSubspace, PointSubspace> meet_join(const PointSubspace& a,
                                                         const PointSubspace& b) {
  return {subspace_meet(a, b), subspace_sum(a, b)};
}

// Orthogonal complement w.r.t. a symmetric bilinear form g (must be
// non-degenerate).
inline PointSubspace pairing_perp(const PointSubspace& a, const QMat& g) {
  if (q_rank(g) != a.ambient) throw std::invalid_argument("pairing_perp: degenerate form");
  QMat cond;  // rows: basis_i^T g
  for (const auto& v : a.basis) {
    QVec row(a.ambient, Rat(0));
    for (std::size_t j = 0; j < a.ambient; ++j)
      for (std::size_t i = 0; i < a.ambient; ++i) row[j] += v[i] * g[i][j];
    cond.push_back(std::move(row));
  }
  return PointSubspace(a.ambient, q_kernel(std::move(cond), a.ambient));
}

// Quotient a/k: chosen representatives plus the projection matrix sending a
// vector of `a` to its class coordinates (kernel exactly k).
struct QuotientData {
  QMat representatives;  // r vectors completing k to a basis of a
  QMat projection;       // r x ambient, defined on a
};

inline QuotientData subspace_quotient(const PointSubspace& a, const PointSubspace& k) {
  if (!a.contains(k)) throw std::invalid_argument("quotient: k not contained in a");
  QMat reps;
  QMat acc = k.basis;
  std::size_t base = k.dim();
  for (const auto& v : a.basis) {
    QMat trial = acc;
    trial.push_back(v);
    if (q_rank(trial) > acc.size()) {
      acc.push_back(v);
      reps.push_back(v);
      rref(acc);
    }
  }
  // coordinates via pseudo-inverse on the row space: x = (M M^T)^{-1} M v
  QMat m = reps;
  for (const auto& v : k.basis) m.push_back(v);
  QMat mmt = q_mul(m, q_transpose(m));
  auto inv = q_inverse(mmt);
  if (!inv) throw std::logic_error("quotient: gram matrix not invertible");
  QMat coords = q_mul(*inv, m);  // (r + dim k) x ambient
  QMat proj(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i) proj[i] = coords[i];
  return {std::move(reps), std::move(proj)};
}

}  // namespace gcred
