#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <functional>

#include "gcred/expr_matrix.hpp"
#include "gcred/expr_parser.hpp"

using namespace gcred;

namespace {

QVec unit(std::size_t n, std::size_t i) {
  QVec v(n, Rat(0));
  v[i] = 1;
  return v;
}

QMat random_qmat(Rng& rng, std::size_t r, std::size_t c) {
  QMat m(r, QVec(c));
  for (auto& row : m)
    for (auto& x : row) x = rng.rational(5, 3);
  return m;
}

// Independent rank oracle: maximal size of a non-vanishing minor.
Rat det_naive(const QMat& m, const std::vector<std::size_t>& rows,
              const std::vector<std::size_t>& cols) {
  if (rows.size() == 1) return m[rows[0]][cols[0]];
  Rat acc(0);
  int sign = 1;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    std::vector<std::size_t> sub_cols;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (j != k) sub_cols.push_back(cols[j]);
    if (m[rows[0]][cols[k]] != 0)
      acc += sign * m[rows[0]][cols[k]] * det_naive(m, sub_rows, sub_cols);
    sign = -sign;
  }
  return acc;
}

std::size_t rank_by_minors(const QMat& m) {
  std::size_t nr = m.size(), nc = m.empty() ? 0 : m[0].size();
  std::size_t best = 0;
  // enumerate square submatrices (fine at these sizes)
  std::function<void(std::vector<std::size_t>, std::size_t, std::size_t,
                     std::vector<std::size_t>, std::size_t)>
      dummy;
  for (std::size_t k = std::min(nr, nc); k >= 1; --k) {
    std::vector<bool> rsel(nr, false), csel(nc, false);
    std::fill(rsel.begin(), rsel.begin() + k, true);
    bool found = false;
    do {
      std::vector<std::size_t> rows;
      for (std::size_t i = 0; i < nr; ++i)
        if (rsel[i]) rows.push_back(i);
      std::vector<bool> cs(nc, false);
      std::fill(cs.begin(), cs.begin() + k, true);
      do {
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j < nc; ++j)
          if (cs[j]) cols.push_back(j);
        if (det_naive(m, rows, cols) != 0) {
          found = true;
          break;
        }
      } while (std::prev_permutation(cs.begin(), cs.end()));
      if (found) break;
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
    if (found) {
      best = k;
      break;
    }
  }
  return best;
}

QMat split_pairing(std::size_t n) {  // on R^n + R^n*
  QMat g(2 * n, QVec(2 * n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    g[i][n + i] = Rat(1, 2);
    g[n + i][i] = Rat(1, 2);
  }
  return g;
}

}  // namespace

TEST_CASE("rank_basis on simple matrices") {
  auto f = std::make_shared<FieldSpec>(std::vector<std::string>{"x1", "y1"});
  Point p;
  p.v = {Rat(1), Rat(2)};

  SECTION("identity") {
    auto m = ExprMatrix::identity(f, 4);
    auto [s, r] = rank_basis(m, p);
    CHECK(r == 4);
  }
  SECTION("zero") {
    ExprMatrix m(f, 3, 3);
    auto [s, r] = rank_basis(m, p);
    CHECK(r == 0);
  }
  SECTION("holomorphic Poisson block rank jump") {
    // y1*(dx1^dx2 - dy1^dy2) - x1*(dy1^dx2 + dx1^dy2) as a 4x4 matrix
    ExprParser pr(f);
    auto x1 = pr.parse("x1"), y1 = pr.parse("y1"), z = pr.parse("0");
    ExprMatrix m(f, 4, 4);
    // order: x1,y1,x2,y2 ; antisymmetric coefficients
    m.at(0, 2) = y1; m.at(2, 0) = -y1;
    m.at(1, 3) = -y1; m.at(3, 1) = y1;
    m.at(1, 2) = -x1; m.at(2, 1) = x1;
    m.at(0, 3) = -x1; m.at(3, 0) = x1;
    Point origin; origin.v = {Rat(0), Rat(0)};
    CHECK(rank_basis(m, origin).second == 0);
    Point q; q.v = {Rat(0), Rat(1)};
    CHECK(rank_basis(m, q).second == 4);
  }
}

TEST_CASE("rank agrees with minor-expansion oracle") {
  Rng rng(2024);
  auto f = std::make_shared<FieldSpec>(std::vector<std::string>{"t"});
  for (int trial = 0; trial < 12; ++trial) {
    std::size_t n = 4 + rng.below(3);  // 4..6
    QMat m = random_qmat(rng, n, n);
    if (trial % 3 == 0) m[n - 1] = m[0];  // force deficiency sometimes
    CHECK(q_rank(m) == rank_by_minors(m));
  }
}

TEST_CASE("meet and join") {
  SECTION("coordinate planes") {
    auto a = span_of(4, {unit(4, 0)});
    auto b = span_of(4, {unit(4, 1)});
    auto [m, j] = meet_join(a, b);
    CHECK(m.dim() == 0);
    CHECK(j.dim() == 2);
    CHECK(j.contains(unit(4, 0)));
    CHECK(j.contains(unit(4, 1)));
  }
  SECTION("equal subspaces") {
    auto a = span_of(4, {unit(4, 0), unit(4, 2)});
    auto [m, j] = meet_join(a, a);
    CHECK(m == a);
    CHECK(j == a);
  }
  SECTION("modular identity on random subspaces") {
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
      auto a = span_of(4, random_qmat(rng, 3, 4));
      auto b = span_of(4, random_qmat(rng, 2, 4));
      auto [m, j] = meet_join(a, b);
      CHECK(m.dim() + j.dim() == a.dim() + b.dim());
      CHECK(j.contains(a));
      CHECK(j.contains(b));
      CHECK(a.contains(m));
      CHECK(b.contains(m));
    }
  }
  SECTION("dimension mismatch") {
    auto a = span_of(4, {unit(4, 0)});
    auto b = span_of(3, {unit(3, 0)});
    CHECK_THROWS_AS(subspace_sum(a, b), std::invalid_argument);
  }
}

TEST_CASE("pairing orthogonals") {
  QMat g = split_pairing(2);
  SECTION("T* is isotropic: its perp is itself") {
    auto tstar = span_of(4, {unit(4, 2), unit(4, 3)});
    auto perp = pairing_perp(tstar, g);
    CHECK(perp == tstar);
  }
  SECTION("graph of a 2-form is Lagrangian") {
    // b = 3 dx^dy on R^2: graph {(X, i_X b)} = span{(1,0,0,3),(0,1,-3,0)}
    auto graph = span_of(4, {QVec{Rat(1), Rat(0), Rat(0), Rat(3)},
                             QVec{Rat(0), Rat(1), Rat(-3), Rat(0)}});
    // oracle: pairing of the two basis vectors vanishes (antisymmetry of b)
    auto perp = pairing_perp(graph, g);
    CHECK(perp == graph);
  }
  SECTION("whole space") {
    auto all = span_of(4, q_identity(4));
    CHECK(pairing_perp(all, g).dim() == 0);
  }
  SECTION("perp dims and involution on random subspaces") {
    Rng rng(99);
    for (int trial = 0; trial < 100; ++trial) {
      std::size_t k = 1 + rng.below(3);
      auto a = span_of(4, random_qmat(rng, k, 4));
      auto p = pairing_perp(a, g);
      CHECK(a.dim() + p.dim() == 4);
      CHECK(pairing_perp(p, g) == a);
    }
  }
  SECTION("degenerate form rejected") {
    QMat g0(4, QVec(4, Rat(0)));
    auto a = span_of(4, {unit(4, 0)});
    CHECK_THROWS_AS(pairing_perp(a, g0), std::invalid_argument);
  }
}

TEST_CASE("subspace quotient") {
  SECTION("trivial kernel") {
    auto a = span_of(4, q_identity(4));
    auto k = span_of(4, QMat{});
    auto q = subspace_quotient(a, k);
    CHECK(q.representatives.size() == 4);
    // projection restricted to a is the identity in these coordinates
    for (std::size_t i = 0; i < 4; ++i) {
      QVec cls = q_apply(q.projection, unit(4, i));
      std::size_t nonzero = 0;
      for (auto& c : cls)
        if (c != 0) ++nonzero;
      CHECK(nonzero == 1);
    }
  }
  SECTION("kernel exactly k") {
    Rng rng(3);
    auto a = span_of(4, q_identity(4));
    auto k = span_of(4, random_qmat(rng, 2, 4));
    auto q = subspace_quotient(a, k);
    CHECK(q.representatives.size() == 4 - k.dim());
    for (const auto& kv : k.basis) {
      QVec cls = q_apply(q.projection, kv);
      for (const auto& c : cls) CHECK(c == 0);
    }
    for (const auto& rv : q.representatives) {
      QVec cls = q_apply(q.projection, rv);
      bool nonzero = false;
      for (const auto& c : cls) nonzero = nonzero || c != 0;
      CHECK(nonzero);
    }
  }
  SECTION("a = k gives zero-dimensional quotient") {
    auto a = span_of(4, {unit(4, 1)});
    auto q = subspace_quotient(a, a);
    CHECK(q.representatives.empty());
  }
  SECTION("k not contained in a") {
    auto a = span_of(4, {unit(4, 0)});
    auto k = span_of(4, {unit(4, 1)});
    CHECK_THROWS_AS(subspace_quotient(a, k), std::invalid_argument);
  }
}

TEST_CASE("annihilator identity from the footnote") {
  // D cap T* = (pi(D^perp))^0 for random subspaces D of T + T*
  Rng rng(17);
  QMat g = split_pairing(2);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t k = 1 + rng.below(3);
    auto d = span_of(4, random_qmat(rng, k, 4));
    auto dperp = pairing_perp(d, g);
    // pi(D^perp): first-two components
    QMat proj;
    for (const auto& v : dperp.basis) proj.push_back({v[0], v[1]});
    auto image = span_of(2, std::move(proj));
    // annihilator of image inside T*
    QMat ann_rows;
    for (const auto& v : image.basis) ann_rows.push_back(v);
    QMat ann = ann_rows.empty() ? q_identity(2) : q_kernel(std::move(ann_rows), 2);
    QMat lifted;
    for (const auto& a : ann) lifted.push_back({Rat(0), Rat(0), a[0], a[1]});
    auto rhs = span_of(4, std::move(lifted));
    auto tstar = span_of(4, {unit(4, 2), unit(4, 3)});
    auto lhs = subspace_meet(d, tstar);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("symbolic solve") {
  auto f = std::make_shared<FieldSpec>(std::vector<std::string>{"x", "y"});
  ExprParser p(f);
  SECTION("invertible system with symbolic entries") {
    ExprMatrix a(f, 2, 2);
    a.at(0, 0) = p.parse("x");
    a.at(0, 1) = p.parse("1");
    a.at(1, 0) = p.parse("0");
    a.at(1, 1) = p.parse("y");
    auto inv = symbolic_inverse(a);
    REQUIRE(inv.has_value());
    CHECK((a * *inv - ExprMatrix::identity(f, 2)).is_zero());
  }
  SECTION("inconsistent system detected") {
    ExprMatrix a(f, 2, 1);
    a.at(0, 0) = p.parse("1");
    a.at(1, 0) = p.parse("1");
    ExprMatrix b(f, 2, 1);
    b.at(0, 0) = p.parse("x");
    b.at(1, 0) = p.parse("x+1");
    auto res = solve_linear(a, b);
    CHECK_FALSE(res.consistent);
  }
  SECTION("solution reproduces rhs") {
    Rng rng(8);
    ExprMatrix a(f, 3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        a.at(i, j) = ScalarExpr::constant(f, rng.rational(4, 2));
    ExprMatrix b(f, 3, 1);
    b.at(0, 0) = p.parse("x");
    b.at(1, 0) = p.parse("y^2");
    b.at(2, 0) = p.parse("x*y");
    auto res = solve_linear(a, b);
    if (res.consistent) {
      ExprMatrix r = a * res.solution - b;
      CHECK(r.is_zero());
    }
  }
}
