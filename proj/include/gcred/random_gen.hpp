#pragma once

#include <functional>

#include "gcred/section.hpp"

namespace gcred {

// Deterministic generators for the property suites: small polynomial data in
// the chart coordinates.
inline ScalarExpr random_polynomial(const FieldPtr& f, Rng& rng, int max_degree = 2,
                                    int terms = 3, long coeff_max = 4) {
  ScalarExpr acc = ScalarExpr::zero(f);
  for (int t = 0; t < terms; ++t) {
    ScalarExpr term = ScalarExpr::constant(f, rng.rational(coeff_max, 2));
    for (std::size_t v = 0; v < f->n_coords(); ++v) {
      int d = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_degree + 1)));
      if (d > 0) term = term * ScalarExpr::symbol(f, v).pow(d);
    }
    acc += term;
  }
  return acc;
}

inline Section random_section(const FieldPtr& f, Rng& rng, int max_degree = 2) {
  Section e(f);
  for (std::size_t i = 0; i < f->n_coords(); ++i) {
    e.X[i] = random_polynomial(f, rng, max_degree, 2);
    e.xi[i] = random_polynomial(f, rng, max_degree, 2);
  }
  return e;
}

inline Form random_form(const FieldPtr& f, Rng& rng, int degree, int max_degree = 2) {
  Form w(f, degree);
  std::size_t n = f->n_coords();
  std::vector<std::size_t> idx(degree);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == idx.size()) {
      w.add_term(idx, random_polynomial(f, rng, max_degree, 2));
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
  return w;
}

}  // namespace gcred
