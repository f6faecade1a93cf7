#pragma once

#include <vector>

#include "gcred/scalar_expr.hpp"

namespace gcred {

using VectorField = std::vector<ScalarExpr>;  // components over the coordinates

// Antisymmetric coefficient table over the chart coordinates: differential
// k-forms, and with upper indices read in place of lower ones, k-vectors
// (bivector fields reuse this storage).
class Form {
 public:
  Form() = default;
  Form(FieldPtr spec, int degree) : spec_(std::move(spec)), degree_(degree) {}

  static Form scalar(const ScalarExpr& f) {
    Form w(f.spec(), 0);
    if (!f.is_zero_form()) w.t_[{}] = f;
    return w;
  }

  const FieldPtr& spec() const { return spec_; }
  int degree() const { return degree_; }
  std::size_t dim() const { return spec_->n_coords(); }
  const std::map<std::vector<std::size_t>, ScalarExpr>& terms() const { return t_; }

  bool is_zero_form() const {
    for (const auto& [i, c] : t_)
      if (!c.is_zero_form()) return false;
    return true;
  }

  bool is_zero() const {
    for (const auto& [i, c] : t_)
      if (!c.is_zero()) return false;
    return true;
  }

  // Adds c * dx_{idx[0]} ^ ... ^ dx_{idx[k-1]} with the sign of the sorting
  // permutation; repeated indices contribute nothing.
  void add_term(std::vector<std::size_t> idx, ScalarExpr c) {
    int sign = sort_sign(idx);
    if (sign == 0 || c.is_zero_form()) return;
    if (sign < 0) c = -c;
    auto it = t_.find(idx);
    if (it == t_.end()) {
      t_.emplace(std::move(idx), std::move(c));
    } else {
      it->second += c;
      if (it->second.is_zero_form()) t_.erase(it);
    }
  }

  ScalarExpr coeff(std::vector<std::size_t> idx) const {
    int sign = sort_sign(idx);
    if (sign == 0) return ScalarExpr::zero(spec_);
    auto it = t_.find(idx);
    if (it == t_.end()) return ScalarExpr::zero(spec_);
    return sign > 0 ? it->second : -it->second;
  }

  Form operator+(const Form& o) const {
    Form r = *this;
    for (const auto& [i, c] : o.t_) r.add_term(i, c);
    return r;
  }

  Form operator-(const Form& o) const {
    Form r = *this;
    for (const auto& [i, c] : o.t_) r.add_term(i, -c);
    return r;
  }

  Form operator-() const {
    Form r(spec_, degree_);
    for (const auto& [i, c] : t_) r.t_[i] = -c;
    return r;
  }

  Form scaled(const ScalarExpr& f) const {
    Form r(spec_, degree_);
    for (const auto& [i, c] : t_) {
      auto v = c * f;
      if (!v.is_zero_form()) r.t_[i] = v;
    }
    return r;
  }

  Form wedge(const Form& o) const {
    Form r(spec_, degree_ + o.degree_);
    for (const auto& [i, c] : t_)
      for (const auto& [j, d] : o.t_) {
        std::vector<std::size_t> idx = i;
        idx.insert(idx.end(), j.begin(), j.end());
        r.add_term(std::move(idx), c * d);
      }
    return r;
  }

  Form exterior_derivative() const {
    Form r(spec_, degree_ + 1);
    for (const auto& [i, c] : t_)
      for (std::size_t v = 0; v < dim(); ++v) {
        ScalarExpr dc = c.differentiate(v);
        if (dc.is_zero_form()) continue;
        std::vector<std::size_t> idx;
        idx.push_back(v);
        idx.insert(idx.end(), i.begin(), i.end());
        r.add_term(std::move(idx), std::move(dc));
      }
    return r;
  }

  Form interior(const VectorField& x) const {
    Form r(spec_, degree_ - 1);
    for (const auto& [i, c] : t_)
      for (std::size_t p = 0; p < i.size(); ++p) {
        if (x[i[p]].is_zero_form()) continue;
        std::vector<std::size_t> idx;
        for (std::size_t q = 0; q < i.size(); ++q)
          if (q != p) idx.push_back(i[q]);
        ScalarExpr v = c * x[i[p]];
        if (p % 2 == 1) v = -v;
        r.add_term(std::move(idx), std::move(v));
      }
    return r;
  }

  Form lie_derivative(const VectorField& x) const {  // Cartan formula
    return interior(x).exterior_derivative() + exterior_derivative().interior(x);
  }

  ScalarExpr apply(const std::vector<VectorField>& xs) const {
    Form w = *this;
    for (const auto& x : xs) w = w.interior(x);
    return w.degree() == 0 ? w.scalar_value() : ScalarExpr::zero(spec_);
  }

  ScalarExpr scalar_value() const {
    auto it = t_.find({});
    return it == t_.end() ? ScalarExpr::zero(spec_) : it->second;
  }

 private:
  static int sort_sign(std::vector<std::size_t>& idx) {
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i)
      for (std::size_t j = i; j > 0 && idx[j - 1] > idx[j]; --j) {
        std::swap(idx[j - 1], idx[j]);
        sign = -sign;
      }
    for (std::size_t i = 1; i < idx.size(); ++i)
      if (idx[i - 1] == idx[i]) return 0;
    return sign;
  }

  FieldPtr spec_;
  int degree_ = 0;
  std::map<std::vector<std::size_t>, ScalarExpr> t_;
};

inline VectorField zero_vector_field(const FieldPtr& spec) {
  return VectorField(spec->n_coords(), ScalarExpr::zero(spec));
}

inline VectorField coordinate_field(const FieldPtr& spec, std::size_t i) {
  auto v = zero_vector_field(spec);
  v[i] = ScalarExpr::one(spec);
  return v;
}

inline VectorField vf_add(const VectorField& a, const VectorField& b) {
  VectorField r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline VectorField vf_scale(const VectorField& a, const ScalarExpr& f) {
  VectorField r = a;
  for (auto& c : r) c = c * f;
  return r;
}

inline VectorField lie_bracket(const VectorField& a, const VectorField& b) {
  const FieldPtr& spec = a.empty() ? nullptr : a[0].spec();
  VectorField r = zero_vector_field(spec);
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (!a[j].is_zero_form()) r[i] += a[j] * b[i].differentiate(j);
      if (!b[j].is_zero_form()) r[i] -= b[j] * a[i].differentiate(j);
    }
  return r;
}

inline Form one_form(const FieldPtr& spec, const std::vector<ScalarExpr>& xi) {
  Form w(spec, 1);
  for (std::size_t i = 0; i < xi.size(); ++i) w.add_term({i}, xi[i]);
  return w;
}

inline std::vector<ScalarExpr> covector_components(const Form& w) {
  std::vector<ScalarExpr> xi(w.dim(), ScalarExpr::zero(w.spec()));
  for (std::size_t i = 0; i < w.dim(); ++i) xi[i] = w.coeff({i});
  return xi;
}

inline Form d_scalar(const ScalarExpr& f) {
  return Form::scalar(f).exterior_derivative();
}

}  // namespace gcred
