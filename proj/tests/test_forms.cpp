#include <catch2/catch_amalgamated.hpp>

#include "gcred/expr_parser.hpp"
#include "gcred/forms.hpp"
#include "gcred/random_gen.hpp"

using namespace gcred;

namespace {
FieldPtr r4() {
  return std::make_shared<FieldSpec>(std::vector<std::string>{"x1", "y1", "x2", "y2"});
}
}  // namespace

TEST_CASE("exterior algebra basics") {
  auto f = r4();
  ExprParser p(f);

  SECTION("antisymmetry of the coefficient table") {
    Form w(f, 2);
    w.add_term({1, 0}, p.parse("x1"));
    CHECK(w.coeff({0, 1}).same_form(p.parse("-x1")));
    CHECK(w.coeff({1, 1}).is_zero_form());
  }

  SECTION("d squares to zero") {
    Rng rng(12);
    for (int t = 0; t < 5; ++t) {
      Form w = random_form(f, rng, 1);
      CHECK(w.exterior_derivative().exterior_derivative().is_zero_form());
      Form v = random_form(f, rng, 2);
      CHECK(v.exterior_derivative().exterior_derivative().is_zero_form());
    }
  }

  SECTION("d on a product rule sample") {
    // d(x1 dy1) = dx1 ^ dy1
    Form w(f, 1);
    w.add_term({1}, p.parse("x1"));
    Form dw = w.exterior_derivative();
    CHECK(dw.coeff({0, 1}).same_form(p.parse("1")));
  }

  SECTION("interior product is an antiderivation") {
    Rng rng(77);
    auto x = coordinate_field(f, 0);
    for (int t = 0; t < 4; ++t) {
      Form a = random_form(f, rng, 1);
      Form b = random_form(f, rng, 2);
      Form lhs = a.wedge(b).interior(x);
      Form rhs = a.interior(x).wedge(b) - a.wedge(b.interior(x));
      CHECK((lhs - rhs).is_zero_form());
    }
  }

  SECTION("Cartan formula matches the component Lie derivative of 1-forms") {
    Rng rng(5);
    for (int t = 0; t < 5; ++t) {
      VectorField x{random_polynomial(f, rng), random_polynomial(f, rng),
                    random_polynomial(f, rng), random_polynomial(f, rng)};
      Form xi = random_form(f, rng, 1);
      Form lie = xi.lie_derivative(x);
      // components: (L_X xi)_i = X^j d_j xi_i + xi_j d_i X^j
      for (std::size_t i = 0; i < 4; ++i) {
        ScalarExpr want = ScalarExpr::zero(f);
        for (std::size_t j = 0; j < 4; ++j)
          want += x[j] * xi.coeff({i}).differentiate(j) + xi.coeff({j}) * x[j].differentiate(i);
        CHECK((lie.coeff({i}) - want).is_zero_form());
      }
    }
  }

  SECTION("evaluation against shuffled arguments") {
    Form w(f, 2);
    w.add_term({0, 1}, p.parse("1"));
    auto e0 = coordinate_field(f, 0), e1 = coordinate_field(f, 1);
    CHECK(w.apply({e0, e1}).constant_value() == 1);
    CHECK(w.apply({e1, e0}).constant_value() == -1);
    CHECK(w.apply({e0, e0}).is_zero_form());
  }

  SECTION("lie bracket of vector fields") {
    // [d_x1, x1 d_x2] = d_x2
    auto a = coordinate_field(f, 0);
    auto b = vf_scale(coordinate_field(f, 2), p.parse("x1"));
    auto c = lie_bracket(a, b);
    CHECK(c[2].same_form(p.parse("1")));
    CHECK(c[0].is_zero_form());
  }
}
