#include <doctest.h>

#include "logder/errors.hpp"
#include "logder/poly.hpp"
#include "random_instances.hpp"

using namespace logder;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);

HomogPoly P(const char* text, const FieldSpec& spec = Q) { return parse_poly(text, spec); }
FieldElement n(long v, const FieldSpec& spec = Q) { return FieldElement::from_integer(v, spec); }
LinearForm form(long a, long b, const FieldSpec& spec = Q) { return LinearForm::normalize(n(a, spec), n(b, spec)); }

}  // namespace

TEST_CASE("poly: add") {
  CHECK(P("x^2 + y^2") + P("2*x^2 - y^2") == P("3*x^2"));
  CHECK(P("x + y") + HomogPoly::zero(Q, 5) == P("x + y"));
  const HomogPoly z = P("x + y") + P("-x - y");
  CHECK(z.is_zero());
  CHECK(z.degree() == 1);
  CHECK(z == HomogPoly::zero(Q, 7));
  CHECK_THROWS_AS(P("x") + P("x^2"), UsageError);
  CHECK_THROWS_AS(P("x") + P("x", F2), UsageError);
}

TEST_CASE("poly: mul") {
  CHECK(P("x + y") * P("x - y") == P("x^2 - y^2"));
  CHECK(pow(P("x + y", F2), 2) == P("x^2 + y^2", F2));
  const HomogPoly z = HomogPoly::zero(Q, 2) * P("x + y");
  CHECK(z.is_zero());
  CHECK(z.degree() == 3);
}

TEST_CASE("poly: eval") {
  CHECK(eval(P("x^2 - y^2"), n(1), n(1)).is_zero());
  CHECK(eval(P("x + 2*y"), n(2), n(-1)).is_zero());
  CHECK(eval(P("x^2"), n(0), n(1)).is_zero());
  CHECK(eval(P("3*x^2*y - 1/2*y^3"), n(2), n(1)) == FieldElement::parse("23/2", Q));
  CHECK(eval(HomogPoly::zero(Q, 3), n(4), n(5)).is_zero());
}

TEST_CASE("poly: divisibility by linear forms") {
  CHECK(is_divisible_by_linear(P("x^2 - y^2"), form(1, -1)));
  CHECK_FALSE(is_divisible_by_linear(P("x^2 + y^2"), form(1, -1)));
  CHECK(is_divisible_by_linear(P("x^2 + y^2", F2), form(1, 1, F2)));
  CHECK(is_divisible_by_linear(HomogPoly::zero(Q, 0), form(1, 0)));
}

TEST_CASE("poly: exact division by powers") {
  CHECK(div_exact_linear_power(P("x^2*y"), LinearForm::x(Q), 2) == P("y"));
  CHECK(div_exact_linear_power(pow(P("x + y"), 3), form(1, 1), 2) == P("x + y"));
  CHECK_THROWS_AS(div_exact_linear_power(P("x^2 + y^2"), LinearForm::x(Q), 1), InternalError);
  CHECK(div_exact_linear_power(P("x^3"), LinearForm::y(Q), 0) == P("x^3"));
  const HomogPoly z = div_exact_linear_power(HomogPoly::zero(Q, 0), LinearForm::x(Q), 2);
  CHECK(z.is_zero());
  CHECK(z.degree() == -2);
  CHECK(linear_multiplicity(P("x^2*y^3"), LinearForm::y(Q), 10) == 3);
  CHECK(linear_multiplicity(P("x^2*y^3"), LinearForm::y(Q), 2) == 2);
}

TEST_CASE("poly: scale and mul_linear") {
  CHECK(mul_linear(P("y"), LinearForm::x(Q)) == P("x*y"));
  CHECK(scale(P("x + y"), n(0)).is_zero());
  CHECK(mul_linear(HomogPoly::zero(Q, 2), form(1, 3)).is_zero());
  CHECK(scale(P("x - y"), n(-2)) == P("-2*x + 2*y"));
}

TEST_CASE("poly: rendering") {
  CHECK(P("3*x^2*y - 1/2*y^3").to_string() == "3*x^2*y - 1/2*y^3");
  CHECK(P("-x*y").to_string() == "-x*y");
  CHECK(HomogPoly::constant(n(-4)).to_string() == "-4");
  CHECK(HomogPoly::zero(Q, 2).to_string() == "0");
  CHECK(P("x^2 + 4*y^2", FieldSpec::prime(5)).to_string() == "x^2 + 4*y^2");
  CHECK(P("-y", FieldSpec::prime(5)).to_string() == "4*y");
  CHECK_THROWS_AS(P("x + y^2"), UsageError);
  CHECK_THROWS_AS(P("x +"), UsageError);
  CHECK_THROWS_AS(P("0"), UsageError);
  CHECK(parse_poly("0", Q, 3).degree() == 3);
  CHECK(P("x*y*x") == P("x^2*y"));
}

TEST_CASE("poly: text round trips") {
  testing::Rng rng(3);
  for (int iter = 0; iter < 100; ++iter) {
    const FieldSpec spec = testing::random_field(rng);
    const auto p = testing::random_nonzero_poly(rng, spec, static_cast<int>(rng() % 6));
    CHECK(parse_poly(p.to_string(), spec) == p);
    const auto c = parse_coeff_text(p.to_coeff_text(), spec);
    CHECK(c == p);
    CHECK(c.degree() == p.degree());
  }
}

TEST_CASE("poly: divisibility test agrees with synthetic division") {
  testing::Rng rng(17);
  for (int iter = 0; iter < 300; ++iter) {
    const FieldSpec spec = testing::random_field(rng);
    const auto alpha = testing::random_form(rng, spec);
    const int d = static_cast<int>(rng() % 5);
    HomogPoly p = testing::random_poly(rng, spec, d);
    if (iter % 2 == 0) p = mul_linear(p, alpha);
    CHECK(is_divisible_by_linear(p, alpha) == divide_linear(p, alpha).has_value());
  }
}

TEST_CASE("poly: division undoes multiplication by alpha^m") {
  testing::Rng rng(19);
  for (int iter = 0; iter < 200; ++iter) {
    const FieldSpec spec = testing::random_field(rng);
    const auto alpha = testing::random_form(rng, spec);
    const auto q = testing::random_nonzero_poly(rng, spec, static_cast<int>(rng() % 5));
    const unsigned m = static_cast<unsigned>(rng() % 5);
    const HomogPoly p = q * pow(HomogPoly::from_linear(alpha), m);
    CHECK(div_exact_linear_power(p, alpha, static_cast<int>(m)) == q);
  }
}

TEST_CASE("poly: eval is multiplicative") {
  testing::Rng rng(23);
  for (int iter = 0; iter < 200; ++iter) {
    const FieldSpec spec = testing::random_field(rng);
    const auto p = testing::random_poly(rng, spec, static_cast<int>(rng() % 4));
    const auto q = testing::random_poly(rng, spec, static_cast<int>(rng() % 4));
    const auto a = testing::random_element(rng, spec);
    const auto b = testing::random_element(rng, spec);
    CHECK(eval(p * q, a, b) == eval(p, a, b) * eval(q, a, b));
  }
}

TEST_CASE("poly: Frobenius (ax+by)^p = a x^p + b y^p") {
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL}) {
    const FieldSpec spec = FieldSpec::prime(p);
    for (std::uint64_t a = 0; a < p; ++a) {
      for (std::uint64_t b = 0; b < p; ++b) {
        const auto fa = n(static_cast<long>(a), spec);
        const auto fb = n(static_cast<long>(b), spec);
        const HomogPoly lin(spec, {fb, fa});
        const HomogPoly lhs = pow(lin, static_cast<unsigned>(p));
        const HomogPoly rhs = HomogPoly::monomial(fa, static_cast<int>(p), 0) +
                              HomogPoly::monomial(fb, 0, static_cast<int>(p));
        CHECK(lhs == rhs);
      }
    }
  }
}
