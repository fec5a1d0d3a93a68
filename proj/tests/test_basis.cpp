#include <doctest.h>

#include "logder/basis.hpp"
#include "logder/errors.hpp"
#include "random_instances.hpp"

using namespace logder;

namespace {

const FieldSpec Q = FieldSpec::rationals();

FieldElement n(long v, const FieldSpec& spec = Q) { return FieldElement::from_integer(v, spec); }
LinearForm form(long a, long b, const FieldSpec& spec = Q) { return normalize(n(a, spec), n(b, spec)); }
Derivation D(const char* text, const FieldSpec& spec = Q) { return parse_derivation(text, spec); }
Multiarrangement arr(std::vector<std::pair<LinearForm, int>> e, const FieldSpec& spec = Q) {
  return Multiarrangement(spec, e);
}

BasisPair start(const FieldSpec& spec = Q) { return {Derivation::dx(spec), Derivation::dy(spec)}; }

// Another valid step-6 choice: a multiple of y^d (x^d when alpha = y).
HomogPoly monomial_q(const StepEquation& eq) {
  const bool axis = eq.alpha.ax().is_zero();
  const FieldElement at = axis ? FieldElement::one(eq.alpha.spec()) : (-eq.alpha.ax()).pow(static_cast<std::uint64_t>(eq.d));
  const FieldElement c = -eq.f_value / (eq.g_value * at);
  return axis ? HomogPoly::monomial(c, eq.d, 0) : HomogPoly::monomial(c, 0, eq.d);
}

}  // namespace

TEST_CASE("basis: verify_basis") {
  CHECK(verify_basis(start(), Multiarrangement(Q)));
  const auto x = LinearForm::x(Q);
  CHECK(verify_basis({D("(x) dx"), Derivation::dy(Q)}, arr({{x, 1}})));
  CHECK_FALSE(verify_basis({D("(x) dx"), Derivation::dy(Q)}, arr({{x, 2}})));
  CHECK_FALSE(verify_basis({D("(x) dx"), D("(x) dx")}, arr({{x, 1}, {LinearForm::y(Q), 1}})));
}

TEST_CASE("basis: alg1 hand traces") {
  const auto x = LinearForm::x(Q);
  const auto y = LinearForm::y(Q);
  // g = dy(x) = 0 vanishes: (x*dx, dy).
  const auto s1 = alg1_step(start(), x, 0, canonical_q);
  CHECK(s1.branch == StepBranch::GVanishing);
  CHECK(s1.basis == BasisPair{D("(x) dx"), Derivation::dy(Q)});
  CHECK(verify_basis(s1.basis, arr({{x, 1}})));
  // g = 1 at (1,0), f = (x dx)(y) = 0: (x*dx, y*dy).
  const auto s2 = alg1_step(s1.basis, y, 0, canonical_q);
  CHECK(s2.branch == StepBranch::FVanishing);
  CHECK(s2.basis == BasisPair{D("(x) dx"), D("(y) dy")});
  CHECK(verify_basis(s2.basis, arr({{x, 1}, {y, 1}})));
}

TEST_CASE("basis: alg2 explicit q") {
  // d = 0, alpha_x != 0: q is the constant -f/g.
  const StepEquation eq{n(3), n(2), form(1, 5), 0};
  CHECK(canonical_q(eq) == HomogPoly::constant(FieldElement::parse("-3/2", Q)));
  // d = 2, alpha = x + 5y: q(5, -1) must equal -f/g.
  const StepEquation eq2{n(3), n(2), form(1, 5), 2};
  const HomogPoly q2 = canonical_q(eq2);
  CHECK(q2.degree() == 2);
  CHECK(q2.coeff(1) == n(1));
  CHECK(q2.coeff(2) == n(1));
  CHECK(eval(q2, n(5), n(-1)) == FieldElement::parse("-3/2", Q));

  // alpha = y with f(1,0), g(1,0) nonzero: (theta1 - (f/g) x^d theta2, y*theta2).
  const auto x = LinearForm::x(Q);
  const auto y = LinearForm::y(Q);
  const BasisPair b{D("(x) dx + (x) dy"), Derivation::dy(Q)};
  REQUIRE(verify_basis(b, arr({{x, 1}})));
  const auto out = alg2_step(b, y, 0);
  CHECK(out.branch == StepBranch::Generic);
  CHECK(out.basis == BasisPair{D("(x) dx"), D("(y) dy")});
  CHECK(verify_basis(out.basis, arr({{x, 1}, {y, 1}})));

  const BasisPair b0{D("dx + dy"), Derivation::dy(Q)};
  const auto out0 = alg2_step(b0, y, 0);
  CHECK(out0.basis == BasisPair{D("(y) dy"), Derivation::dx(Q)});
}

TEST_CASE("basis: alg3 examples") {
  CHECK(alg3(Multiarrangement(Q)) == start());
  for (int m = 1; m <= 5; ++m) {
    CHECK(exponents(arr({{LinearForm::x(Q), m}})) == Exponents{m, 0});
  }
  // Hand trace: y (f-vanishing), x (f-vanishing), x+y (generic, q = 1).
  const auto three = arr({{LinearForm::x(Q), 1}, {LinearForm::y(Q), 1}, {form(1, 1), 1}});
  const BasisPair b = alg3(three);
  CHECK(b == BasisPair{D("(x^2 + x*y) dx"), Derivation::euler(Q)});
  CHECK(exponents_of(b) == Exponents{2, 1});
  CHECK(exponents(Multiarrangement(Q)) == Exponents{0, 0});
  CHECK(exponents(arr({{LinearForm::x(Q), 3}})) == Exponents{3, 0});
  CHECK(exponents(arr({{LinearForm::x(Q), 5}, {LinearForm::y(Q), 2}})) == Exponents{5, 2});
  CHECK(exponents(arr({{LinearForm::x(Q), 4}, {LinearForm::y(Q), 1}, {form(1, 1), 2}})) == Exponents{4, 3});
}

TEST_CASE("basis: step solver contract is enforced") {
  const auto y = LinearForm::y(Q);
  const BasisPair b{D("(x) dx + (x) dy"), Derivation::dy(Q)};
  auto wrong = [](const StepEquation& eq) { return HomogPoly::monomial(FieldElement::one(eq.alpha.spec()), eq.d, 0); };
  CHECK_THROWS_AS(alg1(b, y, 0, wrong), InternalError);
  // A precondition violation surfaces as a failed exact division.
  CHECK_THROWS_AS(alg1(start(), LinearForm::y(Q), 1), InternalError);
  CHECK_THROWS_AS(alg1(start(), LinearForm::x(FieldSpec::prime(3)), 0), UsageError);
}

TEST_CASE("basis: randomized Saito checks") {
  testing::Rng rng(53);
  for (int iter = 0; iter < 150; ++iter) {
    const FieldSpec spec = testing::random_field(rng);
    const auto m = testing::random_arrangement(rng, spec);
    const BasisPair b = alg3(m);
    CHECK(b.theta1.degree() >= b.theta2.degree());
    CHECK(verify_basis(b, m));
    const auto c = saito_constant(b, m);
    REQUIRE(c.has_value());
    CHECK_FALSE(c->is_zero());
  }
}

TEST_CASE("basis: every step raises exactly one degree by one") {
  testing::Rng rng(59);
  for (int iter = 0; iter < 100; ++iter) {
    const FieldSpec spec = testing::random_field(rng);
    const auto m = testing::random_arrangement(rng, spec);
    ChainBuilder builder(spec);
    for (const auto& alpha : canonical_chain(m)) {
      const Exponents before = exponents_of(builder.basis());
      const StepOutcome s = builder.add(alpha);
      const Exponents after = exponents_of(s.basis);
      CHECK(after.sum() == before.sum() + 1);
      const bool first = after == Exponents::of(before.d1 + 1, before.d2);
      const bool second = after == Exponents::of(before.d1, before.d2 + 1);
      CHECK((first || second));
      CHECK(std::abs(s.difference_after - s.difference_before) == 1);
    }
    CHECK(builder.arrangement() == m);
  }
}

TEST_CASE("basis: exponents do not depend on the chain order") {
  testing::Rng rng(61);
  for (int iter = 0; iter < 80; ++iter) {
    const FieldSpec spec = testing::random_field(rng);
    const auto m = testing::random_arrangement(rng, spec);
    auto chain = canonical_chain(m);
    std::shuffle(chain.begin(), chain.end(), rng);
    const BasisPair b = basis_along_chain(spec, chain);
    CHECK(verify_basis(b, m));
    CHECK(exponents_of(b) == exponents(m));
    // Rescaled input coefficients normalize to the same arrangement.
    std::vector<std::pair<LinearForm, int>> scaled;
    for (const auto& [h, mult] : m.multiplicities()) {
      const auto c = testing::random_nonzero(rng, spec);
      scaled.emplace_back(normalize(h.ax() * c, h.ay() * c), mult);
    }
    CHECK(exponents(Multiarrangement(spec, scaled)) == exponents(m));
  }
}

TEST_CASE("basis: any step-6 solution gives a basis") {
  testing::Rng rng(67);
  for (int iter = 0; iter < 80; ++iter) {
    const FieldSpec spec = testing::random_field(rng);
    const auto m = testing::random_arrangement(rng, spec);
    BasisPair b = start(spec);
    Multiarrangement cur(spec);
    for (const auto& alpha : canonical_chain(m)) {
      b = alg1(b, alpha, cur.multiplicity(alpha), monomial_q);
      cur.increment(alpha);
      CHECK(verify_basis(b, cur));
    }
    CHECK(exponents_of(b) == exponents(m));
  }
}
