#include "logder/basis.hpp"

#include <utility>

#include "logder/errors.hpp"

namespace logder {

std::string Exponents::to_string() const {
  return "{" + std::to_string(d1) + ", " + std::to_string(d2) + "}";
}

Exponents exponents_of(const BasisPair& b) {
  return Exponents::of(b.theta1.degree(), b.theta2.degree());
}

const char* to_string(StepBranch b) {
  switch (b) {
    case StepBranch::GVanishing: return "g-vanishing";
    case StepBranch::FVanishing: return "f-vanishing";
    case StepBranch::Generic: return "generic";
  }
  return "?";
}

HomogPoly canonical_q(const StepEquation& eq) {
  const FieldSpec spec = eq.alpha.spec();
  const FieldElement ratio = eq.f_value / eq.g_value;
  if (eq.alpha.ax().is_zero()) {
    return HomogPoly::monomial(-ratio, eq.d, 0);
  }
  const FieldElement minus_ax = -eq.alpha.ax();
  const FieldElement one = FieldElement::one(spec);
  std::vector<FieldElement> c(static_cast<std::size_t>(eq.d) + 1, one);
  FieldElement q0 = -ratio / minus_ax.pow(static_cast<std::uint64_t>(eq.d));
  const FieldElement step = eq.alpha.ay() / minus_ax;
  FieldElement term = one;
  for (int i = 1; i <= eq.d; ++i) {
    term *= step;
    q0 -= term;
  }
  c[0] = std::move(q0);
  return HomogPoly(spec, std::move(c));
}

StepOutcome alg1_step(const BasisPair& b, const LinearForm& alpha, int m, const QSolver& solve) {
  if (alpha.spec() != b.theta1.spec() || b.theta1.spec() != b.theta2.spec()) {
    throw UsageError("basis and linear form over different fields");
  }
  const Derivation* t1 = &b.theta1;
  const Derivation* t2 = &b.theta2;
  if (t1->degree() < t2->degree()) std::swap(t1, t2);
  const int d = t1->degree() - t2->degree();

  const FieldElement px = alpha.ay();
  const FieldElement py = -alpha.ax();

  auto finish = [&](Derivation a, Derivation c, StepBranch branch) {
    a = primitive(a);
    c = primitive(c);
    if (a.degree() < c.degree()) std::swap(a, c);
    const int after = a.degree() - c.degree();
    return StepOutcome{BasisPair{std::move(a), std::move(c)}, branch, d, after};
  };

  const HomogPoly g = div_exact_linear_power(apply(*t2, alpha), alpha, m);
  const FieldElement g_value = eval(g, px, py);
  if (g_value.is_zero()) {
    return finish(scale_by_linear(*t1, alpha), *t2, StepBranch::GVanishing);
  }
  const HomogPoly f = div_exact_linear_power(apply(*t1, alpha), alpha, m);
  const FieldElement f_value = eval(f, px, py);
  if (f_value.is_zero()) {
    return finish(*t1, scale_by_linear(*t2, alpha), StepBranch::FVanishing);
  }
  const HomogPoly q = solve(StepEquation{f_value, g_value, alpha, d});
  if (q.is_zero() || q.degree() != d || q.spec() != alpha.spec()) {
    throw InternalError("step solver returned a polynomial of the wrong shape");
  }
  FieldElement check = f_value;
  check.add_mul(g_value, eval(q, px, py));
  if (!check.is_zero()) throw InternalError("step solver returned a non-solution");
  return finish(add_scaled(*t1, q, *t2), scale_by_linear(*t2, alpha), StepBranch::Generic);
}

StepOutcome alg2_step(const BasisPair& b, const LinearForm& alpha, int m) {
  return alg1_step(b, alpha, m, canonical_q);
}

BasisPair alg1(const BasisPair& b, const LinearForm& alpha, int m, const QSolver& solve) {
  return alg1_step(b, alpha, m, solve).basis;
}

BasisPair alg2(const BasisPair& b, const LinearForm& alpha, int m) {
  return alg2_step(b, alpha, m).basis;
}

bool verify_basis(const BasisPair& b, const Multiarrangement& m) {
  if (b.theta1.spec() != m.spec() || b.theta2.spec() != m.spec()) {
    throw UsageError("basis and arrangement over different fields");
  }
  return b.theta1.degree() + b.theta2.degree() == total(m) && is_member(b.theta1, m) &&
         is_member(b.theta2, m) && !saito_determinant(b.theta1, b.theta2).is_zero();
}

std::optional<FieldElement> saito_constant(const BasisPair& b, const Multiarrangement& m) {
  HomogPoly det = saito_determinant(b.theta1, b.theta2);
  if (det.is_zero()) return std::nullopt;
  for (const auto& [alpha, mult] : m.multiplicities()) {
    for (int k = 0; k < mult; ++k) {
      auto next = divide_linear(det, alpha);
      if (!next) return std::nullopt;
      det = std::move(*next);
    }
  }
  if (det.degree() != 0) return std::nullopt;
  return det.coeff(0);
}

std::vector<LinearForm> canonical_chain(const Multiarrangement& m) {
  std::vector<LinearForm> chain;
  for (const auto& [alpha, mult] : m.multiplicities()) {
    for (int k = 0; k < mult; ++k) chain.push_back(alpha);
  }
  return chain;
}

ChainBuilder::ChainBuilder(const FieldSpec& spec)
    : arrangement_(spec), basis_{Derivation::dx(spec), Derivation::dy(spec)} {}

StepOutcome ChainBuilder::add(const LinearForm& alpha) {
  StepOutcome out = alg2_step(basis_, alpha, arrangement_.multiplicity(alpha));
  arrangement_.increment(alpha);
  basis_ = out.basis;
  return out;
}

BasisPair basis_along_chain(const FieldSpec& spec, std::span<const LinearForm> chain) {
  ChainBuilder builder(spec);
  for (const auto& alpha : chain) builder.add(alpha);
  return builder.basis();
}

BasisPair alg3(const Multiarrangement& m) {
  const auto chain = canonical_chain(m);
  return basis_along_chain(m.spec(), chain);
}

Exponents exponents(const Multiarrangement& m) { return exponents_of(alg3(m)); }

}  // namespace logder
