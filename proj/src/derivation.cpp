#include "logder/derivation.hpp"

#include <cctype>

#include "logder/errors.hpp"

namespace logder {

Derivation::Derivation(HomogPoly f, HomogPoly g) : f_(std::move(f)), g_(std::move(g)), degree_(0) {
  if (f_.spec() != g_.spec()) throw UsageError("derivation components from different fields");
  const bool fz = f_.is_zero();
  const bool gz = g_.is_zero();
  if (fz && gz) throw UsageError("the zero derivation is not allowed");
  if (!fz && !gz && f_.degree() != g_.degree()) {
    throw UsageError("derivation components of degrees " + std::to_string(f_.degree()) + " and " +
                     std::to_string(g_.degree()));
  }
  degree_ = fz ? g_.degree() : f_.degree();
  if (fz) f_ = HomogPoly(f_.spec(), degree_);
  if (gz) g_ = HomogPoly(g_.spec(), degree_);
}

Derivation Derivation::dx(const FieldSpec& spec) {
  return {HomogPoly::constant(FieldElement::one(spec)), HomogPoly(spec, 0)};
}

Derivation Derivation::dy(const FieldSpec& spec) {
  return {HomogPoly(spec, 0), HomogPoly::constant(FieldElement::one(spec))};
}

Derivation Derivation::euler(const FieldSpec& spec) {
  return {HomogPoly::from_linear(LinearForm::x(spec)), HomogPoly::from_linear(LinearForm::y(spec))};
}

std::string Derivation::to_string() const {
  auto term = [](const HomogPoly& p, const char* op) {
    const HomogPoly one = HomogPoly::constant(FieldElement::one(p.spec()));
    return p == one ? std::string(op) : "(" + p.to_string() + ") " + op;
  };
  std::string out;
  if (!f_.is_zero()) out = term(f_, "∂x");
  if (!g_.is_zero()) {
    if (!out.empty()) out += " + ";
    out += term(g_, "∂y");
  }
  return out;
}

HomogPoly apply(const Derivation& theta, const LinearForm& alpha) {
  if (alpha.spec() != theta.spec()) throw UsageError("linear form from a different field");
  return scale(theta.f(), alpha.ax()) + scale(theta.g(), alpha.ay());
}

bool is_member(const Derivation& theta, const Multiarrangement& m) {
  if (m.spec() != theta.spec()) throw UsageError("arrangement from a different field");
  for (const auto& [alpha, mult] : m.multiplicities()) {
    if (linear_multiplicity(apply(theta, alpha), alpha, mult) < mult) return false;
  }
  return true;
}

HomogPoly saito_determinant(const Derivation& theta1, const Derivation& theta2) {
  return theta1.f() * theta2.g() - theta2.f() * theta1.g();
}

Derivation scale_by_linear(const Derivation& theta, const LinearForm& alpha) {
  return {mul_linear(theta.f(), alpha), mul_linear(theta.g(), alpha)};
}

Derivation scale_by_poly(const Derivation& theta, const HomogPoly& q) {
  if (q.is_zero()) throw UsageError("scaling a derivation by zero");
  return {theta.f() * q, theta.g() * q};
}

Derivation scale(const Derivation& theta, const FieldElement& c) {
  if (c.is_zero()) throw UsageError("scaling a derivation by zero");
  return {scale(theta.f(), c), scale(theta.g(), c)};
}

Derivation add_scaled(const Derivation& theta1, const HomogPoly& q, const Derivation& theta2) {
  if (theta1.degree() != q.degree() + theta2.degree()) {
    throw UsageError("add_scaled degree mismatch: " + std::to_string(theta1.degree()) + " vs " +
                     std::to_string(q.degree()) + " + " + std::to_string(theta2.degree()));
  }
  HomogPoly f = theta1.f() + q * theta2.f();
  HomogPoly g = theta1.g() + q * theta2.g();
  if (f.is_zero() && g.is_zero()) throw UsageError("add_scaled produced the zero derivation");
  return {std::move(f), std::move(g)};
}

Derivation primitive(const Derivation& theta) {
  const FieldSpec spec = theta.spec();
  if (!spec.is_rationals()) return theta;
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const HomogPoly* p : {&theta.f(), &theta.g()}) {
    for (const auto& c : p->coeffs()) {
      const mpq_class& q = c.rational();
      if (sgn(q) == 0) continue;
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
    }
  }
  const HomogPoly& lead_poly = theta.f().is_zero() ? theta.g() : theta.f();
  int sign = 1;
  for (int j = lead_poly.degree(); j >= 0; --j) {
    if (const int s = sgn(lead_poly.coeff(j).rational()); s != 0) {
      sign = s;
      break;
    }
  }
  if (num_gcd == 1 && den_lcm == 1 && sign > 0) return theta;
  mpq_class factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (sign < 0) factor = -factor;
  return scale(theta, FieldElement::from_rational(factor, spec));
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size()) {
    s.replace(pos, from.size(), to);
  }
  return s;
}

Derivation from_components(const std::string& ftext, const std::string& gtext, const FieldSpec& spec) {
  constexpr int kUnknown = -1;
  HomogPoly f = ftext.empty() ? HomogPoly(spec, kUnknown) : parse_poly(ftext, spec, kUnknown);
  HomogPoly g = gtext.empty() ? HomogPoly(spec, kUnknown) : parse_poly(gtext, spec, kUnknown);
  if (f.is_zero() && !g.is_zero()) f = HomogPoly(spec, g.degree());
  if (g.is_zero() && !f.is_zero()) g = HomogPoly(spec, f.degree());
  return {std::move(f), std::move(g)};
}

}  // namespace

Derivation parse_derivation(std::string_view text, const FieldSpec& spec) {
  std::string s = replace_all(std::string(text), "∂", "d");
  if (s.find('d') == std::string::npos) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) {
      throw UsageError("derivation must look like '(f) dx + (g) dy' or 'f, g'");
    }
    return from_components(trim(s.substr(0, comma)), trim(s.substr(comma + 1)), spec);
  }
  std::string parts[2];
  bool seen[2] = {false, false};
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  bool first = true;
  for (skip_ws(); i < s.size(); skip_ws()) {
    if (!first) {
      if (s[i] != '+') throw UsageError("expected '+' between derivation terms in '" + s + "'");
      ++i;
      skip_ws();
    }
    first = false;
    std::string coef = "1";
    if (i < s.size() && s[i] == '(') {
      int depth = 0;
      const std::size_t start = i + 1;
      for (; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')' && --depth == 0) break;
      }
      if (i >= s.size()) throw UsageError("unbalanced parenthesis in '" + s + "'");
      coef = s.substr(start, i - start);
      ++i;
      skip_ws();
    }
    if (i + 1 >= s.size() || s[i] != 'd' || (s[i + 1] != 'x' && s[i + 1] != 'y')) {
      throw UsageError("expected dx or dy in '" + s + "'");
    }
    const int which = s[i + 1] == 'x' ? 0 : 1;
    if (seen[which]) throw UsageError("repeated operator in '" + s + "'");
    seen[which] = true;
    parts[which] = trim(coef);
    i += 2;
  }
  return from_components(parts[0], parts[1], spec);
}

}  // namespace logder
