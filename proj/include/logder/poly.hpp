#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "logder/field.hpp"
#include "logder/linear_form.hpp"

namespace logder {

/// Homogeneous polynomial in x, y of a fixed degree d, stored densely:
/// coeff(j) is the coefficient of x^j y^(d-j).
///
/// The zero polynomial keeps a degree tag so that derivation components stay
/// aligned. Two zero polynomials compare equal whatever their tags. A zero
/// obtained by dividing a degree-0 zero by a linear form carries a negative
/// tag and no coefficients; nonzero polynomials always have degree >= 0.
class HomogPoly {
public:
  /// Rational zero of degree 0.
  HomogPoly() : HomogPoly(FieldSpec::rationals(), 0) {}
  /// Zero polynomial of the given degree.
  HomogPoly(const FieldSpec& spec, int degree);
  /// Degree is coeffs.size() - 1; coeffs must be nonempty and share `spec`.
  HomogPoly(const FieldSpec& spec, std::vector<FieldElement> coeffs);

  static HomogPoly zero(const FieldSpec& spec, int degree) { return HomogPoly(spec, degree); }
  static HomogPoly constant(const FieldElement& c);
  /// c * x^i * y^j.
  static HomogPoly monomial(const FieldElement& c, int i, int j);
  static HomogPoly from_linear(const LinearForm& alpha);
  /// Convenience for tests: integer coefficients, entry j multiplies x^j y^(d-j).
  static HomogPoly from_integers(const FieldSpec& spec, const std::vector<long>& coeffs);

  const FieldSpec& spec() const noexcept { return spec_; }
  int degree() const noexcept { return degree_; }
  std::span<const FieldElement> coeffs() const noexcept { return coeffs_; }
  const FieldElement& coeff(int j) const { return coeffs_.at(static_cast<std::size_t>(j)); }
  bool is_zero() const noexcept;

  HomogPoly& operator+=(const HomogPoly& q);
  HomogPoly& operator-=(const HomogPoly& q);
  friend HomogPoly operator+(HomogPoly p, const HomogPoly& q) { return p += q; }
  friend HomogPoly operator-(HomogPoly p, const HomogPoly& q) { return p -= q; }
  friend HomogPoly operator*(const HomogPoly& p, const HomogPoly& q);
  HomogPoly operator-() const;

  friend bool operator==(const HomogPoly& p, const HomogPoly& q);

  /// "3*x^2*y - 1/2*y^3", highest power of x first; "0" for zero.
  std::string to_string() const;
  /// Exact round-trip format "d: c0 c1 ... cd".
  std::string to_coeff_text() const;

private:
  friend HomogPoly scale(const HomogPoly& p, const FieldElement& c);
  friend HomogPoly mul_linear(const HomogPoly& p, const LinearForm& alpha);
  friend std::optional<HomogPoly> divide_linear(const HomogPoly& p, const LinearForm& alpha);

  void check_addable(const HomogPoly& q) const;

  FieldSpec spec_;
  int degree_ = 0;
  std::vector<FieldElement> coeffs_;
};

HomogPoly add(const HomogPoly& p, const HomogPoly& q);
HomogPoly mul(const HomogPoly& p, const HomogPoly& q);
HomogPoly scale(const HomogPoly& p, const FieldElement& c);
/// p * alpha, degree + 1.
HomogPoly mul_linear(const HomogPoly& p, const LinearForm& alpha);
HomogPoly pow(const HomogPoly& p, unsigned n);

/// Sum of coeff(j) * a^j * b^(d-j); zero for the zero polynomial.
FieldElement eval(const HomogPoly& p, const FieldElement& a, const FieldElement& b);

/// Alpha divides p iff p vanishes at (alpha_y, -alpha_x).
bool is_divisible_by_linear(const HomogPoly& p, const LinearForm& alpha);

/// One synthetic division by alpha; nullopt when the remainder is nonzero.
std::optional<HomogPoly> divide_linear(const HomogPoly& p, const LinearForm& alpha);

/// q with q * alpha^m == p, by m synthetic divisions. Throws InternalError on a
/// nonzero remainder at any stage.
HomogPoly div_exact_linear_power(const HomogPoly& p, const LinearForm& alpha, int m);

/// Largest k <= limit such that alpha^k divides p (limit for the zero polynomial).
int linear_multiplicity(const HomogPoly& p, const LinearForm& alpha, int limit);

/// Parses the rendered form ("3*x^2*y - 1/2*y^3"). "0" yields a zero of
/// `zero_degree`, which must then be given. Throws UsageError.
HomogPoly parse_poly(std::string_view text, const FieldSpec& spec,
                     std::optional<int> zero_degree = std::nullopt);
/// Inverse of HomogPoly::to_coeff_text.
HomogPoly parse_coeff_text(std::string_view text, const FieldSpec& spec);

}  // namespace logder
