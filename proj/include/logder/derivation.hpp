#pragma once

#include <string>
#include <string_view>

#include "logder/arrangement.hpp"
#include "logder/poly.hpp"

namespace logder {

/// A nonzero homogeneous derivation f*dx + g*dy.
///
/// Both components share a field and a degree; a zero component is re-tagged
/// with the degree of the other one.
class Derivation {
public:
  /// Throws UsageError if both components vanish, the fields differ, or two
  /// nonzero components have different degrees.
  Derivation(HomogPoly f, HomogPoly g);

  /// dx and dy.
  static Derivation dx(const FieldSpec& spec);
  static Derivation dy(const FieldSpec& spec);
  /// x*dx + y*dy.
  static Derivation euler(const FieldSpec& spec);

  const HomogPoly& f() const noexcept { return f_; }
  const HomogPoly& g() const noexcept { return g_; }
  int degree() const noexcept { return degree_; }
  FieldSpec spec() const { return f_.spec(); }

  /// "(x^2) ∂x + (x*y) ∂y"; unit components print bare, zero components are
  /// omitted.
  std::string to_string() const;

  friend bool operator==(const Derivation&, const Derivation&) = default;

private:
  HomogPoly f_;
  HomogPoly g_;
  int degree_;
};

/// theta(alpha) = alpha_x*f + alpha_y*g.
HomogPoly apply(const Derivation& theta, const LinearForm& alpha);

/// alpha^mu(H) divides theta(alpha) for every H in m.
bool is_member(const Derivation& theta, const Multiarrangement& m);

/// f1*g2 - f2*g1.
HomogPoly saito_determinant(const Derivation& theta1, const Derivation& theta2);

Derivation scale_by_linear(const Derivation& theta, const LinearForm& alpha);
Derivation scale_by_poly(const Derivation& theta, const HomogPoly& q);
Derivation scale(const Derivation& theta, const FieldElement& c);
/// theta1 + q*theta2. Throws UsageError on a degree mismatch or a zero result.
Derivation add_scaled(const Derivation& theta1, const HomogPoly& q, const Derivation& theta2);

/// Over Q: the positive rational multiple with coprime integer coefficients
/// whose leading coefficient (highest x power of f, of g when f = 0) is
/// positive. Over F_p: returned unchanged.
Derivation primitive(const Derivation& theta);

/// Parses the rendering of Derivation::to_string (also accepting "dx"/"dy"
/// for the operator symbols), or the shorthand "f, g". Throws UsageError.
Derivation parse_derivation(std::string_view text, const FieldSpec& spec);

}  // namespace logder
