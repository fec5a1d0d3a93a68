#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "logder/arrangement.hpp"
#include "logder/derivation.hpp"

namespace logder {

/// Two homogeneous derivations, meant as a basis of D(A, mu). Operations in
/// this module return pairs ordered so that theta1 has the larger degree.
struct BasisPair {
  Derivation theta1;
  Derivation theta2;

  friend bool operator==(const BasisPair&, const BasisPair&) = default;
};

/// Degree multiset {d1, d2}, stored with d1 >= d2.
struct Exponents {
  int d1 = 0;
  int d2 = 0;

  static Exponents of(int a, int b) { return a >= b ? Exponents{a, b} : Exponents{b, a}; }
  int difference() const noexcept { return d1 - d2; }
  int sum() const noexcept { return d1 + d2; }
  /// "{d1, d2}".
  std::string to_string() const;

  friend bool operator==(const Exponents&, const Exponents&) = default;
};

Exponents exponents_of(const BasisPair& b);

/// Which exit of the incremental update was taken.
enum class StepBranch {
  GVanishing,  // g(alpha_y, -alpha_x) = 0: (alpha*theta1, theta2)
  FVanishing,  // f(alpha_y, -alpha_x) = 0: (theta1, alpha*theta2)
  Generic,     // (theta1 + q*theta2, alpha*theta2)
};

const char* to_string(StepBranch b);

/// What a step-6 solver sees: the values of f = theta1(alpha)/alpha^m and
/// g = theta2(alpha)/alpha^m at (alpha_y, -alpha_x), with g nonzero there, and
/// the degree gap d = deg theta1 - deg theta2.
struct StepEquation {
  FieldElement f_value;
  FieldElement g_value;
  LinearForm alpha;
  int d;
};

/// Returns a homogeneous q of degree d with f_value + g_value*q(alpha_y, -alpha_x) = 0.
using QSolver = std::function<HomogPoly(const StepEquation&)>;

/// The explicit solution used by alg2: for alpha_x != 0,
///   q = (-f/(g*(-ax)^d) - sum_{i=1..d} ay^i/(-ax)^i) * y^d + sum_{i=1..d} x^i y^(d-i),
/// and q = -(f/g) * x^d when alpha_x = 0.
HomogPoly canonical_q(const StepEquation& eq);

struct StepOutcome {
  BasisPair basis;
  StepBranch branch;
  /// Degree gap of the (swapped) input and of the output.
  int difference_before;
  int difference_after;
};

/// One incremental update: from a basis of D(A, mu) with mu(ker alpha) = m to
/// a basis of the arrangement with that multiplicity raised by one. The
/// input is not re-verified; a failing exact division throws InternalError.
/// Over Q the result is reduced to primitive form.
StepOutcome alg1_step(const BasisPair& b, const LinearForm& alpha, int m, const QSolver& solve);
StepOutcome alg2_step(const BasisPair& b, const LinearForm& alpha, int m);

BasisPair alg1(const BasisPair& b, const LinearForm& alpha, int m, const QSolver& solve = canonical_q);
BasisPair alg2(const BasisPair& b, const LinearForm& alpha, int m);

/// Saito's criterion: both members of D(A, mu), independent, degrees summing to |mu|.
bool verify_basis(const BasisPair& b, const Multiarrangement& m);

/// The constant c with det(theta1, theta2) = c * prod alpha_H^mu(H), if the
/// determinant has that shape (exact division, degree-0 nonzero quotient).
std::optional<FieldElement> saito_constant(const BasisPair& b, const Multiarrangement& m);

/// The saturated chain alg3 walks: hyperplanes in canonical order, each
/// repeated mu(H) times.
std::vector<LinearForm> canonical_chain(const Multiarrangement& m);

/// Walks a saturated chain from the empty arrangement, one alg2 step per entry.
class ChainBuilder {
public:
  explicit ChainBuilder(const FieldSpec& spec);

  /// Raises the multiplicity of alpha by one and updates the basis.
  StepOutcome add(const LinearForm& alpha);

  const Multiarrangement& arrangement() const noexcept { return arrangement_; }
  const BasisPair& basis() const noexcept { return basis_; }

private:
  Multiarrangement arrangement_;
  BasisPair basis_;
};

/// Basis of D(A, mu) along an arbitrary chain (any order of increments).
BasisPair basis_along_chain(const FieldSpec& spec, std::span<const LinearForm> chain);

/// Basis of D(A, mu) along the canonical chain, starting from (dx, dy).
BasisPair alg3(const Multiarrangement& m);

Exponents exponents(const Multiarrangement& m);

}  // namespace logder
