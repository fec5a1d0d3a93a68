#pragma once

#include <compare>
#include <string>

#include "logder/field.hpp"

namespace logder {

/// A nonzero linear form ax*x + ay*y, stored as the canonical representative
/// of its kernel: the first nonzero coefficient (ax, else ay) is 1.
class LinearForm {
public:
  /// Throws UsageError on the zero form or mixed fields.
  static LinearForm normalize(const FieldElement& ax, const FieldElement& ay);
  static LinearForm x(const FieldSpec& spec);
  static LinearForm y(const FieldSpec& spec);
  /// x + c*y.
  static LinearForm x_plus(const FieldElement& c);

  const FieldElement& ax() const noexcept { return ax_; }
  const FieldElement& ay() const noexcept { return ay_; }
  FieldSpec spec() const { return ax_.spec(); }

  /// "x + 2*y", "x - 1/2*y", "y".
  std::string to_string() const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
  /// Lexicographic on (ax, ay) under the canonical element order.
  friend std::strong_ordering operator<=>(const LinearForm& a, const LinearForm& b) {
    if (auto c = a.ax_ <=> b.ax_; c != 0) return c;
    return a.ay_ <=> b.ay_;
  }

private:
  LinearForm(FieldElement ax, FieldElement ay) : ax_(std::move(ax)), ay_(std::move(ay)) {}

  FieldElement ax_;
  FieldElement ay_;
};

inline LinearForm normalize(const FieldElement& ax, const FieldElement& ay) {
  return LinearForm::normalize(ax, ay);
}

}  // namespace logder
