#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace logder {

/// The base field: either the rationals or a prime field F_p.
class FieldSpec {
public:
  enum class Kind { Rationals, PrimeField };

  /// Rationals.
  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec(); }
  /// Throws UsageError unless `p` is prime.
  static FieldSpec prime(std::uint64_t p);

  Kind kind() const noexcept { return p_ == 0 ? Kind::Rationals : Kind::PrimeField; }
  bool is_rationals() const noexcept { return p_ == 0; }
  bool is_prime_field() const noexcept { return p_ != 0; }
  /// 0 for the rationals.
  std::uint64_t characteristic() const noexcept { return p_; }

  /// "Q" or "F <p>", the same spelling as arrangement file headers.
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
  friend class FieldElement;
  explicit FieldSpec(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// An exact scalar of a FieldSpec. Rationals are kept in lowest terms with a
/// positive denominator (mpq canonical form); residues live in [0, p).
class FieldElement {
public:
  /// Rational zero.
  FieldElement() = default;

  static FieldElement zero(const FieldSpec& spec) { return from_integer(0, spec); }
  static FieldElement one(const FieldSpec& spec) { return from_integer(1, spec); }
  static FieldElement from_integer(long n, const FieldSpec& spec);
  static FieldElement from_integer(const mpz_class& n, const FieldSpec& spec);
  /// Over F_p maps num/den to num * den^{-1}; throws ArithmeticError when p | den.
  static FieldElement from_rational(const mpq_class& q, const FieldSpec& spec);
  /// Accepts "n" or "n/d" with optional sign. Throws UsageError on bad text and
  /// ArithmeticError on a zero denominator.
  static FieldElement parse(std::string_view text, const FieldSpec& spec);

  FieldSpec spec() const;
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Only valid over the rationals.
  const mpq_class& rational() const;
  /// Only valid over a prime field.
  std::uint64_t residue() const;

  FieldElement& operator+=(const FieldElement& b);
  FieldElement& operator-=(const FieldElement& b);
  FieldElement& operator*=(const FieldElement& b);
  FieldElement& operator/=(const FieldElement& b);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  FieldElement operator-() const;

  /// a += b * c without a temporary.
  void add_mul(const FieldElement& b, const FieldElement& c);
  /// a -= b * c without a temporary.
  void sub_mul(const FieldElement& b, const FieldElement& c);

  FieldElement inv() const;
  FieldElement pow(std::uint64_t e) const;

  /// Mixed-field comparison throws UsageError.
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  /// Canonical total order used for deterministic keys: numeric order over Q,
  /// residue order over F_p. Not a field order.
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b);

  std::string to_string() const;

private:
  struct Residue {
    std::uint64_t value;
    std::uint64_t p;
  };

  void check_same_field(const FieldElement& b) const;

  std::variant<mpq_class, Residue> v_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& a);

// Free-function spellings of the arithmetic.
inline FieldElement add(const FieldElement& a, const FieldElement& b) { return a + b; }
inline FieldElement sub(const FieldElement& a, const FieldElement& b) { return a - b; }
inline FieldElement mul(const FieldElement& a, const FieldElement& b) { return a * b; }
inline FieldElement div(const FieldElement& a, const FieldElement& b) { return a / b; }
inline FieldElement neg(const FieldElement& a) { return -a; }
inline FieldElement inv(const FieldElement& a) { return a.inv(); }
inline bool is_zero(const FieldElement& a) { return a.is_zero(); }

}  // namespace logder
