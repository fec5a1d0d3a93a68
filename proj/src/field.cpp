#include "logder/field.hpp"

#include <ostream>

#include "logder/errors.hpp"

namespace logder {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e != 0) {
    if (e & 1U) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1U;
  }
  return r;
}

std::uint64_t reduce(const mpz_class& n, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (!is_prime(p)) throw UsageError("field characteristic " + std::to_string(p) + " is not prime");
  // Residue products go through 128-bit intermediates; keep p to 63 bits so
  // sums of two residues cannot overflow.
  if (p >> 63U) throw UsageError("field characteristic too large");
  return FieldSpec(p);
}

std::string FieldSpec::to_string() const {
  return is_rationals() ? std::string("Q") : "F " + std::to_string(p_);
}

FieldElement FieldElement::from_integer(long n, const FieldSpec& spec) {
  return from_integer(mpz_class(n), spec);
}

FieldElement FieldElement::from_integer(const mpz_class& n, const FieldSpec& spec) {
  FieldElement e;
  if (spec.is_rationals()) {
    e.v_ = mpq_class(n);
  } else {
    e.v_ = Residue{reduce(n, spec.characteristic()), spec.characteristic()};
  }
  return e;
}

FieldElement FieldElement::from_rational(const mpq_class& q, const FieldSpec& spec) {
  if (spec.is_rationals()) {
    // Callers may hand in non-canonical values such as mpq_class(6, -4);
    // copy the parts separately since mpq assignment assumes a positive
    // denominator.
    if (sgn(q.get_den()) == 0) throw ArithmeticError("zero denominator");
    FieldElement e;
    mpq_class c;
    mpz_set(mpq_numref(c.get_mpq_t()), q.get_num_mpz_t());
    mpz_set(mpq_denref(c.get_mpq_t()), q.get_den_mpz_t());
    c.canonicalize();
    e.v_ = std::move(c);
    return e;
  }
  return from_integer(q.get_num(), spec) / from_integer(q.get_den(), spec);
}

FieldElement FieldElement::parse(std::string_view text, const FieldSpec& spec) {
  std::string s(text);
  auto valid_int = [](std::string_view t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') return false;
    }
    return true;
  };
  auto strip_plus = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw UsageError("not a number: '" + s + "'");
    return from_integer(mpz_class(strip_plus(s)), spec);
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
    throw UsageError("not a number: '" + s + "'");
  }
  const mpz_class d(den);
  if (d == 0) throw ArithmeticError("zero denominator in '" + s + "'");
  return from_rational(mpq_class(mpz_class(strip_plus(num)), d), spec);
}

FieldSpec FieldElement::spec() const {
  if (const auto* r = std::get_if<Residue>(&v_)) return FieldSpec(r->p);
  return FieldSpec::rationals();
}

bool FieldElement::is_zero() const noexcept {
  if (const auto* r = std::get_if<Residue>(&v_)) return r->value == 0;
  return sgn(std::get<mpq_class>(v_)) == 0;
}

bool FieldElement::is_one() const noexcept {
  if (const auto* r = std::get_if<Residue>(&v_)) return r->value == 1;
  return std::get<mpq_class>(v_) == 1;
}

const mpq_class& FieldElement::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&v_)) return *q;
  throw UsageError("rational() on a prime-field element");
}

std::uint64_t FieldElement::residue() const {
  if (const auto* r = std::get_if<Residue>(&v_)) return r->value;
  throw UsageError("residue() on a rational element");
}

void FieldElement::check_same_field(const FieldElement& b) const {
  const auto* ra = std::get_if<Residue>(&v_);
  const auto* rb = std::get_if<Residue>(&b.v_);
  const std::uint64_t pa = ra ? ra->p : 0;
  const std::uint64_t pb = rb ? rb->p : 0;
  if (pa != pb) throw UsageError("operands belong to different fields");
}

FieldElement& FieldElement::operator+=(const FieldElement& b) {
  check_same_field(b);
  if (auto* r = std::get_if<Residue>(&v_)) {
    const std::uint64_t s = r->value + std::get<Residue>(b.v_).value;
    r->value = s >= r->p ? s - r->p : s;
  } else {
    std::get<mpq_class>(v_) += std::get<mpq_class>(b.v_);
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& b) {
  check_same_field(b);
  if (auto* r = std::get_if<Residue>(&v_)) {
    const std::uint64_t bv = std::get<Residue>(b.v_).value;
    r->value = r->value >= bv ? r->value - bv : r->value + (r->p - bv);
  } else {
    std::get<mpq_class>(v_) -= std::get<mpq_class>(b.v_);
  }
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& b) {
  check_same_field(b);
  if (auto* r = std::get_if<Residue>(&v_)) {
    r->value = mul_mod(r->value, std::get<Residue>(b.v_).value, r->p);
  } else {
    std::get<mpq_class>(v_) *= std::get<mpq_class>(b.v_);
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& b) {
  check_same_field(b);
  if (b.is_zero()) throw ArithmeticError("division by zero");
  if (auto* r = std::get_if<Residue>(&v_)) {
    r->value = mul_mod(r->value, pow_mod(std::get<Residue>(b.v_).value, r->p - 2, r->p), r->p);
  } else {
    std::get<mpq_class>(v_) /= std::get<mpq_class>(b.v_);
  }
  return *this;
}

void FieldElement::add_mul(const FieldElement& b, const FieldElement& c) {
  if (std::holds_alternative<Residue>(v_)) {
    *this += b * c;
    return;
  }
  check_same_field(b);
  check_same_field(c);
  if (b.is_zero() || c.is_zero()) return;
  thread_local mpq_class tmp;
  mpq_mul(tmp.get_mpq_t(), std::get<mpq_class>(b.v_).get_mpq_t(), std::get<mpq_class>(c.v_).get_mpq_t());
  std::get<mpq_class>(v_) += tmp;
}

void FieldElement::sub_mul(const FieldElement& b, const FieldElement& c) {
  if (std::holds_alternative<Residue>(v_)) {
    *this -= b * c;
    return;
  }
  check_same_field(b);
  check_same_field(c);
  if (b.is_zero() || c.is_zero()) return;
  thread_local mpq_class tmp;
  mpq_mul(tmp.get_mpq_t(), std::get<mpq_class>(b.v_).get_mpq_t(), std::get<mpq_class>(c.v_).get_mpq_t());
  std::get<mpq_class>(v_) -= tmp;
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  if (auto* res = std::get_if<Residue>(&r.v_)) {
    res->value = res->value == 0 ? 0 : res->p - res->value;
  } else {
    mpq_neg(std::get<mpq_class>(r.v_).get_mpq_t(), std::get<mpq_class>(r.v_).get_mpq_t());
  }
  return r;
}

FieldElement FieldElement::inv() const {
  return one(spec()) / *this;
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  if (const auto* r = std::get_if<Residue>(&v_)) {
    FieldElement out = *this;
    std::get<Residue>(out.v_).value = pow_mod(r->value, e, r->p);
    return out;
  }
  const mpq_class& q = std::get<mpq_class>(v_);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), e);
  FieldElement out;
  out.v_ = mpq_class(num, den);
  return out;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  a.check_same_field(b);
  if (const auto* r = std::get_if<FieldElement::Residue>(&a.v_)) {
    return r->value == std::get<FieldElement::Residue>(b.v_).value;
  }
  return std::get<mpq_class>(a.v_) == std::get<mpq_class>(b.v_);
}

std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
  a.check_same_field(b);
  if (const auto* r = std::get_if<FieldElement::Residue>(&a.v_)) {
    return r->value <=> std::get<FieldElement::Residue>(b.v_).value;
  }
  const int c = cmp(std::get<mpq_class>(a.v_), std::get<mpq_class>(b.v_));
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string FieldElement::to_string() const {
  if (const auto* r = std::get_if<Residue>(&v_)) return std::to_string(r->value);
  return std::get<mpq_class>(v_).get_str();
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << a.to_string(); }

}  // namespace logder
