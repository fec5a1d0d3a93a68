#include "logder/poly.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "logder/errors.hpp"

namespace logder {

HomogPoly::HomogPoly(const FieldSpec& spec, int degree) : spec_(spec), degree_(degree) {
  if (degree >= 0) {
    coeffs_.assign(static_cast<std::size_t>(degree) + 1, FieldElement::zero(spec));
  }
}

HomogPoly::HomogPoly(const FieldSpec& spec, std::vector<FieldElement> coeffs)
    : spec_(spec), degree_(static_cast<int>(coeffs.size()) - 1), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw UsageError("a polynomial needs at least one coefficient");
  for (const auto& c : coeffs_) {
    if (c.spec() != spec_) throw UsageError("coefficient from a different field");
  }
}

HomogPoly HomogPoly::constant(const FieldElement& c) { return HomogPoly(c.spec(), {c}); }

HomogPoly HomogPoly::monomial(const FieldElement& c, int i, int j) {
  if (i < 0 || j < 0) throw UsageError("negative exponent");
  HomogPoly p(c.spec(), i + j);
  p.coeffs_[static_cast<std::size_t>(i)] = c;
  return p;
}

HomogPoly HomogPoly::from_linear(const LinearForm& alpha) {
  return HomogPoly(alpha.spec(), {alpha.ay(), alpha.ax()});
}

HomogPoly HomogPoly::from_integers(const FieldSpec& spec, const std::vector<long>& coeffs) {
  std::vector<FieldElement> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.push_back(FieldElement::from_integer(v, spec));
  return HomogPoly(spec, std::move(c));
}

bool HomogPoly::is_zero() const noexcept {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

void HomogPoly::check_addable(const HomogPoly& q) const {
  if (spec_ != q.spec_) throw UsageError("polynomials from different fields");
  if (degree_ != q.degree_ && !is_zero() && !q.is_zero()) {
    throw UsageError("adding homogeneous polynomials of degrees " + std::to_string(degree_) +
                     " and " + std::to_string(q.degree_));
  }
}

HomogPoly& HomogPoly::operator+=(const HomogPoly& q) {
  check_addable(q);
  if (q.is_zero()) return *this;
  if (degree_ != q.degree_) return *this = q;  // *this is a zero of another degree
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += q.coeffs_[j];
  return *this;
}

HomogPoly& HomogPoly::operator-=(const HomogPoly& q) {
  check_addable(q);
  if (q.is_zero()) return *this;
  if (degree_ != q.degree_) return *this = -q;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= q.coeffs_[j];
  return *this;
}

HomogPoly HomogPoly::operator-() const {
  HomogPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

HomogPoly operator*(const HomogPoly& p, const HomogPoly& q) {
  if (p.spec_ != q.spec_) throw UsageError("polynomials from different fields");
  HomogPoly r(p.spec_, p.degree_ + q.degree_);
  if (p.coeffs_.empty() || q.coeffs_.empty()) return r;
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    if (p.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) {
      r.coeffs_[i + j].add_mul(p.coeffs_[i], q.coeffs_[j]);
    }
  }
  return r;
}

bool operator==(const HomogPoly& p, const HomogPoly& q) {
  if (p.spec_ != q.spec_) return false;
  const bool pz = p.is_zero();
  const bool qz = q.is_zero();
  if (pz || qz) return pz && qz;
  return p.degree_ == q.degree_ && p.coeffs_ == q.coeffs_;
}

std::string HomogPoly::to_string() const {
  std::string out;
  for (int j = degree_; j >= 0; --j) {
    FieldElement c = coeffs_[static_cast<std::size_t>(j)];
    if (c.is_zero()) continue;
    bool negative = spec_.is_rationals() && sgn(c.rational()) < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const int i = j;
    const int k = degree_ - j;
    std::string mono;
    auto append = [&mono](const char* var, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += var;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    append("x", i);
    append("y", k);
    if (mono.empty()) {
      out += c.to_string();
    } else if (c.is_one()) {
      out += mono;
    } else {
      out += c.to_string() + "*" + mono;
    }
  }
  return out.empty() ? "0" : out;
}

std::string HomogPoly::to_coeff_text() const {
  std::string out = std::to_string(degree_) + ":";
  for (const auto& c : coeffs_) out += " " + c.to_string();
  return out;
}

HomogPoly add(const HomogPoly& p, const HomogPoly& q) { return p + q; }
HomogPoly mul(const HomogPoly& p, const HomogPoly& q) { return p * q; }

HomogPoly scale(const HomogPoly& p, const FieldElement& c) {
  if (c.spec() != p.spec_) throw UsageError("scalar from a different field");
  HomogPoly r = p;
  for (auto& v : r.coeffs_) v *= c;
  return r;
}

HomogPoly mul_linear(const HomogPoly& p, const LinearForm& alpha) {
  if (alpha.spec() != p.spec_) throw UsageError("linear form from a different field");
  HomogPoly r(p.spec_, p.degree_ + 1);
  for (std::size_t j = 0; j < p.coeffs_.size(); ++j) {
    r.coeffs_[j].add_mul(p.coeffs_[j], alpha.ay());
    r.coeffs_[j + 1].add_mul(p.coeffs_[j], alpha.ax());
  }
  return r;
}

HomogPoly pow(const HomogPoly& p, unsigned n) {
  HomogPoly r = HomogPoly::constant(FieldElement::one(p.spec()));
  HomogPoly base = p;
  while (n != 0) {
    if (n & 1U) r = r * base;
    n >>= 1U;
    if (n != 0) base = base * base;
  }
  return r;
}

FieldElement eval(const HomogPoly& p, const FieldElement& a, const FieldElement& b) {
  FieldElement acc = FieldElement::zero(p.spec());
  const auto c = p.coeffs();
  if (c.empty()) return acc;
  // Homogeneous Horner: acc = acc*a + c_j*b^(d-j), from the top coefficient down.
  std::vector<FieldElement> bp(c.size(), FieldElement::one(p.spec()));
  for (std::size_t k = 1; k < c.size(); ++k) bp[k] = bp[k - 1] * b;
  for (std::size_t j = c.size(); j-- > 0;) {
    acc *= a;
    acc.add_mul(c[j], bp[c.size() - 1 - j]);
  }
  return acc;
}

bool is_divisible_by_linear(const HomogPoly& p, const LinearForm& alpha) {
  return eval(p, alpha.ay(), -alpha.ax()).is_zero();
}

std::optional<HomogPoly> divide_linear(const HomogPoly& p, const LinearForm& alpha) {
  if (alpha.spec() != p.spec_) throw UsageError("linear form from a different field");
  const auto& c = p.coeffs_;
  if (c.empty() || p.degree_ == 0) {
    if (!p.is_zero()) return std::nullopt;
    return HomogPoly(p.spec_, p.degree_ - 1);
  }
  const std::size_t n = c.size() - 1;
  HomogPoly q(p.spec_, p.degree_ - 1);
  auto& qc = q.coeffs_;
  if (alpha.ax().is_zero()) {
    // alpha = y: c_j = q_j for j < n, c_n must vanish.
    if (!c[n].is_zero()) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) qc[j] = c[j];
    return q;
  }
  // alpha = x + b*y: c_j = q_{j-1} + b*q_j; solve from the top.
  const FieldElement& b = alpha.ay();
  qc[n - 1] = c[n];
  for (std::size_t j = n - 1; j >= 1; --j) {
    qc[j - 1] = c[j];
    qc[j - 1].sub_mul(b, qc[j]);
  }
  FieldElement rem = c[0];
  rem.sub_mul(b, qc[0]);
  if (!rem.is_zero()) return std::nullopt;
  return q;
}

HomogPoly div_exact_linear_power(const HomogPoly& p, const LinearForm& alpha, int m) {
  if (m < 0) throw UsageError("negative power");
  HomogPoly q = p;
  for (int k = 0; k < m; ++k) {
    auto next = divide_linear(q, alpha);
    if (!next) {
      throw InternalError("(" + p.to_string() + ") is not divisible by (" + alpha.to_string() +
                          ")^" + std::to_string(m));
    }
    q = std::move(*next);
  }
  return q;
}

int linear_multiplicity(const HomogPoly& p, const LinearForm& alpha, int limit) {
  HomogPoly q = p;
  for (int k = 0; k < limit; ++k) {
    auto next = divide_linear(q, alpha);
    if (!next) return k;
    q = std::move(*next);
  }
  return limit;
}

namespace {

class PolyLexer {
public:
  explicit PolyLexer(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool done() {
    skip_ws();
    return i_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool accept(char ch) {
    if (peek() != ch) return false;
    ++i_;
    return true;
  }
  std::string digits() {
    skip_ws();
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    return std::string(s_.substr(start, i_ - start));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw UsageError("bad polynomial '" + std::string(s_) + "': " + what);
  }

private:
  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

HomogPoly parse_poly(std::string_view text, const FieldSpec& spec, std::optional<int> zero_degree) {
  PolyLexer lx(text);
  std::map<std::pair<int, int>, FieldElement> terms;
  bool first = true;
  while (!lx.done()) {
    bool negative = false;
    if (lx.accept('-')) {
      negative = true;
    } else if (!lx.accept('+') && !first) {
      lx.fail("expected '+' or '-'");
    }
    first = false;
    FieldElement coef = FieldElement::one(spec);
    bool have_factor = false;
    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
      std::string num = lx.digits();
      if (lx.accept('/')) {
        const std::string den = lx.digits();
        if (den.empty()) lx.fail("missing denominator");
        num += "/" + den;
      }
      coef = FieldElement::parse(num, spec);
      have_factor = true;
    }
    int ex = 0;
    int ey = 0;
    for (;;) {
      if (have_factor && !lx.accept('*')) break;
      const char v = lx.peek();
      if (v != 'x' && v != 'y') {
        if (have_factor) lx.fail("expected a variable after '*'");
        lx.fail("expected a term");
      }
      lx.accept(v);
      int e = 1;
      if (lx.accept('^')) {
        const std::string d = lx.digits();
        if (d.empty()) lx.fail("missing exponent");
        e = std::stoi(d);
      }
      (v == 'x' ? ex : ey) += e;
      have_factor = true;
    }
    if (negative) coef = -coef;
    auto [it, inserted] = terms.try_emplace({ex, ey}, coef);
    if (!inserted) it->second += coef;
  }
  if (first) lx.fail("empty input");
  std::optional<int> degree;
  for (const auto& [mono, c] : terms) {
    if (c.is_zero()) continue;
    const int d = mono.first + mono.second;
    if (degree && *degree != d) lx.fail("not homogeneous");
    degree = d;
  }
  if (!degree) {
    if (!zero_degree) lx.fail("zero polynomial needs a degree");
    return HomogPoly(spec, *zero_degree);
  }
  std::vector<FieldElement> c(static_cast<std::size_t>(*degree) + 1, FieldElement::zero(spec));
  for (const auto& [mono, v] : terms) {
    if (!v.is_zero()) c[static_cast<std::size_t>(mono.first)] += v;
  }
  return HomogPoly(spec, std::move(c));
}

HomogPoly parse_coeff_text(std::string_view text, const FieldSpec& spec) {
  std::istringstream in{std::string(text)};
  int degree = 0;
  char colon = 0;
  if (!(in >> degree >> colon) || colon != ':') {
    throw UsageError("bad coefficient text '" + std::string(text) + "'");
  }
  std::vector<FieldElement> c;
  std::string tok;
  while (in >> tok) c.push_back(FieldElement::parse(tok, spec));
  if (c.empty() && degree < 0) return HomogPoly(spec, degree);
  if (static_cast<int>(c.size()) != degree + 1) {
    throw UsageError("coefficient count does not match degree in '" + std::string(text) + "'");
  }
  return HomogPoly(spec, std::move(c));
}

}  // namespace logder
