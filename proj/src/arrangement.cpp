#include "logder/arrangement.hpp"

#include "logder/errors.hpp"
#include "logder/poly.hpp"

namespace logder {

Multiarrangement::Multiarrangement(const FieldSpec& spec,
                                   const std::vector<std::pair<LinearForm, int>>& entries)
    : spec_(spec) {
  for (const auto& [h, mult] : entries) {
    check_form(h);
    if (mult < 1) throw UsageError("multiplicity must be positive");
    if (!mult_.emplace(h, mult).second) {
      throw UsageError("duplicate hyperplane " + h.to_string());
    }
  }
}

void Multiarrangement::check_form(const LinearForm& h) const {
  if (h.spec() != spec_) throw UsageError("hyperplane from a different field");
}

int Multiarrangement::multiplicity(const LinearForm& h) const {
  auto it = mult_.find(h);
  return it == mult_.end() ? 0 : it->second;
}

Multiarrangement& Multiarrangement::increment(const LinearForm& h) {
  check_form(h);
  ++mult_[h];
  return *this;
}

Multiarrangement& Multiarrangement::decrement(const LinearForm& h) {
  check_form(h);
  auto it = mult_.find(h);
  if (it == mult_.end()) throw UsageError("decrement of absent hyperplane " + h.to_string());
  if (--it->second == 0) mult_.erase(it);
  return *this;
}

Multiarrangement& Multiarrangement::set(const LinearForm& h, int mult) {
  check_form(h);
  if (mult < 0) throw UsageError("negative multiplicity");
  if (mult == 0) {
    mult_.erase(h);
  } else {
    mult_[h] = mult;
  }
  return *this;
}

std::string Multiarrangement::to_string() const {
  std::string out = "{";
  for (const auto& [h, mult] : mult_) {
    if (out.size() > 1) out += ", ";
    out += h.to_string() + ": " + std::to_string(mult);
  }
  return out + "}";
}

int total(const Multiarrangement& m) {
  int t = 0;
  for (const auto& [h, mult] : m.multiplicities()) t += mult;
  return t;
}

bool le(const Multiarrangement& m1, const Multiarrangement& m2) {
  if (m1.spec() != m2.spec()) throw UsageError("arrangements over different fields");
  for (const auto& [h, mult] : m1.multiplicities()) {
    if (mult > m2.multiplicity(h)) return false;
  }
  return true;
}

Multiarrangement increment(Multiarrangement m, const LinearForm& h) { return std::move(m.increment(h)); }
Multiarrangement decrement(Multiarrangement m, const LinearForm& h) { return std::move(m.decrement(h)); }

std::vector<LinearForm> all_hyperplanes(const FieldSpec& spec) {
  if (!spec.is_prime_field()) throw UsageError("all_hyperplanes needs a prime field");
  std::vector<LinearForm> out;
  out.push_back(LinearForm::y(spec));
  for (std::uint64_t c = 0; c < spec.characteristic(); ++c) {
    out.push_back(LinearForm::x_plus(FieldElement::from_integer(static_cast<long>(c), spec)));
  }
  return out;
}

HomogPoly defining_polynomial(const Multiarrangement& m) {
  HomogPoly q = HomogPoly::constant(FieldElement::one(m.spec()));
  for (const auto& [h, mult] : m.multiplicities()) {
    for (int k = 0; k < mult; ++k) q = mul_linear(q, h);
  }
  return q;
}

}  // namespace logder
