#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "logder/arrangement.hpp"
#include "logder/derivation.hpp"

namespace logder::testing {

using Rng = std::mt19937_64;

inline FieldSpec random_field(Rng& rng) {
  static const std::uint64_t kChoices[] = {0, 2, 3, 5, 7};
  const auto c = kChoices[std::uniform_int_distribution<int>(0, 4)(rng)];
  return c == 0 ? FieldSpec::rationals() : FieldSpec::prime(c);
}

inline FieldElement random_element(Rng& rng, const FieldSpec& spec, long range = 5) {
  const long num = std::uniform_int_distribution<long>(-range, range)(rng);
  if (spec.is_rationals() && std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
    const long den = std::uniform_int_distribution<long>(1, 4)(rng);
    return FieldElement::from_rational(mpq_class(num, den), spec);
  }
  return FieldElement::from_integer(num, spec);
}

inline FieldElement random_nonzero(Rng& rng, const FieldSpec& spec) {
  for (;;) {
    auto e = random_element(rng, spec);
    if (!e.is_zero()) return e;
  }
}

inline LinearForm random_form(Rng& rng, const FieldSpec& spec) {
  for (;;) {
    auto a = random_element(rng, spec, 3);
    auto b = random_element(rng, spec, 3);
    if (!a.is_zero() || !b.is_zero()) return LinearForm::normalize(a, b);
  }
}

/// Up to `max_lines` distinct lines with total multiplicity in [1, max_total]
/// (or the empty arrangement with small probability).
inline Multiarrangement random_arrangement(Rng& rng, const FieldSpec& spec, int max_lines = 5,
                                           int max_total = 12) {
  Multiarrangement m(spec);
  if (std::uniform_int_distribution<int>(0, 30)(rng) == 0) return m;
  int lines = std::uniform_int_distribution<int>(1, max_lines)(rng);
  if (spec.is_prime_field()) lines = std::min<int>(lines, static_cast<int>(spec.characteristic()) + 1);
  std::vector<LinearForm> forms;
  while (static_cast<int>(forms.size()) < lines) {
    auto f = random_form(rng, spec);
    if (std::find(forms.begin(), forms.end(), f) == forms.end()) forms.push_back(f);
  }
  const int budget = std::uniform_int_distribution<int>(lines, std::max(lines, max_total))(rng);
  for (const auto& f : forms) m.set(f, 1);
  for (int extra = budget - lines; extra > 0; --extra) {
    m.increment(forms[std::uniform_int_distribution<std::size_t>(0, forms.size() - 1)(rng)]);
  }
  return m;
}

inline HomogPoly random_poly(Rng& rng, const FieldSpec& spec, int degree) {
  std::vector<FieldElement> c;
  for (int j = 0; j <= degree; ++j) c.push_back(random_element(rng, spec));
  return HomogPoly(spec, std::move(c));
}

inline HomogPoly random_nonzero_poly(Rng& rng, const FieldSpec& spec, int degree) {
  for (;;) {
    auto p = random_poly(rng, spec, degree);
    if (!p.is_zero()) return p;
  }
}

}  // namespace logder::testing
