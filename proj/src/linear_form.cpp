#include "logder/linear_form.hpp"

#include "logder/errors.hpp"

namespace logder {

LinearForm LinearForm::normalize(const FieldElement& ax, const FieldElement& ay) {
  if (ax.spec() != ay.spec()) throw UsageError("linear form coefficients from different fields");
  if (!ax.is_zero()) {
    return LinearForm(FieldElement::one(ax.spec()), ay / ax);
  }
  if (ay.is_zero()) throw UsageError("the zero form defines no hyperplane");
  return LinearForm(ax, FieldElement::one(ay.spec()));
}

LinearForm LinearForm::x(const FieldSpec& spec) {
  return LinearForm(FieldElement::one(spec), FieldElement::zero(spec));
}

LinearForm LinearForm::y(const FieldSpec& spec) {
  return LinearForm(FieldElement::zero(spec), FieldElement::one(spec));
}

LinearForm LinearForm::x_plus(const FieldElement& c) {
  return LinearForm(FieldElement::one(c.spec()), c);
}

std::string LinearForm::to_string() const {
  if (ax_.is_zero()) return "y";
  if (ay_.is_zero()) return "x";
  if (ay_.is_one()) return "x + y";
  const FieldSpec spec = ay_.spec();
  if (spec.is_rationals() && sgn(ay_.rational()) < 0) {
    const FieldElement m = -ay_;
    return m.is_one() ? std::string("x - y") : "x - " + m.to_string() + "*y";
  }
  return "x + " + ay_.to_string() + "*y";
}

}  // namespace logder
