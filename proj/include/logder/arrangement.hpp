#pragma once

#include <map>
#include <string>
#include <vector>

#include "logder/field.hpp"
#include "logder/linear_form.hpp"
#include "logder/poly.hpp"

namespace logder {

/// A multiarrangement of lines through the origin: a finitely supported map
/// from normalized linear forms to positive multiplicities. Iteration follows
/// the canonical key order of LinearForm.
class Multiarrangement {
public:
  using Map = std::map<LinearForm, int>;

  explicit Multiarrangement(const FieldSpec& spec = FieldSpec::rationals()) : spec_(spec) {}
  /// Throws UsageError on field mismatch or a multiplicity < 1. Entries whose
  /// forms coincide after normalization are rejected too.
  Multiarrangement(const FieldSpec& spec, const std::vector<std::pair<LinearForm, int>>& entries);

  const FieldSpec& spec() const noexcept { return spec_; }
  const Map& multiplicities() const noexcept { return mult_; }
  bool empty() const noexcept { return mult_.empty(); }
  std::size_t size() const noexcept { return mult_.size(); }
  /// 0 for hyperplanes outside the support.
  int multiplicity(const LinearForm& h) const;

  /// Raises the multiplicity of h by one, adding h when absent.
  Multiarrangement& increment(const LinearForm& h);
  /// Lowers the multiplicity of h by one. Throws UsageError if h is absent.
  Multiarrangement& decrement(const LinearForm& h);
  /// Sets h to `mult`; 0 removes it.
  Multiarrangement& set(const LinearForm& h, int mult);

  std::string to_string() const;

  friend bool operator==(const Multiarrangement&, const Multiarrangement&) = default;

private:
  void check_form(const LinearForm& h) const;

  FieldSpec spec_;
  Map mult_;
};

/// |mu|.
int total(const Multiarrangement& m);
/// m1(H) <= m2(H) for every H. Throws UsageError on field mismatch.
bool le(const Multiarrangement& m1, const Multiarrangement& m2);
Multiarrangement increment(Multiarrangement m, const LinearForm& h);
Multiarrangement decrement(Multiarrangement m, const LinearForm& h);

/// The p+1 lines of F_p^2: y, then x + c*y for c = 0..p-1. Throws UsageError over Q.
std::vector<LinearForm> all_hyperplanes(const FieldSpec& spec);

/// The defining polynomial prod_H alpha_H^mu(H).
HomogPoly defining_polynomial(const Multiarrangement& m);

}  // namespace logder
