#pragma once

#include <vector>

#include "logder/arrangement.hpp"
#include "logder/basis.hpp"

namespace logder {

/// Brute-force verification by exact linear algebra, independent of the
/// incremental basis construction.
///
/// D(A, mu)_d is the kernel of a linear map on the 2(d+1) coefficients of
/// (f, g) in S_d^2: for each H = ker(alpha), rewrite alpha_x*f + alpha_y*g in
/// coordinates (u, v) with u = alpha and zero the coefficients of u^k for
/// k < mu(H).

/// Entry d is dim D(A, mu)_d.
struct GradedDimensionTable {
  std::vector<int> dims;

  friend bool operator==(const GradedDimensionTable&, const GradedDimensionTable&) = default;
};

int dim_degree(const Multiarrangement& m, int d);

/// Dimensions for d = 0 .. max_degree.
GradedDimensionTable dimension_table(const Multiarrangement& m, int max_degree);
/// Dimensions for d = 0 .. |mu|.
GradedDimensionTable dimension_table(const Multiarrangement& m);

/// e1 = first degree with a nonzero component, e2 = first degree whose
/// dimension exceeds what the multiples of the e1 generator account for.
/// Throws InternalError if e1 + e2 != |mu|.
Exponents exponents_by_oracle(const Multiarrangement& m);
Exponents exponents_from_table(const GradedDimensionTable& table, int total_multiplicity);

/// dims[d] == max(0, d-e1+1) + max(0, d-e2+1) for every entry.
bool has_free_shape(const GradedDimensionTable& table, const Exponents& e);

/// Rank of a dense matrix: fraction-free (Bareiss) elimination over Q,
/// ordinary elimination over F_p. Rows must share one field.
int matrix_rank(std::vector<std::vector<FieldElement>> rows);

}  // namespace logder
