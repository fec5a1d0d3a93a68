#include "logder/oracle.hpp"

#include <algorithm>

#include "logder/errors.hpp"

namespace logder {

namespace {

FieldElement binomial(unsigned n, unsigned k, const FieldSpec& spec) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return FieldElement::from_integer(b, spec);
}

// Rows expressing "coefficient of u^k in alpha_x*f + alpha_y*g is zero" for
// k < min(mult, d+1). Unknowns: f_0..f_d, then g_0..g_d.
void append_constraints(std::vector<std::vector<FieldElement>>& rows, const LinearForm& alpha,
                        int mult, int d, const FieldSpec& spec) {
  const FieldElement& ax = alpha.ax();
  const FieldElement& ay = alpha.ay();
  const std::size_t n = static_cast<std::size_t>(d) + 1;
  const int kmax = std::min(mult, d + 1);
  for (int k = 0; k < kmax; ++k) {
    // c[j] = coefficient of u^k in x^j y^(d-j).
    std::vector<FieldElement> c(n, FieldElement::zero(spec));
    if (!ax.is_zero()) {
      // u = ax*x + ay*y, v = y: x = (u - ay*v)/ax.
      const FieldElement inv_ax = ax.inv();
      for (int j = k; j <= d; ++j) {
        c[static_cast<std::size_t>(j)] = binomial(static_cast<unsigned>(j), static_cast<unsigned>(k), spec) *
                                         inv_ax.pow(static_cast<std::uint64_t>(j)) *
                                         (-ay).pow(static_cast<std::uint64_t>(j - k));
      }
    } else {
      // u = ay*y, v = x: x^j y^(d-j) = v^j u^(d-j) / ay^(d-j).
      c[static_cast<std::size_t>(d - k)] = ay.inv().pow(static_cast<std::uint64_t>(k));
    }
    std::vector<FieldElement> row(2 * n, FieldElement::zero(spec));
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = ax * c[j];
      row[n + j] = ay * c[j];
    }
    rows.push_back(std::move(row));
  }
}

int rank_rational(const std::vector<std::vector<FieldElement>>& rows) {
  // Clear denominators row by row, then Bareiss.
  std::vector<std::vector<mpz_class>> a;
  a.reserve(rows.size());
  for (const auto& row : rows) {
    mpz_class l = 1;
    for (const auto& e : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.rational().get_den_mpz_t());
    std::vector<mpz_class> r;
    r.reserve(row.size());
    for (const auto& e : row) r.push_back(e.rational().get_num() * (l / e.rational().get_den()));
    a.push_back(std::move(r));
  }
  const std::size_t nrows = a.size();
  const std::size_t ncols = nrows == 0 ? 0 : a[0].size();
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < nrows; ++col) {
    std::size_t piv = r;
    while (piv < nrows && a[piv][col] == 0) ++piv;
    if (piv == nrows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < nrows; ++i) {
      for (std::size_t j = col + 1; j < ncols; ++j) {
        a[i][j] = a[r][col] * a[i][j] - a[i][col] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[r][col];
    ++r;
  }
  return static_cast<int>(r);
}

int rank_field(std::vector<std::vector<FieldElement>> a) {
  const std::size_t nrows = a.size();
  const std::size_t ncols = nrows == 0 ? 0 : a[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < nrows; ++col) {
    std::size_t piv = r;
    while (piv < nrows && a[piv][col].is_zero()) ++piv;
    if (piv == nrows) continue;
    std::swap(a[piv], a[r]);
    const FieldElement inv_p = a[r][col].inv();
    for (std::size_t i = r + 1; i < nrows; ++i) {
      if (a[i][col].is_zero()) continue;
      const FieldElement factor = a[i][col] * inv_p;
      for (std::size_t j = col; j < ncols; ++j) a[i][j].sub_mul(factor, a[r][j]);
    }
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace

int matrix_rank(std::vector<std::vector<FieldElement>> rows) {
  if (rows.empty()) return 0;
  const FieldSpec spec = rows.front().front().spec();
  for (const auto& row : rows) {
    if (row.size() != rows.front().size()) throw UsageError("ragged matrix");
  }
  return spec.is_rationals() ? rank_rational(rows) : rank_field(std::move(rows));
}

int dim_degree(const Multiarrangement& m, int d) {
  if (d < 0) throw UsageError("negative degree");
  std::vector<std::vector<FieldElement>> rows;
  for (const auto& [alpha, mult] : m.multiplicities()) {
    append_constraints(rows, alpha, mult, d, m.spec());
  }
  return 2 * (d + 1) - matrix_rank(std::move(rows));
}

GradedDimensionTable dimension_table(const Multiarrangement& m, int max_degree) {
  GradedDimensionTable t;
  for (int d = 0; d <= max_degree; ++d) t.dims.push_back(dim_degree(m, d));
  return t;
}

GradedDimensionTable dimension_table(const Multiarrangement& m) {
  return dimension_table(m, total(m));
}

Exponents exponents_from_table(const GradedDimensionTable& table, int total_multiplicity) {
  const auto& dims = table.dims;
  const int n = static_cast<int>(dims.size());
  int e1 = -1;
  for (int d = 0; d < n && e1 < 0; ++d) {
    if (dims[static_cast<std::size_t>(d)] > 0) e1 = d;
  }
  if (e1 < 0) throw InternalError("no nonzero graded piece up to degree " + std::to_string(n - 1));
  int e2 = -1;
  for (int d = e1; d < n && e2 < 0; ++d) {
    if (dims[static_cast<std::size_t>(d)] > std::max(0, d - e1 + 1)) e2 = d;
  }
  if (e2 < 0) throw InternalError("second generator not found up to degree " + std::to_string(n - 1));
  if (e1 + e2 != total_multiplicity) {
    throw InternalError("oracle exponents " + std::to_string(e1) + ", " + std::to_string(e2) +
                        " do not sum to " + std::to_string(total_multiplicity));
  }
  return Exponents::of(e1, e2);
}

Exponents exponents_by_oracle(const Multiarrangement& m) {
  return exponents_from_table(dimension_table(m), total(m));
}

bool has_free_shape(const GradedDimensionTable& table, const Exponents& e) {
  for (std::size_t d = 0; d < table.dims.size(); ++d) {
    const int di = static_cast<int>(d);
    const int expected = std::max(0, di - e.d1 + 1) + std::max(0, di - e.d2 + 1);
    if (table.dims[d] != expected) return false;
  }
  return true;
}

}  // namespace logder
