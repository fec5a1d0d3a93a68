#include "logder/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <ostream>
#include <thread>

#include "logder/errors.hpp"

namespace logder {

ChainTrace trace_chain(const Multiarrangement& m) {
  ChainBuilder builder(m.spec());
  std::vector<StepTrace> steps;
  for (const auto& alpha : canonical_chain(m)) {
    const int before = builder.arrangement().multiplicity(alpha);
    const StepOutcome out = builder.add(alpha);
    steps.push_back({alpha, before, out.branch, out.difference_before, out.difference_after});
  }
  return {builder.basis(), std::move(steps)};
}

bool difference_grows(const StepTrace& step) {
  return step.branch == StepBranch::GVanishing || step.difference_before == 0;
}

LinearForm find_generic_form(const Derivation& theta2, const std::set<LinearForm>& exclude) {
  const FieldSpec spec = theta2.spec();
  auto generic = [&](const LinearForm& alpha) {
    return !exclude.contains(alpha) && !is_divisible_by_linear(apply(theta2, alpha), alpha);
  };
  const LinearForm y = LinearForm::y(spec);
  if (generic(y)) return y;
  // Over Q the condition on x + c*y is a polynomial of degree <= deg + 1 in c,
  // so this many distinct non-excluded values settle it.
  const long limit = static_cast<long>(theta2.degree()) + 2 + static_cast<long>(exclude.size());
  const long candidates =
      spec.is_rationals() ? 2 * limit + 1 : static_cast<long>(spec.characteristic());
  std::set<LinearForm> tried;
  for (long n = 0; static_cast<long>(tried.size()) < candidates; ++n) {
    // c = 0, 1, -1, 2, -2, ...
    const long c = (n % 2 == 1) ? (n + 1) / 2 : -(n / 2);
    const LinearForm alpha = LinearForm::x_plus(FieldElement::from_integer(c, spec));
    if (!tried.insert(alpha).second) continue;
    if (generic(alpha)) return alpha;
  }
  throw NoGenericFormError("no form outside the excluded set has theta2(alpha) prime to alpha for " +
                           theta2.to_string());
}

std::optional<Exponents> unbalanced_exponents(const Multiarrangement& m) {
  const int t = total(m);
  for (const auto& [h, mult] : m.multiplicities()) {
    if (2 * mult >= t) return Exponents::of(mult, t - mult);
  }
  return std::nullopt;
}

namespace {

std::uint64_t checked_power(std::uint64_t p, unsigned i) {
  std::uint64_t r = 1;
  for (unsigned k = 0; k < i; ++k) {
    if (r > (1ULL << 30) / p) throw UsageError("p^i too large");
    r *= p;
  }
  return r;
}

}  // namespace

Derivation frobenius_derivation(std::uint64_t p, unsigned i) {
  const FieldSpec spec = FieldSpec::prime(p);
  const int e = static_cast<int>(checked_power(p, i));
  const FieldElement one = FieldElement::one(spec);
  return {HomogPoly::monomial(one, e, 0), HomogPoly::monomial(one, 0, e)};
}

Multiarrangement frobenius_arrangement(std::uint64_t p, unsigned i,
                                       const std::map<LinearForm, int>& shifts) {
  const FieldSpec spec = FieldSpec::prime(p);
  const int base = static_cast<int>(checked_power(p, i));
  const int top = static_cast<int>(checked_power(p, i + 1)) - base;
  Multiarrangement m(spec);
  for (const auto& h : all_hyperplanes(spec)) m.set(h, base);
  for (const auto& [h, j] : shifts) {
    if (h.spec() != spec) throw UsageError("shift hyperplane from a different field");
    if (j < 0 || j > top) {
      throw UsageError("shift " + std::to_string(j) + " for " + h.to_string() + " outside [0, " +
                       std::to_string(top) + "]");
    }
    m.set(h, base + j);
  }
  return m;
}

BasisPair frobenius_basis(std::uint64_t p, unsigned i, const std::map<LinearForm, int>& shifts) {
  const Multiarrangement m = frobenius_arrangement(p, i, shifts);
  const FieldSpec spec = m.spec();
  HomogPoly factor = HomogPoly::constant(FieldElement::one(spec));
  for (const auto& [h, j] : shifts) {
    for (int k = 0; k < j; ++k) factor = mul_linear(factor, h);
  }
  BasisPair b{scale_by_poly(frobenius_derivation(p, i), factor), frobenius_derivation(p, i + 1)};
  if (!verify_basis(b, m)) {
    throw InternalError("Frobenius pair fails Saito's criterion for " + m.to_string());
  }
  return b;
}

std::array<LinearForm, 4> proposition_hyperplanes() {
  const FieldSpec q = FieldSpec::rationals();
  return {LinearForm::x_plus(FieldElement::one(q)), LinearForm::x_plus(-FieldElement::one(q)),
          LinearForm::x(q), LinearForm::y(q)};
}

bool predicts_difference_two(const std::array<int, 4>& mu, int bound) {
  // (a, b, c, e) = (mu of the "+4h" line, its partner, the other pair).
  auto family = [bound](int a, int b, int c, int e, int offset, int parity) {
    if (c != e) return false;
    for (int k = -1; k <= bound; ++k) {
      if (2 * k + 1 != b) continue;
      for (int h = -bound; h <= bound; ++h) {
        if (2 * k + offset + 4 * h != a) continue;
        for (int l = -1; l <= bound; ++l) {
          if (2 * l + parity == c) return true;
        }
      }
    }
    return false;
  };
  const auto [m1, m2, m3, m4] = mu;
  return family(m1, m2, m3, m4, 3, 0) || family(m3, m4, m1, m2, 3, 0) ||
         family(m1, m2, m3, m4, 1, 1) || family(m3, m4, m1, m2, 1, 1);
}

PropositionReport proposition_experiment(const PropositionOptions& options) {
  if (options.lo < 0 || options.hi < options.lo) throw UsageError("bad multiplicity range");
  const int lo = options.lo;
  const int width = options.hi - options.lo + 1;
  const auto lines = proposition_hyperplanes();

  // Canonical chain order of the four lines; level k of the prefix tree
  // raises lines[order[k]].
  std::array<int, 4> order{0, 1, 2, 3};
  std::sort(order.begin(), order.end(), [&](int a, int b) { return lines[a] < lines[b]; });

  const std::size_t count = static_cast<std::size_t>(width) * width * width * width;
  PropositionReport report;
  report.rows.resize(count);
  report.enumerated = count;

  auto row_index = [&](const std::array<int, 4>& mu) {
    std::size_t idx = 0;
    for (int v : mu) idx = idx * static_cast<std::size_t>(width) + static_cast<std::size_t>(v - lo);
    return idx;
  };

  auto record = [&](const ChainBuilder& b, const std::array<int, 4>& mu) {
    PropositionRow row;
    row.mu = mu;
    row.total = std::accumulate(mu.begin(), mu.end(), 0);
    row.exponents = exponents_of(b.basis());
    row.in_hypothesis = std::all_of(mu.begin(), mu.end(), [&](int v) { return 2 * v < row.total; });
    row.predicted_d2 = predicts_difference_two(mu, options.hi);
    row.agrees = (row.exponents.difference() == 2) == row.predicted_d2;
    report.rows[row_index(mu)] = row;
  };

  // Depth-first over the remaining levels from a shared prefix.
  auto descend = [&](auto&& self, ChainBuilder b, std::array<int, 4> mu, int level) -> void {
    if (level == 4) {
      record(b, mu);
      return;
    }
    const LinearForm& alpha = lines[static_cast<std::size_t>(order[static_cast<std::size_t>(level)])];
    for (int v = 1; v <= options.hi; ++v) {
      b.add(alpha);
      if (v >= lo) {
        mu[static_cast<std::size_t>(order[static_cast<std::size_t>(level)])] = v;
        self(self, b, mu, level + 1);
      }
    }
  };

  // Tasks: all prefixes through level 2, built serially.
  struct Task {
    ChainBuilder builder;
    std::array<int, 4> mu;
  };
  std::vector<Task> tasks;
  {
    ChainBuilder b0(FieldSpec::rationals());
    std::array<int, 4> mu{};
    const LinearForm& a0 = lines[static_cast<std::size_t>(order[0])];
    const LinearForm& a1 = lines[static_cast<std::size_t>(order[1])];
    for (int v0 = 1; v0 <= options.hi; ++v0) {
      b0.add(a0);
      if (v0 < lo) continue;
      mu[static_cast<std::size_t>(order[0])] = v0;
      ChainBuilder b1 = b0;
      for (int v1 = 1; v1 <= options.hi; ++v1) {
        b1.add(a1);
        if (v1 < lo) continue;
        mu[static_cast<std::size_t>(order[1])] = v1;
        tasks.push_back({b1, mu});
      }
    }
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();) {
      descend(descend, tasks[t].builder, tasks[t].mu, 2);
    }
  };
  const unsigned jobs = std::max(1U, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  for (const auto& row : report.rows) {
    if (!row.in_hypothesis) continue;
    ++report.checked;
    if (!row.agrees) ++report.disagreements;
  }
  return report;
}

void write_proposition_csv(std::ostream& os, const PropositionReport& report) {
  os << "mu1,mu2,mu3,mu4,total,d1,d2,d,predicted_d2,agrees\n";
  for (const auto& r : report.rows) {
    os << r.mu[0] << ',' << r.mu[1] << ',' << r.mu[2] << ',' << r.mu[3] << ',' << r.total << ','
       << r.exponents.d1 << ',' << r.exponents.d2 << ',' << r.exponents.difference() << ','
       << (r.predicted_d2 ? 1 : 0) << ',' << (r.in_hypothesis ? (r.agrees ? "1" : "0") : "n/a")
       << '\n';
  }
}

}  // namespace logder
