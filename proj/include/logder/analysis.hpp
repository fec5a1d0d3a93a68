#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "logder/arrangement.hpp"
#include "logder/basis.hpp"

namespace logder {

// ---------------------------------------------------------------------------
// Exponent-difference dynamics

struct StepTrace {
  LinearForm form;
  /// mu(ker form) before the step.
  int multiplicity_before;
  StepBranch branch;
  int difference_before;
  int difference_after;
};

struct ChainTrace {
  BasisPair basis;
  std::vector<StepTrace> steps;
};

/// Runs the alg3 chain recording every step; `basis` equals alg3(m).
ChainTrace trace_chain(const Multiarrangement& m);

/// The difference grows exactly on g-vanishing steps and on steps that start
/// from equal degrees; it shrinks otherwise.
bool difference_grows(const StepTrace& step);

/// First form on the ladder y, x, x+y, x-y, x+2y, x-2y, ... outside `exclude`
/// with theta2(alpha) not divisible by alpha. Throws NoGenericFormError when
/// the ladder is exhausted (all p+1 lines over F_p; over Q after more
/// candidates than the condition can have roots).
LinearForm find_generic_form(const Derivation& theta2, const std::set<LinearForm>& exclude = {});

/// {mu(H), |mu| - mu(H)} when some H has 2*mu(H) >= |mu|; no basis computed.
std::optional<Exponents> unbalanced_exponents(const Multiarrangement& m);

// ---------------------------------------------------------------------------
// Prime fields

/// x^(p^i) dx + y^(p^i) dy over F_p.
Derivation frobenius_derivation(std::uint64_t p, unsigned i);

/// mu(H) = p^i + shift(H) on all p+1 lines of F_p^2; missing shifts are 0.
/// Throws UsageError when a shift leaves [0, p^(i+1) - p^i].
Multiarrangement frobenius_arrangement(std::uint64_t p, unsigned i,
                                       const std::map<LinearForm, int>& shifts = {});

/// (prod alpha_H^shift(H) * theta_{p^i}, theta_{p^(i+1)}), checked by Saito's
/// criterion against frobenius_arrangement(p, i, shifts). The pair is returned
/// in that order, not sorted by degree.
BasisPair frobenius_basis(std::uint64_t p, unsigned i, const std::map<LinearForm, int>& shifts = {});

// ---------------------------------------------------------------------------
// Four-line classification experiment

/// H1 = x+y, H2 = x-y, H3 = x, H4 = y over Q.
std::array<LinearForm, 4> proposition_hyperplanes();

/// True iff integers k, h, l exist with one of
///   (mu1, mu2, mu3 = mu4) = (2k+3+4h, 2k+1, 2l)
///   (mu3, mu4, mu1 = mu2) = (2k+3+4h, 2k+1, 2l)
///   (mu1, mu2, mu3 = mu4) = (2k+1+4h, 2k+1, 2l+1)
///   (mu3, mu4, mu1 = mu2) = (2k+1+4h, 2k+1, 2l+1).
/// Searched directly over a box of integers that covers every solution for
/// multiplicities in [0, bound].
bool predicts_difference_two(const std::array<int, 4>& mu, int bound);

struct PropositionRow {
  std::array<int, 4> mu;
  int total;
  Exponents exponents;
  /// mu(H_i) < |mu|/2 for all i.
  bool in_hypothesis;
  bool predicted_d2;
  /// Only meaningful when in_hypothesis.
  bool agrees;
};

struct PropositionOptions {
  int lo = 20;
  int hi = 30;
  unsigned jobs = 1;
};

struct PropositionReport {
  /// One row per tuple, mu1 varying slowest.
  std::vector<PropositionRow> rows;
  std::size_t enumerated = 0;
  std::size_t checked = 0;
  std::size_t disagreements = 0;
};

/// Exponents of every tuple in [lo, hi]^4 on the four lines, compared with
/// predicts_difference_two. Tuples sharing a prefix of the canonical chain
/// share the basis computed for it, so every row equals alg3 on its tuple.
PropositionReport proposition_experiment(const PropositionOptions& options = {});

/// Header mu1,mu2,mu3,mu4,total,d1,d2,d,predicted_d2,agrees; `agrees` is
/// "n/a" for tuples outside the hypothesis.
void write_proposition_csv(std::ostream& os, const PropositionReport& report);

}  // namespace logder
