#include "logder/cli.hpp"

#include <chrono>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "logder/analysis.hpp"
#include "logder/arrangement_file.hpp"
#include "logder/basis.hpp"
#include "logder/errors.hpp"
#include "logder/oracle.hpp"

namespace logder {

namespace {

constexpr int kOracleLimit = 16;

void print_basis(std::ostream& out, const BasisPair& b) {
  out << "theta1 = " << b.theta1.to_string() << "  [degree " << b.theta1.degree() << "]\n";
  out << "theta2 = " << b.theta2.to_string() << "  [degree " << b.theta2.degree() << "]\n";
}

const char* yes_no(bool v) { return v ? "yes" : "no"; }

std::map<LinearForm, int> parse_shifts(const std::vector<std::string>& items, const FieldSpec& spec) {
  std::map<LinearForm, int> shifts;
  for (const auto& item : items) {
    const auto a = item.find(',');
    const auto b = a == std::string::npos ? a : item.find(',', a + 1);
    if (b == std::string::npos) throw UsageError("shift must be 'ax,ay,j': '" + item + "'");
    const LinearForm h = LinearForm::normalize(FieldElement::parse(item.substr(0, a), spec),
                                               FieldElement::parse(item.substr(a + 1, b - a - 1), spec));
    const int j = std::stoi(item.substr(b + 1));
    if (!shifts.emplace(h, j).second) throw UsageError("repeated shift for " + h.to_string());
  }
  return shifts;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bases of logarithmic derivation modules of line multiarrangements"};
  app.require_subcommand(1);

  std::string file;
  auto* basis_cmd = app.add_subcommand("basis", "Construct a homogeneous basis");
  basis_cmd->add_option("file", file, "Arrangement file")->required();

  auto* exp_cmd = app.add_subcommand("exponents", "Print the exponents {d1, d2}");
  exp_cmd->add_option("file", file, "Arrangement file")->required();

  std::string theta1_text;
  std::string theta2_text;
  auto* verify_cmd = app.add_subcommand("verify", "Check a pair of derivations with Saito's criterion");
  verify_cmd->add_option("file", file, "Arrangement file")->required();
  verify_cmd->add_option("--theta1", theta1_text, "First derivation, '(f) dx + (g) dy' or 'f, g'")->required();
  verify_cmd->add_option("--theta2", theta2_text, "Second derivation")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "Graded dimensions by linear algebra (|mu| <= 16)");
  oracle_cmd->add_option("file", file, "Arrangement file")->required();

  auto* trace_cmd = app.add_subcommand("trace", "Per-step branch and exponent-difference trace");
  trace_cmd->add_option("file", file, "Arrangement file")->required();

  std::uint64_t p = 0;
  unsigned level = 0;
  std::vector<std::string> shift_items;
  auto* frob_cmd = app.add_subcommand("frobenius", "Frobenius basis over F_p");
  frob_cmd->add_option("p", p, "Prime")->required();
  frob_cmd->add_option("i", level, "Exponent i")->required();
  frob_cmd->add_option("--shifts", shift_items, "Shifts 'ax,ay,j' (missing lines get 0)");

  std::string csv_path;
  unsigned jobs = 1;
  int lo = 20;
  int hi = 30;
  auto* prop_cmd = app.add_subcommand("prop-experiment", "Four-line difference-2 classification");
  prop_cmd->add_option("--out", csv_path, "Write the per-tuple CSV report here");
  prop_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  prop_cmd->add_option("--lo", lo, "Smallest multiplicity")->check(CLI::NonNegativeNumber);
  prop_cmd->add_option("--hi", hi, "Largest multiplicity")->check(CLI::NonNegativeNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (basis_cmd->parsed()) {
      const auto m = read_arrangement_file(file);
      print_basis(out, alg3(m));
      return kExitOk;
    }
    if (exp_cmd->parsed()) {
      out << "exponents: " << exponents(read_arrangement_file(file)).to_string() << "\n";
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      const auto m = read_arrangement_file(file);
      const BasisPair b{parse_derivation(theta1_text, m.spec()), parse_derivation(theta2_text, m.spec())};
      const bool m1 = is_member(b.theta1, m);
      const bool m2 = is_member(b.theta2, m);
      const bool indep = !saito_determinant(b.theta1, b.theta2).is_zero();
      const int sum = b.theta1.degree() + b.theta2.degree();
      out << "theta1 in D: " << yes_no(m1) << "\n";
      out << "theta2 in D: " << yes_no(m2) << "\n";
      out << "independent: " << yes_no(indep) << "\n";
      out << "degree sum: " << sum << " (|mu| = " << total(m) << ")\n";
      const bool ok = verify_basis(b, m);
      out << "basis: " << yes_no(ok) << "\n";
      return ok ? kExitOk : kExitNegative;
    }
    if (oracle_cmd->parsed()) {
      const auto m = read_arrangement_file(file);
      if (total(m) > kOracleLimit) {
        err << "error: oracle is limited to |mu| <= " << kOracleLimit << " (got " << total(m) << ")\n";
        return kExitUsage;
      }
      const auto table = dimension_table(m);
      out << "degree dim\n";
      for (std::size_t d = 0; d < table.dims.size(); ++d) out << d << " " << table.dims[d] << "\n";
      const Exponents e = exponents_from_table(table, total(m));
      out << "exponents: " << e.to_string() << "\n";
      out << "free shape: " << yes_no(has_free_shape(table, e)) << "\n";
      return kExitOk;
    }
    if (trace_cmd->parsed()) {
      const auto m = read_arrangement_file(file);
      const ChainTrace trace = trace_chain(m);
      std::size_t k = 0;
      for (const auto& s : trace.steps) {
        out << "step " << ++k << ": " << s.form.to_string() << " " << s.multiplicity_before << "->"
            << s.multiplicity_before + 1 << "  " << to_string(s.branch) << "  difference "
            << s.difference_before << " -> " << s.difference_after << "\n";
      }
      out << "exponents: " << exponents_of(trace.basis).to_string() << "\n";
      return kExitOk;
    }
    if (frob_cmd->parsed()) {
      const FieldSpec spec = FieldSpec::prime(p);
      const auto shifts = parse_shifts(shift_items, spec);
      const auto m = frobenius_arrangement(p, level, shifts);
      out << "arrangement: " << m.to_string() << "\n";
      print_basis(out, frobenius_basis(p, level, shifts));
      out << "verified: yes\n";
      out << "alg3 exponents: " << exponents(m).to_string() << "\n";
      return kExitOk;
    }
    if (prop_cmd->parsed()) {
      if (hi < lo) throw UsageError("--hi must be >= --lo");
      const auto start = std::chrono::steady_clock::now();
      const auto report = proposition_experiment({lo, hi, jobs});
      const std::chrono::duration<double> secs = std::chrono::steady_clock::now() - start;
      if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        if (!csv) throw UsageError("cannot write '" + csv_path + "'");
        write_proposition_csv(csv, report);
      }
      out << report.enumerated << " tuples, " << report.disagreements << " disagreements\n";
      out << report.checked << " tuples satisfy the hypothesis; " << secs.count() << " s\n";
      for (const auto& r : report.rows) {
        if (r.in_hypothesis && !r.agrees) {
          out << "disagreement: (" << r.mu[0] << ", " << r.mu[1] << ", " << r.mu[2] << ", " << r.mu[3]
              << ") d = " << r.exponents.difference() << "\n";
        }
      }
      return report.disagreements == 0 ? kExitOk : kExitNegative;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ArithmeticError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace logder
