#include "logder/arrangement_file.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "logder/errors.hpp"

namespace logder {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

}  // namespace

Multiarrangement parse_arrangement(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::optional<FieldSpec> spec;
  std::optional<Multiarrangement> m;
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto tok = split_ws(line);
    if (tok.empty()) continue;
    if (!spec) {
      if (tok[0] != "field") throw ParseError(lineno, "expected 'field Q' or 'field F <p>'");
      if (tok.size() == 2 && tok[1] == "Q") {
        spec = FieldSpec::rationals();
      } else if (tok.size() == 3 && tok[1] == "F") {
        std::uint64_t p = 0;
        std::size_t used = 0;
        try {
          p = std::stoull(tok[2], &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != tok[2].size() || tok[2][0] == '-') {
          throw ParseError(lineno, "bad characteristic '" + tok[2] + "'");
        }
        try {
          spec = FieldSpec::prime(p);
        } catch (const UsageError& e) {
          throw ParseError(lineno, e.what());
        }
      } else {
        throw ParseError(lineno, "expected 'field Q' or 'field F <p>'");
      }
      m.emplace(*spec);
      continue;
    }
    if (tok.size() != 3) throw ParseError(lineno, "expected '<ax> <ay> <multiplicity>'");
    LinearForm alpha = LinearForm::y(*spec);
    try {
      alpha = LinearForm::normalize(FieldElement::parse(tok[0], *spec), FieldElement::parse(tok[1], *spec));
    } catch (const std::exception& e) {
      throw ParseError(lineno, e.what());
    }
    long mult = 0;
    std::size_t used = 0;
    try {
      mult = std::stol(tok[2], &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok[2].size()) throw ParseError(lineno, "bad multiplicity '" + tok[2] + "'");
    if (mult < 1) throw ParseError(lineno, "multiplicity must be positive");
    if (mult > 1'000'000) throw ParseError(lineno, "multiplicity too large");
    if (m->multiplicity(alpha) != 0) {
      throw ParseError(lineno, "duplicate hyperplane " + alpha.to_string());
    }
    m->set(alpha, static_cast<int>(mult));
  }
  if (!m) throw ParseError(0, "missing 'field' header");
  return *m;
}

Multiarrangement read_arrangement_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_arrangement(buf.str());
}

std::string render_arrangement(const Multiarrangement& m) {
  std::string out = "field " + m.spec().to_string() + "\n";
  for (const auto& [h, mult] : m.multiplicities()) {
    out += h.ax().to_string() + " " + h.ay().to_string() + " " + std::to_string(mult) + "\n";
  }
  return out;
}

}  // namespace logder
