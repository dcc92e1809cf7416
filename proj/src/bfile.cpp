#include "trigverify/bfile.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "trigverify/errors.hpp"
#include "trigverify/exact_seq.hpp"
#include "trigverify/modular.hpp"

namespace trigverify {

namespace {

bool is_integer_token(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

Integer parse_integer_token(const std::string& s) {
  return Integer(s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

SequenceTable parse_bfile(std::istream& in, std::string name) {
  SequenceTable table{std::move(name), {}};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream fields(line);
    std::string index, value, extra;
    fields >> index >> value;
    if (value.empty() || (fields >> extra))
      throw ParseError(line_no, "expected \"index value\", got \"" + line + "\"");
    if (!is_integer_token(index) || !is_integer_token(value))
      throw ParseError(line_no, "non-integer field in \"" + line + "\"");

    SequenceEntry entry{parse_integer_token(index), parse_integer_token(value)};
    if (!table.entries.empty() && entry.index <= table.entries.back().index)
      throw NonMonotonic(line_no, "index " + entry.index.get_str() + " does not increase");
    table.entries.push_back(std::move(entry));
  }
  return table;
}

SequenceTable load_bfile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open b-file '" + path + "'");
  std::string name = path;
  if (const auto slash = name.find_last_of('/'); slash != std::string::npos) name.erase(0, slash + 1);
  if (const auto dot = name.find_last_of('.'); dot != std::string::npos) name.erase(dot);
  return parse_bfile(in, name);
}

Generator parse_generator(std::string_view name) {
  if (name == "S") return Generator::S;
  if (name == "T") return Generator::T;
  if (name == "central-binomial" || name == "C(2n,n)") return Generator::CentralBinomial;
  if (name == "C(3n,n)") return Generator::Binomial3nN;
  if (name == "C(6n,3n)") return Generator::Binomial6n3n;
  throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
}

std::string_view to_string(Generator g) {
  switch (g) {
    case Generator::S: return "S";
    case Generator::T: return "T";
    case Generator::CentralBinomial: return "central-binomial";
    case Generator::Binomial3nN: return "C(3n,n)";
    case Generator::Binomial6n3n: return "C(6n,3n)";
  }
  return "?";
}

namespace {

Rational generate(Generator g, unsigned long n) {
  switch (g) {
    case Generator::S: return exact_seq::s_binomial_def(n);
    case Generator::T:
      if (n == 0) throw std::invalid_argument("T is defined for n >= 1");
      return Rational(exact_seq::t_closed_form(n));
    case Generator::CentralBinomial: return Rational(exact_seq::binomial(2 * n, n));
    case Generator::Binomial3nN: return Rational(exact_seq::binomial(3 * n, n));
    case Generator::Binomial6n3n: return Rational(exact_seq::binomial(6 * n, 3 * n));
  }
  throw std::logic_error("unhandled generator");
}

// Extra evidence attached to an S mismatch: the S_p congruence for both the
// file value and the computed value when the index is an odd prime.
void annotate_s_mismatch(ReportItem& item, unsigned long n, const Integer& file_value,
                         const Rational& computed) {
  if (n == 3 && file_value == 14568)
    item.details["note"] = "known misprint: 14568 for S_3 = 14586";
  if (n > 2 && modular::is_prime(n) && is_integral(computed)) {
    auto verdict = [](const modular::CongruenceReport& r) {
      return std::string(r.pass() ? "holds" : "fails") + " (" + r.lhs.value().get_str() +
             " vs " + r.rhs.value().get_str() + " mod " + r.lhs.modulus().get_str() + ")";
    };
    item.details["file-sp-congruence"] = verdict(modular::sp_congruence_for_value(file_value, n));
    item.details["computed-sp-congruence"] =
        verdict(modular::sp_congruence_for_value(computed.get_num(), n));
  }
}

}  // namespace

VerificationReport crosscheck(const SequenceTable& table, Generator generator) {
  if (table.entries.empty()) throw std::invalid_argument("crosscheck: empty table");
  const std::string claim =
      "oeis:" + (table.name.empty() ? std::string(to_string(generator)) : table.name);
  VerificationReport report("oeis");
  for (const auto& entry : table.entries) {
    ReportItem item{claim, "n=" + entry.index.get_str(), Status::Pass,
                    {{"generator", std::string(to_string(generator))},
                     {"file", entry.value.get_str()}}};
    if (entry.index < 0 || !entry.index.fits_ulong_p()) {
      item.status = Status::Error;
      item.details["error"] = "index out of range";
      report.add(std::move(item));
      continue;
    }
    const unsigned long n = entry.index.get_ui();
    try {
      const Rational computed = generate(generator, n);
      item.details["computed"] = computed.get_str();
      if (computed != entry.value) {
        item.status = Status::Mismatch;
        if (generator == Generator::S) annotate_s_mismatch(item, n, entry.value, computed);
      }
    } catch (const std::exception& e) {
      item.status = Status::Error;
      item.details["error"] = e.what();
    }
    report.add(std::move(item));
  }
  return report;
}

}  // namespace trigverify
