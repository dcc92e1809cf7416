#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "trigverify/bignum.hpp"
#include "trigverify/report.hpp"

namespace trigverify {

struct SequenceEntry {
  Integer index;
  Integer value;
  friend bool operator==(const SequenceEntry&, const SequenceEntry&) = default;
};

struct SequenceTable {
  std::string name;
  std::vector<SequenceEntry> entries;  // strictly increasing indices
};

// OEIS b-file: "index value" per line, '#' comments, blank lines allowed.
// Throws ParseError (with line number) or NonMonotonic.
SequenceTable parse_bfile(std::istream& in, std::string name = {});
SequenceTable load_bfile(const std::string& path);

enum class Generator { S, T, CentralBinomial, Binomial3nN, Binomial6n3n };

// Accepts "S", "T", "central-binomial", "C(3n,n)", "C(6n,3n)".
Generator parse_generator(std::string_view name);
std::string_view to_string(Generator g);

// Compares every row against the exact generator value. Rows that differ
// are reported as Status::Mismatch with both values. Throws
// std::invalid_argument for an empty table.
VerificationReport crosscheck(const SequenceTable& table, Generator generator);

}  // namespace trigverify
