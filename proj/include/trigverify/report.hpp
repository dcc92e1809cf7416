#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "trigverify/modular.hpp"
#include "trigverify/numeric.hpp"

namespace trigverify {

enum class Status { Pass, Fail, Mismatch, Error };

std::string_view to_string(Status s);
// Throws std::invalid_argument on an unknown name.
Status parse_status(std::string_view name);

struct ReportItem {
  std::string claim;
  std::string params;
  Status status = Status::Pass;
  std::map<std::string, std::string> details;

  friend bool operator==(const ReportItem&, const ReportItem&) = default;
};

struct Summary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t mismatch = 0;
  std::size_t error = 0;

  friend bool operator==(const Summary&, const Summary&) = default;
};

// Orders "p=3" before "p=11": digit runs compare by numeric value.
bool natural_less(std::string_view a, std::string_view b);

// Items are kept ordered by (claim, params); insertion order breaks ties.
class VerificationReport {
 public:
  explicit VerificationReport(std::string suite) : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }
  const std::vector<ReportItem>& items() const { return items_; }

  void add(ReportItem item);
  void merge(const VerificationReport& other);

  Summary summary() const;
  bool all_pass() const;
  // 0 when every item passes, 1 otherwise.
  int exit_code() const { return all_pass() ? 0 : 1; }

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;

 private:
  std::string suite_;
  std::vector<ReportItem> items_;
};

std::string tool_version();

// {suite, tool-version, items[{claim, params, status, details}],
//  summary{pass, fail, mismatch, error}}
std::string to_json(const VerificationReport& report, int indent = 2);
// Throws ParseError if the document is malformed or its summary disagrees
// with its items.
VerificationReport report_from_json(std::string_view text);

// Header "claim,params,status,detail"; detail is "key=value; ..." and
// fields are quoted when needed.
std::string to_csv(const VerificationReport& report);
std::string to_text(const VerificationReport& report);

ReportItem to_item(const modular::CongruenceReport& r);
ReportItem to_item(const numeric::EvalReport& r, std::string params);

}  // namespace trigverify
