#include "trigverify/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "trigverify/errors.hpp"

namespace trigverify {

using json = nlohmann::ordered_json;

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Mismatch: return "mismatch";
    case Status::Error: return "error";
  }
  return "error";
}

Status parse_status(std::string_view name) {
  for (Status s : {Status::Pass, Status::Fail, Status::Mismatch, Status::Error})
    if (to_string(s) == name) return s;
  throw std::invalid_argument("unknown status '" + std::string(name) + "'");
}

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && is_digit(a[ie])) ++ie;
      while (je < b.size() && is_digit(b[je])) ++je;
      std::string_view ra = a.substr(i, ie - i), rb = b.substr(j, je - j);
      while (ra.size() > 1 && ra.front() == '0') ra.remove_prefix(1);
      while (rb.size() > 1 && rb.front() == '0') rb.remove_prefix(1);
      if (ra.size() != rb.size()) return ra.size() < rb.size();
      if (ra != rb) return ra < rb;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

void VerificationReport::add(ReportItem item) {
  auto key_less = [](const ReportItem& x, const ReportItem& y) {
    if (x.claim != y.claim) return natural_less(x.claim, y.claim);
    return natural_less(x.params, y.params);
  };
  items_.insert(std::upper_bound(items_.begin(), items_.end(), item, key_less), std::move(item));
}

void VerificationReport::merge(const VerificationReport& other) {
  for (const auto& item : other.items_) add(item);
}

Summary VerificationReport::summary() const {
  Summary s;
  for (const auto& item : items_) {
    switch (item.status) {
      case Status::Pass: ++s.pass; break;
      case Status::Fail: ++s.fail; break;
      case Status::Mismatch: ++s.mismatch; break;
      case Status::Error: ++s.error; break;
    }
  }
  return s;
}

bool VerificationReport::all_pass() const {
  return std::all_of(items_.begin(), items_.end(),
                     [](const ReportItem& i) { return i.status == Status::Pass; });
}

std::string tool_version() { return TRIGVERIFY_VERSION; }

std::string to_json(const VerificationReport& report, int indent) {
  json doc;
  doc["suite"] = report.suite();
  doc["tool-version"] = tool_version();
  json items = json::array();
  for (const auto& item : report.items()) {
    json details = json::object();
    for (const auto& [k, v] : item.details) details[k] = v;
    items.push_back({{"claim", item.claim},
                     {"params", item.params},
                     {"status", to_string(item.status)},
                     {"details", std::move(details)}});
  }
  doc["items"] = std::move(items);
  const Summary s = report.summary();
  doc["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"mismatch", s.mismatch}, {"error", s.error}};
  return doc.dump(indent);
}

VerificationReport report_from_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    VerificationReport report(doc.at("suite").get<std::string>());
    for (const auto& j : doc.at("items")) {
      ReportItem item;
      item.claim = j.at("claim").get<std::string>();
      item.params = j.at("params").get<std::string>();
      item.status = parse_status(j.at("status").get<std::string>());
      for (const auto& [k, v] : j.at("details").items()) item.details[k] = v.get<std::string>();
      report.add(std::move(item));
    }
    const json& sj = doc.at("summary");
    const Summary declared{sj.at("pass").get<std::size_t>(), sj.at("fail").get<std::size_t>(),
                           sj.value("mismatch", std::size_t{0}), sj.at("error").get<std::size_t>()};
    if (declared != report.summary()) throw ParseError(0, "summary does not match items");
    return report;
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("malformed report: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string joined_details(const ReportItem& item) {
  std::string out;
  for (const auto& [k, v] : item.details) {
    if (!out.empty()) out += "; ";
    out += k + "=" + v;
  }
  return out;
}

}  // namespace

std::string to_csv(const VerificationReport& report) {
  std::ostringstream out;
  out << "claim,params,status,detail\n";
  for (const auto& item : report.items())
    out << csv_field(item.claim) << ',' << csv_field(item.params) << ','
        << to_string(item.status) << ',' << csv_field(joined_details(item)) << '\n';
  return out.str();
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "suite: " << report.suite() << " (trigverify " << tool_version() << ")\n";
  for (const auto& item : report.items()) {
    std::string tag(to_string(item.status));
    std::transform(tag.begin(), tag.end(), tag.begin(), ::toupper);
    out << '[' << tag << "] " << item.claim;
    if (!item.params.empty()) out << ' ' << item.params;
    if (!item.details.empty()) out << "  " << joined_details(item);
    out << '\n';
  }
  const Summary s = report.summary();
  out << "summary: " << s.pass << " pass, " << s.fail << " fail, " << s.mismatch
      << " mismatch, " << s.error << " error\n";
  return out.str();
}

ReportItem to_item(const modular::CongruenceReport& r) {
  auto show = [](const modular::Residue& x) {
    return x.value().get_str() + " (mod " + x.modulus().get_str() + ")";
  };
  const char* name = r.claim_id == "guo" ? "n=" : "p=";
  return ReportItem{r.claim_id, name + r.parameter.get_str(),
                    r.pass() ? Status::Pass : Status::Fail,
                    {{"lhs", show(r.lhs)}, {"rhs", show(r.rhs)}}};
}

ReportItem to_item(const numeric::EvalReport& r, std::string params) {
  return ReportItem{r.claim_id,
                    std::move(params),
                    r.pass() ? Status::Pass : Status::Fail,
                    {{"lhs", r.lhs.to_annotated_string(30)},
                     {"rhs", r.rhs.to_annotated_string(30)},
                     {"residual", r.residual.to_annotated_string(6)},
                     {"tolerance", r.tolerance.to_annotated_string(6)},
                     {"terms", std::to_string(r.terms_used)}}};
}

}  // namespace trigverify
