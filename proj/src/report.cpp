#include "cmperiods/report.hpp"

#include <sstream>

namespace cmperiods {

CheckRecord to_record(const IdentityReport& report, int digits) {
  CheckRecord r;
  r.check = report.name;
  r.inputs = report.inputs;
  r.lhs_log = report.lhs.to_string(digits);
  r.rhs_log = report.rhs.to_string(digits);
  r.digits_agreed = report.digits_agreed;
  r.pass = report.pass;
  r.details.emplace_back("abs_err", report.abs_err.to_string(6));
  r.details.emplace_back("rel_err", report.rel_err.to_string(6));
  return r;
}

CheckRecord to_record(const RatioCertificate& cert,
                      std::vector<std::pair<std::string, std::string>> inputs,
                      int digits) {
  CheckRecord r;
  r.check = cert.name;
  r.inputs = std::move(inputs);
  r.pass = cert.pass;
  r.details.emplace_back("ratio", cert.ratio.to_string(digits));
  if (cert.recognized) {
    std::string value = cert.recognized->get_str();
    if (cert.sqrt_p) value += "*sqrt(p)";
    r.details.emplace_back("recognized", value);
    r.details.emplace_back("height", cert.height.get_str());
  } else {
    r.details.emplace_back("recognized", "none");
  }
  return r;
}

nlohmann::ordered_json to_json(const CheckRecord& record) {
  nlohmann::ordered_json j;
  j["check"] = record.check;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  for (const auto& [k, v] : record.inputs) inputs[k] = v;
  j["inputs"] = inputs;
  j["lhs_log"] = record.lhs_log ? nlohmann::ordered_json(*record.lhs_log) : nullptr;
  j["rhs_log"] = record.rhs_log ? nlohmann::ordered_json(*record.rhs_log) : nullptr;
  j["digits_agreed"] =
      record.digits_agreed ? nlohmann::ordered_json(*record.digits_agreed) : nullptr;
  j["pass"] = record.pass;
  if (!record.details.empty()) {
    nlohmann::ordered_json details = nlohmann::ordered_json::object();
    for (const auto& [k, v] : record.details) details[k] = v;
    j["details"] = details;
  }
  return j;
}

std::string to_text(const CheckRecord& record) {
  std::ostringstream os;
  os << (record.pass ? "PASS " : "FAIL ") << record.check << "(";
  for (std::size_t i = 0; i < record.inputs.size(); ++i) {
    if (i != 0) os << ", ";
    os << record.inputs[i].first << "=" << record.inputs[i].second;
  }
  os << ")";
  if (record.digits_agreed) os << "  digits=" << *record.digits_agreed;
  os << "\n";
  if (record.lhs_log) os << "    lhs = " << *record.lhs_log << "\n";
  if (record.rhs_log) os << "    rhs = " << *record.rhs_log << "\n";
  for (const auto& [k, v] : record.details) os << "    " << k << " = " << v << "\n";
  return os.str();
}

}  // namespace cmperiods
