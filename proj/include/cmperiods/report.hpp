#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cmperiods/csperiods.hpp"
#include "cmperiods/fermat.hpp"

namespace cmperiods {

/// One line of CLI output. Numbers are decimal strings; fields that do not
/// apply to an exact check are null.
struct CheckRecord {
  std::string check;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::optional<std::string> lhs_log;
  std::optional<std::string> rhs_log;
  std::optional<int> digits_agreed;
  bool pass = false;
  /// Extra check-specific values, as ordered (key, value) strings.
  std::vector<std::pair<std::string, std::string>> details;
};

CheckRecord to_record(const IdentityReport& report, int digits);
CheckRecord to_record(const RatioCertificate& cert,
                      std::vector<std::pair<std::string, std::string>> inputs,
                      int digits);

nlohmann::ordered_json to_json(const CheckRecord& record);
/// "PASS check(k=v, ...)  digits=N  lhs=... rhs=..." plus details.
std::string to_text(const CheckRecord& record);

}  // namespace cmperiods
