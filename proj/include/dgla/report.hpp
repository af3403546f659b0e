#ifndef DGLA_REPORT_HPP
#define DGLA_REPORT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dgla/checks.hpp"
#include "dgla/io.hpp"

namespace dgla {

struct Stage {
  std::string name;
  /// What the stage ran on, e.g. a DGLA name.
  std::string subject;
  CheckList checks;
  /// Stage results; every scalar is a "p/q" string.
  Json data = Json::object();

  bool passed() const { return all_passed(checks); }
  friend bool operator==(const Stage&, const Stage&) = default;
};

struct RunReport {
  /// "sha256:<hex>" of the input file, when there was one.
  std::optional<std::string> input_digest;
  Json options = Json::object();
  std::vector<Stage> stages;

  bool passed() const;
  friend bool operator==(const RunReport&, const RunReport&) = default;
};

/// JSON schema, keys in this order, empty parts omitted:
///   {"input_digest": "sha256:...", "options": {...},
///    "stages": [{"name", "subject", "checks": [{"name", "passed", "detail"}], "data"}]}
/// The empty report is {"stages":[]}. Compact, so equal reports give equal bytes.
std::string emit_json(const RunReport& report);
/// Indented plain-text tables. ANSI colour on PASS/FAIL when `color` is set.
std::string emit_text(const RunReport& report, bool color = false);
/// Inverse of emit_json. Throws InputError on schema mismatch.
RunReport parse_report(std::string_view json);

std::string sha256_hex(std::string_view bytes);

}  // namespace dgla

#endif  // DGLA_REPORT_HPP
