#include "dgla/report.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <stdexcept>

namespace dgla {

bool RunReport::passed() const {
  for (const auto& s : stages) {
    if (!s.passed()) return false;
  }
  return true;
}

namespace {

Json stage_to_json(const Stage& s) {
  Json out;
  out["name"] = s.name;
  if (!s.subject.empty()) out["subject"] = s.subject;
  Json checks = Json::array();
  for (const auto& c : s.checks) {
    Json jc;
    jc["name"] = c.name;
    jc["passed"] = c.passed;
    if (!c.detail.empty()) jc["detail"] = c.detail;
    checks.push_back(std::move(jc));
  }
  out["checks"] = std::move(checks);
  if (!s.data.empty()) out["data"] = s.data;
  return out;
}

const Json& member(const Json& obj, const char* key, Json::value_t type) {
  if (!obj.contains(key) || obj.at(key).type() != type) {
    throw InputError(std::string("report: missing or mistyped field \"") + key + "\"");
  }
  return obj.at(key);
}

// Renders a data value on one line.
std::string inline_value(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void text_data(std::string& out, const Json& data, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : data.items()) {
    if (value.is_object() && !value.empty()) {
      out += pad + key + ":\n";
      text_data(out, value, indent + 2);
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      out += pad + key + ":\n";
      for (const auto& item : value) {
        out += pad + "  -\n";
        text_data(out, item, indent + 4);
      }
    } else {
      out += pad + key + ": " + inline_value(value) + "\n";
    }
  }
}

}  // namespace

std::string emit_json(const RunReport& report) {
  Json out;
  if (report.input_digest) out["input_digest"] = *report.input_digest;
  if (!report.options.empty()) out["options"] = report.options;
  out["stages"] = Json::array();
  for (const auto& s : report.stages) out["stages"].push_back(stage_to_json(s));
  return out.dump();
}

RunReport parse_report(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("report: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("report: expected a JSON object");
  RunReport r;
  if (doc.contains("input_digest")) r.input_digest = member(doc, "input_digest", Json::value_t::string);
  if (doc.contains("options")) r.options = member(doc, "options", Json::value_t::object);
  for (const auto& js : member(doc, "stages", Json::value_t::array)) {
    Stage s;
    s.name = member(js, "name", Json::value_t::string);
    if (js.contains("subject")) s.subject = member(js, "subject", Json::value_t::string);
    for (const auto& jc : member(js, "checks", Json::value_t::array)) {
      Check c;
      c.name = member(jc, "name", Json::value_t::string);
      c.passed = member(jc, "passed", Json::value_t::boolean);
      if (jc.contains("detail")) c.detail = member(jc, "detail", Json::value_t::string);
      s.checks.push_back(std::move(c));
    }
    if (js.contains("data")) s.data = member(js, "data", Json::value_t::object);
    r.stages.push_back(std::move(s));
  }
  return r;
}

std::string emit_text(const RunReport& report, bool color) {
  const std::string green = color ? "\033[32m" : "";
  const std::string red = color ? "\033[31m" : "";
  const std::string reset = color ? "\033[0m" : "";
  std::string out;
  if (report.input_digest) out += "input    " + *report.input_digest + "\n";
  for (const auto& [key, value] : report.options.items()) {
    out += "option   " + key + " = " + inline_value(value) + "\n";
  }
  for (const auto& s : report.stages) {
    out += "\n[" + s.name + "]";
    if (!s.subject.empty()) out += " " + s.subject;
    out += "\n";
    for (const auto& c : s.checks) {
      out += c.passed ? "  " + green + "PASS" + reset : "  " + red + "FAIL" + reset;
      out += "  " + c.name;
      if (!c.detail.empty()) out += "  (" + c.detail + ")";
      out += "\n";
    }
    text_data(out, s.data, 2);
  }
  std::size_t failed = 0;
  std::size_t total = 0;
  for (const auto& s : report.stages) {
    for (const auto& c : s.checks) {
      ++total;
      if (!c.passed) ++failed;
    }
  }
  out += "\n" + std::to_string(total - failed) + "/" + std::to_string(total) + " checks passed\n";
  return out;
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

}  // namespace dgla
