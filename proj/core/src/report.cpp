#include "leechcert/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace leechcert {

bool CertificateReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void CertificateReport::expect(const std::string& name, const std::string& anchor, const std::string& expected,
                               const std::string& actual) {
  checks.push_back({name, anchor, expected, actual, expected == actual, true});
}

void CertificateReport::expect_that(const std::string& name, const std::string& anchor, const std::string& expected,
                                    const std::string& actual, bool ok) {
  checks.push_back({name, anchor, expected, actual, ok, true});
}

void CertificateReport::record(const std::string& name, const std::string& anchor, const std::string& actual) {
  checks.push_back({name, anchor, "(recorded)", actual, true, false});
}

void CertificateReport::fail(const std::string& name, const std::string& anchor, const std::string& expected,
                             const std::string& error) {
  checks.push_back({name, anchor, expected, "error: " + error, false, true});
}

namespace {

nlohmann::ordered_json checks_to_json(const std::vector<Check>& checks) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["anchor"] = c.anchor;
    j["expected"] = c.expected;
    j["actual"] = c.actual;
    j["pass"] = c.pass;
    if (!c.asserted) j["asserted"] = false;
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace

std::string CertificateReport::to_json(bool with_timings, int indent) const {
  nlohmann::ordered_json j;
  j["subject"] = subject;
  j["checks"] = checks_to_json(checks);
  j["pass"] = pass();
  j["annotations"] = annotations;
  auto meta = nlohmann::ordered_json::object();
  for (const auto& [k, v] : metadata) meta[k] = v;
  j["metadata"] = meta;
  if (with_timings) {
    auto t = nlohmann::ordered_json::object();
    for (const auto& [k, v] : timings) t[k] = v;
    j["timings"] = t;
  }
  return j.dump(indent);
}

std::string CertificateReport::checks_json() const { return checks_to_json(checks).dump(); }

std::string CertificateReport::to_text(bool with_timings) const {
  std::ostringstream out;
  out << subject << '\n';
  for (const auto& c : checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.actual;
    if (c.asserted && !c.pass) out << " (expected " << c.expected << ')';
    if (!c.asserted) out << " (recorded)";
    out << '\n';
  }
  for (const auto& a : annotations) out << "note: " << a << '\n';
  if (with_timings) {
    for (const auto& [k, v] : timings) out << "time " << k << ": " << std::fixed << std::setprecision(3) << v << " s\n";
  }
  out << (pass() ? "RESULT: pass" : "RESULT: FAIL") << '\n';
  return out.str();
}

}  // namespace leechcert
