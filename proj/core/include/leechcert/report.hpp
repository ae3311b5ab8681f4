#pragma once

#include <string>
#include <utility>
#include <vector>

namespace leechcert {

/** One named, exact check. Unasserted checks only record a value and always pass. */
struct Check {
  std::string name;
  /** Short key naming the mathematical claim the check certifies. */
  std::string anchor;
  std::string expected;
  std::string actual;
  bool pass = false;
  bool asserted = true;
};

/** Ordered list of checks; passes iff every check passes. */
struct CertificateReport {
  std::string subject;
  std::vector<Check> checks;
  std::vector<std::string> annotations;
  /** Seconds per stage; excluded from the determinism contract. */
  std::vector<std::pair<std::string, double>> timings;
  /** Run parameters such as the frame seed and thread count. */
  std::vector<std::pair<std::string, std::string>> metadata;

  bool pass() const;

  /** Passes iff expected == actual. */
  void expect(const std::string& name, const std::string& anchor, const std::string& expected,
              const std::string& actual);
  /** Passes iff ok. */
  void expect_that(const std::string& name, const std::string& anchor, const std::string& expected,
                   const std::string& actual, bool ok);
  void record(const std::string& name, const std::string& anchor, const std::string& actual);
  void fail(const std::string& name, const std::string& anchor, const std::string& expected,
            const std::string& error);

  /**
   * {"subject", "checks": [{name, anchor, expected, actual, pass}], "pass",
   *  "annotations", "metadata", "timings"}; timings omitted when !with_timings.
   */
  std::string to_json(bool with_timings = true, int indent = 2) const;
  std::string to_text(bool with_timings = true) const;
  /** JSON of the checks array only; equal across seeds and thread counts for a correct run. */
  std::string checks_json() const;
};

}  // namespace leechcert
