#ifndef QWILSON_REPORT_HPP
#define QWILSON_REPORT_HPP

#include <cstdint>
#include <map>
#include <string>

#include "qwilson/polynomial.hpp"

namespace qwilson {

// Outcome of one named congruence check.  `passed` is true exactly when the
// residue and expected polynomials render identically; make() enforces this.
struct CongruenceReport {
  std::string check;
  std::map<std::string, long long> params;
  Polynomial residue;
  Polynomial expected;
  bool passed = false;
  std::int64_t elapsed_ms = 0;

  static CongruenceReport make(std::string check,
                               std::map<std::string, long long> params,
                               Polynomial residue, Polynomial expected,
                               std::int64_t elapsed_ms = 0);
};

// Single-line JSON with schema
//   {check, params, residue, expected, status, elapsed_ms}
// where polynomials appear as canonical text and status is "pass" or "fail".
// Keys render in a stable (alphabetical) order so that parsing an emitted
// report and re-rendering it is byte-identical.
std::string report_to_json(const CongruenceReport& report);
CongruenceReport report_from_json(const std::string& text);  // throws ParseError

// CSV columns: check, the param keys in their map order, status, residue,
// expected.  All reports of one check share the same keys.
std::string report_csv_header(const CongruenceReport& report);
std::string report_to_csv(const CongruenceReport& report);

// One human-readable line.
std::string report_to_text(const CongruenceReport& report);

}  // namespace qwilson

#endif  // QWILSON_REPORT_HPP
