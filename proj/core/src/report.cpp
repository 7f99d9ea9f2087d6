#include "qwilson/report.hpp"

#include <sstream>
#include <utility>

#include <json.hpp>

namespace qwilson {

CongruenceReport CongruenceReport::make(std::string check,
                                        std::map<std::string, long long> params,
                                        Polynomial residue, Polynomial expected,
                                        std::int64_t elapsed_ms) {
  CongruenceReport report;
  report.check = std::move(check);
  report.params = std::move(params);
  report.passed = residue == expected;
  report.residue = std::move(residue);
  report.expected = std::move(expected);
  report.elapsed_ms = elapsed_ms;
  return report;
}

std::string report_to_json(const CongruenceReport& report) {
  nlohmann::json doc;
  doc["check"] = report.check;
  doc["params"] = report.params;
  doc["residue"] = report.residue.to_string();
  doc["expected"] = report.expected.to_string();
  doc["status"] = report.passed ? "pass" : "fail";
  doc["elapsed_ms"] = report.elapsed_ms;
  return doc.dump();
}

CongruenceReport report_from_json(const std::string& text) {
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) throw ParseError("report: malformed JSON");
  try {
    CongruenceReport report;
    report.check = doc.at("check").get<std::string>();
    report.params = doc.at("params").get<std::map<std::string, long long>>();
    report.residue = Polynomial::parse(doc.at("residue").get<std::string>());
    report.expected = Polynomial::parse(doc.at("expected").get<std::string>());
    const std::string status = doc.at("status").get<std::string>();
    if (status != "pass" && status != "fail") {
      throw ParseError("report: status must be \"pass\" or \"fail\"");
    }
    report.passed = status == "pass";
    report.elapsed_ms = doc.at("elapsed_ms").get<std::int64_t>();
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report: ") + e.what());
  }
}

std::string report_csv_header(const CongruenceReport& report) {
  std::ostringstream out;
  out << "check";
  for (const auto& [key, value] : report.params) out << ',' << key;
  out << ",status,residue,expected";
  return out.str();
}

std::string report_to_csv(const CongruenceReport& report) {
  std::ostringstream out;
  out << report.check;
  for (const auto& [key, value] : report.params) out << ',' << value;
  out << ',' << (report.passed ? "pass" : "fail") << ',' << report.residue.to_string()
      << ',' << report.expected.to_string();
  return out.str();
}

std::string report_to_text(const CongruenceReport& report) {
  std::ostringstream out;
  out << '[' << (report.passed ? "pass" : "FAIL") << "] " << report.check;
  for (const auto& [key, value] : report.params) out << ' ' << key << '=' << value;
  out << " | residue = " << report.residue.to_string()
      << " | expected = " << report.expected.to_string() << " | " << report.elapsed_ms
      << " ms";
  return out.str();
}

}  // namespace qwilson
