#include "qwilson/f_cache.hpp"

#include <cstdlib>
#include <fstream>
#include <utility>

#include <json.hpp>

namespace qwilson {

namespace {

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

}  // namespace

FPolynomialCache::FPolynomialCache(std::filesystem::path directory)
    : directory_(std::move(directory)) {}

std::filesystem::path FPolynomialCache::entry_path(unsigned n) const {
  return directory_ / ("f_" + std::to_string(n) + ".json");
}

std::optional<Polynomial> FPolynomialCache::load(unsigned n) const {
  const std::filesystem::path path = entry_path(n);
  std::ifstream in(path);
  if (!in) return std::nullopt;

  nlohmann::json doc = nlohmann::json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) {
    throw CacheError("cache: " + path.string() + " is not valid JSON");
  }

  std::vector<BigInt> coeffs;
  try {
    if (!doc.contains("format_version") ||
        doc["format_version"].get<int>() != kFormatVersion) {
      throw CacheError("cache: " + path.string() +
                       " has an unsupported format version");
    }
    if (!doc.contains("n") || doc["n"].get<unsigned>() != n ||
        !doc.contains("coeffs") || !doc["coeffs"].is_array()) {
      throw CacheError("cache: " + path.string() + " is malformed");
    }
    coeffs.reserve(doc["coeffs"].size());
    for (const auto& entry : doc["coeffs"]) {
      if (!entry.is_string()) {
        throw CacheError("cache: " + path.string() + " has a non-string coefficient");
      }
      try {
        coeffs.emplace_back(entry.get<std::string>(), 10);
      } catch (const std::invalid_argument&) {
        throw CacheError("cache: " + path.string() + " has a non-decimal coefficient");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw CacheError("cache: " + path.string() + ": " + e.what());
  }
  Polynomial f{std::move(coeffs)};
  if (f.eval_at_one() != factorial(n)) {
    throw CacheError("cache: " + path.string() +
                     " failed the integrity check f_n(1) = n!");
  }
  return f;
}

void FPolynomialCache::store(unsigned n, const Polynomial& f) const {
  std::filesystem::create_directories(directory_);
  nlohmann::json doc;
  doc["format_version"] = kFormatVersion;
  doc["n"] = n;
  nlohmann::json coeffs = nlohmann::json::array();
  for (const BigInt& c : f.coefficients()) coeffs.push_back(c.get_str());
  doc["coeffs"] = std::move(coeffs);

  const std::filesystem::path path = entry_path(n);
  std::ofstream out(path);
  if (!out) throw CacheError("cache: cannot write " + path.string());
  out << doc.dump(2) << '\n';
}

std::filesystem::path FPolynomialCache::default_directory() {
  if (const char* dir = std::getenv("QWILSON_CACHE_DIR")) {
    return std::filesystem::path(dir);
  }
  if (const char* xdg = std::getenv("XDG_DATA_HOME")) {
    return std::filesystem::path(xdg) / "qwilson";
  }
  if (const char* home = std::getenv("HOME")) {
    return std::filesystem::path(home) / ".local" / "share" / "qwilson";
  }
  return std::filesystem::current_path() / ".qwilson-cache";
}

}  // namespace qwilson
