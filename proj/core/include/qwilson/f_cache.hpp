#ifndef QWILSON_F_CACHE_HPP
#define QWILSON_F_CACHE_HPP

#include <filesystem>
#include <optional>

#include "qwilson/polynomial.hpp"

namespace qwilson {

// On-disk cache of f_n(q), one versioned JSON document per n:
//   { "format_version": 1, "n": 3, "coeffs": ["0", "1", "1", "2", "1", "1"] }
// with coefficients as decimal strings, ascending powers.  Loads are
// integrity-checked: a cached f_n must satisfy f_n(1) = n!, so a corrupted
// coefficient fails at load time instead of poisoning a verification.
class FPolynomialCache {
 public:
  static constexpr int kFormatVersion = 1;

  explicit FPolynomialCache(std::filesystem::path directory);

  const std::filesystem::path& directory() const { return directory_; }
  std::filesystem::path entry_path(unsigned n) const;

  // nullopt when no entry exists; CacheError when an entry exists but is
  // unreadable, has the wrong version, or fails the integrity check.
  std::optional<Polynomial> load(unsigned n) const;
  void store(unsigned n, const Polynomial& f) const;

  // Resolution order: QWILSON_CACHE_DIR, then XDG_DATA_HOME/qwilson, then
  // ~/.local/share/qwilson.  (A --cache-dir flag overrides all of these.)
  static std::filesystem::path default_directory();

 private:
  std::filesystem::path directory_;
};

}  // namespace qwilson

#endif  // QWILSON_F_CACHE_HPP
