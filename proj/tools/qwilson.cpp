// qwilson: exact q-congruence calculator and verifier.
//
// `verify` streams one report per checked instance and exits 0 only if every
// check passes; `compute` prints a single object.  All arithmetic is exact.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <string>

#include "qwilson/errors.hpp"
#include "qwilson/f_cache.hpp"
#include "qwilson/number_theory.hpp"
#include "qwilson/orbits.hpp"
#include "qwilson/permutations.hpp"
#include "qwilson/polynomial.hpp"
#include "qwilson/q_analogues.hpp"
#include "qwilson/report.hpp"

namespace {

using namespace qwilson;

// Parameter problems exit with code 2; failing checks exit with code 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { kText, kJson, kCsv };

const std::map<std::string, Format> kFormatNames{
    {"text", Format::kText}, {"json", Format::kJson}, {"csv", Format::kCsv}};

struct Range {
  long long lo = 0;
  long long hi = 0;
};

long long parse_integer(const std::string& text) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = std::string::npos;
  }
  if (text.empty() || used != text.size()) {
    throw UsageError("expected an integer, got '" + text + "'");
  }
  return value;
}

// Inclusive "lo..hi", or a single value "n" meaning n..n.
Range parse_range(const std::string& text) {
  const auto sep = text.find("..");
  if (sep == std::string::npos) {
    const long long v = parse_integer(text);
    return {v, v};
  }
  Range range{parse_integer(text.substr(0, sep)), parse_integer(text.substr(sep + 2))};
  if (range.lo > range.hi) {
    throw UsageError("empty range '" + text + "' (lo > hi)");
  }
  return range;
}

void require_within(const Range& range, long long lo, long long hi,
                    const std::string& what) {
  if (range.lo < lo || range.hi > hi) {
    throw UsageError(what + " must lie in [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "], got " + std::to_string(range.lo) +
                     ".." + std::to_string(range.hi));
  }
}

// Streams reports in the chosen format and keeps the pass/fail tally.
class ReportSink {
 public:
  explicit ReportSink(Format format) : format_(format) {}

  void emit(const CongruenceReport& report) {
    ++total_;
    if (!report.passed) ++failed_;
    switch (format_) {
      case Format::kText:
        std::cout << report_to_text(report) << '\n';
        break;
      case Format::kJson:
        std::cout << report_to_json(report) << '\n';
        break;
      case Format::kCsv:
        if (!header_done_) {
          std::cout << report_csv_header(report) << '\n';
          header_done_ = true;
        }
        std::cout << report_to_csv(report) << '\n';
        break;
    }
  }

  int finish() const {
    if (format_ == Format::kText) {
      std::cout << total_ << " checks, " << (total_ - failed_) << " passed, "
                << failed_ << " failed\n";
    }
    return failed_ == 0 ? 0 : 1;
  }

 private:
  Format format_;
  bool header_done_ = false;
  long long total_ = 0;
  long long failed_ = 0;
};

std::int64_t ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - start)
      .count();
}

std::filesystem::path resolve_cache_dir(const std::string& flag) {
  return flag.empty() ? FPolynomialCache::default_directory()
                      : std::filesystem::path(flag);
}

// f_n(q), going through the on-disk cache unless disabled.
Polynomial f_with_cache(unsigned n, unsigned jobs, const std::string& cache_dir,
                        bool no_cache) {
  if (no_cache) return f_polynomial(n, jobs);
  const FPolynomialCache cache(resolve_cache_dir(cache_dir));
  if (auto cached = cache.load(n)) return *cached;
  Polynomial f = f_polynomial(n, jobs);
  cache.store(n, f);
  return f;
}

// ---------------------------------------------------------------- verify --

int run_verify_wilson(const Range& range, const std::string& method_name,
                      unsigned jobs, const std::string& cache_dir, bool no_cache,
                      Format format) {
  require_within(range, 2, 11, "wilson: --n");
  WilsonMethod method = WilsonMethod::kBoth;
  if (method_name == "brute") method = WilsonMethod::kBruteForce;
  if (method_name == "orbits") method = WilsonMethod::kOrbits;

  ReportSink sink(format);
  for (long long n = range.lo; n <= range.hi; ++n) {
    if (method == WilsonMethod::kOrbits) {
      sink.emit(check_wilson(static_cast<int>(n), method, jobs));
    } else {
      const Polynomial f =
          f_with_cache(static_cast<unsigned>(n - 1), jobs, cache_dir, no_cache);
      sink.emit(check_wilson(static_cast<int>(n), method, jobs, &f));
    }
  }
  return sink.finish();
}

int run_verify_lucas(const Range& range, long long a_max, long long c_max,
                     Format format) {
  require_within(range, 2, 16, "lucas: --n");
  if (a_max < 0 || a_max > 6 || c_max < 0 || c_max > 6) {
    throw UsageError("lucas: --a-max/--c-max must lie in [0, 6]");
  }
  ReportSink sink(format);
  for (long long n = range.lo; n <= range.hi; ++n) {
    for (long long a = 0; a <= a_max; ++a) {
      for (long long b = 0; b < n; ++b) {
        for (long long c = 0; c <= c_max; ++c) {
          for (long long d = 0; d < n; ++d) {
            sink.emit(check_q_lucas({static_cast<unsigned>(a),
                                     static_cast<unsigned>(b),
                                     static_cast<unsigned>(c),
                                     static_cast<unsigned>(d),
                                     static_cast<unsigned>(n)}));
          }
        }
      }
    }
  }
  return sink.finish();
}

int run_verify_fermat(const Range& n_range, const Range& a_range, Format format) {
  require_within(n_range, 2, 16, "fermat: --n");
  require_within(a_range, 1, 24, "fermat: --a");
  ReportSink sink(format);
  for (long long n = n_range.lo; n <= n_range.hi; ++n) {
    for (long long a = a_range.lo; a <= a_range.hi; ++a) {
      if (std::gcd(a, n) != 1) continue;  // outside the congruence's hypothesis
      sink.emit(check_q_fermat(static_cast<unsigned>(a), static_cast<unsigned>(n)));
    }
  }
  return sink.finish();
}

int run_verify_chapman_pan(const Range& range, Format format) {
  require_within(range, 5, 31, "chapman-pan: --p");
  ReportSink sink(format);
  long long primes = 0;
  for (long long p = range.lo; p <= range.hi; ++p) {
    if (!is_prime(static_cast<std::uint64_t>(p))) continue;
    ++primes;
    const auto start = std::chrono::steady_clock::now();
    const Polynomial residue = chapman_pan_residue(static_cast<unsigned>(p));
    const auto elapsed = ms_since(start);
    if (p % 4 == 3) {
      sink.emit(CongruenceReport::make("chapman-pan", {{"p", p}}, residue,
                                       Polynomial::constant(-1), elapsed));
    } else {
      // No congruence holds for p = 1 (mod 4); the check is that the residue
      // differs from -1, reported informationally.
      const bool differs = !(residue == Polynomial::constant(-1));
      sink.emit(CongruenceReport::make("chapman-pan-invalidity", {{"p", p}}, residue,
                                       differs ? residue : Polynomial(), elapsed));
    }
  }
  if (primes == 0) throw UsageError("chapman-pan: no primes in the requested range");
  return sink.finish();
}

int run_verify_mahonian(const Range& range, Format format) {
  require_within(range, 1, 9, "mahonian: --n");
  ReportSink sink(format);
  for (long long n = range.lo; n <= range.hi; ++n) {
    sink.emit(check_mahonian(static_cast<unsigned>(n)));
  }
  return sink.finish();
}

int run_verify_lemmas(const Range& range, Format format) {
  require_within(range, 2, 14, "lemmas: --n");
  ReportSink sink(format);
  for (long long n = range.lo; n <= range.hi; ++n) {
    sink.emit(verify_transfer_law(static_cast<int>(n)));
    sink.emit(verify_fixed_point_structure(static_cast<int>(n)));
  }
  return sink.finish();
}

int run_verify_ramanujan(const Range& range, Format format) {
  require_within(range, 1, 1000, "ramanujan: --n");
  ReportSink sink(format);
  for (long long n = std::max<long long>(2, range.lo); n <= range.hi; ++n) {
    const auto start = std::chrono::steady_clock::now();
    const Polynomial residue = totative_q_sum_residue(static_cast<unsigned>(n));
    sink.emit(CongruenceReport::make(
        "totative-sum", {{"n", n}}, residue,
        Polynomial::constant(mobius(static_cast<std::uint64_t>(n))),
        ms_since(start)));
  }
  for (long long n = range.lo; n <= std::min<long long>(range.hi, 50); ++n) {
    sink.emit(CongruenceReport::make(
        "ramanujan-c1", {{"n", n}},
        Polynomial::constant(
            static_cast<long>(ramanujan_sum(static_cast<std::uint64_t>(n), 1))),
        Polynomial::constant(mobius(static_cast<std::uint64_t>(n)))));
  }
  return sink.finish();
}

// --------------------------------------------------------------- compute --

int print_value(const std::string& target,
                const std::map<std::string, long long>& params,
                const Polynomial& value, Format format) {
  switch (format) {
    case Format::kText:
      std::cout << value.to_string() << '\n';
      break;
    case Format::kJson: {
      nlohmann::json doc;
      doc["target"] = target;
      doc["params"] = params;
      doc["value"] = value.to_string();
      std::cout << doc.dump() << '\n';
      break;
    }
    case Format::kCsv: {
      std::string header;
      std::string row;
      for (const auto& [key, v] : params) {
        header += key + ",";
        row += std::to_string(v) + ",";
      }
      std::cout << header << "value\n" << row << value.to_string() << '\n';
      break;
    }
  }
  return 0;
}

int run_compute_orbits(long long n, Format format) {
  if (n < 2 || n > 10) throw UsageError("orbits: --n must lie in [2, 10]");
  const auto census = orbit_census(static_cast<int>(n));
  if (format == Format::kCsv) std::cout << "rep,h,maj_bar,des_bar\n";
  long long mass = 0;
  for (const OrbitRecord& record : census) {
    mass += record.size;
    switch (format) {
      case Format::kText:
        std::cout << "rep=" << record.representative.to_string()
                  << " h=" << record.size << " maj_bar=" << record.rep_cyclic_major
                  << " des_bar=" << record.rep_cyclic_descents << '\n';
        break;
      case Format::kJson: {
        nlohmann::json doc;
        doc["rep"] = record.representative.to_string();
        doc["h"] = record.size;
        doc["maj_bar"] = record.rep_cyclic_major;
        doc["des_bar"] = record.rep_cyclic_descents;
        std::cout << doc.dump() << '\n';
        break;
      }
      case Format::kCsv:
        // The one-line notation contains commas; quote it.
        std::cout << '"' << record.representative.to_string() << "\","
                  << record.size << ',' << record.rep_cyclic_major << ','
                  << record.rep_cyclic_descents << '\n';
        break;
    }
  }
  if (format == Format::kText) {
    std::cout << census.size() << " orbits, total mass " << mass << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact q-congruence calculator and verifier"};
  app.set_version_flag("--version", "qwilson 1.0.0");
  app.require_subcommand(1);

  int exit_code = 0;
  Format format = Format::kText;
  unsigned jobs = 1;
  std::string cache_dir;
  bool no_cache = false;

  auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format: text, json, or csv")
        ->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case));
  };
  auto add_cache_options = [&](CLI::App* cmd) {
    cmd->add_option("--cache-dir", cache_dir,
                    "directory for the f_n cache (default: QWILSON_CACHE_DIR, "
                    "then the per-user data directory)");
    cmd->add_flag("--no-cache", no_cache, "do not read or write the f_n cache");
  };

  CLI::App* verify = app.add_subcommand(
      "verify", "run congruence verifiers and stream one report per instance");
  verify->require_subcommand(1);

  std::string wilson_n = "2..10";
  std::string wilson_method = "both";
  {
    CLI::App* cmd = verify->add_subcommand(
        "wilson", "f_{n-1}(q) = mu(n) mod Phi_n(q), by brute force and/or orbits");
    cmd->add_option("--n", wilson_n, "inclusive range lo..hi (default 2..10, cap 11)");
    cmd->add_option("--method", wilson_method, "residue route: brute, orbits, or both")
        ->check(CLI::IsMember({"brute", "orbits", "both"}));
    cmd->add_option("--jobs", jobs,
                    "enumeration threads (results are identical for any value)");
    add_cache_options(cmd);
    add_format(cmd);
    cmd->callback([&] {
      exit_code = run_verify_wilson(parse_range(wilson_n), wilson_method, jobs,
                                    cache_dir, no_cache, format);
    });
  }

  std::string lucas_n = "2..12";
  long long lucas_a_max = 3;
  long long lucas_c_max = 3;
  {
    CLI::App* cmd = verify->add_subcommand(
        "lucas", "[an+b, cn+d]_q = C(a,c) [b,d]_q mod Phi_n(q) over a digit grid");
    cmd->add_option("--n", lucas_n, "inclusive range lo..hi (default 2..12)");
    cmd->add_option("--a-max", lucas_a_max, "largest quotient digit a (default 3)");
    cmd->add_option("--c-max", lucas_c_max, "largest quotient digit c (default 3)");
    add_format(cmd);
    cmd->callback([&] {
      exit_code = run_verify_lucas(parse_range(lucas_n), lucas_a_max, lucas_c_max, format);
    });
  }

  std::string fermat_n = "2..12";
  std::string fermat_a = "1..12";
  {
    CLI::App* cmd = verify->add_subcommand(
        "fermat", "prod_k [a]_{q^k} = 1 mod Phi_n(q) for a coprime to n");
    cmd->add_option("--n", fermat_n, "inclusive range lo..hi (default 2..12)");
    cmd->add_option("--a", fermat_a, "inclusive base range lo..hi (default 1..12)");
    add_format(cmd);
    cmd->callback([&] {
      exit_code = run_verify_fermat(parse_range(fermat_n), parse_range(fermat_a), format);
    });
  }

  std::string chapman_p = "5..13";
  {
    CLI::App* cmd = verify->add_subcommand(
        "chapman-pan", "prod_k [k]_{q^k} = -1 mod [p]_q for primes p = 3 (mod 4)");
    cmd->add_option("--p", chapman_p, "inclusive prime range lo..hi (default 5..13)");
    add_format(cmd);
    cmd->callback(
        [&] { exit_code = run_verify_chapman_pan(parse_range(chapman_p), format); });
  }

  std::string mahonian_n = "1..8";
  {
    CLI::App* cmd = verify->add_subcommand(
        "mahonian", "maj and inv both generate [n]_q! over S_n");
    cmd->add_option("--n", mahonian_n, "inclusive range lo..hi (default 1..8)");
    add_format(cmd);
    cmd->callback(
        [&] { exit_code = run_verify_mahonian(parse_range(mahonian_n), format); });
  }

  std::string lemmas_n = "2..8";
  {
    CLI::App* cmd = verify->add_subcommand(
        "lemmas", "transfer law and fixed-point structure of the rotation action");
    cmd->add_option("--n", lemmas_n,
                    "inclusive range lo..hi (default 2..8; sampled above 9)");
    add_format(cmd);
    cmd->callback([&] { exit_code = run_verify_lemmas(parse_range(lemmas_n), format); });
  }

  std::string ramanujan_n = "1..100";
  {
    CLI::App* cmd = verify->add_subcommand(
        "ramanujan", "totative q-sums reduce to mu(n), and c_n(1) = mu(n)");
    cmd->add_option("--n", ramanujan_n,
                    "inclusive range lo..hi (default 1..100; c_n(1) is checked "
                    "up to n = 50)");
    add_format(cmd);
    cmd->callback(
        [&] { exit_code = run_verify_ramanujan(parse_range(ramanujan_n), format); });
  }

  CLI::App* compute = app.add_subcommand("compute", "print one exact object");
  compute->require_subcommand(1);

  long long compute_n = 0;
  long long compute_k = 0;
  {
    CLI::App* cmd = compute->add_subcommand("cyclotomic", "the n-th cyclotomic polynomial");
    cmd->add_option("--n", compute_n, "index n")->required();
    add_format(cmd);
    cmd->callback([&] {
      if (compute_n < 1 || compute_n > 10000) {
        throw UsageError("cyclotomic: --n must lie in [1, 10000]");
      }
      exit_code = print_value("cyclotomic", {{"n", compute_n}},
                              cyclotomic(static_cast<unsigned>(compute_n)), format);
    });
  }
  {
    CLI::App* cmd = compute->add_subcommand("qfactorial", "the q-factorial [n]_q!");
    cmd->add_option("--n", compute_n, "index n")->required();
    add_format(cmd);
    cmd->callback([&] {
      if (compute_n < 0 || compute_n > 200) {
        throw UsageError("qfactorial: --n must lie in [0, 200]");
      }
      exit_code = print_value("qfactorial", {{"n", compute_n}},
                              q_factorial(static_cast<unsigned>(compute_n)), format);
    });
  }
  {
    CLI::App* cmd = compute->add_subcommand("qbinomial", "the Gaussian binomial [n,k]_q");
    cmd->add_option("--n", compute_n, "upper index n")->required();
    cmd->add_option("--k", compute_k, "lower index k")->required();
    add_format(cmd);
    cmd->callback([&] {
      if (compute_n < 0 || compute_n > 64 || compute_k < 0) {
        throw UsageError("qbinomial: need 0 <= n <= 64 and k >= 0");
      }
      exit_code = print_value(
          "qbinomial", {{"k", compute_k}, {"n", compute_n}},
          q_binomial(static_cast<unsigned>(compute_n), static_cast<unsigned>(compute_k)),
          format);
    });
  }
  {
    CLI::App* cmd = compute->add_subcommand(
        "fpoly",
        "f_n(q), the major-index generating function over the full cycles on n+1 points");
    cmd->add_option("--n", compute_n, "index n")->required();
    cmd->add_option("--jobs", jobs, "enumeration threads");
    add_cache_options(cmd);
    add_format(cmd);
    cmd->callback([&] {
      if (compute_n < 1 || compute_n > 11) {
        throw UsageError("fpoly: --n must lie in [1, 11]");
      }
      const Polynomial f =
          f_with_cache(static_cast<unsigned>(compute_n), jobs, cache_dir, no_cache);
      exit_code = print_value("fpoly", {{"n", compute_n}}, f, format);
    });
  }
  {
    CLI::App* cmd = compute->add_subcommand(
        "orbits", "census of the rotation-action orbits on the full cycles");
    cmd->add_option("--n", compute_n, "number of points")->required();
    add_format(cmd);
    cmd->callback([&] { exit_code = run_compute_orbits(compute_n, format); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const CacheError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return exit_code;
}
