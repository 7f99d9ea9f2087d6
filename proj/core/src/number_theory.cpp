#include "qwilson/number_theory.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <numeric>

namespace qwilson {

std::vector<PrimePower> factorize(std::uint64_t n) {
  assert(n >= 1);
  static std::mutex table_mutex;
  static std::map<std::uint64_t, std::vector<PrimePower>> table;
  {
    std::lock_guard<std::mutex> lock(table_mutex);
    auto it = table.find(n);
    if (it != table.end()) return it->second;
  }

  std::vector<PrimePower> factors;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
    if (rest % p != 0) continue;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    factors.push_back({p, e});
  }
  if (rest > 1) factors.push_back({rest, 1});

  std::lock_guard<std::mutex> lock(table_mutex);
  return table.emplace(n, std::move(factors)).first->second;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) return false;
  }
  return true;
}

int mobius(std::uint64_t n) {
  assert(n >= 1);
  const auto factors = factorize(n);
  for (const PrimePower& f : factors) {
    if (f.exponent > 1) return 0;
  }
  return factors.size() % 2 == 0 ? 1 : -1;
}

std::uint64_t euler_phi(std::uint64_t n) {
  assert(n >= 1);
  std::uint64_t phi = n;
  for (const PrimePower& f : factorize(n)) {
    phi -= phi / f.prime;
  }
  return phi;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  assert(n >= 1);
  std::vector<std::uint64_t> out{1};
  for (const PrimePower& f : factorize(n)) {
    const std::size_t count = out.size();
    std::uint64_t power = 1;
    for (unsigned e = 1; e <= f.exponent; ++e) {
      power *= f.prime;
      for (std::size_t i = 0; i < count; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

long long ramanujan_sum(std::uint64_t n, long long k) {
  assert(n >= 1);
  // c_n(k) depends on k only through gcd(k, n).
  const std::uint64_t n_ll = n;
  std::uint64_t k_mod = static_cast<std::uint64_t>(((k % static_cast<long long>(n_ll)) +
                                                    static_cast<long long>(n_ll)) %
                                                   static_cast<long long>(n_ll));
  const std::uint64_t g = std::gcd(n, k_mod);  // gcd(n, 0) = n
  long long sum = 0;
  for (std::uint64_t d : divisors(g)) {
    sum += static_cast<long long>(d) * mobius(n / d);
  }
  return sum;
}

Polynomial totative_q_sum_residue(unsigned n) {
  assert(n >= 2);
  std::vector<BigInt> coeffs(n);
  for (unsigned r = 1; r < n; ++r) {
    if (std::gcd(r, n) == 1) coeffs[r] = 1;
  }
  return mod(Polynomial(std::move(coeffs)), cyclotomic(n));
}

}  // namespace qwilson
