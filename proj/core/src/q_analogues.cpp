#include "qwilson/q_analogues.hpp"

#include <cassert>
#include <chrono>
#include <mutex>
#include <numeric>
#include <vector>

#include "qwilson/number_theory.hpp"

namespace qwilson {

namespace {

std::int64_t ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

Polynomial q_integer(unsigned n) {
  return Polynomial(std::vector<BigInt>(n, 1));
}

Polynomial q_factorial(unsigned n) {
  Polynomial out = Polynomial::constant(1);
  for (unsigned k = 2; k <= n; ++k) out *= q_integer(k);
  return out;
}

Polynomial q_binomial(unsigned n, unsigned k) {
  if (k > n) return Polynomial();

  static std::mutex table_mutex;
  static std::vector<std::vector<Polynomial>> rows;  // rows[i][j] = [i, j]_q
  std::lock_guard<std::mutex> lock(table_mutex);
  while (rows.size() <= n) {
    const std::size_t i = rows.size();
    std::vector<Polynomial> row(i + 1);
    row.front() = Polynomial::constant(1);
    if (i > 0) {
      const std::vector<Polynomial>& prev = rows[i - 1];
      for (std::size_t j = 1; j < i; ++j) {
        row[j] = prev[j - 1] + Polynomial::monomial(1, j) * prev[j];
      }
      row.back() = Polynomial::constant(1);
    }
    rows.push_back(std::move(row));
  }
  return rows[n][k];
}

CongruenceReport check_q_lucas(const QLucasInstance& t) {
  assert(t.n >= 2 && t.b < t.n && t.d < t.n);
  const auto start = std::chrono::steady_clock::now();
  const Polynomial phi = cyclotomic(t.n);
  const Polynomial lhs = mod(q_binomial(t.a * t.n + t.b, t.c * t.n + t.d), phi);
  const Polynomial rhs =
      mod(Polynomial::constant(binomial(t.a, t.c)) * q_binomial(t.b, t.d), phi);
  return CongruenceReport::make(
      "q-lucas",
      {{"a", t.a}, {"b", t.b}, {"c", t.c}, {"d", t.d}, {"n", t.n}}, lhs, rhs,
      ms_since(start));
}

CongruenceReport check_q_fermat(unsigned a, unsigned n) {
  assert(a >= 1 && n >= 2);
  if (std::gcd(a, n) != 1) {
    throw NotCoprime("q-fermat: requires gcd(a, n) = 1, got a = " +
                     std::to_string(a) + ", n = " + std::to_string(n));
  }
  const auto start = std::chrono::steady_clock::now();
  const Polynomial phi = cyclotomic(n);
  const Polynomial base = q_integer(a);
  Polynomial product = Polynomial::constant(1);
  for (unsigned k = 1; k < n; ++k) {
    product = mod(product * base.substitute_power(k), phi);
  }
  return CongruenceReport::make("q-fermat", {{"a", a}, {"n", n}}, product,
                                Polynomial::constant(1), ms_since(start));
}

Polynomial chapman_pan_residue(unsigned p) {
  if (!is_prime(p)) {
    throw NotPrime("chapman-pan: " + std::to_string(p) + " is not prime");
  }
  assert(p > 3);
  const Polynomial modulus = q_integer(p);
  Polynomial product = Polynomial::constant(1);
  for (unsigned k = 1; k < p; ++k) {
    product = mod(product * q_integer(k).substitute_power(k), modulus);
  }
  return product;
}

}  // namespace qwilson
