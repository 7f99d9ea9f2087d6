#ifndef QWILSON_NUMBER_THEORY_HPP
#define QWILSON_NUMBER_THEORY_HPP

#include <cstdint>
#include <vector>

#include "qwilson/polynomial.hpp"

namespace qwilson {

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;
  bool operator==(const PrimePower&) const = default;
};

// Prime factorization as a sorted (prime, exponent) list, by trial division.
// Results are memoized across calls; safe to call concurrently.  pre: n >= 1
std::vector<PrimePower> factorize(std::uint64_t n);

// Deterministic primality by trial division; every prime in scope is tiny.
bool is_prime(std::uint64_t n);

// Moebius function: 1 at n = 1, (-1)^k for square-free n with k prime
// factors, 0 otherwise.  pre: n >= 1
int mobius(std::uint64_t n);

// Euler totient.  pre: n >= 1
std::uint64_t euler_phi(std::uint64_t n);

// All positive divisors of n, ascending.  pre: n >= 1
std::vector<std::uint64_t> divisors(std::uint64_t n);

// Integer binomial coefficient C(n, k); zero when k > n.
BigInt binomial(unsigned long n, unsigned long k);

// Ramanujan sum c_n(k): the sum of e^{2 pi i k r / n} over the totatives r
// of n, always an integer.  Computed exactly by the divisor formula
//   c_n(k) = sum_{d | gcd(n, k)} d * mobius(n / d),
// so no floating point is involved.  pre: n >= 1; any integer k.
long long ramanujan_sum(std::uint64_t n, long long k);

// Remainder of sum_{1 <= r <= n, gcd(r, n) = 1} q^r modulo Phi_n(q).
// Equals the constant mobius(n): this is the exact-arithmetic form of
// evaluating the totative sum at every primitive n-th root of unity.
// pre: n >= 2
Polynomial totative_q_sum_residue(unsigned n);

}  // namespace qwilson

#endif  // QWILSON_NUMBER_THEORY_HPP
