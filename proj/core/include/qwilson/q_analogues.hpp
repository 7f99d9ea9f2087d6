#ifndef QWILSON_Q_ANALOGUES_HPP
#define QWILSON_Q_ANALOGUES_HPP

#include "qwilson/polynomial.hpp"
#include "qwilson/report.hpp"

namespace qwilson {

// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
Polynomial q_integer(unsigned n);

// [n]_q! = [1]_q [2]_q ... [n]_q; [0]_q! = 1.
Polynomial q_factorial(unsigned n);

// Gaussian binomial coefficient as an exact integer polynomial; zero when
// k > n.  Computed by the Pascal-type recurrence
//   [n, k]_q = [n-1, k-1]_q + q^k [n-1, k]_q,
// so no intermediate division occurs.  Rows are memoized; safe to call
// concurrently.
Polynomial q_binomial(unsigned n, unsigned k);

// Parameters of one q-Lucas check:
//   [an+b, cn+d]_q  vs  C(a, c) * [b, d]_q   (mod Phi_n(q)).
// Digit conditions: 0 <= b, d <= n-1 and n >= 2.
struct QLucasInstance {
  unsigned a = 0;
  unsigned b = 0;
  unsigned c = 0;
  unsigned d = 0;
  unsigned n = 2;
};

// Reduces both sides mod Phi_n(q) and reports whether the residues agree.
CongruenceReport check_q_lucas(const QLucasInstance& instance);

// prod_{k=1..n-1} [a]_{q^k} mod Phi_n(q), expected to be the constant 1.
// Throws NotCoprime unless gcd(a, n) = 1.  pre: a >= 1, n >= 2
CongruenceReport check_q_fermat(unsigned a, unsigned n);

// prod_{k=1..p-1} [k]_{q^k} mod [p]_q, as a polynomial of degree < p-1.
// Equals -1 for primes p = 3 (mod 4); takes other values for p = 1 (mod 4).
// Throws NotPrime if p fails the primality check.  pre: p prime, p > 3
Polynomial chapman_pan_residue(unsigned p);

}  // namespace qwilson

#endif  // QWILSON_Q_ANALOGUES_HPP
