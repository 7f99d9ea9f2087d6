#ifndef QWILSON_ORBITS_HPP
#define QWILSON_ORBITS_HPP

#include <vector>

#include "qwilson/permutations.hpp"
#include "qwilson/polynomial.hpp"
#include "qwilson/report.hpp"

namespace qwilson {

// One orbit of the rotation-conjugation action on the full cycles C_n.
struct OrbitRecord {
  Permutation representative;  // lexicographically smallest translate
  int size = 1;                // always divides n
  int rep_cyclic_major = 0;
  int rep_cyclic_descents = 1;
};

// T sigma = tau . sigma . tau^{-1} with tau the rotation a -> a+1 (mod n):
// relabels every point of sigma by +1.  Maps full cycles to full cycles,
// and T^n is the identity.
Permutation conjugate_by_rotation(const Permutation& p);

// The shift a -> a + r (mod n); a full cycle iff gcd(r, n) = 1.  The shifts
// with r coprime to n are exactly the T-fixed points of C_n and exactly the
// full cycles with cyclic descent count 1.  pre: 1 <= r <= n-1
Permutation shift_permutation(int r, int n);

// Iterates T back around to p, recording the orbit size and the smallest
// translate.  Throws NotAFullCycle when p is not in C_n.
OrbitRecord orbit_of(const Permutation& p);

// Every distinct orbit of C_n, in first-encounter order of the cycle
// enumeration.  The orbit sizes sum to (n-1)!.  pre: 2 <= n, desk scale
std::vector<OrbitRecord> orbit_census(int n);

// Checks the transfer law for the cyclic statistics under T on C_n:
//   cyclic-descents(T sigma) = cyclic-descents(sigma), and
//   cyclic-maj(T sigma) = cyclic-maj(sigma) + cyclic-descents(sigma) - 1 (mod n).
// Exhaustive for n <= 9; for larger n a fixed-seed random sample of at
// least 100000 cycles is used.  The report counts violations against an
// expected count of zero.
CongruenceReport verify_transfer_law(int n);

// Checks that the T-fixed points of C_n, the cycles with cyclic descent
// count 1, and the coprime shifts are one and the same set, of size
// euler_phi(n).  Exhaustive.  pre: 2 <= n, desk scale
CongruenceReport verify_fixed_point_structure(int n);

// f_{n-1}(q) mod Phi_n(q) by the orbit method: each orbit with
// representative sigma and size h contributes
//   sum_{k=0..h-1} q^{(cmaj sigma + k (cdes sigma - 1)) mod n},
// reduced mod Phi_n(q) (exponents may be taken mod n since q^n = 1 there).
// Every orbit of size > 1 must contribute zero; OrbitSumNonzero is thrown
// otherwise, since that could only be an implementation bug.
Polynomial wilson_residue_via_orbits(int n);

// f_{n-1}(q) mod Phi_n(q) by direct enumeration and one exact division.
Polynomial wilson_residue_brute_force(int n, unsigned jobs = 1);

enum class WilsonMethod { kBruteForce, kOrbits, kBoth };

// The headline check: f_{n-1}(q) = mobius(n) (mod Phi_n(q)).  With kBoth
// the two residue routes are computed independently and must agree (a
// mismatch throws).  An already-known f_{n-1} may be passed to skip the
// enumeration in the brute-force route.
CongruenceReport check_wilson(int n, WilsonMethod method = WilsonMethod::kBoth,
                              unsigned jobs = 1,
                              const Polynomial* known_f = nullptr);

}  // namespace qwilson

#endif  // QWILSON_ORBITS_HPP
