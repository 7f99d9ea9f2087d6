#include "qwilson/orbits.hpp"

#include <cassert>
#include <chrono>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <utility>

#include "qwilson/number_theory.hpp"

namespace qwilson {

namespace {

constexpr int kExhaustiveLimit = 9;       // switch to sampling above this n
constexpr int kTransferSamples = 100000;
constexpr std::uint64_t kTransferSeed = 0x9E3779B97F4A7C15ull;

std::int64_t ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - start)
      .count();
}

int wrap(int value, int n) { return value > n ? value - n : value; }

}  // namespace

Permutation conjugate_by_rotation(const Permutation& p) {
  const int n = p.size();
  std::vector<int> images(n);
  for (int a = 1; a <= n; ++a) {
    images[wrap(a + 1, n) - 1] = wrap(p.image(a) + 1, n);
  }
  return Permutation::from_one_line_unchecked(std::move(images));
}

Permutation shift_permutation(int r, int n) {
  assert(n >= 2 && r >= 1 && r <= n - 1);
  std::vector<int> images(n);
  for (int a = 1; a <= n; ++a) {
    images[a - 1] = (a + r - 1) % n + 1;
  }
  return Permutation::from_one_line_unchecked(std::move(images));
}

OrbitRecord orbit_of(const Permutation& p) {
  if (!is_full_cycle(p)) {
    throw NotAFullCycle("orbit: " + p.to_string() + " is not a full cycle");
  }
  Permutation smallest = p;
  Permutation current = p;
  int size = 0;
  do {
    current = conjugate_by_rotation(current);
    ++size;
    if (current < smallest) smallest = current;
  } while (!(current == p));

  OrbitRecord record{std::move(smallest), size, 0, 1};
  record.rep_cyclic_major = cyclic_major_index(record.representative);
  record.rep_cyclic_descents = cyclic_descent_count(record.representative);
  return record;
}

std::vector<OrbitRecord> orbit_census(int n) {
  assert(n >= 2);
  std::vector<OrbitRecord> census;
  std::set<std::vector<int>> seen;  // canonical representatives
  for_each_cycle(n, [&](const Permutation& p) {
    OrbitRecord record = orbit_of(p);
    std::vector<int> key(record.representative.one_line().begin(),
                         record.representative.one_line().end());
    if (seen.insert(std::move(key)).second) {
      census.push_back(std::move(record));
    }
  });
  return census;
}

namespace {

// Bounded uniform draw by rejection, so the sampled sequence does not depend
// on the standard library's distribution internals.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

// Uniformly random element of C_n: a Fisher-Yates shuffle of the arrangement
// (a2, ..., an), then the cycle (1, a2, ..., an) in one-line notation.
void random_cycle(int n, std::mt19937_64& rng, std::vector<int>& arrangement,
                  std::vector<int>& images) {
  arrangement.resize(n - 1);
  std::iota(arrangement.begin(), arrangement.end(), 2);
  for (std::size_t i = arrangement.size() - 1; i > 0; --i) {
    std::swap(arrangement[i], arrangement[uniform_below(rng, i + 1)]);
  }
  images.resize(n);
  int prev = 1;
  for (int next : arrangement) {
    images[prev - 1] = next;
    prev = next;
  }
  images[prev - 1] = 1;
}

bool transfer_law_holds(const Permutation& p, int n) {
  const Permutation image = conjugate_by_rotation(p);
  if (cyclic_descent_count(image) != cyclic_descent_count(p)) return false;
  const int difference =
      cyclic_major_index(image) - cyclic_major_index(p) - cyclic_descent_count(p) + 1;
  return ((difference % n) + n) % n == 0;
}

}  // namespace

CongruenceReport verify_transfer_law(int n) {
  assert(n >= 2);
  const auto start = std::chrono::steady_clock::now();
  long long violations = 0;
  long long samples = 0;
  if (n <= kExhaustiveLimit) {
    for_each_cycle(n, [&](const Permutation& p) {
      ++samples;
      if (!transfer_law_holds(p, n)) ++violations;
    });
  } else {
    std::mt19937_64 rng(kTransferSeed + static_cast<std::uint64_t>(n));
    std::vector<int> arrangement;
    std::vector<int> images;
    for (int k = 0; k < kTransferSamples; ++k) {
      random_cycle(n, rng, arrangement, images);
      const Permutation p = Permutation::from_one_line_unchecked(images);
      ++samples;
      if (!transfer_law_holds(p, n)) ++violations;
    }
  }
  return CongruenceReport::make("transfer-law", {{"n", n}, {"samples", samples}},
                                Polynomial::constant(static_cast<long>(violations)), Polynomial(),
                                ms_since(start));
}

CongruenceReport verify_fixed_point_structure(int n) {
  assert(n >= 2);
  const auto start = std::chrono::steady_clock::now();
  std::set<std::vector<int>> fixed_points;
  std::set<std::vector<int>> single_cyclic_descent;
  long long samples = 0;
  for_each_cycle(n, [&](const Permutation& p) {
    ++samples;
    std::vector<int> key(p.one_line().begin(), p.one_line().end());
    if (conjugate_by_rotation(p) == p) fixed_points.insert(key);
    if (cyclic_descent_count(p) == 1) single_cyclic_descent.insert(std::move(key));
  });
  std::set<std::vector<int>> coprime_shifts;
  for (int r = 1; r < n; ++r) {
    if (std::gcd(r, n) != 1) continue;
    const Permutation shift = shift_permutation(r, n);
    coprime_shifts.emplace(shift.one_line().begin(), shift.one_line().end());
  }

  long long violations = 0;
  if (fixed_points != single_cyclic_descent) ++violations;
  if (fixed_points != coprime_shifts) ++violations;
  if (fixed_points.size() != euler_phi(n)) ++violations;
  return CongruenceReport::make("fixed-points", {{"n", n}, {"samples", samples}},
                                Polynomial::constant(static_cast<long>(violations)),
                                Polynomial(), ms_since(start));
}

Polynomial wilson_residue_via_orbits(int n) {
  assert(n >= 2);
  const Polynomial phi = cyclotomic(n);
  Polynomial total;
  for (const OrbitRecord& orbit : orbit_census(n)) {
    // Exponents may be reduced mod n because q^n = 1 mod Phi_n(q); that
    // keeps every intermediate polynomial below degree n.
    std::vector<BigInt> exponent_counts(n);
    int exponent = orbit.rep_cyclic_major % n;
    const int step = orbit.rep_cyclic_descents - 1;
    for (int k = 0; k < orbit.size; ++k) {
      ++exponent_counts[exponent];
      exponent = (exponent + step) % n;
    }
    const Polynomial orbit_residue = mod(Polynomial(std::move(exponent_counts)), phi);
    if (orbit.size > 1 && !orbit_residue.is_zero()) {
      throw OrbitSumNonzero("orbit of " + orbit.representative.to_string() +
                            " (size " + std::to_string(orbit.size) +
                            ") has residue " + orbit_residue.to_string());
    }
    total += orbit_residue;
  }
  return mod(total, phi);
}

Polynomial wilson_residue_brute_force(int n, unsigned jobs) {
  assert(n >= 2);
  return mod(f_polynomial(n - 1, jobs), cyclotomic(n));
}

CongruenceReport check_wilson(int n, WilsonMethod method, unsigned jobs,
                              const Polynomial* known_f) {
  assert(n >= 2);
  const auto start = std::chrono::steady_clock::now();
  Polynomial residue;
  switch (method) {
    case WilsonMethod::kBruteForce:
      residue = known_f ? mod(*known_f, cyclotomic(n))
                        : wilson_residue_brute_force(n, jobs);
      break;
    case WilsonMethod::kOrbits:
      residue = wilson_residue_via_orbits(n);
      break;
    case WilsonMethod::kBoth: {
      residue = known_f ? mod(*known_f, cyclotomic(n))
                        : wilson_residue_brute_force(n, jobs);
      const Polynomial via_orbits = wilson_residue_via_orbits(n);
      if (!(residue == via_orbits)) {
        throw Error("wilson: brute-force residue " + residue.to_string() +
                    " disagrees with orbit-method residue " + via_orbits.to_string() +
                    " at n = " + std::to_string(n));
      }
      break;
    }
  }
  return CongruenceReport::make("wilson", {{"n", n}}, residue,
                                Polynomial::constant(mobius(n)), ms_since(start));
}

}  // namespace qwilson
