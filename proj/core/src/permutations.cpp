#include "qwilson/permutations.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "qwilson/q_analogues.hpp"

namespace qwilson {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  if (n == 0) throw std::invalid_argument("permutation: empty one-line notation");
  std::vector<bool> seen(n, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v - 1]) {
      throw std::invalid_argument("permutation: not a bijection on {1..n}");
    }
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images_.resize(n);
  std::iota(p.images_.begin(), p.images_.end(), 1);
  return p;
}

Permutation Permutation::from_one_line_unchecked(std::vector<int> images) {
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

void Permutation::assign_one_line_unchecked(std::span<const int> images) {
  assert(images.size() == images_.size());
  std::copy(images.begin(), images.end(), images_.begin());
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i > 0) out << ',';
    out << images_[i];
  }
  out << ']';
  return out.str();
}

int major_index(const Permutation& p) {
  const int n = p.size();
  int sum = 0;
  for (int i = 1; i < n; ++i) {
    if (p.image(i) > p.image(i + 1)) sum += i;
  }
  return sum;
}

int inversion_count(const Permutation& p) {
  const int n = p.size();
  int count = 0;
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (p.image(i) > p.image(j)) ++count;
    }
  }
  return count;
}

int cyclic_major_index(const Permutation& p) {
  const int n = p.size();
  int sum = 0;
  for (int i = 1; i <= n; ++i) {
    const int next = (i == n) ? p.image(1) : p.image(i + 1);
    if (p.image(i) > next) sum += i;
  }
  return sum;
}

int cyclic_descent_count(const Permutation& p) {
  const int n = p.size();
  assert(n >= 2);
  int count = 0;
  for (int i = 1; i <= n; ++i) {
    const int next = (i == n) ? p.image(1) : p.image(i + 1);
    if (p.image(i) > next) ++count;
  }
  return count;
}

bool is_full_cycle(const Permutation& p) {
  const int n = p.size();
  int point = 1;
  for (int steps = 1; steps <= n; ++steps) {
    point = p.image(point);
    if (point == 1) return steps == n;
  }
  return false;  // unreachable for a valid permutation
}

void for_each_cycle_sharded(int n, int shard, int shard_count,
                            const std::function<void(const Permutation&)>& visit) {
  assert(n >= 2 && shard_count >= 1 && shard >= 0 && shard < shard_count);
  std::vector<int> rest(n - 2);
  std::vector<int> images(n);
  Permutation scratch = Permutation::identity(n);
  for (int first = 2 + shard; first <= n; first += shard_count) {
    // rest = {2..n} \ {first}, ascending
    int v = 2;
    for (int& slot : rest) {
      if (v == first) ++v;
      slot = v++;
    }
    do {
      // one-line notation of the cycle (1, first, rest...)
      int prev = 1;
      images[prev - 1] = first;
      prev = first;
      for (int next : rest) {
        images[prev - 1] = next;
        prev = next;
      }
      images[prev - 1] = 1;
      scratch.assign_one_line_unchecked(images);
      visit(scratch);
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
}

void for_each_cycle(int n, const std::function<void(const Permutation&)>& visit) {
  for_each_cycle_sharded(n, 0, 1, visit);
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit) {
  assert(n >= 1);
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  Permutation scratch = Permutation::identity(n);
  do {
    scratch.assign_one_line_unchecked(images);
    visit(scratch);
  } while (std::next_permutation(images.begin(), images.end()));
}

Polynomial f_polynomial(unsigned n, unsigned jobs) {
  assert(n >= 1);
  const int m = static_cast<int>(n) + 1;  // enumerate C_m
  const std::size_t max_major = static_cast<std::size_t>(m) * (m - 1) / 2;

  const unsigned shard_count =
      std::clamp<unsigned>(jobs, 1, static_cast<unsigned>(m - 1));
  std::vector<std::vector<BigInt>> partials(
      shard_count, std::vector<BigInt>(max_major + 1));

  auto run_shard = [&](unsigned shard) {
    std::vector<BigInt>& counts = partials[shard];
    for_each_cycle_sharded(m, static_cast<int>(shard), static_cast<int>(shard_count),
                           [&](const Permutation& p) { ++counts[major_index(p)]; });
  };

  if (shard_count == 1) {
    run_shard(0);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(shard_count);
    for (unsigned s = 0; s < shard_count; ++s) workers.emplace_back(run_shard, s);
    for (std::thread& t : workers) t.join();
  }

  // Addition is commutative, so the shard order does not matter; keep it
  // fixed anyway.
  std::vector<BigInt> total(max_major + 1);
  for (const auto& counts : partials) {
    for (std::size_t e = 0; e <= max_major; ++e) total[e] += counts[e];
  }
  return Polynomial(std::move(total));
}

CongruenceReport check_mahonian(unsigned n) {
  assert(n >= 1);
  const auto start = std::chrono::steady_clock::now();
  const std::size_t max_stat = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::vector<BigInt> by_major(max_stat + 1);
  std::vector<BigInt> by_inversions(max_stat + 1);
  for_each_permutation(static_cast<int>(n), [&](const Permutation& p) {
    ++by_major[major_index(p)];
    ++by_inversions[inversion_count(p)];
  });
  const Polynomial major_sum{std::vector<BigInt>(by_major)};
  const Polynomial inversion_sum{std::vector<BigInt>(by_inversions)};
  const Polynomial expected = q_factorial(n);

  // One report covers three polynomials: the residue slot carries the first
  // generating function that deviates from [n]_q!, or the common value.
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  const Polynomial& deviant = (major_sum != expected) ? major_sum : inversion_sum;
  return CongruenceReport::make("mahonian", {{"n", n}}, deviant, expected, elapsed);
}

}  // namespace qwilson
