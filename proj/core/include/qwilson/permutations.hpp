#ifndef QWILSON_PERMUTATIONS_HPP
#define QWILSON_PERMUTATIONS_HPP

#include <functional>
#include <span>
#include <vector>

#include "qwilson/polynomial.hpp"
#include "qwilson/report.hpp"

namespace qwilson {

// Permutation of {1..n} in one-line notation: image(i) is where i goes.
class Permutation {
 public:
  // Validates that images is a bijection on {1..n}; throws
  // std::invalid_argument otherwise.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  // Wraps images without validating.  The caller guarantees a bijection.
  static Permutation from_one_line_unchecked(std::vector<int> images);
  // In-place overwrite, reusing storage; sizes must match and the caller
  // guarantees a bijection.  Lets enumerators emit without allocating.
  void assign_one_line_unchecked(std::span<const int> images);

  int size() const { return static_cast<int>(images_.size()); }
  int image(int i) const { return images_[i - 1]; }  // 1-based
  std::span<const int> one_line() const { return images_; }

  bool operator==(const Permutation& rhs) const { return images_ == rhs.images_; }
  // Lexicographic order on one-line notation.
  bool operator<(const Permutation& rhs) const { return images_ < rhs.images_; }

  std::string to_string() const;  // e.g. [2,4,1,3]

 private:
  Permutation() = default;
  std::vector<int> images_;
};

// Sum of the descent positions i < n with image(i) > image(i+1).
int major_index(const Permutation& p);

// Number of pairs i < j with image(i) > image(j).
int inversion_count(const Permutation& p);

// Cyclic variants: the position index runs over {1..n} with image(n+1)
// identified with image(1).  So the cyclic major index is maj + n when
// image(n) > image(1) and maj otherwise, and the cyclic descent count of a
// full cycle is always >= 1.  pre: n >= 2
int cyclic_major_index(const Permutation& p);
int cyclic_descent_count(const Permutation& p);

// True iff the orbit of 1 under p has size n.
bool is_full_cycle(const Permutation& p);

// Visits every full cycle on {1..n} exactly once: the cycle (1, a2, ..., an)
// for each arrangement (a2, ..., an) of {2..n} in lexicographic order,
// converted to one-line notation.  The Permutation handed to the callback
// references storage reused between calls; copy it to keep it.  pre: n >= 2
void for_each_cycle(int n, const std::function<void(const Permutation&)>& visit);

// Same enumeration restricted to arrangements whose first entry a2 is the
// (shard + shard_count*k)-th smallest, k = 0, 1, ...  The shards partition
// C_n, so commutative accumulations may combine them in any order.
void for_each_cycle_sharded(int n, int shard, int shard_count,
                            const std::function<void(const Permutation&)>& visit);

// Visits all of S_n in lexicographic one-line order.  pre: n >= 1
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit);

// f_n(q) = sum over the full cycles sigma on {1..n+1} of q^{maj sigma}, a
// q-analogue of n! (its value at q = 1 is n!).  jobs > 1 shards the
// enumeration across threads; the result is identical for any jobs.
// pre: n >= 1
Polynomial f_polynomial(unsigned n, unsigned jobs = 1);

// Checks that maj and inv are equidistributed with generating function
// [n]_q!: both statistics are summed over all of S_n and compared against
// the q-factorial.  pre: n >= 1, desk scale
CongruenceReport check_mahonian(unsigned n);

}  // namespace qwilson

#endif  // QWILSON_PERMUTATIONS_HPP
