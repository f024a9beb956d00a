#ifndef SYMCRIT_PARTITIONS_HPP
#define SYMCRIT_PARTITIONS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>
#include <vector>

namespace symcrit {

using BigInt = boost::multiprecision::cpp_int;

/// Integer partition in block normal form: pairwise-distinct part sizes in
/// strictly increasing order, each with a positive multiplicity.
/// (1^2 2^1) has blocks {(1,2),(2,1)}, n = 4, length 3.
class Partition {
 public:
  Partition() = default;
  /// blocks must have strictly increasing part sizes and multiplicities >= 1.
  explicit Partition(std::vector<std::pair<int, int>> blocks);
  /// From an arbitrary list of parts (any order).
  static Partition from_parts(std::vector<int> parts);

  const std::vector<std::pair<int, int>>& blocks() const { return blocks_; }
  int nblocks() const { return static_cast<int>(blocks_.size()); }
  int part(int k) const { return blocks_[std::size_t(k)].first; }
  int mult(int k) const { return blocks_[std::size_t(k)].second; }

  /// Partitioned integer: sum of part * multiplicity.
  int n() const;
  /// Number of parts counted with multiplicity.
  int length() const;
  /// Offsets tau_0 = 0, tau_k = mult(0) + ... + mult(k-1), size nblocks()+1.
  std::vector<int> tau() const;
  /// The expanded ascending part list, e.g. (1,1,2).
  std::vector<int> parts() const;
  /// Block index (0-based) owning flat slot i in [0, length()).
  int block_of_slot(int i) const;

  /// Text form "1^2 2^1".
  std::string str() const;

  bool operator==(const Partition& o) const { return blocks_ == o.blocks_; }
  bool operator!=(const Partition& o) const { return !(*this == o); }
  /// Lexicographic on the ascending part list; the enumeration order.
  bool operator<(const Partition& o) const;

 private:
  std::vector<std::pair<int, int>> blocks_;
};

/// All partitions of n, ascending-lex on the part list:
/// (1^n) first, (n^1) last.
std::vector<Partition> enumerate_partitions(int n);
std::vector<Partition> enumerate_partitions_exact(int n, int length);
std::vector<Partition> enumerate_partitions_min(int n, int min_length);

/// Size of the coordinate-permutation orbit of a point whose value
/// multiplicities form lambda and whose repeated values are distinct:
/// n! / prod_i (part_i!)^(mult_i).
BigInt orbit_size(const Partition& lambda);

/// prod_i mult_i!; the block symmetry factor.
BigInt block_symmetry(const Partition& lambda);

BigInt factorial(int n);
BigInt binomial(int n, int k);

/// Refinement order: a <= b iff the parts of a can be grouped so that each
/// group sums to one part of b (each part of b used exactly once).
bool refines(const Partition& a, const Partition& b);

}  // namespace symcrit

#endif
