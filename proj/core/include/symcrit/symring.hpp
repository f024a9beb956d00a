#ifndef SYMCRIT_SYMRING_HPP
#define SYMCRIT_SYMRING_HPP

#include "symcrit/mpoly.hpp"
#include "symcrit/partitions.hpp"

namespace symcrit {

/// Coordinate rings attached to one partition lambda of n:
///  - the z-ring has one variable per part of lambda (flat slots, grouped
///    into blocks of equal part size), all weights 1;
///  - the e-ring has variables e{i}_{j} carrying the j-th elementary
///    symmetric value of block i, with weight j.
class BlockRing {
 public:
  BlockRing(PrimeField f, Partition lambda);

  const Partition& lambda() const { return lambda_; }
  const PolyRingPtr& zring() const { return z_; }
  const PolyRingPtr& ering() const { return e_; }
  int length() const { return lambda_.length(); }

  /// Flat z index of (block, slot-within-block), both 0-based.
  int z_index(int block, int slot) const;
  /// e-ring index of e{block+1}_{j}, block 0-based, j in [1, mult(block)].
  int e_index(int block, int j) const;
  /// First x-variable index (0-based) mapped onto flat z slot `slot`.
  int x_rep_of_slot(int slot) const;
  /// Cumulative block offsets: tau[0] = 0, tau[k] = mult_1 + .. + mult_k.
  const std::vector<int>& tau() const { return tau_; }

  /// Elementary symmetric polynomial eta_k of block's z-variables (k >= 0;
  /// eta_0 = 1, k beyond the block size gives 0).
  MPoly eta(int block, int k) const;
  /// eta_k of an arbitrary set of z-variables.
  MPoly eta_of(const std::vector<int>& zvars, int k) const;

 private:
  Partition lambda_;
  PolyRingPtr z_;
  PolyRingPtr e_;
  std::vector<int> tau_;
};

/// Standard x-ring x1..xn over GF(p).
PolyRingPtr make_x_ring(PrimeField f, int n);

/// Reinterpret a polynomial in a ring with identical variable count and
/// field (pure renaming).
MPoly cast_to_ring(const MPoly& f, const PolyRingPtr& target);

/// Substitute x-variables by block representatives: consecutive groups of
/// part(k) x's collapse onto each z slot of block k, in slot order.
MPoly t_lambda(const BlockRing& br, const MPoly& f);

/// Invariance under the full symmetric group, checked on the generators
/// (first transposition and the full cycle).
bool is_sn_invariant(const MPoly& f);

/// Invariance under the block-wise symmetric group of lambda, checked on
/// adjacent transpositions inside each block (f lives in the z-ring).
bool is_block_invariant(const BlockRing& br, const MPoly& f);

/// Rewrite a block-invariant z-polynomial in the e-variables by triangular
/// elimination on the lex-leading monomial.  Domain error if f is not
/// block invariant; the result back-substitutes to f exactly (verified).
MPoly symmetric_coordinates(const BlockRing& br, const MPoly& f);

/// Substitute e{i}_{j} -> eta_j(block i): the inverse direction of
/// symmetric_coordinates.
MPoly expand_e(const BlockRing& br, const MPoly& fbar);

}  // namespace symcrit

#endif
