#ifndef SYMCRIT_SYMMETRIZE_HPP
#define SYMCRIT_SYMMETRIZE_HPP

#include <cstdint>
#include <functional>

#include "symcrit/symring.hpp"

namespace symcrit {

/// Row vector (q_1..q_l) in the z-ring of a partition satisfying, for every
/// block permutation sigma, sigma(q_i) = q_{sigma(i)}, and divisibility of
/// q_i - q_j by z_i - z_j for all pairs.  Both are checked on construction.
class EquivariantRow {
 public:
  EquivariantRow(BlockRing br, std::vector<MPoly> q);

  const BlockRing& block_ring() const { return br_; }
  const std::vector<MPoly>& q() const { return q_; }
  int length() const { return int(q_.size()); }
  /// max_i deg(q_i); -1 if all zero.
  int degree() const;

 private:
  BlockRing br_;
  std::vector<MPoly> q_;
};

/// Finite-difference operator on index sets (1-based flat slots): singletons
/// give q_i, and larger sets divide the difference of two one-smaller sets
/// by the matching variable difference (pivots: drop max / drop min).
/// Memoizes every subset it touches for the lifetime of the table.
class DividedDifferenceTable {
 public:
  explicit DividedDifferenceTable(const EquivariantRow& row);
  /// I as a bitmask over bits 0..l-1 (bit i = slot i+1); must be nonempty.
  const MPoly& get(std::uint32_t mask);

 private:
  const EquivariantRow& row_;
  std::vector<MPoly> memo_;
  std::vector<bool> have_;
};

/// Divided difference with a caller-chosen pivot rule; the rule receives the
/// current index set (ascending 1-based) and returns the two distinct
/// elements (drop_a, drop_b) used as (i_r, i_q).  For the pivot-independence
/// property checks; no memoization.
MPoly divided_difference_with_pivots(
    const EquivariantRow& row, std::vector<int> I,
    const std::function<std::pair<int, int>(const std::vector<int>&)>& rule);

/// The invariant row vector p with p * U = q: p_{tau_k+j} combines the
/// prefix sums of divided differences against elementary symmetric
/// polynomials of the trailing block variables.  Every output entry is
/// block invariant, and deg p_i <= deg(row) - l + i.
std::vector<MPoly> symmetrize(const EquivariantRow& row);

/// The certified change-of-basis data: p * U = q with U = M^{-1} * J and
/// det(U) a nonzero multiple of the Vandermonde determinant.  J is the
/// ordered product of the per-index elimination blocks.  Not used by the
/// solver; exists so the identity behind symmetrize can be checked exactly.
struct SymmetrizeMatrices {
  PolyMatrix M;
  PolyMatrix J;
  PolyMatrix U;
  MPoly det_u;
};

/// Requires p > length(lambda) (the block row scalings need 1/j).
SymmetrizeMatrices build_u_matrix(const BlockRing& br);

/// prod_{i<j} (z_i - z_j).
MPoly vandermonde(const BlockRing& br);

}  // namespace symcrit

#endif
