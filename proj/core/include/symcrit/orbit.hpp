#ifndef SYMCRIT_ORBIT_HPP
#define SYMCRIT_ORBIT_HPP

#include "symcrit/zdsolve.hpp"

namespace symcrit {

/// Observed coincidence pattern of one fiber of block values: the coarser
/// partition and the elementary symmetric values of its merged blocks,
/// reduced modulo the branch modulus.
struct FiberType {
  Partition type;
  std::vector<UniPoly> coords;
};

/// Coincidence type of the point(s) of a branch K[y]/(q), where eps holds
/// the per-block elementary symmetric values of lambda in block-major
/// order.  A zero-divisor met along the way reports the factorization of q
/// instead (dynamic evaluation).
SplitOr<FiberType> type_of_fiber(const Partition& lambda,
                                 const QuotientRingPtr& ring,
                                 const std::vector<UniPoly>& eps);

/// Field-valued version: eps are plain values, the answer cannot split.
struct FiberTypeField {
  Partition type;
  std::vector<fp_t> coords;
};
FiberTypeField type_of_fiber(const Partition& lambda, PrimeField f,
                             const std::vector<fp_t>& eps);

/// One output cell: points of exact coincidence type `type`, encoded over
/// the elementary symmetric coordinates of that type.
struct OrbitEntry {
  Partition type;
  ZeroDimParam param;
};

/// Sort a candidate solution set of lambda's system by exact coincidence
/// type: branches split until each has a uniform type, images are taken in
/// the coarser coordinates, and groups are merged.  `collapsed` counts the
/// source points lost to coincidences (input degree minus output degrees).
struct DecomposeResult {
  std::vector<OrbitEntry> parts;
  int collapsed = 0;
};
DecomposeResult decompose(const BlockRing& br, const ZeroDimParam& sol,
                          Rng& rng);

/// Explicit rational points of the expanded orbits: every root of q in
/// GF(p) whose block values are all rational yields its full permutation
/// orbit.  Roots with values outside GF(p) are counted, not expanded.
struct OrbitPoints {
  std::vector<std::vector<fp_t>> points;
  int skipped_roots = 0;
};
OrbitPoints expand_orbit(const Partition& type, const ZeroDimParam& param,
                         PrimeField f);

/// Full check of a computed representation against the source system:
/// distinct types, exactness of each type (no hidden coincidences), and
/// vanishing of the per-type equations on every encoded point.
/// Verification error on the first failure.
void verify_membership(const std::vector<MPoly>& f, const MPoly& phi,
                       const std::vector<OrbitEntry>& entries);

}  // namespace symcrit

#endif
