#ifndef SYMCRIT_DRIVER_HPP
#define SYMCRIT_DRIVER_HPP

#include <boost/rational.hpp>

#include "symcrit/orbit.hpp"

namespace symcrit {

using Rational = boost::rational<BigInt>;

/// Invariant optimization instance: s equations f_1..f_s and an objective
/// phi, all fixed by every variable permutation, over GF(p) with p > n.
/// Checked on construction.
class ProblemInstance {
 public:
  ProblemInstance(std::vector<MPoly> f, MPoly phi);

  /// sum_i (x_i - u)^2: the invariant distance from the diagonal point.
  static MPoly distance_objective(const PolyRingPtr& xring, fp_t u);

  const PolyRingPtr& ring() const { return phi_.ring(); }
  const PrimeField& field() const { return ring()->field(); }
  const std::vector<MPoly>& f() const { return f_; }
  const MPoly& phi() const { return phi_; }
  int n() const { return ring()->nvars(); }
  int s() const { return int(f_.size()); }
  /// max(deg f_i, deg phi); drives pruning.
  int degree_bound() const;

 private:
  std::vector<MPoly> f_;
  MPoly phi_;
};

/// Book-keeping for one partition considered by the solver.
struct PartitionMeta {
  Partition lambda;
  bool pruned = false;
  std::string note;
  int candidate_degree = 0;
  int collapsed = 0;
};

/// Orbit-wise description of the critical set: one parametrization per
/// coincidence type, plus per-partition processing records.
struct SymmetricRepresentation {
  std::vector<OrbitEntry> entries;
  std::vector<PartitionMeta> meta;
  std::uint64_t seed = 0;

  int total_degree() const;
  const OrbitEntry* find(const Partition& type) const;
};

/// The per-orbit solver: partitions of length s contribute their full
/// sorted solution sets, longer partitions only their exact-type entry,
/// first computed entry wins per type.  Deterministic for a fixed seed
/// independently of `threads`.
SymmetricRepresentation critical_points_per_orbit(const ProblemInstance& prob,
                                                  std::uint64_t seed,
                                                  int threads = 1);

/// One parametrization of the whole critical set in the original
/// variables; the baseline the per-orbit solver is measured against.
ZeroDimParam naive_critical_points(const ProblemInstance& prob,
                                   std::uint64_t seed);

/// Elementary symmetric polynomial of integer arguments.
BigInt eta_integer(const std::vector<BigInt>& vals, int k);

/// Exact degree bounds per partition and in aggregate.
struct BoundsRow {
  Partition lambda;
  Rational candidates;  // bound on the candidate set of this partition
  Rational isolated;    // bound on its isolated points
  BigInt weighted;      // block_symmetry * candidates (always integral)
  bool pruned = false;
};
struct BoundsReport {
  int n = 0, d = 0, s = 0;
  std::vector<BoundsRow> rows;
  BigInt candidates_ceiling;    // ceil(sum of candidate bounds)
  BigInt isolated_ceiling;      // ceil(sum of isolated bounds)
  BigInt global_candidates;     // d^s C(n+d-1, n)
  BigInt global_isolated;       // n (d+1)^s C(n+d, n)
  BigInt determinantal_bound;   // d^s (d-1)^{n-s} C(n, s)
};
BoundsReport bounds_report(int n, int d, int s);

/// Uniformly random invariant polynomial of exact degree d (sampled on the
/// elementary symmetric monomials of weighted degree <= d, then expanded).
MPoly random_invariant(const PolyRingPtr& xring, int d, Rng& rng);

/// Random instance with s equations and an objective, all of exact
/// degree d.
ProblemInstance random_instance(PrimeField field, int n, int s, int d,
                                std::uint64_t seed);

/// Ground truth by exhaustion (p^n <= 1e8): rational critical points,
/// both raw and compressed one-per-orbit into elementary symmetric values
/// grouped by exact type.
struct OracleResult {
  std::vector<std::pair<Partition, std::vector<std::vector<fp_t>>>> types;
  std::vector<std::vector<fp_t>> points;
};
OracleResult brute_force_oracle(const ProblemInstance& prob);

/// The points of the encoded set whose parameter value lies in GF(p),
/// sorted; coordinates evaluated at each rational root of q.
std::vector<std::vector<fp_t>> rational_points(const ZeroDimParam& param);

}  // namespace symcrit

#endif
