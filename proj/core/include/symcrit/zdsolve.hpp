#ifndef SYMCRIT_ZDSOLVE_HPP
#define SYMCRIT_ZDSOLVE_HPP

#include <map>
#include <optional>

#include "symcrit/jacprep.hpp"
#include "symcrit/rng.hpp"

namespace symcrit {

/// Univariate encoding of a finite point set in m coordinates:
/// q monic squarefree, deg(v_i) < deg(q), and sum_i mu_i v_i = y mod q.
/// The points are (v_1(a), .., v_m(a)) for the roots a of q; the empty set
/// is q = 1 with zero coordinate polynomials.  All invariants are checked
/// on construction.
class ZeroDimParam {
 public:
  ZeroDimParam(UniPoly q, std::vector<UniPoly> v, std::vector<fp_t> mu);

  static ZeroDimParam empty_set(PrimeField f, int m);

  const UniPoly& q() const { return q_; }
  const std::vector<UniPoly>& v() const { return v_; }
  const std::vector<fp_t>& mu() const { return mu_; }
  int coords() const { return int(v_.size()); }
  int degree() const { return q_.deg() < 0 ? 0 : q_.deg(); }
  bool empty() const { return q_.deg() == 0; }

 private:
  UniPoly q_;
  std::vector<UniPoly> v_;
  std::vector<fp_t> mu_;
};

/// Reduced Groebner basis for graded reverse lexicographic order: monic,
/// pairwise tail-reduced, ascending leading monomials.  Buchberger with
/// normal pair selection and the standard pair-elimination criteria.
std::vector<MPoly> groebner(const PolyRingPtr& ring, std::vector<MPoly> gens);

/// Full normal form against a (Groebner) basis.
MPoly normal_form(const MPoly& f, const std::vector<MPoly>& gb);

/// Monomials outside the leading-term ideal, ascending; nullopt when some
/// variable has no pure power among the leading terms (not zero
/// dimensional).  The unit ideal gives an empty list.
std::optional<std::vector<Monomial>> staircase_basis(
    const PolyRingPtr& ring, const std::vector<MPoly>& gb);

/// Finite-dimensional quotient by a Groebner basis, with cached
/// multiplication columns.  Construction fails (PositiveDimensional) when
/// the quotient is not finite.
class QuotientAlgebra {
 public:
  QuotientAlgebra(PolyRingPtr ring, std::vector<MPoly> gb);

  const PolyRingPtr& ring() const { return ring_; }
  const std::vector<MPoly>& gb() const { return gb_; }
  int dim() const { return int(basis_.size()); }
  const std::vector<Monomial>& basis() const { return basis_; }

  std::vector<fp_t> reduce(const MPoly& f) const;
  std::vector<fp_t> one() const;
  /// Coordinates of x_i * (element with the given coordinates).
  std::vector<fp_t> mul_by_var(int i, const std::vector<fp_t>& vec) const;
  /// Coordinates of (sum_i mu_i x_i) * element.
  std::vector<fp_t> apply_form(const std::vector<fp_t>& mu,
                               const std::vector<fp_t>& vec) const;
  /// Minimal polynomial of x_i acting on 1.
  UniPoly var_min_poly(int i) const;

 private:
  const std::vector<fp_t>& column(int var, int basis_index) const;

  PolyRingPtr ring_;
  std::vector<MPoly> gb_;
  std::vector<Monomial> basis_;
  std::map<std::array<std::uint16_t, kMaxVars>, int> index_;
  mutable std::vector<std::vector<std::vector<fp_t>>> columns_;
  mutable std::vector<std::vector<bool>> have_column_;
};

/// Generators of the radical: the input plus the squarefree parts of every
/// per-variable minimal polynomial that was not already squarefree.
/// At most one extra Groebner pass is needed afterwards.
std::vector<MPoly> radical_generators(const QuotientAlgebra& qa);

/// Univariate encoding of the solution set of a zero-dimensional ideal.
/// Tries the optional caller-chosen linear form first, then random ones;
/// a form is kept only if it separates the points of the radical.  Every
/// generator is checked to vanish on the result.
ZeroDimParam rur_extract(const PolyRingPtr& ring,
                         const std::vector<MPoly>& gens, Rng& rng,
                         std::optional<std::vector<fp_t>> first_mu = {});

/// Point-set union of two encodings over the same coordinate count.
ZeroDimParam union_params(const ZeroDimParam& a, const ZeroDimParam& b,
                          Rng& rng);

/// Image of a point set under new coordinates g_1..g_k, with the number of
/// source points that collided (degree drop).
struct ImageResult {
  ZeroDimParam param;
  int collapsed = 0;
};
ImageResult image_param(const ZeroDimParam& a, const std::vector<MPoly>& g,
                        Rng& rng);

/// Same, but the new coordinates are already given as values modulo the
/// (monic squarefree) source modulus.
ImageResult image_from_values(const UniPoly& q,
                              const std::vector<UniPoly>& values, Rng& rng);

/// Solve one prepared per-partition system.
ZeroDimParam isolated_points(const PreparedSystem& sys, Rng& rng,
                             std::optional<std::vector<fp_t>> first_mu = {});

/// g(v_1, .., v_m) mod q with a per-instance memo of monomial values.
class MonomialEvaluator {
 public:
  MonomialEvaluator(std::vector<UniPoly> vals, UniPoly q);
  UniPoly eval(const MPoly& g);

 private:
  const UniPoly& value_of(const Monomial& m);

  std::vector<UniPoly> vals_;
  UniPoly q_;
  std::map<std::array<std::uint16_t, kMaxVars>, UniPoly> memo_;
};

}  // namespace symcrit

#endif
