#ifndef SYMCRIT_MPOLY_HPP
#define SYMCRIT_MPOLY_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "symcrit/field.hpp"

namespace symcrit {

/// Rings are capped at 8 variables: every object this library solves for
/// lives in at most n <= 8 coordinates, and the cap keeps monomials POD.
constexpr int kMaxVars = 8;

class PolyRing;
using PolyRingPtr = std::shared_ptr<const PolyRing>;

/// Variable set + field + per-variable weights (used only for weighted
/// degree reporting; the monomial order ignores them).
class PolyRing : public std::enable_shared_from_this<PolyRing> {
 public:
  static PolyRingPtr make(PrimeField f, std::vector<std::string> names,
                          std::vector<int> weights = {});

  const PrimeField& field() const { return f_; }
  int nvars() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[std::size_t(i)]; }
  int weight(int i) const { return weights_[std::size_t(i)]; }
  const std::vector<int>& weights() const { return weights_; }
  bool same_as(const PolyRing& o) const;

 private:
  PolyRing(PrimeField f, std::vector<std::string> names,
           std::vector<int> weights);
  PrimeField f_;
  std::vector<std::string> names_;
  std::vector<int> weights_;
};

/// Exponent vector with cached total degree.  Comparison is graded
/// reverse lexicographic on the raw exponents.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};
  std::uint32_t deg = 0;

  static Monomial one() { return Monomial{}; }
  static Monomial var(int i, int exp = 1);
  static Monomial from_exps(const std::vector<int>& exps);

  bool is_one() const { return deg == 0; }
  int weighted_degree(const PolyRing& r) const;
  bool divides(const Monomial& o) const;
  Monomial operator*(const Monomial& o) const;
  /// this / o; requires o.divides(*this).
  Monomial operator/(const Monomial& o) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return deg == o.deg && e == o.e; }
};

/// -1, 0, 1 as a <, ==, > b in grevlex.
int grevlex_cmp(const Monomial& a, const Monomial& b);

struct Term {
  Monomial m;
  fp_t c = 0;
};

/// Sparse multivariate polynomial: terms sorted by strictly decreasing
/// grevlex monomial, no zero coefficients.
class MPoly {
 public:
  explicit MPoly(PolyRingPtr ring) : ring_(std::move(ring)) {}
  /// Takes any term list; sorts, merges and drops zeros.
  MPoly(PolyRingPtr ring, std::vector<Term> terms);

  static MPoly zero(const PolyRingPtr& r) { return MPoly(r); }
  static MPoly constant(const PolyRingPtr& r, fp_t c);
  static MPoly var(const PolyRingPtr& r, int i, int exp = 1);
  /// Terms as (coefficient, exponent vector) pairs; for tests and IO.
  static MPoly from_list(
      const PolyRingPtr& r,
      const std::vector<std::pair<long long, std::vector<int>>>& terms);

  const PolyRingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || t_[0].m.is_one(); }
  fp_t constant_value() const;
  /// Leading term (grevlex); polynomial must be nonzero.
  const Term& lt() const;
  int degree() const;           // total degree, -1 for zero
  int weighted_degree() const;  // max weighted monomial degree, -1 for zero

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator-() const;
  bool operator==(const MPoly& o) const;
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  MPoly scaled(fp_t c) const;
  MPoly mul_term(const Monomial& m, fp_t c) const;
  MPoly derivative(int var) const;
  fp_t eval(const std::vector<fp_t>& x) const;
  /// Substitute one variable by a field value.
  MPoly partial_eval(int var, fp_t value) const;
  /// Substitute every variable by a polynomial (possibly in another ring).
  MPoly compose(const PolyRingPtr& target,
                const std::vector<MPoly>& args) const;
  /// Rename variables: exponent of old variable i goes to perm[i].
  MPoly apply_permutation(const std::vector<int>& perm) const;

  /// "2*x1^2*x3 + 65519*x2"; coefficients in [0, p-1].
  std::string str() const;

 private:
  void normalize();
  PolyRingPtr ring_;
  std::vector<Term> t_;
};

/// Divide f exactly by (v_i - v_j); Domain error (with the offending
/// remainder in the message) if the division leaves a remainder.
MPoly exact_divide_linear(const MPoly& f, int i, int j);

/// All monomials of the ring with weighted degree <= d, in a fixed
/// deterministic order (graded by weighted degree, then grevlex).
std::vector<Monomial> monomials_up_to_weighted_degree(const PolyRing& r,
                                                      int d);

/// Dense row-major polynomial matrix over one ring.
class PolyMatrix {
 public:
  PolyMatrix(PolyRingPtr ring, int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const PolyRingPtr& ring() const { return ring_; }
  MPoly& at(int i, int j) { return a_[std::size_t(i * cols_ + j)]; }
  const MPoly& at(int i, int j) const { return a_[std::size_t(i * cols_ + j)]; }

  PolyMatrix operator*(const PolyMatrix& o) const;
  bool operator==(const PolyMatrix& o) const;

  /// Cofactor-expansion determinant; square matrices only.
  MPoly determinant() const;
  /// Submatrix selected by row/column index lists.
  PolyMatrix submatrix(const std::vector<int>& rows,
                       const std::vector<int>& cols) const;
  /// Every k x k minor, ordered by (row subset, column subset) in
  /// lexicographic subset order.
  std::vector<MPoly> minors(int k) const;

  /// Evaluate entrywise at a point.
  linalg::Mat eval(const std::vector<fp_t>& x) const;

 private:
  PolyRingPtr ring_;
  int rows_, cols_;
  std::vector<MPoly> a_;
};

}  // namespace symcrit

#endif
