#ifndef SYMCRIT_FIELD_HPP
#define SYMCRIT_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "symcrit/error.hpp"

namespace symcrit {

using fp_t = std::uint32_t;

/// Arithmetic in GF(p) for an odd prime p < 2^31.  Elements are plain
/// integers in [0, p); all operations go through this descriptor so the
/// modulus travels with the data.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return p_; }

  fp_t add(fp_t a, fp_t b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    return fp_t(s >= p_ ? s - p_ : s);
  }
  fp_t sub(fp_t a, fp_t b) const { return a >= b ? a - b : fp_t(a + p_ - b); }
  fp_t neg(fp_t a) const { return a == 0 ? 0 : p_ - a; }
  fp_t mul(fp_t a, fp_t b) const {
    return fp_t((std::uint64_t(a) * b) % p_);
  }
  fp_t pow(fp_t a, std::uint64_t e) const;
  fp_t inv(fp_t a) const;  // fails (Domain) on zero
  fp_t from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return fp_t(r);
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

/// Dense univariate polynomial over GF(p), coefficients stored low degree
/// first with no trailing zeros.  The zero polynomial has an empty
/// coefficient vector and degree -1.
class UniPoly {
 public:
  explicit UniPoly(PrimeField f) : f_(f) {}
  UniPoly(PrimeField f, std::vector<fp_t> coeffs)
      : f_(f), c_(std::move(coeffs)) {
    trim();
  }

  static UniPoly zero(PrimeField f) { return UniPoly(f); }
  static UniPoly constant(PrimeField f, fp_t c) {
    return UniPoly(f, std::vector<fp_t>{c});
  }
  static UniPoly one(PrimeField f) { return constant(f, 1); }
  /// The variable itself.
  static UniPoly var(PrimeField f) {
    return UniPoly(f, std::vector<fp_t>{0, 1});
  }
  static UniPoly from_ints(PrimeField f, const std::vector<long long>& v);

  const PrimeField& field() const { return f_; }
  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  fp_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  fp_t lc() const {
    require(!c_.empty(), ErrorKind::Domain, "leading coefficient of zero");
    return c_.back();
  }
  const std::vector<fp_t>& coeffs() const { return c_; }

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator-() const;
  bool operator==(const UniPoly& o) const {
    return f_ == o.f_ && c_ == o.c_;
  }

  UniPoly scaled(fp_t c) const;
  UniPoly monic() const;  // fails on zero
  UniPoly derivative() const;
  fp_t eval(fp_t x) const;
  /// Coefficient-wise stringification, e.g. "y^2 + 3*y + 65519".
  std::string str(const std::string& var = "y") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  PrimeField f_;
  std::vector<fp_t> c_;
};

/// Quotient and remainder; the divisor must be nonzero.
std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);
UniPoly rem(const UniPoly& a, const UniPoly& b);
UniPoly quo(const UniPoly& a, const UniPoly& b);
/// Exact division; fails (Internal) if the remainder is nonzero.
UniPoly exact_quo(const UniPoly& a, const UniPoly& b);

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd_monic(UniPoly a, UniPoly b);
/// g = gcd monic, and u*a + v*b = g.
struct Egcd {
  UniPoly g, u, v;
};
Egcd egcd(const UniPoly& a, const UniPoly& b);
/// Inverse of a modulo m; fails (Domain) if gcd(a, m) != 1.
UniPoly inv_mod(const UniPoly& a, const UniPoly& m);
UniPoly mulmod(const UniPoly& a, const UniPoly& b, const UniPoly& m);
UniPoly pow_mod(const UniPoly& a, std::uint64_t e, const UniPoly& m);
/// f(g) mod m by Horner.
UniPoly compose_mod(const UniPoly& f, const UniPoly& g, const UniPoly& m);

/// f / gcd(f, f'): the product of the distinct irreducible factors.
/// Valid whenever deg(f) < p.
UniPoly squarefree_part(const UniPoly& f);

/// Yun's algorithm.  Returns monic pairwise-coprime factors with strictly
/// increasing multiplicities whose weighted product is f/lc(f).
/// Requires p > deg(f) (Characteristic error otherwise).
std::vector<std::pair<UniPoly, int>> squarefree_factorization(const UniPoly& f);

/// Minimal polynomial of w in GF(p)[y]/(q): the monic generator of the
/// relations P with P(w) = 0 mod q.  For squarefree q this equals
/// prod over distinct values (T - w(tau)), tau running over roots of q.
UniPoly minimal_polynomial_mod(const UniPoly& w, const UniPoly& q);

/// All roots of f in GF(p), ascending, by exhaustive scan (desk scale).
std::vector<fp_t> rational_roots(const UniPoly& f);

// ---------------------------------------------------------------------------
// Dynamic evaluation over GF(p)[y]/(q)
// ---------------------------------------------------------------------------

/// Witness that a modulus factored during a zero-divisor inversion.
/// left * right = modulus, both monic of positive degree.
struct SplitEvent {
  UniPoly left;
  UniPoly right;
};

template <class T>
using SplitOr = std::variant<T, SplitEvent>;

class QuotientRing;
using QuotientRingPtr = std::shared_ptr<const QuotientRing>;

/// GF(p)[y]/(modulus) with a monic squarefree modulus of positive degree.
class QuotientRing : public std::enable_shared_from_this<QuotientRing> {
 public:
  static QuotientRingPtr make(UniPoly modulus);
  const UniPoly& modulus() const { return m_; }
  const PrimeField& field() const { return m_.field(); }

 private:
  explicit QuotientRing(UniPoly m) : m_(std::move(m)) {}
  UniPoly m_;
};

/// Residue class in a QuotientRing.  Ring mismatches are Domain errors.
class QuotientElement {
 public:
  QuotientElement(QuotientRingPtr ring, UniPoly value);

  static QuotientElement zero(const QuotientRingPtr& r) {
    return QuotientElement(r, UniPoly::zero(r->field()));
  }
  static QuotientElement one(const QuotientRingPtr& r) {
    return QuotientElement(r, UniPoly::one(r->field()));
  }
  static QuotientElement constant(const QuotientRingPtr& r, fp_t c) {
    return QuotientElement(r, UniPoly::constant(r->field(), c));
  }

  const QuotientRingPtr& ring() const { return ring_; }
  const UniPoly& value() const { return v_; }
  bool is_zero() const { return v_.is_zero(); }

  QuotientElement operator+(const QuotientElement& o) const;
  QuotientElement operator-(const QuotientElement& o) const;
  QuotientElement operator*(const QuotientElement& o) const;
  QuotientElement operator-() const;
  bool operator==(const QuotientElement& o) const;

  /// Project into a quotient by a divisor of the current modulus.
  QuotientElement project(const QuotientRingPtr& sub) const;

 private:
  QuotientRingPtr ring_;
  UniPoly v_;
};

/// The D5 inversion primitive.  Unit values yield the inverse; a proper
/// zero divisor yields the modulus factorization it exposes.  Inverting
/// zero is an arithmetic (Domain) error: it carries no usable split.
SplitOr<QuotientElement> quotient_invert(const QuotientElement& a);

// ---------------------------------------------------------------------------
// Small dense linear algebra over GF(p)
// ---------------------------------------------------------------------------

namespace linalg {

using Mat = std::vector<std::vector<fp_t>>;

/// In-place reduced row echelon form; returns rank.  Pivot columns are
/// appended to *pivots if given.
int rref(const PrimeField& f, Mat& a, std::vector<int>* pivots = nullptr);

int rank(const PrimeField& f, Mat a);

/// One solution of a*x = b, or nullopt if inconsistent.  Free variables
/// are set to zero.
std::optional<std::vector<fp_t>> solve(const PrimeField& f, Mat a,
                                       std::vector<fp_t> b);

/// Incremental row space with dependency extraction: rows are added one at
/// a time, and the first dependent row reports its expression in terms of
/// the rows added before it.
class IncrementalEchelon {
 public:
  IncrementalEchelon(const PrimeField& f, std::size_t dim)
      : f_(f), dim_(dim) {}

  /// True if v was independent (and got absorbed).  On false, combo()
  /// holds c with v = sum_k c[k] * input_k over the earlier inputs.
  bool add(std::vector<fp_t> v);
  const std::vector<fp_t>& combo() const { return combo_; }
  std::size_t size() const { return rows_.size(); }

 private:
  PrimeField f_;
  std::size_t dim_;
  std::vector<std::vector<fp_t>> rows_;    // echelon rows, pivot-normalized
  std::vector<int> pivot_;                 // pivot column per row
  std::vector<std::vector<fp_t>> expr_;    // row = combination of inputs
  std::vector<fp_t> combo_;
  std::size_t added_ = 0;
};

}  // namespace linalg

}  // namespace symcrit

#endif
