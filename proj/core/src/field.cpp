#include "symcrit/field.hpp"

#include <algorithm>
#include <sstream>

namespace symcrit {

namespace {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  require(p > 2, ErrorKind::Domain, "field characteristic must exceed 2");
  require(p < (1u << 31), ErrorKind::Domain,
          "field characteristic must be below 2^31");
  require(is_prime_u32(p), ErrorKind::Domain,
          "field characteristic " + std::to_string(p) + " is not prime");
}

fp_t PrimeField::pow(fp_t a, std::uint64_t e) const {
  fp_t r = 1;
  fp_t b = a % p_;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

fp_t PrimeField::inv(fp_t a) const {
  require(a % p_ != 0, ErrorKind::Domain, "inverse of zero in GF(p)");
  // Extended Euclid on (a, p).
  long long t = 0, nt = 1;
  long long r = p_, nr = a % p_;
  while (nr != 0) {
    long long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (t < 0) t += p_;
  return fp_t(t);
}

UniPoly UniPoly::from_ints(PrimeField f, const std::vector<long long>& v) {
  std::vector<fp_t> c(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) c[i] = f.from_int(v[i]);
  return UniPoly(f, std::move(c));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  require(f_ == o.f_, ErrorKind::Domain, "field mismatch in UniPoly +");
  std::vector<fp_t> c(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = f_.add(coeff(i), o.coeff(i));
  return UniPoly(f_, std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  require(f_ == o.f_, ErrorKind::Domain, "field mismatch in UniPoly -");
  std::vector<fp_t> c(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = f_.sub(coeff(i), o.coeff(i));
  return UniPoly(f_, std::move(c));
}

UniPoly UniPoly::operator-() const {
  std::vector<fp_t> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = f_.neg(c_[i]);
  return UniPoly(f_, std::move(c));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  require(f_ == o.f_, ErrorKind::Domain, "field mismatch in UniPoly *");
  if (is_zero() || o.is_zero()) return zero(f_);
  const std::uint64_t p = f_.p();
  std::vector<fp_t> c(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    std::uint64_t ai = c_[i];
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      std::uint64_t s = c[i + j] + ai * o.c_[j] % p;
      c[i + j] = fp_t(s >= p ? s - p : s);
    }
  }
  return UniPoly(f_, std::move(c));
}

UniPoly UniPoly::scaled(fp_t s) const {
  std::vector<fp_t> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = f_.mul(c_[i], s);
  return UniPoly(f_, std::move(c));
}

UniPoly UniPoly::monic() const {
  require(!is_zero(), ErrorKind::Domain, "monic() of zero polynomial");
  if (lc() == 1) return *this;
  return scaled(f_.inv(lc()));
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return zero(f_);
  std::vector<fp_t> c(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    c[i - 1] = f_.mul(c_[i], fp_t(i % f_.p()));
  return UniPoly(f_, std::move(c));
}

fp_t UniPoly::eval(fp_t x) const {
  fp_t r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = f_.add(f_.mul(r, x), c_[i]);
  return r;
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c_[i] != 1) {
      os << c_[i];
      if (i > 0) os << "*";
    }
    if (i == 1)
      os << var;
    else if (i > 1)
      os << var << "^" << i;
  }
  return os.str();
}

std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b) {
  require(!b.is_zero(), ErrorKind::Domain, "division by zero polynomial");
  const PrimeField& f = a.field();
  require(f == b.field(), ErrorKind::Domain, "field mismatch in divrem");
  if (a.deg() < b.deg()) return {UniPoly::zero(f), a};
  std::vector<fp_t> r(a.coeffs());
  std::vector<fp_t> q(a.deg() - b.deg() + 1, 0);
  fp_t ilc = f.inv(b.lc());
  for (int k = a.deg() - b.deg(); k >= 0; --k) {
    fp_t c = f.mul(r[k + b.deg()], ilc);
    q[k] = c;
    if (c == 0) continue;
    for (int j = 0; j <= b.deg(); ++j)
      r[k + j] = f.sub(r[k + j], f.mul(c, b.coeff(j)));
  }
  return {UniPoly(f, std::move(q)), UniPoly(f, std::move(r))};
}

UniPoly rem(const UniPoly& a, const UniPoly& b) { return divrem(a, b).second; }
UniPoly quo(const UniPoly& a, const UniPoly& b) { return divrem(a, b).first; }

UniPoly exact_quo(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divrem(a, b);
  require(r.is_zero(), ErrorKind::Internal,
          "inexact polynomial division: remainder " + r.str());
  return q;
}

UniPoly gcd_monic(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

Egcd egcd(const UniPoly& a, const UniPoly& b) {
  const PrimeField& f = a.field();
  UniPoly r0 = a, r1 = b;
  UniPoly u0 = UniPoly::one(f), u1 = UniPoly::zero(f);
  UniPoly v0 = UniPoly::zero(f), v1 = UniPoly::one(f);
  while (!r1.is_zero()) {
    auto [q, r2] = divrem(r0, r1);
    UniPoly u2 = u0 - q * u1;
    UniPoly v2 = v0 - q * v1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  if (r0.is_zero()) return {r0, u0, v0};
  fp_t s = f.inv(r0.lc());
  return {r0.scaled(s), u0.scaled(s), v0.scaled(s)};
}

UniPoly inv_mod(const UniPoly& a, const UniPoly& m) {
  Egcd e = egcd(rem(a, m), m);
  require(e.g.is_one(), ErrorKind::Domain,
          "element not invertible modulo " + m.str());
  return rem(e.u, m);
}

UniPoly mulmod(const UniPoly& a, const UniPoly& b, const UniPoly& m) {
  return rem(a * b, m);
}

UniPoly pow_mod(const UniPoly& a, std::uint64_t e, const UniPoly& m) {
  UniPoly r = UniPoly::one(a.field());
  UniPoly b = rem(a, m);
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

UniPoly compose_mod(const UniPoly& f, const UniPoly& g, const UniPoly& m) {
  UniPoly r = UniPoly::zero(f.field());
  for (int i = f.deg(); i >= 0; --i) {
    r = mulmod(r, g, m);
    r = r + UniPoly::constant(f.field(), f.coeff(std::size_t(i)));
  }
  return r;
}

UniPoly squarefree_part(const UniPoly& f) {
  require(!f.is_zero(), ErrorKind::Domain, "squarefree part of zero");
  require(std::uint64_t(f.deg()) < f.field().p(), ErrorKind::Characteristic,
          "characteristic too small for squarefree part (p <= deg)");
  if (f.deg() == 0) return UniPoly::one(f.field());
  UniPoly g = gcd_monic(f, f.derivative());
  return exact_quo(f.monic(), g);
}

std::vector<std::pair<UniPoly, int>> squarefree_factorization(
    const UniPoly& f) {
  require(!f.is_zero(), ErrorKind::Domain,
          "squarefree factorization of zero");
  require(std::uint64_t(f.deg()) < f.field().p(), ErrorKind::Characteristic,
          "characteristic too small for Yun factorization (p <= deg)");
  std::vector<std::pair<UniPoly, int>> out;
  if (f.deg() == 0) return out;
  UniPoly a = f.monic();
  UniPoly u = gcd_monic(a, a.derivative());
  UniPoly v = exact_quo(a, u);
  UniPoly w = exact_quo(a.derivative(), u);
  for (int i = 1; v.deg() > 0; ++i) {
    UniPoly h = gcd_monic(v, w - v.derivative());
    if (h.deg() > 0) out.emplace_back(h, i);
    UniPoly nv = exact_quo(v, h);
    w = exact_quo(w - v.derivative(), h);
    v = std::move(nv);
  }
  return out;
}

UniPoly minimal_polynomial_mod(const UniPoly& w, const UniPoly& q) {
  require(q.deg() >= 1, ErrorKind::Domain,
          "minimal_polynomial_mod needs a positive-degree modulus");
  const PrimeField& f = q.field();
  const std::size_t d = std::size_t(q.deg());
  linalg::IncrementalEchelon ech(f, d);
  UniPoly pw = UniPoly::one(f);
  UniPoly wr = rem(w, q);
  for (std::size_t k = 0; k <= d; ++k) {
    std::vector<fp_t> vec(d, 0);
    for (std::size_t i = 0; i < d; ++i) vec[i] = pw.coeff(i);
    if (!ech.add(std::move(vec))) {
      // pw = sum combo[j] * w^j: min poly is y^k - sum combo[j] y^j.
      std::vector<fp_t> c(k + 1, 0);
      c[k] = 1;
      const auto& cb = ech.combo();
      for (std::size_t j = 0; j < cb.size(); ++j) c[j] = f.neg(cb[j]);
      return UniPoly(f, std::move(c));
    }
    pw = mulmod(pw, wr, q);
  }
  fail(ErrorKind::Internal, "minimal polynomial exceeded modulus degree");
}

std::vector<fp_t> rational_roots(const UniPoly& f) {
  require(!f.is_zero(), ErrorKind::Domain, "roots of the zero polynomial");
  std::vector<fp_t> roots;
  for (std::uint64_t x = 0; x < f.field().p(); ++x)
    if (f.eval(fp_t(x)) == 0) roots.push_back(fp_t(x));
  return roots;
}

// ---------------------------------------------------------------------------
// Quotient ring
// ---------------------------------------------------------------------------

QuotientRingPtr QuotientRing::make(UniPoly modulus) {
  require(modulus.deg() >= 1, ErrorKind::Domain,
          "quotient modulus must have positive degree");
  modulus = modulus.monic();
  return QuotientRingPtr(new QuotientRing(std::move(modulus)));
}

QuotientElement::QuotientElement(QuotientRingPtr ring, UniPoly value)
    : ring_(std::move(ring)), v_(rem(value, ring_->modulus())) {}

namespace {
const QuotientRingPtr& same_ring(const QuotientElement& a,
                                 const QuotientElement& b) {
  require(a.ring() == b.ring() ||
              a.ring()->modulus() == b.ring()->modulus(),
          ErrorKind::Domain, "quotient ring mismatch");
  return a.ring();
}
}  // namespace

QuotientElement QuotientElement::operator+(const QuotientElement& o) const {
  return QuotientElement(same_ring(*this, o), v_ + o.v_);
}
QuotientElement QuotientElement::operator-(const QuotientElement& o) const {
  return QuotientElement(same_ring(*this, o), v_ - o.v_);
}
QuotientElement QuotientElement::operator*(const QuotientElement& o) const {
  return QuotientElement(same_ring(*this, o),
                         mulmod(v_, o.v_, ring_->modulus()));
}
QuotientElement QuotientElement::operator-() const {
  return QuotientElement(ring_, -v_);
}
bool QuotientElement::operator==(const QuotientElement& o) const {
  same_ring(*this, o);
  return v_ == o.v_;
}

QuotientElement QuotientElement::project(const QuotientRingPtr& sub) const {
  return QuotientElement(sub, v_);
}

SplitOr<QuotientElement> quotient_invert(const QuotientElement& a) {
  const UniPoly& m = a.ring()->modulus();
  require(!a.is_zero(), ErrorKind::Domain,
          "inverting zero in a quotient ring (no usable split)");
  Egcd e = egcd(a.value(), m);
  if (e.g.is_one())
    return QuotientElement(a.ring(), e.u);
  // Proper zero divisor: the gcd cuts the modulus in two.
  return SplitEvent{e.g, exact_quo(m, e.g)};
}

// ---------------------------------------------------------------------------
// Linear algebra
// ---------------------------------------------------------------------------

namespace linalg {

int rref(const PrimeField& f, Mat& a, std::vector<int>* pivots) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && a[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[r]);
    fp_t ip = f.inv(a[r][c]);
    for (std::size_t j = c; j < cols; ++j) a[r][j] = f.mul(a[r][j], ip);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      fp_t m = a[i][c];
      for (std::size_t j = c; j < cols; ++j)
        a[i][j] = f.sub(a[i][j], f.mul(m, a[r][j]));
    }
    if (pivots) pivots->push_back(int(c));
    ++r;
  }
  return int(r);
}

int rank(const PrimeField& f, Mat a) { return rref(f, a); }

std::optional<std::vector<fp_t>> solve(const PrimeField& f, Mat a,
                                       std::vector<fp_t> b) {
  require(a.size() == b.size(), ErrorKind::Domain, "solve: size mismatch");
  if (a.empty()) return std::vector<fp_t>{};
  const std::size_t cols = a[0].size();
  for (std::size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);
  std::vector<int> piv;
  int r = rref(f, a, &piv);
  // Inconsistent iff a pivot lands in the augmented column.
  if (!piv.empty() && std::size_t(piv.back()) == cols) return std::nullopt;
  std::vector<fp_t> x(cols, 0);
  for (int i = 0; i < r; ++i) x[std::size_t(piv[std::size_t(i)])] = a[std::size_t(i)][cols];
  return x;
}

bool IncrementalEchelon::add(std::vector<fp_t> v) {
  require(v.size() == dim_, ErrorKind::Domain, "echelon: dimension mismatch");
  std::vector<fp_t> c(added_, 0);
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    fp_t x = v[std::size_t(pivot_[k])];
    if (x == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      v[j] = f_.sub(v[j], f_.mul(x, rows_[k][j]));
    for (std::size_t j = 0; j < expr_[k].size(); ++j)
      c[j] = f_.add(c[j], f_.mul(x, expr_[k][j]));
  }
  std::size_t pc = 0;
  while (pc < dim_ && v[pc] == 0) ++pc;
  if (pc == dim_) {
    combo_ = std::move(c);
    return false;
  }
  fp_t ip = f_.inv(v[pc]);
  for (std::size_t j = 0; j < dim_; ++j) v[j] = f_.mul(v[j], ip);
  c.resize(added_ + 1, 0);
  // The new echelon row is (input - reduction) / pivot.
  std::vector<fp_t> e(added_ + 1, 0);
  e[added_] = ip;
  for (std::size_t j = 0; j < added_; ++j) e[j] = f_.neg(f_.mul(ip, c[j]));
  rows_.push_back(std::move(v));
  pivot_.push_back(int(pc));
  expr_.push_back(std::move(e));
  ++added_;
  return true;
}

}  // namespace linalg

}  // namespace symcrit
