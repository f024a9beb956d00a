#include "symcrit/mpoly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace symcrit {

PolyRing::PolyRing(PrimeField f, std::vector<std::string> names,
                   std::vector<int> weights)
    : f_(f), names_(std::move(names)), weights_(std::move(weights)) {}

PolyRingPtr PolyRing::make(PrimeField f, std::vector<std::string> names,
                           std::vector<int> weights) {
  require(!names.empty() && names.size() <= std::size_t(kMaxVars),
          ErrorKind::Domain,
          "polynomial rings support 1 to " + std::to_string(kMaxVars) +
              " variables");
  if (weights.empty()) weights.assign(names.size(), 1);
  require(weights.size() == names.size(), ErrorKind::Domain,
          "one weight per variable required");
  for (int w : weights)
    require(w >= 1, ErrorKind::Domain, "variable weights must be positive");
  return PolyRingPtr(new PolyRing(f, std::move(names), std::move(weights)));
}

bool PolyRing::same_as(const PolyRing& o) const {
  return f_ == o.f_ && names_ == o.names_ && weights_ == o.weights_;
}

Monomial Monomial::var(int i, int exp) {
  require(i >= 0 && i < kMaxVars, ErrorKind::Domain, "variable out of range");
  require(exp >= 0 && exp < 65536, ErrorKind::Domain, "exponent out of range");
  Monomial m;
  m.e[std::size_t(i)] = std::uint16_t(exp);
  m.deg = std::uint32_t(exp);
  return m;
}

Monomial Monomial::from_exps(const std::vector<int>& exps) {
  require(exps.size() <= std::size_t(kMaxVars), ErrorKind::Domain,
          "too many exponents");
  Monomial m;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    require(exps[i] >= 0 && exps[i] < 65536, ErrorKind::Domain,
            "exponent out of range");
    m.e[i] = std::uint16_t(exps[i]);
    m.deg += std::uint32_t(exps[i]);
  }
  return m;
}

int Monomial::weighted_degree(const PolyRing& r) const {
  int d = 0;
  for (int i = 0; i < r.nvars(); ++i) d += r.weight(i) * int(e[std::size_t(i)]);
  return d;
}

bool Monomial::divides(const Monomial& o) const {
  if (deg > o.deg) return false;
  for (std::size_t i = 0; i < std::size_t(kMaxVars); ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  for (std::size_t i = 0; i < std::size_t(kMaxVars); ++i) {
    std::uint32_t s = std::uint32_t(e[i]) + o.e[i];
    require(s < 65536, ErrorKind::Domain, "monomial exponent overflow");
    m.e[i] = std::uint16_t(s);
  }
  m.deg = deg + o.deg;
  return m;
}

Monomial Monomial::operator/(const Monomial& o) const {
  require(o.divides(*this), ErrorKind::Internal, "inexact monomial division");
  Monomial m;
  for (std::size_t i = 0; i < std::size_t(kMaxVars); ++i)
    m.e[i] = std::uint16_t(e[i] - o.e[i]);
  m.deg = deg - o.deg;
  return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.deg = 0;
  for (std::size_t i = 0; i < std::size_t(kMaxVars); ++i) {
    m.e[i] = std::max(a.e[i], b.e[i]);
    m.deg += m.e[i];
  }
  return m;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < std::size_t(kMaxVars); ++i)
    if (e[i] != 0 && o.e[i] != 0) return false;
  return true;
}

int grevlex_cmp(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
  // Equal degree: the larger monomial has the smaller trailing difference.
  for (std::size_t i = std::size_t(kMaxVars); i-- > 0;) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  }
  return 0;
}

namespace {
bool term_before(const Term& x, const Term& y) {
  return grevlex_cmp(x.m, y.m) > 0;
}
}  // namespace

MPoly::MPoly(PolyRingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), t_(std::move(terms)) {
  normalize();
}

void MPoly::normalize() {
  const PrimeField& f = ring_->field();
  std::sort(t_.begin(), t_.end(), term_before);
  std::vector<Term> out;
  out.reserve(t_.size());
  for (auto& t : t_) {
    fp_t c = t.c % f.p();
    if (!out.empty() && out.back().m == t.m)
      out.back().c = f.add(out.back().c, c);
    else
      out.push_back(Term{t.m, c});
    if (!out.empty() && out.back().c == 0) out.pop_back();
  }
  t_ = std::move(out);
}

MPoly MPoly::constant(const PolyRingPtr& r, fp_t c) {
  MPoly p(r);
  if (c % r->field().p() != 0)
    p.t_.push_back(Term{Monomial::one(), c % r->field().p()});
  return p;
}

MPoly MPoly::var(const PolyRingPtr& r, int i, int exp) {
  require(i >= 0 && i < r->nvars(), ErrorKind::Domain,
          "variable index out of range");
  if (exp == 0) return constant(r, 1);
  MPoly p(r);
  p.t_.push_back(Term{Monomial::var(i, exp), 1});
  return p;
}

MPoly MPoly::from_list(
    const PolyRingPtr& r,
    const std::vector<std::pair<long long, std::vector<int>>>& terms) {
  std::vector<Term> ts;
  for (const auto& [c, exps] : terms) {
    require(exps.size() == std::size_t(r->nvars()), ErrorKind::Parse,
            "term exponent list has wrong length");
    ts.push_back(Term{Monomial::from_exps(exps), r->field().from_int(c)});
  }
  return MPoly(r, std::move(ts));
}

fp_t MPoly::constant_value() const {
  require(is_constant(), ErrorKind::Domain, "not a constant polynomial");
  return t_.empty() ? 0 : t_[0].c;
}

const Term& MPoly::lt() const {
  require(!t_.empty(), ErrorKind::Domain, "leading term of zero");
  return t_[0];
}

int MPoly::degree() const {
  int d = -1;
  for (const auto& t : t_) d = std::max(d, int(t.m.deg));
  return d;
}

int MPoly::weighted_degree() const {
  int d = -1;
  for (const auto& t : t_) d = std::max(d, t.m.weighted_degree(*ring_));
  return d;
}

MPoly MPoly::operator+(const MPoly& o) const {
  require(ring_->same_as(*o.ring_), ErrorKind::Domain, "ring mismatch in +");
  const PrimeField& f = ring_->field();
  MPoly r(ring_);
  r.t_.reserve(t_.size() + o.t_.size());
  std::size_t i = 0, j = 0;
  while (i < t_.size() && j < o.t_.size()) {
    int c = grevlex_cmp(t_[i].m, o.t_[j].m);
    if (c > 0)
      r.t_.push_back(t_[i++]);
    else if (c < 0)
      r.t_.push_back(o.t_[j++]);
    else {
      fp_t s = f.add(t_[i].c, o.t_[j].c);
      if (s != 0) r.t_.push_back(Term{t_[i].m, s});
      ++i;
      ++j;
    }
  }
  for (; i < t_.size(); ++i) r.t_.push_back(t_[i]);
  for (; j < o.t_.size(); ++j) r.t_.push_back(o.t_[j]);
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r(ring_);
  r.t_.reserve(t_.size());
  for (const auto& t : t_)
    r.t_.push_back(Term{t.m, ring_->field().neg(t.c)});
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
  require(ring_->same_as(*o.ring_), ErrorKind::Domain, "ring mismatch in *");
  if (is_zero() || o.is_zero()) return zero(ring_);
  const PrimeField& f = ring_->field();
  std::vector<Term> prod;
  prod.reserve(t_.size() * o.t_.size());
  for (const auto& a : t_)
    for (const auto& b : o.t_)
      prod.push_back(Term{a.m * b.m, f.mul(a.c, b.c)});
  return MPoly(ring_, std::move(prod));
}

bool MPoly::operator==(const MPoly& o) const {
  if (!ring_->same_as(*o.ring_) || t_.size() != o.t_.size()) return false;
  for (std::size_t i = 0; i < t_.size(); ++i)
    if (!(t_[i].m == o.t_[i].m) || t_[i].c != o.t_[i].c) return false;
  return true;
}

MPoly MPoly::scaled(fp_t c) const {
  const PrimeField& f = ring_->field();
  c %= f.p();
  if (c == 0) return zero(ring_);
  MPoly r(ring_);
  r.t_.reserve(t_.size());
  for (const auto& t : t_) r.t_.push_back(Term{t.m, f.mul(t.c, c)});
  return r;
}

MPoly MPoly::mul_term(const Monomial& m, fp_t c) const {
  const PrimeField& f = ring_->field();
  c %= f.p();
  if (c == 0) return zero(ring_);
  MPoly r(ring_);
  r.t_.reserve(t_.size());
  for (const auto& t : t_) r.t_.push_back(Term{t.m * m, f.mul(t.c, c)});
  return r;
}

MPoly MPoly::derivative(int var) const {
  require(var >= 0 && var < ring_->nvars(), ErrorKind::Domain,
          "variable index out of range");
  const PrimeField& f = ring_->field();
  MPoly r(ring_);
  for (const auto& t : t_) {
    std::uint16_t e = t.m.e[std::size_t(var)];
    if (e == 0) continue;
    fp_t c = f.mul(t.c, fp_t(e % f.p()));
    if (c == 0) continue;
    Monomial m = t.m;
    m.e[std::size_t(var)] = std::uint16_t(e - 1);
    m.deg -= 1;
    r.t_.push_back(Term{m, c});
  }
  // Dropping exponents preserves grevlex order within a fixed variable
  // decrement only when degrees stay distinct; re-sort to be safe.
  std::sort(r.t_.begin(), r.t_.end(), term_before);
  return r;
}

fp_t MPoly::eval(const std::vector<fp_t>& x) const {
  require(x.size() == std::size_t(ring_->nvars()), ErrorKind::Domain,
          "evaluation point has wrong dimension");
  const PrimeField& f = ring_->field();
  fp_t acc = 0;
  for (const auto& t : t_) {
    fp_t v = t.c;
    for (int i = 0; i < ring_->nvars(); ++i) {
      std::uint16_t e = t.m.e[std::size_t(i)];
      if (e) v = f.mul(v, f.pow(x[std::size_t(i)], e));
    }
    acc = f.add(acc, v);
  }
  return acc;
}

MPoly MPoly::partial_eval(int var, fp_t value) const {
  require(var >= 0 && var < ring_->nvars(), ErrorKind::Domain,
          "variable index out of range");
  const PrimeField& f = ring_->field();
  std::vector<Term> ts;
  ts.reserve(t_.size());
  for (const auto& t : t_) {
    std::uint16_t e = t.m.e[std::size_t(var)];
    Term nt = t;
    if (e) {
      nt.c = f.mul(nt.c, f.pow(value, e));
      nt.m.e[std::size_t(var)] = 0;
      nt.m.deg -= e;
    }
    ts.push_back(nt);
  }
  return MPoly(ring_, std::move(ts));
}

MPoly MPoly::compose(const PolyRingPtr& target,
                     const std::vector<MPoly>& args) const {
  require(args.size() == std::size_t(ring_->nvars()), ErrorKind::Domain,
          "compose needs one argument per variable");
  // Cache argument powers.
  std::vector<std::vector<MPoly>> pows(args.size());
  for (std::size_t i = 0; i < args.size(); ++i)
    pows[i].push_back(MPoly::constant(target, 1));
  MPoly acc = MPoly::zero(target);
  for (const auto& t : t_) {
    MPoly term = MPoly::constant(target, t.c);
    for (std::size_t i = 0; i < args.size(); ++i) {
      std::uint16_t e = t.m.e[i];
      while (pows[i].size() <= e)
        pows[i].push_back(pows[i].back() * args[i]);
      if (e) term = term * pows[i][e];
    }
    acc = acc + term;
  }
  return acc;
}

MPoly MPoly::apply_permutation(const std::vector<int>& perm) const {
  require(perm.size() == std::size_t(ring_->nvars()), ErrorKind::Domain,
          "permutation has wrong length");
  std::vector<Term> ts;
  ts.reserve(t_.size());
  for (const auto& t : t_) {
    Monomial m;
    m.deg = t.m.deg;
    for (int i = 0; i < ring_->nvars(); ++i)
      m.e[std::size_t(perm[std::size_t(i)])] = t.m.e[std::size_t(i)];
    ts.push_back(Term{m, t.c});
  }
  return MPoly(ring_, std::move(ts));
}

std::string MPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : t_) {
    if (!first) os << " + ";
    first = false;
    bool printed = false;
    if (t.c != 1 || t.m.is_one()) {
      os << t.c;
      printed = true;
    }
    for (int i = 0; i < ring_->nvars(); ++i) {
      std::uint16_t e = t.m.e[std::size_t(i)];
      if (!e) continue;
      if (printed) os << "*";
      printed = true;
      os << ring_->name(i);
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

MPoly exact_divide_linear(const MPoly& f, int i, int j) {
  const PolyRingPtr& r = f.ring();
  require(i >= 0 && i < r->nvars() && j >= 0 && j < r->nvars() && i != j,
          ErrorKind::Domain, "exact_divide_linear needs two distinct vars");
  if (f.is_zero()) return f;
  // View f as a polynomial in v_i; synthetic division by (v_i - v_j).
  std::map<int, std::vector<Term>> slices;
  for (const auto& t : f.terms()) {
    Term s = t;
    int e = s.m.e[std::size_t(i)];
    s.m.e[std::size_t(i)] = 0;
    s.m.deg -= std::uint32_t(e);
    slices[e].push_back(s);
  }
  int maxdeg = slices.rbegin()->first;
  MPoly vj = MPoly::var(r, j);
  MPoly carry = MPoly::zero(r);  // b_k during descent
  MPoly quotient = MPoly::zero(r);
  for (int k = maxdeg; k >= 1; --k) {
    MPoly ck(r, slices.count(k) ? slices[k] : std::vector<Term>{});
    MPoly bk = ck + carry * vj;  // actually b_{k-1} = c_k + v_j * b_k
    quotient = quotient + bk.mul_term(Monomial::var(i, k - 1), 1);
    carry = bk;
  }
  MPoly c0(r, slices.count(0) ? slices[0] : std::vector<Term>{});
  MPoly remainder = c0 + carry * vj;
  require(remainder.is_zero(), ErrorKind::Domain,
          "polynomial not divisible by the variable difference; remainder " +
              remainder.str());
  return quotient;
}

std::vector<Monomial> monomials_up_to_weighted_degree(const PolyRing& r,
                                                      int d) {
  std::vector<Monomial> out;
  std::vector<int> exps(std::size_t(r.nvars()), 0);
  std::function<void(int, int)> rec = [&](int var, int rest) {
    if (var == r.nvars()) {
      out.push_back(Monomial::from_exps(exps));
      return;
    }
    for (int e = 0; e * r.weight(var) <= rest; ++e) {
      exps[std::size_t(var)] = e;
      rec(var + 1, rest - e * r.weight(var));
    }
    exps[std::size_t(var)] = 0;
  };
  rec(0, d);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    int wa = a.weighted_degree(r), wb = b.weighted_degree(r);
    if (wa != wb) return wa < wb;
    return grevlex_cmp(a, b) < 0;
  });
  return out;
}

PolyMatrix::PolyMatrix(PolyRingPtr ring, int rows, int cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
  require(rows >= 0 && cols >= 0, ErrorKind::Domain, "negative matrix shape");
  a_.assign(std::size_t(rows) * std::size_t(cols), MPoly::zero(ring_));
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  require(cols_ == o.rows_, ErrorKind::Domain, "matrix shape mismatch");
  PolyMatrix r(ring_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < o.cols_; ++j) {
      MPoly s = MPoly::zero(ring_);
      for (int k = 0; k < cols_; ++k) s = s + at(i, k) * o.at(k, j);
      r.at(i, j) = std::move(s);
    }
  return r;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t k = 0; k < a_.size(); ++k)
    if (a_[k] != o.a_[k]) return false;
  return true;
}

MPoly PolyMatrix::determinant() const {
  require(rows_ == cols_, ErrorKind::Domain, "determinant of non-square");
  if (rows_ == 0) return MPoly::constant(ring_, 1);
  if (rows_ == 1) return at(0, 0);
  MPoly acc = MPoly::zero(ring_);
  std::vector<int> sub_rows, sub_cols;
  for (int i = 1; i < rows_; ++i) sub_rows.push_back(i);
  for (int j = 0; j < cols_; ++j) {
    if (at(0, j).is_zero()) continue;
    sub_cols.clear();
    for (int c = 0; c < cols_; ++c)
      if (c != j) sub_cols.push_back(c);
    MPoly cof = submatrix(sub_rows, sub_cols).determinant();
    MPoly piece = at(0, j) * cof;
    acc = (j % 2 == 0) ? acc + piece : acc - piece;
  }
  return acc;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<int>& rows,
                                 const std::vector<int>& cols) const {
  PolyMatrix r(ring_, int(rows.size()), int(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      r.at(int(i), int(j)) = at(rows[i], cols[j]);
  return r;
}

namespace {
// Lexicographic k-subsets of {0..n-1}.
std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k > n || k < 0) return out;
  std::vector<int> cur(std::size_t(k), 0);
  for (int i = 0; i < k; ++i) cur[std::size_t(i)] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[std::size_t(i)] == n - k + i) --i;
    if (i < 0) break;
    ++cur[std::size_t(i)];
    for (int j = i + 1; j < k; ++j) cur[std::size_t(j)] = cur[std::size_t(j - 1)] + 1;
  }
  return out;
}
}  // namespace

std::vector<MPoly> PolyMatrix::minors(int k) const {
  require(k >= 1, ErrorKind::Domain, "minor size must be positive");
  std::vector<MPoly> out;
  for (const auto& rs : subsets(rows_, k))
    for (const auto& cs : subsets(cols_, k))
      out.push_back(submatrix(rs, cs).determinant());
  return out;
}

linalg::Mat PolyMatrix::eval(const std::vector<fp_t>& x) const {
  linalg::Mat m(std::size_t(rows_), std::vector<fp_t>(std::size_t(cols_), 0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      m[std::size_t(i)][std::size_t(j)] = at(i, j).eval(x);
  return m;
}

}  // namespace symcrit
