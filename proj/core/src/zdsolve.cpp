#include "symcrit/zdsolve.hpp"

#include <algorithm>
#include <set>

#include "symcrit/error.hpp"

namespace symcrit {

namespace {

MPoly term_poly(const PolyRingPtr& r, const Monomial& m, fp_t c) {
  return MPoly(r, std::vector<Term>{Term{m, c}});
}

/// Solve a * X = B for several right-hand sides at once; nullopt when any
/// column is inconsistent.  Free variables are set to zero.
std::optional<linalg::Mat> solve_columns(const PrimeField& f, linalg::Mat a,
                                         const linalg::Mat& b) {
  const std::size_t rows = a.size();
  const std::size_t n = rows == 0 ? 0 : a[0].size();
  const std::size_t k = b.empty() ? 0 : b[0].size();
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t j = 0; j < k; ++j) a[r].push_back(b[r][j]);
  std::vector<int> pivots;
  linalg::rref(f, a, &pivots);
  for (int pc : pivots)
    if (std::size_t(pc) >= n) return std::nullopt;
  linalg::Mat x(n, std::vector<fp_t>(k, 0));
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t j = 0; j < k; ++j)
      x[std::size_t(pivots[r])][j] = a[r][n + j];
  return x;
}

std::vector<fp_t> random_form(Rng& rng, const PrimeField& f, int m) {
  std::vector<fp_t> mu(std::size_t(m), 0);
  for (auto& c : mu) c = fp_t(rng.below(f.p()));
  return mu;
}

}  // namespace

ZeroDimParam::ZeroDimParam(UniPoly q, std::vector<UniPoly> v,
                           std::vector<fp_t> mu)
    : q_(std::move(q)), v_(std::move(v)), mu_(std::move(mu)) {
  const PrimeField& f = q_.field();
  require(q_.deg() >= 0, ErrorKind::Domain, "zero modulus");
  require(q_.lc() == 1, ErrorKind::Domain, "modulus must be monic");
  require(v_.size() == mu_.size(), ErrorKind::Domain,
          "coordinate and form lengths differ");
  if (q_.deg() >= 1)
    require(gcd_monic(q_, q_.derivative()).deg() == 0, ErrorKind::Domain,
            "modulus must be squarefree");
  UniPoly acc = UniPoly::zero(f);
  for (std::size_t i = 0; i < v_.size(); ++i) {
    require(v_[i].deg() < std::max(q_.deg(), 0), ErrorKind::Domain,
            "coordinate polynomial as long as the modulus");
    acc = acc + v_[i].scaled(mu_[i]);
  }
  require(rem(acc - UniPoly::var(f), q_).is_zero(), ErrorKind::Domain,
          "the linear form does not restore the parameter");
}

ZeroDimParam ZeroDimParam::empty_set(PrimeField f, int m) {
  return ZeroDimParam(UniPoly::one(f),
                      std::vector<UniPoly>(std::size_t(m), UniPoly::zero(f)),
                      std::vector<fp_t>(std::size_t(m), 0));
}

MPoly normal_form(const MPoly& f, const std::vector<MPoly>& gb) {
  const PolyRingPtr& r = f.ring();
  const PrimeField& fld = r->field();
  std::vector<Term> tail;
  MPoly work = f;
  while (!work.is_zero()) {
    const Term& lead = work.lt();
    const MPoly* divisor = nullptr;
    for (const MPoly& g : gb)
      if (!g.is_zero() && g.lt().m.divides(lead.m)) {
        divisor = &g;
        break;
      }
    if (divisor) {
      const fp_t c = fld.mul(lead.c, fld.inv(divisor->lt().c));
      work = work - divisor->mul_term(lead.m / divisor->lt().m, c);
    } else {
      tail.push_back(lead);
      work = work - term_poly(r, lead.m, lead.c);
    }
  }
  return MPoly(r, std::move(tail));
}

std::vector<MPoly> groebner(const PolyRingPtr& ring, std::vector<MPoly> gens) {
  const PrimeField& f = ring->field();
  std::vector<MPoly> g;
  for (MPoly& p : gens) {
    if (p.is_zero()) continue;
    if (p.is_constant()) return {MPoly::constant(ring, 1)};
    g.push_back(p.scaled(f.inv(p.lt().c)));
  }
  if (g.empty()) return {};

  struct PairCmp {
    bool operator()(const std::tuple<Monomial, int, int>& a,
                    const std::tuple<Monomial, int, int>& b) const {
      int c = grevlex_cmp(std::get<0>(a), std::get<0>(b));
      if (c != 0) return c < 0;
      if (std::get<1>(a) != std::get<1>(b))
        return std::get<1>(a) < std::get<1>(b);
      return std::get<2>(a) < std::get<2>(b);
    }
  };
  std::set<std::tuple<Monomial, int, int>, PairCmp> queue;
  std::set<std::pair<int, int>> pending;

  auto push_pairs_for = [&](int t) {
    for (int i = 0; i < t; ++i) {
      if (g[std::size_t(i)].lt().m.coprime(g[std::size_t(t)].lt().m))
        continue;  // the S-pair reduces to zero
      Monomial l = Monomial::lcm(g[std::size_t(i)].lt().m,
                                 g[std::size_t(t)].lt().m);
      queue.insert({l, i, t});
      pending.insert({i, t});
    }
  };
  for (int t = 1; t < int(g.size()); ++t) push_pairs_for(t);

  while (!queue.empty()) {
    auto [l, i, j] = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({i, j});

    bool chained = false;
    for (int k = 0; k < int(g.size()) && !chained; ++k) {
      if (k == i || k == j) continue;
      if (!g[std::size_t(k)].lt().m.divides(l)) continue;
      if (!pending.count({std::min(i, k), std::max(i, k)}) &&
          !pending.count({std::min(j, k), std::max(j, k)}))
        chained = true;
    }
    if (chained) continue;

    const MPoly& gi = g[std::size_t(i)];
    const MPoly& gj = g[std::size_t(j)];
    MPoly s = gi.mul_term(l / gi.lt().m, 1) - gj.mul_term(l / gj.lt().m, 1);
    MPoly nf = normal_form(s, g);
    if (nf.is_zero()) continue;
    if (nf.is_constant()) return {MPoly::constant(ring, 1)};
    g.push_back(nf.scaled(f.inv(nf.lt().c)));
    push_pairs_for(int(g.size()) - 1);
  }

  // Minimalize, then tail-reduce into the canonical reduced basis.
  std::sort(g.begin(), g.end(), [](const MPoly& a, const MPoly& b) {
    return grevlex_cmp(a.lt().m, b.lt().m) < 0;
  });
  std::vector<MPoly> minimal;
  for (const MPoly& p : g) {
    bool covered = false;
    for (const MPoly& kept : minimal)
      if (kept.lt().m.divides(p.lt().m)) {
        covered = true;
        break;
      }
    if (!covered) minimal.push_back(p);
  }
  std::vector<MPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(normal_form(minimal[i], others));
  }
  return reduced;
}

std::optional<std::vector<Monomial>> staircase_basis(
    const PolyRingPtr& ring, const std::vector<MPoly>& gb) {
  for (const MPoly& p : gb)
    if (!p.is_zero() && p.is_constant()) return std::vector<Monomial>{};
  const int n = ring->nvars();
  std::vector<Monomial> lts;
  for (const MPoly& p : gb)
    if (!p.is_zero()) lts.push_back(p.lt().m);
  for (int i = 0; i < n; ++i) {
    bool capped = false;
    for (const Monomial& m : lts) {
      bool pure = m.e[std::size_t(i)] > 0;
      for (int t = 0; t < n && pure; ++t)
        if (t != i && m.e[std::size_t(t)] > 0) pure = false;
      if (pure) {
        capped = true;
        break;
      }
    }
    if (!capped) return std::nullopt;
  }

  auto reducible = [&](const Monomial& m) {
    for (const Monomial& l : lts)
      if (l.divides(m)) return true;
    return false;
  };
  std::set<std::array<std::uint16_t, kMaxVars>> seen;
  std::vector<Monomial> basis;
  std::vector<Monomial> frontier{Monomial::one()};
  seen.insert(Monomial::one().e);
  while (!frontier.empty()) {
    Monomial m = frontier.back();
    frontier.pop_back();
    basis.push_back(m);
    for (int i = 0; i < n; ++i) {
      Monomial next = m * Monomial::var(i);
      if (seen.count(next.e) || reducible(next)) continue;
      seen.insert(next.e);
      frontier.push_back(next);
    }
  }
  std::sort(basis.begin(), basis.end(), [](const Monomial& a, const Monomial& b) {
    return grevlex_cmp(a, b) < 0;
  });
  return basis;
}

QuotientAlgebra::QuotientAlgebra(PolyRingPtr ring, std::vector<MPoly> gb)
    : ring_(std::move(ring)), gb_(std::move(gb)) {
  auto basis = staircase_basis(ring_, gb_);
  require(basis.has_value(), ErrorKind::PositiveDimensional,
          "the system does not cut out finitely many points");
  basis_ = std::move(*basis);
  for (int i = 0; i < int(basis_.size()); ++i)
    index_[basis_[std::size_t(i)].e] = i;
  columns_.assign(std::size_t(ring_->nvars()), {});
  have_column_.assign(std::size_t(ring_->nvars()), {});
  for (int i = 0; i < ring_->nvars(); ++i) {
    columns_[std::size_t(i)].assign(basis_.size(), {});
    have_column_[std::size_t(i)].assign(basis_.size(), false);
  }
}

std::vector<fp_t> QuotientAlgebra::reduce(const MPoly& f) const {
  MPoly nf = normal_form(f, gb_);
  std::vector<fp_t> out(basis_.size(), 0);
  for (const Term& t : nf.terms()) {
    auto it = index_.find(t.m.e);
    require(it != index_.end(), ErrorKind::Internal,
            "normal form left the staircase");
    out[std::size_t(it->second)] = t.c;
  }
  return out;
}

std::vector<fp_t> QuotientAlgebra::one() const {
  std::vector<fp_t> out(basis_.size(), 0);
  if (!basis_.empty()) {
    auto it = index_.find(Monomial::one().e);
    require(it != index_.end(), ErrorKind::Internal, "missing unit monomial");
    out[std::size_t(it->second)] = 1;
  }
  return out;
}

const std::vector<fp_t>& QuotientAlgebra::column(int var,
                                                 int basis_index) const {
  auto& col = columns_[std::size_t(var)][std::size_t(basis_index)];
  if (have_column_[std::size_t(var)][std::size_t(basis_index)]) return col;
  Monomial m = basis_[std::size_t(basis_index)] * Monomial::var(var);
  auto it = index_.find(m.e);
  if (it != index_.end()) {
    col.assign(basis_.size(), 0);
    col[std::size_t(it->second)] = 1;
  } else {
    col = reduce(term_poly(ring_, m, 1));
  }
  have_column_[std::size_t(var)][std::size_t(basis_index)] = true;
  return col;
}

std::vector<fp_t> QuotientAlgebra::mul_by_var(
    int i, const std::vector<fp_t>& vec) const {
  const PrimeField& f = ring_->field();
  std::vector<fp_t> out(basis_.size(), 0);
  for (std::size_t j = 0; j < vec.size(); ++j) {
    if (vec[j] == 0) continue;
    const std::vector<fp_t>& col = column(i, int(j));
    for (std::size_t r = 0; r < out.size(); ++r)
      out[r] = f.add(out[r], f.mul(vec[j], col[r]));
  }
  return out;
}

std::vector<fp_t> QuotientAlgebra::apply_form(
    const std::vector<fp_t>& mu, const std::vector<fp_t>& vec) const {
  const PrimeField& f = ring_->field();
  std::vector<fp_t> out(basis_.size(), 0);
  for (int i = 0; i < ring_->nvars(); ++i) {
    if (mu[std::size_t(i)] == 0) continue;
    std::vector<fp_t> part = mul_by_var(i, vec);
    for (std::size_t r = 0; r < out.size(); ++r)
      out[r] = f.add(out[r], f.mul(mu[std::size_t(i)], part[r]));
  }
  return out;
}

UniPoly QuotientAlgebra::var_min_poly(int i) const {
  const PrimeField& f = ring_->field();
  linalg::IncrementalEchelon ech(f, basis_.size());
  std::vector<fp_t> w = one();
  for (std::size_t k = 0; k <= basis_.size(); ++k) {
    if (!ech.add(w)) {
      std::vector<fp_t> coeffs(ech.combo());
      coeffs.resize(k + 1, 0);
      for (std::size_t t = 0; t < k; ++t) coeffs[t] = f.neg(coeffs[t]);
      coeffs[k] = 1;
      return UniPoly(f, std::move(coeffs));
    }
    w = mul_by_var(i, w);
  }
  fail(ErrorKind::Internal, "no dependence within the quotient dimension");
}

std::vector<MPoly> radical_generators(const QuotientAlgebra& qa) {
  std::vector<MPoly> out = qa.gb();
  for (int i = 0; i < qa.ring()->nvars(); ++i) {
    UniPoly mi = qa.var_min_poly(i);
    UniPoly si = squarefree_part(mi);
    if (si.deg() == mi.deg()) continue;
    std::vector<Term> terms;
    for (int k = 0; k <= si.deg(); ++k)
      if (si.coeffs()[std::size_t(k)] != 0)
        terms.push_back(
            Term{Monomial::var(i, k), si.coeffs()[std::size_t(k)]});
    out.push_back(MPoly(qa.ring(), std::move(terms)));
  }
  return out;
}

ZeroDimParam rur_extract(const PolyRingPtr& ring,
                         const std::vector<MPoly>& gens, Rng& rng,
                         std::optional<std::vector<fp_t>> first_mu) {
  const PrimeField& f = ring->field();
  const int m = ring->nvars();
  std::vector<MPoly> gb = groebner(ring, gens);
  QuotientAlgebra qa(ring, gb);
  if (qa.dim() == 0) return ZeroDimParam::empty_set(f, m);

  std::optional<QuotientAlgebra> radical;
  {
    std::vector<MPoly> rad = radical_generators(qa);
    if (rad.size() != qa.gb().size())
      radical.emplace(ring, groebner(ring, std::move(rad)));
  }
  const QuotientAlgebra& use = radical ? *radical : qa;
  const std::size_t dim = std::size_t(use.dim());
  require(dim > 0, ErrorKind::Internal, "radical emptied the point set");

  for (int attempt = 0; attempt < 16; ++attempt) {
    std::vector<fp_t> mu = (attempt == 0 && first_mu)
                               ? *first_mu
                               : random_form(rng, f, m);
    require(int(mu.size()) == m, ErrorKind::Domain, "bad linear form length");

    // Operator of multiplication by the form, as a dense matrix.
    linalg::Mat op(dim, std::vector<fp_t>(dim, 0));
    for (std::size_t j = 0; j < dim; ++j) {
      std::vector<fp_t> unit(dim, 0);
      unit[j] = 1;
      std::vector<fp_t> col = use.apply_form(mu, unit);
      for (std::size_t r = 0; r < dim; ++r) op[r][j] = col[r];
    }
    auto apply_op = [&](const std::vector<fp_t>& v) {
      std::vector<fp_t> out(dim, 0);
      for (std::size_t r = 0; r < dim; ++r) {
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < dim; ++c) {
          acc += std::uint64_t(op[r][c]) * v[c];
          if ((c & 15) == 15) acc %= f.p();
        }
        out[r] = fp_t(acc % f.p());
      }
      return out;
    };

    linalg::IncrementalEchelon ech(f, dim);
    std::vector<std::vector<fp_t>> krylov;
    std::vector<fp_t> w = use.one();
    UniPoly q = UniPoly::zero(f);
    for (std::size_t k = 0; k <= dim; ++k) {
      if (!ech.add(w)) {
        std::vector<fp_t> coeffs(ech.combo());
        coeffs.resize(k + 1, 0);
        for (std::size_t t = 0; t < k; ++t) coeffs[t] = f.neg(coeffs[t]);
        coeffs[k] = 1;
        q = UniPoly(f, std::move(coeffs));
        break;
      }
      krylov.push_back(w);
      w = apply_op(w);
    }
    if (std::size_t(q.deg()) != dim) continue;  // form does not separate
    if (gcd_monic(q, q.derivative()).deg() != 0) continue;

    linalg::Mat k_mat(dim, std::vector<fp_t>(dim, 0));
    for (std::size_t c = 0; c < dim; ++c)
      for (std::size_t r = 0; r < dim; ++r) k_mat[r][c] = krylov[c][r];
    linalg::Mat rhs(dim, std::vector<fp_t>(std::size_t(m), 0));
    for (int i = 0; i < m; ++i) {
      std::vector<fp_t> xi = use.reduce(MPoly::var(ring, i));
      for (std::size_t r = 0; r < dim; ++r) rhs[r][std::size_t(i)] = xi[r];
    }
    auto sol = solve_columns(f, k_mat, rhs);
    require(sol.has_value(), ErrorKind::Internal,
            "full-rank parameter basis failed to solve");
    std::vector<UniPoly> v;
    v.reserve(std::size_t(m));
    for (int i = 0; i < m; ++i) {
      std::vector<fp_t> coeffs(dim);
      for (std::size_t r = 0; r < dim; ++r) coeffs[r] = (*sol)[r][std::size_t(i)];
      v.push_back(UniPoly(f, std::move(coeffs)));
    }

    ZeroDimParam out(q, std::move(v), std::move(mu));
    MonomialEvaluator ev(out.v(), out.q());
    for (const MPoly& gpoly : gens)
      require(ev.eval(gpoly).is_zero(), ErrorKind::Internal,
              "a generator does not vanish on the encoded points");
    return out;
  }
  fail(ErrorKind::Separation, "no separating linear form found");
}

ZeroDimParam union_params(const ZeroDimParam& a, const ZeroDimParam& b,
                          Rng& rng) {
  require(a.coords() == b.coords(), ErrorKind::Domain,
          "coordinate counts differ");
  const PrimeField& f = a.q().field();
  require(f.p() == b.q().field().p(), ErrorKind::Domain, "fields differ");
  if (a.empty()) return b;
  if (b.empty()) return a;
  const int m = a.coords();

  auto reencode = [&](const ZeroDimParam& s, const std::vector<fp_t>& mu)
      -> std::optional<std::pair<UniPoly, std::vector<UniPoly>>> {
    UniPoly w = UniPoly::zero(f);
    for (int i = 0; i < m; ++i)
      w = w + s.v()[std::size_t(i)].scaled(mu[std::size_t(i)]);
    w = rem(w, s.q());
    UniPoly qn = minimal_polynomial_mod(w, s.q());
    const int d = s.q().deg();
    if (qn.deg() != d) return std::nullopt;
    linalg::Mat k_mat(std::size_t(d), std::vector<fp_t>(std::size_t(d), 0));
    UniPoly pw = UniPoly::one(f);
    for (int c = 0; c < d; ++c) {
      for (int r = 0; r <= pw.deg(); ++r)
        k_mat[std::size_t(r)][std::size_t(c)] = pw.coeffs()[std::size_t(r)];
      pw = mulmod(pw, w, s.q());
    }
    linalg::Mat rhs(std::size_t(d), std::vector<fp_t>(std::size_t(m), 0));
    for (int i = 0; i < m; ++i)
      for (int r = 0; r <= s.v()[std::size_t(i)].deg(); ++r)
        rhs[std::size_t(r)][std::size_t(i)] =
            s.v()[std::size_t(i)].coeffs()[std::size_t(r)];
    auto sol = solve_columns(f, k_mat, rhs);
    if (!sol) return std::nullopt;
    std::vector<UniPoly> vn;
    for (int i = 0; i < m; ++i) {
      std::vector<fp_t> coeffs(std::size_t(d), 0);
      for (int r = 0; r < d; ++r)
        coeffs[std::size_t(r)] = (*sol)[std::size_t(r)][std::size_t(i)];
      vn.push_back(UniPoly(f, std::move(coeffs)));
    }
    return std::make_pair(qn, vn);
  };

  for (int attempt = 0; attempt < 16; ++attempt) {
    std::vector<fp_t> mu = random_form(rng, f, m);
    auto ra = reencode(a, mu);
    if (!ra) continue;
    auto rb = reencode(b, mu);
    if (!rb) continue;

    UniPoly h = gcd_monic(ra->first, rb->first);
    for (int i = 0; i < m && h.deg() > 0; ++i)
      h = gcd_monic(h, rem(ra->second[std::size_t(i)] -
                               rb->second[std::size_t(i)],
                           h));
    UniPoly qb_red = exact_quo(rb->first, h);
    if (qb_red.deg() == 0) return ZeroDimParam(ra->first, ra->second, mu);
    if (gcd_monic(ra->first, qb_red).deg() != 0) continue;

    Egcd e = egcd(ra->first, qb_red);
    require(e.g.deg() == 0, ErrorKind::Internal, "coprime parts share roots");
    UniPoly qq = ra->first * qb_red;
    std::vector<UniPoly> v;
    for (int i = 0; i < m; ++i) {
      UniPoly val = ra->second[std::size_t(i)] * e.v * qb_red +
                    rb->second[std::size_t(i)] * e.u * ra->first;
      v.push_back(rem(val, qq));
    }
    return ZeroDimParam(qq, std::move(v), std::move(mu));
  }
  fail(ErrorKind::Separation, "no linear form separated the union");
}

ImageResult image_param(const ZeroDimParam& a, const std::vector<MPoly>& g,
                        Rng& rng) {
  require(!g.empty(), ErrorKind::Domain, "no image coordinates");
  const PrimeField& f = a.q().field();
  for (const MPoly& gi : g)
    require(gi.ring()->nvars() == a.coords(), ErrorKind::Domain,
            "image coordinate arity mismatch");
  if (a.empty()) return {ZeroDimParam::empty_set(f, int(g.size())), 0};

  MonomialEvaluator ev(a.v(), a.q());
  std::vector<UniPoly> gv;
  gv.reserve(g.size());
  for (const MPoly& gi : g) gv.push_back(ev.eval(gi));
  return image_from_values(a.q(), gv, rng);
}

ImageResult image_from_values(const UniPoly& q,
                              const std::vector<UniPoly>& values, Rng& rng) {
  require(!values.empty(), ErrorKind::Domain, "no image coordinates");
  const PrimeField& f = q.field();
  const int k = int(values.size());
  if (q.deg() == 0) return {ZeroDimParam::empty_set(f, k), 0};
  const int d = q.deg();

  std::vector<UniPoly> gv;
  gv.reserve(values.size());
  for (const UniPoly& u : values) gv.push_back(rem(u, q));

  for (int attempt = 0; attempt < 16; ++attempt) {
    std::vector<fp_t> nu = random_form(rng, f, k);
    UniPoly w = UniPoly::zero(f);
    for (int j = 0; j < k; ++j)
      w = w + gv[std::size_t(j)].scaled(nu[std::size_t(j)]);
    w = rem(w, q);
    UniPoly qi = minimal_polynomial_mod(w, q);
    const int delta = qi.deg();

    linalg::Mat k_mat(std::size_t(d), std::vector<fp_t>(std::size_t(delta), 0));
    UniPoly pw = UniPoly::one(f);
    for (int c = 0; c < delta; ++c) {
      for (int r = 0; r <= pw.deg(); ++r)
        k_mat[std::size_t(r)][std::size_t(c)] = pw.coeffs()[std::size_t(r)];
      pw = mulmod(pw, w, q);
    }
    linalg::Mat rhs(std::size_t(d), std::vector<fp_t>(std::size_t(k), 0));
    for (int j = 0; j < k; ++j)
      for (int r = 0; r <= gv[std::size_t(j)].deg(); ++r)
        rhs[std::size_t(r)][std::size_t(j)] =
            gv[std::size_t(j)].coeffs()[std::size_t(r)];
    auto sol = solve_columns(f, k_mat, rhs);
    if (!sol) continue;  // the form does not separate the image fibers

    std::vector<UniPoly> vi;
    for (int j = 0; j < k; ++j) {
      std::vector<fp_t> coeffs(std::size_t(delta), 0);
      for (int r = 0; r < delta; ++r)
        coeffs[std::size_t(r)] = (*sol)[std::size_t(r)][std::size_t(j)];
      vi.push_back(UniPoly(f, std::move(coeffs)));
    }
    return {ZeroDimParam(qi, std::move(vi), std::move(nu)), d - delta};
  }
  fail(ErrorKind::Separation, "no linear form separated the image");
}

ZeroDimParam isolated_points(const PreparedSystem& sys, Rng& rng,
                             std::optional<std::vector<fp_t>> first_mu) {
  require(!sys.equations.empty(), ErrorKind::PositiveDimensional,
          "empty system has no isolated points");
  return rur_extract(sys.br.ering(), sys.equations, rng, std::move(first_mu));
}

MonomialEvaluator::MonomialEvaluator(std::vector<UniPoly> vals, UniPoly q)
    : vals_(std::move(vals)), q_(std::move(q)) {
  memo_.emplace(Monomial::one().e, UniPoly::one(q_.field()));
}

const UniPoly& MonomialEvaluator::value_of(const Monomial& m) {
  auto it = memo_.find(m.e);
  if (it != memo_.end()) return it->second;
  int var = 0;
  while (m.e[std::size_t(var)] == 0) ++var;
  UniPoly val =
      mulmod(value_of(m / Monomial::var(var)), vals_[std::size_t(var)], q_);
  return memo_.emplace(m.e, std::move(val)).first->second;
}

UniPoly MonomialEvaluator::eval(const MPoly& g) {
  UniPoly acc = UniPoly::zero(q_.field());
  for (const Term& t : g.terms()) acc = acc + value_of(t.m).scaled(t.c);
  return rem(acc, q_);
}

}  // namespace symcrit
