#include "symcrit/orbit.hpp"

#include <algorithm>
#include <map>

#include "symcrit/error.hpp"

namespace symcrit {

namespace {

// Arithmetic in (K[y]/q)[T] with dynamic evaluation: hitting a zero divisor
// aborts the computation by carrying the discovered factorization upward.
struct SplitFound {
  SplitEvent ev;
};

QuotientElement invert_or_split(const QuotientElement& a) {
  SplitOr<QuotientElement> r = quotient_invert(a);
  if (std::holds_alternative<SplitEvent>(r))
    throw SplitFound{std::get<SplitEvent>(r)};
  return std::get<QuotientElement>(r);
}

// Coefficients low-first, no trailing zeros.
using QPoly = std::vector<QuotientElement>;

void qtrim(QPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int qdeg(const QPoly& a) { return int(a.size()) - 1; }

QPoly qsub(const QPoly& a, const QPoly& b, const QuotientRingPtr& ring) {
  QPoly out = a;
  out.resize(std::max(a.size(), b.size()), QuotientElement::zero(ring));
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = out[i] - b[i];
  qtrim(out);
  return out;
}

QPoly qmul(const QPoly& a, const QPoly& b, const QuotientRingPtr& ring) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, QuotientElement::zero(ring));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = out[i + j] + a[i] * b[j];
  qtrim(out);
  return out;
}

QPoly qscale(const QPoly& a, const QuotientElement& c) {
  QPoly out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(x * c);
  qtrim(out);
  return out;
}

QPoly qderivative(const QPoly& a, const QuotientRingPtr& ring) {
  if (a.size() <= 1) return {};
  QPoly out;
  out.reserve(a.size() - 1);
  const PrimeField& f = ring->field();
  for (std::size_t k = 1; k < a.size(); ++k)
    out.push_back(a[k] * QuotientElement::constant(
                             ring, fp_t(std::uint64_t(k) % f.p())));
  qtrim(out);
  return out;
}

QPoly qrem(QPoly a, const QPoly& b, const QuotientRingPtr& ring) {
  require(!b.empty(), ErrorKind::Domain, "division by zero");
  QuotientElement lead_inv = invert_or_split(b.back());
  while (qdeg(a) >= qdeg(b)) {
    QuotientElement c = a.back() * lead_inv;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = a[shift + i] - b[i] * c;
    require(a.back().is_zero(), ErrorKind::Internal,
            "leading term survived a division step");
    a.pop_back();
    qtrim(a);
  }
  return a;
}

QPoly qquo_exact(QPoly a, const QPoly& b, const QuotientRingPtr& ring) {
  require(!b.empty(), ErrorKind::Domain, "division by zero");
  QuotientElement lead_inv = invert_or_split(b.back());
  QPoly quo(a.size() >= b.size() ? a.size() - b.size() + 1 : 0,
            QuotientElement::zero(ring));
  while (qdeg(a) >= qdeg(b)) {
    QuotientElement c = a.back() * lead_inv;
    const std::size_t shift = a.size() - b.size();
    quo[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = a[shift + i] - b[i] * c;
    require(a.back().is_zero(), ErrorKind::Internal,
            "leading term survived a division step");
    a.pop_back();
    qtrim(a);
  }
  require(a.empty(), ErrorKind::Internal, "division was not exact");
  qtrim(quo);
  return quo;
}

QPoly qmonic(const QPoly& a) {
  require(!a.empty(), ErrorKind::Domain, "normalizing zero");
  return qscale(a, invert_or_split(a.back()));
}

QPoly qgcd_monic(QPoly a, QPoly b, const QuotientRingPtr& ring) {
  qtrim(a);
  qtrim(b);
  while (!b.empty()) {
    QPoly r = qrem(a, b, ring);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  return qmonic(a);
}

/// Yun's squarefree factorization in (K[y]/q)[T]; same shape as the plain
/// field version.  Requires p > deg.
std::vector<std::pair<QPoly, int>> qsquarefree_factorization(
    const QPoly& input, const QuotientRingPtr& ring) {
  const PrimeField& f = ring->field();
  require(!input.empty(), ErrorKind::Domain, "factoring zero");
  require(f.p() > std::uint64_t(qdeg(input)), ErrorKind::Characteristic,
          "characteristic too small for the squarefree split");
  std::vector<std::pair<QPoly, int>> out;
  QPoly a = qmonic(input);
  if (qdeg(a) == 0) return out;
  QPoly da = qderivative(a, ring);
  QPoly u = qgcd_monic(a, da, ring);
  QPoly v = qquo_exact(a, u, ring);
  QPoly w = qquo_exact(da, u, ring);
  for (int i = 1; qdeg(v) > 0; ++i) {
    QPoly dv = qderivative(v, ring);
    QPoly h = qgcd_monic(v, qsub(w, dv, ring), ring);
    if (qdeg(h) > 0) out.push_back({h, i});
    QPoly w_next = qquo_exact(qsub(w, dv, ring), h, ring);
    v = qquo_exact(v, h, ring);
    w = std::move(w_next);
  }
  return out;
}

QPoly block_poly(const QuotientRingPtr& ring, const std::vector<UniPoly>& eps,
                 int offset, int mult) {
  // T^mult - eps_1 T^{mult-1} + .. + (-1)^mult eps_mult, low-first.
  const PrimeField& f = ring->field();
  QPoly p(std::size_t(mult) + 1, QuotientElement::zero(ring));
  p[std::size_t(mult)] = QuotientElement::one(ring);
  for (int j = 1; j <= mult; ++j) {
    QuotientElement c(ring, eps[std::size_t(offset + j - 1)]);
    if (j % 2 == 1) c = -c;
    p[std::size_t(mult - j)] = c;
  }
  return p;
}

}  // namespace

SplitOr<FiberType> type_of_fiber(const Partition& lambda,
                                 const QuotientRingPtr& ring,
                                 const std::vector<UniPoly>& eps) {
  require(int(eps.size()) == lambda.length(), ErrorKind::Domain,
          "value count does not match the partition length");
  try {
    const auto& tau = lambda.tau();
    QPoly prod{QuotientElement::one(ring)};
    for (int k = 0; k < lambda.nblocks(); ++k) {
      QPoly pk = block_poly(ring, eps, tau[std::size_t(k)], lambda.mult(k));
      for (int rep = 0; rep < lambda.part(k); ++rep)
        prod = qmul(prod, pk, ring);
    }
    require(qdeg(prod) == lambda.n(), ErrorKind::Internal,
            "type polynomial has the wrong degree");

    auto factors = qsquarefree_factorization(prod, ring);
    std::vector<int> parts;
    FiberType out;
    for (const auto& [qf, m] : factors)
      for (int c = 0; c < qdeg(qf); ++c) parts.push_back(m);
    out.type = Partition::from_parts(parts);
    for (const auto& [qf, m] : factors) {
      const int k = qdeg(qf);
      for (int j = 1; j <= k; ++j) {
        QuotientElement c = qf[std::size_t(k - j)];
        if (j % 2 == 1) c = -c;
        out.coords.push_back(c.value());
      }
    }
    require(out.type.n() == lambda.n(), ErrorKind::Internal,
            "coincidence type does not partition n");
    return out;
  } catch (const SplitFound& s) {
    return s.ev;
  }
}

FiberTypeField type_of_fiber(const Partition& lambda, PrimeField f,
                             const std::vector<fp_t>& eps) {
  QuotientRingPtr ring = QuotientRing::make(UniPoly::var(f));
  std::vector<UniPoly> lifted;
  lifted.reserve(eps.size());
  for (fp_t c : eps) lifted.push_back(UniPoly::constant(f, c));
  SplitOr<FiberType> r = type_of_fiber(lambda, ring, lifted);
  require(std::holds_alternative<FiberType>(r), ErrorKind::Internal,
          "a linear modulus cannot factor");
  FiberType& ft = std::get<FiberType>(r);
  FiberTypeField out;
  out.type = std::move(ft.type);
  for (const UniPoly& u : ft.coords)
    out.coords.push_back(u.deg() < 0 ? 0 : u.coeffs()[0]);
  return out;
}

DecomposeResult decompose(const BlockRing& br, const ZeroDimParam& sol,
                          Rng& rng) {
  DecomposeResult out;
  if (sol.empty()) return out;
  require(sol.coords() == br.length(), ErrorKind::Domain,
          "solution coordinates do not match the partition");

  std::vector<std::pair<UniPoly, std::vector<UniPoly>>> work;
  work.push_back({sol.q(), sol.v()});
  std::map<Partition, ZeroDimParam> grouped;

  while (!work.empty()) {
    auto [q, v] = std::move(work.back());
    work.pop_back();
    QuotientRingPtr ring = QuotientRing::make(q);
    SplitOr<FiberType> r = type_of_fiber(br.lambda(), ring, v);
    if (std::holds_alternative<SplitEvent>(r)) {
      const SplitEvent& ev = std::get<SplitEvent>(r);
      for (const UniPoly& factor : {ev.left, ev.right}) {
        std::vector<UniPoly> vv;
        vv.reserve(v.size());
        for (const UniPoly& vi : v) vv.push_back(rem(vi, factor));
        work.push_back({factor, std::move(vv)});
      }
      continue;
    }
    FiberType& ft = std::get<FiberType>(r);
    ImageResult img = image_from_values(q, ft.coords, rng);
    auto it = grouped.find(ft.type);
    if (it == grouped.end())
      grouped.emplace(std::move(ft.type), std::move(img.param));
    else
      it->second = union_params(it->second, img.param, rng);
  }

  int total = 0;
  for (auto& [type, param] : grouped) {
    total += param.degree();
    out.parts.push_back(OrbitEntry{type, std::move(param)});
  }
  out.collapsed = sol.degree() - total;
  require(out.collapsed >= 0, ErrorKind::Internal,
          "sorting by type created points");
  return out;
}

OrbitPoints expand_orbit(const Partition& type, const ZeroDimParam& param,
                         PrimeField f) {
  OrbitPoints out;
  if (param.empty()) return out;
  require(param.coords() == type.length(), ErrorKind::Domain,
          "parameter coordinates do not match the type");
  const auto& tau = type.tau();

  for (fp_t a : rational_roots(param.q())) {
    std::vector<fp_t> values;  // the distinct block values, flat
    bool rational = true;
    for (int k = 0; k < type.nblocks() && rational; ++k) {
      const int mult = type.mult(k);
      std::vector<fp_t> coeffs(std::size_t(mult) + 1, 0);
      coeffs[std::size_t(mult)] = 1;
      for (int j = 1; j <= mult; ++j) {
        fp_t c = param.v()[std::size_t(tau[std::size_t(k)] + j - 1)].eval(a);
        coeffs[std::size_t(mult - j)] = (j % 2 == 1) ? f.neg(c) : c;
      }
      std::vector<fp_t> roots = rational_roots(UniPoly(f, coeffs));
      if (int(roots.size()) < mult) {
        rational = false;
        break;
      }
      values.insert(values.end(), roots.begin(), roots.end());
    }
    if (!rational) {
      ++out.skipped_roots;
      continue;
    }
    std::vector<fp_t> multiset;
    for (int k = 0; k < type.nblocks(); ++k)
      for (int j = 0; j < type.mult(k); ++j)
        for (int rep = 0; rep < type.part(k); ++rep)
          multiset.push_back(values[std::size_t(tau[std::size_t(k)] + j)]);
    std::sort(multiset.begin(), multiset.end());
    do {
      out.points.push_back(multiset);
    } while (std::next_permutation(multiset.begin(), multiset.end()));
  }
  std::sort(out.points.begin(), out.points.end());
  return out;
}

void verify_membership(const std::vector<MPoly>& f, const MPoly& phi,
                       const std::vector<OrbitEntry>& entries) {
  require(!f.empty(), ErrorKind::Domain, "no equations");
  const PrimeField& fld = phi.ring()->field();
  const int n = phi.ring()->nvars();
  const int s = int(f.size());

  std::map<Partition, bool> seen;
  for (const OrbitEntry& entry : entries) {
    require(entry.type.n() == n, ErrorKind::Verification,
            "entry type does not partition the variable count");
    require(!seen.count(entry.type), ErrorKind::Verification,
            "duplicate type among entries");
    seen[entry.type] = true;
    require(entry.param.coords() == entry.type.length(),
            ErrorKind::Verification, "entry coordinate count is wrong");
    if (entry.param.empty()) continue;
    require(entry.type.length() >= s, ErrorKind::Verification,
            "points of this type cannot satisfy the equations");

    // Exactness: within every branch, block values stay pairwise distinct
    // (each block squarefree, blocks pairwise coprime).
    std::vector<std::pair<UniPoly, std::vector<UniPoly>>> work;
    work.push_back({entry.param.q(), entry.param.v()});
    const auto& tau = entry.type.tau();
    while (!work.empty()) {
      auto [q, v] = std::move(work.back());
      work.pop_back();
      QuotientRingPtr ring = QuotientRing::make(q);
      try {
        std::vector<QPoly> blocks;
        for (int k = 0; k < entry.type.nblocks(); ++k)
          blocks.push_back(block_poly(ring, v, tau[std::size_t(k)],
                                      entry.type.mult(k)));
        for (std::size_t i = 0; i < blocks.size(); ++i) {
          QPoly g = qgcd_monic(blocks[i], qderivative(blocks[i], ring), ring);
          require(qdeg(g) == 0, ErrorKind::Verification,
                  "a block of " + entry.type.str() + " has repeated values");
          for (std::size_t j = i + 1; j < blocks.size(); ++j) {
            QPoly h = qgcd_monic(blocks[i], blocks[j], ring);
            require(qdeg(h) == 0, ErrorKind::Verification,
                    "two blocks of " + entry.type.str() + " share a value");
          }
        }
      } catch (const SplitFound& sp) {
        for (const UniPoly& factor : {sp.ev.left, sp.ev.right}) {
          std::vector<UniPoly> vv;
          vv.reserve(v.size());
          for (const UniPoly& vi : v) vv.push_back(rem(vi, factor));
          work.push_back({factor, std::move(vv)});
        }
      }
    }

    // Membership: the per-type system vanishes on every encoded point.
    BlockRing br(fld, entry.type);
    PreparedSystem sys = entry.type.length() == s ? prepare_f(br, f)
                                                  : prepare_f_h(br, f, phi);
    MonomialEvaluator ev(entry.param.v(), entry.param.q());
    for (const MPoly& eq : sys.equations)
      require(ev.eval(eq).is_zero(), ErrorKind::Verification,
              "an equation does not vanish on type " + entry.type.str());
  }
}

}  // namespace symcrit
