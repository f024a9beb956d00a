#include "symcrit/driver.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <optional>
#include <set>

#include "symcrit/error.hpp"
#include "symcrit/jacprep.hpp"
#include "symcrit/zdsolve.hpp"

namespace symcrit {

ProblemInstance::ProblemInstance(std::vector<MPoly> f, MPoly phi)
    : f_(std::move(f)), phi_(std::move(phi)) {
  require(!f_.empty(), ErrorKind::Domain, "need at least one equation");
  const PolyRingPtr& r = phi_.ring();
  for (const MPoly& fi : f_)
    require(fi.ring()->same_as(*r), ErrorKind::Domain,
            "equations and objective live in different rings");
  const int n = r->nvars();
  const int s = int(f_.size());
  require(s < n, ErrorKind::Domain,
          "need fewer equations than variables");
  require(r->field().p() > std::uint64_t(n), ErrorKind::Characteristic,
          "field characteristic must exceed the variable count");
  for (const MPoly& fi : f_) {
    require(fi.degree() >= 1, ErrorKind::Domain, "constant equation");
    require(is_sn_invariant(fi), ErrorKind::Domain,
            "an equation is not symmetric");
  }
  require(phi_.degree() >= 1, ErrorKind::Domain, "constant objective");
  require(is_sn_invariant(phi_), ErrorKind::Domain,
          "the objective is not symmetric");
}

MPoly ProblemInstance::distance_objective(const PolyRingPtr& xring, fp_t u) {
  const PrimeField& f = xring->field();
  MPoly out = MPoly::constant(
      xring, f.mul(fp_t(std::uint64_t(xring->nvars()) % f.p()), f.mul(u, u)));
  for (int i = 0; i < xring->nvars(); ++i) {
    MPoly xi = MPoly::var(xring, i);
    out = out + xi * xi - xi.scaled(f.mul(2 % f.p(), u));
  }
  return out;
}

int ProblemInstance::degree_bound() const {
  int d = phi_.degree();
  for (const MPoly& fi : f_) d = std::max(d, fi.degree());
  return d;
}

int SymmetricRepresentation::total_degree() const {
  int total = 0;
  for (const OrbitEntry& e : entries) total += e.param.degree();
  return total;
}

const OrbitEntry* SymmetricRepresentation::find(const Partition& type) const {
  for (const OrbitEntry& e : entries)
    if (!(e.type < type) && !(type < e.type)) return &e;
  return nullptr;
}

namespace {

// Stable 64-bit tag of a partition for per-job seed derivation.
std::uint64_t partition_tag(const Partition& lambda) {
  std::uint64_t tag = 0;
  int shift = 0;
  for (int p : lambda.parts()) {
    tag |= std::uint64_t(p & 0xF) << shift;
    shift += 4;
  }
  return tag;
}

struct JobOutcome {
  std::vector<OrbitEntry> appended;
  PartitionMeta meta;
};

JobOutcome run_partition(const ProblemInstance& prob, const Partition& lambda,
                         std::uint64_t seed) {
  const int s = prob.s();
  Rng rng(mix_seed(seed, partition_tag(lambda)));
  BlockRing br(prob.field(), lambda);
  PreparedSystem sys = lambda.length() == s
                           ? prepare_f(br, prob.f())
                           : prepare_f_h(br, prob.f(), prob.phi());
  ZeroDimParam sol = [&] {
    try {
      return isolated_points(sys, rng);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::PositiveDimensional)
        fail(ErrorKind::PositiveDimensional,
             "partition " + lambda.str() + ": " + e.what());
      throw;
    }
  }();

  JobOutcome out{{}, PartitionMeta{lambda, false, "", sol.degree(), 0}};
  DecomposeResult dec = decompose(br, sol, rng);
  out.meta.collapsed = dec.collapsed;

  bool lambda_seen = false;
  for (OrbitEntry& part : dec.parts) {
    const bool is_lambda =
        !(part.type < lambda) && !(lambda < part.type);
    lambda_seen = lambda_seen || is_lambda;
    if (lambda.length() == s || is_lambda)
      out.appended.push_back(std::move(part));
  }
  if (!lambda_seen)
    out.appended.push_back(OrbitEntry{
        lambda, ZeroDimParam::empty_set(prob.field(), lambda.length())});
  return out;
}

}  // namespace

SymmetricRepresentation critical_points_per_orbit(const ProblemInstance& prob,
                                                  std::uint64_t seed,
                                                  int threads) {
  const int n = prob.n();
  const int s = prob.s();
  const int d = prob.degree_bound();

  struct Slot {
    Partition lambda;
    bool pruned;
    std::string note;
  };
  std::vector<Slot> slots;
  auto add_slot = [&](const Partition& lambda) {
    if (lambda.length() == s) {
      for (int k = 0; k < lambda.nblocks(); ++k)
        if (lambda.mult(k) > d) {
          slots.push_back({lambda, true,
                           "a block multiplicity exceeds the degree bound"});
          return;
        }
    } else if (lambda.length() > d) {
      slots.push_back({lambda, true, "length exceeds the degree bound"});
      return;
    }
    slots.push_back({lambda, false, ""});
  };
  for (const Partition& lambda : enumerate_partitions_exact(n, s))
    add_slot(lambda);
  for (int len = s + 1; len <= n; ++len)
    for (const Partition& lambda : enumerate_partitions_exact(n, len))
      add_slot(lambda);

  std::vector<std::optional<JobOutcome>> outcomes(slots.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (!slots[i].pruned)
        outcomes[i] = run_partition(prob, slots[i].lambda, seed);
  } else {
    std::size_t next = 0;
    while (next < slots.size()) {
      std::vector<std::pair<std::size_t, std::future<JobOutcome>>> batch;
      while (next < slots.size() && int(batch.size()) < threads) {
        const std::size_t i = next++;
        if (slots[i].pruned) continue;
        batch.emplace_back(i, std::async(std::launch::async, [&prob, &slots,
                                                              i, seed] {
                             return run_partition(prob, slots[i].lambda, seed);
                           }));
      }
      for (auto& [i, fut] : batch) outcomes[i] = fut.get();
    }
  }

  SymmetricRepresentation rep;
  rep.seed = seed;
  std::set<Partition> seen;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i].pruned) {
      rep.meta.push_back(
          PartitionMeta{slots[i].lambda, true, slots[i].note, 0, 0});
      continue;
    }
    JobOutcome& out = *outcomes[i];
    rep.meta.push_back(out.meta);
    for (OrbitEntry& entry : out.appended) {
      if (seen.count(entry.type)) continue;  // first computed entry wins
      seen.insert(entry.type);
      rep.entries.push_back(std::move(entry));
    }
  }
  return rep;
}

ZeroDimParam naive_critical_points(const ProblemInstance& prob,
                                   std::uint64_t seed) {
  Rng rng(mix_seed(seed, 0x6e61697665ULL));
  std::vector<MPoly> gens = prob.f();
  PolyMatrix jac = jacobian(prob.f(), prob.phi());
  for (MPoly& m : jac.minors(prob.s() + 1))
    if (!m.is_zero()) gens.push_back(std::move(m));
  return rur_extract(prob.ring(), gens, rng);
}

BigInt eta_integer(const std::vector<BigInt>& vals, int k) {
  if (k < 0 || k > int(vals.size())) return 0;
  std::vector<BigInt> dp(std::size_t(k) + 1, 0);
  dp[0] = 1;
  for (const BigInt& v : vals)
    for (int j = k; j >= 1; --j) dp[std::size_t(j)] += dp[std::size_t(j) - 1] * v;
  return dp[std::size_t(k)];
}

namespace {

BigInt big_pow(BigInt base, int exp) {
  BigInt out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

BigInt ceil_rational(const Rational& r) {
  BigInt q = r.numerator() / r.denominator();
  BigInt rest = r.numerator() % r.denominator();
  if (rest != 0 && r.numerator() > 0) ++q;
  return q;
}

}  // namespace

BoundsReport bounds_report(int n, int d, int s) {
  require(d >= 2, ErrorKind::Domain, "degree bound must be at least 2");
  require(1 <= s && s < n, ErrorKind::Domain,
          "need 1 <= s < n for the bounds table");
  BoundsReport rep;
  rep.n = n;
  rep.d = d;
  rep.s = s;

  const BigInt ds = big_pow(d, s);
  const BigInt nd1s = BigInt(n) * big_pow(d + 1, s);
  Rational c_sum(0), e_sum(0);
  for (const Partition& lambda : enumerate_partitions(n)) {
    const int l = lambda.length();
    if (l < s) continue;
    const BigInt w = block_symmetry(lambda);
    bool pruned = false;
    if (l == s) {
      for (int k = 0; k < lambda.nblocks(); ++k)
        if (lambda.mult(k) > d) pruned = true;
    } else if (l > d) {
      pruned = true;
    }
    // A pruned orbit type is provably free of isolated critical points, so
    // its contribution to every bound is zero; the raw counting formulas are
    // meaningless there (they can even go negative once l exceeds d).
    Rational c(0), e(0);
    if (!pruned) {
      if (l == s) {
        c = Rational(ds, w);
        e = Rational(nd1s, w);
      } else {
        std::vector<BigInt> args_c, args_e;
        for (int t = 1; t <= l; ++t) {
          args_c.push_back(BigInt(d - t));
          args_e.push_back(BigInt(d - t + 1));
        }
        c = Rational(ds * eta_integer(args_c, l - s), w);
        e = Rational(nd1s * eta_integer(args_e, l - s), w);
      }
    }
    BoundsRow row{lambda, c, e, (c * Rational(w)).numerator(), pruned};
    require((c * Rational(w)).denominator() == 1, ErrorKind::Internal,
            "weighted bound is not integral");
    c_sum += c;
    e_sum += e;
    rep.rows.push_back(std::move(row));
  }
  rep.candidates_ceiling = ceil_rational(c_sum);
  rep.isolated_ceiling = ceil_rational(e_sum);
  rep.global_candidates = ds * binomial(n + d - 1, n);
  rep.global_isolated = nd1s * binomial(n + d, n);
  rep.determinantal_bound = ds * big_pow(d - 1, n - s) * binomial(n, s);
  return rep;
}

MPoly random_invariant(const PolyRingPtr& xring, int d, Rng& rng) {
  require(d >= 1, ErrorKind::Domain, "degree must be positive");
  const PrimeField& f = xring->field();
  const int n = xring->nvars();
  BlockRing br(f, Partition::from_parts(std::vector<int>(std::size_t(n), 1)));
  std::vector<Monomial> mons =
      monomials_up_to_weighted_degree(*br.ering(), d);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Term> terms;
    for (const Monomial& m : mons) {
      fp_t c = fp_t(rng.below(f.p()));
      if (c != 0) terms.push_back(Term{m, c});
    }
    MPoly fbar(br.ering(), std::move(terms));
    if (fbar.is_zero()) continue;
    MPoly fx = cast_to_ring(expand_e(br, fbar), xring);
    if (fx.degree() == d) return fx;
  }
  fail(ErrorKind::Internal, "could not sample a polynomial of full degree");
}

ProblemInstance random_instance(PrimeField field, int n, int s, int d,
                                std::uint64_t seed) {
  require(1 <= s && s < n, ErrorKind::Domain, "need 1 <= s < n");
  PolyRingPtr xring = make_x_ring(field, n);
  Rng rng(mix_seed(seed, 0x67656e5fULL));
  std::vector<MPoly> f;
  for (int i = 0; i < s; ++i) f.push_back(random_invariant(xring, d, rng));
  MPoly phi = random_invariant(xring, d, rng);
  return ProblemInstance(std::move(f), std::move(phi));
}

OracleResult brute_force_oracle(const ProblemInstance& prob) {
  const PrimeField& f = prob.field();
  const int n = prob.n();
  double size = 1;
  for (int i = 0; i < n; ++i) size *= double(f.p());
  require(size <= 1e8, ErrorKind::Domain,
          "exhaustive search is limited to p^n <= 1e8");

  PolyMatrix jac = jacobian(prob.f(), prob.phi());
  OracleResult out;
  std::map<Partition, std::set<std::vector<fp_t>>> typed;

  std::vector<fp_t> x(std::size_t(n), 0);
  while (true) {
    bool on_variety = true;
    for (const MPoly& fi : prob.f())
      if (fi.eval(x) != 0) {
        on_variety = false;
        break;
      }
    if (on_variety && linalg::rank(f, jac.eval(x)) <= prob.s()) {
      out.points.push_back(x);
      // Compress: multiplicity pattern and per-block symmetric values.
      std::map<fp_t, int> count;
      for (fp_t c : x) ++count[c];
      std::vector<int> parts;
      for (const auto& [value, mult] : count) parts.push_back(mult);
      Partition type = Partition::from_parts(parts);
      std::vector<fp_t> compressed;
      for (int k = 0; k < type.nblocks(); ++k) {
        std::vector<fp_t> values;
        for (const auto& [value, mult] : count)
          if (mult == type.part(k)) values.push_back(value);
        std::vector<fp_t> dp(values.size() + 1, 0);
        dp[0] = 1;
        for (fp_t v : values)
          for (std::size_t j = values.size(); j >= 1; --j)
            dp[j] = f.add(dp[j], f.mul(dp[j - 1], v));
        for (std::size_t j = 1; j <= values.size(); ++j)
          compressed.push_back(dp[j]);
      }
      typed[type].insert(std::move(compressed));
    }
    int i = n - 1;
    while (i >= 0 && x[std::size_t(i)] == f.p() - 1) x[std::size_t(i--)] = 0;
    if (i < 0) break;
    ++x[std::size_t(i)];
  }
  for (auto& [type, points] : typed)
    out.types.emplace_back(
        type, std::vector<std::vector<fp_t>>(points.begin(), points.end()));
  return out;
}

std::vector<std::vector<fp_t>> rational_points(const ZeroDimParam& param) {
  std::vector<std::vector<fp_t>> out;
  if (param.empty()) return out;
  for (fp_t a : rational_roots(param.q())) {
    std::vector<fp_t> point;
    point.reserve(std::size_t(param.coords()));
    for (const UniPoly& vi : param.v()) point.push_back(vi.eval(a));
    out.push_back(std::move(point));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace symcrit
