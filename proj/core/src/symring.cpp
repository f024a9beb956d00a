#include "symcrit/symring.hpp"

#include <algorithm>
#include <numeric>

namespace symcrit {

BlockRing::BlockRing(PrimeField f, Partition lambda)
    : lambda_(std::move(lambda)), tau_(lambda_.tau()) {
  const int l = lambda_.length();
  require(l <= kMaxVars, ErrorKind::Domain,
          "partition length exceeds the supported variable count");
  std::vector<std::string> znames, enames;
  std::vector<int> eweights;
  for (int i = 1; i <= l; ++i) znames.push_back("z" + std::to_string(i));
  for (int k = 0; k < lambda_.nblocks(); ++k)
    for (int j = 1; j <= lambda_.mult(k); ++j) {
      enames.push_back("e" + std::to_string(k + 1) + "_" + std::to_string(j));
      eweights.push_back(j);
    }
  z_ = PolyRing::make(f, std::move(znames));
  e_ = PolyRing::make(f, std::move(enames), std::move(eweights));
}

int BlockRing::z_index(int block, int slot) const {
  require(block >= 0 && block < lambda_.nblocks(), ErrorKind::Domain,
          "block index out of range");
  require(slot >= 0 && slot < lambda_.mult(block), ErrorKind::Domain,
          "slot index out of range");
  return tau_[std::size_t(block)] + slot;
}

int BlockRing::e_index(int block, int j) const {
  require(j >= 1 && j <= lambda_.mult(block), ErrorKind::Domain,
          "elementary index out of range");
  return tau_[std::size_t(block)] + j - 1;
}

int BlockRing::x_rep_of_slot(int slot) const {
  int block = lambda_.block_of_slot(slot);
  int x = 0;
  for (int k = 0; k < block; ++k) x += lambda_.part(k) * lambda_.mult(k);
  x += (slot - tau_[std::size_t(block)]) * lambda_.part(block);
  return x;
}

MPoly BlockRing::eta(int block, int k) const {
  std::vector<int> vars;
  for (int s = 0; s < lambda_.mult(block); ++s)
    vars.push_back(z_index(block, s));
  return eta_of(vars, k);
}

MPoly BlockRing::eta_of(const std::vector<int>& zvars, int k) const {
  require(k >= 0, ErrorKind::Domain, "negative elementary index");
  if (k == 0) return MPoly::constant(z_, 1);
  if (k > int(zvars.size())) return MPoly::zero(z_);
  // Coefficient extraction from prod (1 + z*T): dp[j] = eta_j so far.
  std::vector<MPoly> dp;
  dp.push_back(MPoly::constant(z_, 1));
  for (int v : zvars) {
    MPoly zv = MPoly::var(z_, v);
    dp.push_back(MPoly::zero(z_));
    for (std::size_t j = dp.size() - 1; j >= 1; --j)
      dp[j] = dp[j] + dp[j - 1] * zv;
  }
  return dp[std::size_t(k)];
}

PolyRingPtr make_x_ring(PrimeField f, int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return PolyRing::make(f, std::move(names));
}

MPoly cast_to_ring(const MPoly& f, const PolyRingPtr& target) {
  require(f.ring()->nvars() == target->nvars() &&
              f.ring()->field() == target->field(),
          ErrorKind::Domain, "cast_to_ring shape mismatch");
  std::vector<Term> ts(f.terms());
  return MPoly(target, std::move(ts));
}

MPoly t_lambda(const BlockRing& br, const MPoly& f) {
  const Partition& lambda = br.lambda();
  const int n = lambda.n();
  require(f.ring()->nvars() == n, ErrorKind::Domain,
          "t_lambda input must live in the full x-ring");
  // x index -> flat z slot.
  std::vector<int> slot_of(std::size_t(n), 0);
  int x = 0, slot = 0;
  for (int k = 0; k < lambda.nblocks(); ++k)
    for (int rep = 0; rep < lambda.mult(k); ++rep, ++slot)
      for (int c = 0; c < lambda.part(k); ++c) slot_of[std::size_t(x++)] = slot;
  std::vector<Term> ts;
  ts.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    Monomial m;
    m.deg = t.m.deg;
    for (int i = 0; i < n; ++i) {
      std::uint32_t s =
          std::uint32_t(m.e[std::size_t(slot_of[std::size_t(i)])]) +
          t.m.e[std::size_t(i)];
      require(s < 65536, ErrorKind::Domain, "monomial exponent overflow");
      m.e[std::size_t(slot_of[std::size_t(i)])] = std::uint16_t(s);
    }
    ts.push_back(Term{m, t.c});
  }
  return MPoly(br.zring(), std::move(ts));
}

namespace {

std::vector<int> transposition(int n, int a, int b) {
  std::vector<int> perm(std::size_t(n), 0);
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[std::size_t(a)], perm[std::size_t(b)]);
  return perm;
}

}  // namespace

bool is_sn_invariant(const MPoly& f) {
  const int n = f.ring()->nvars();
  if (n == 1) return true;
  if (f != f.apply_permutation(transposition(n, 0, 1))) return false;
  std::vector<int> cycle(std::size_t(n), 0);
  for (int i = 0; i < n; ++i) cycle[std::size_t(i)] = (i + 1) % n;
  return f == f.apply_permutation(cycle);
}

bool is_block_invariant(const BlockRing& br, const MPoly& f) {
  const Partition& lambda = br.lambda();
  const int l = lambda.length();
  for (int k = 0; k < lambda.nblocks(); ++k)
    for (int s = 0; s + 1 < lambda.mult(k); ++s) {
      auto perm = transposition(l, br.z_index(k, s), br.z_index(k, s + 1));
      if (f != f.apply_permutation(perm)) return false;
    }
  return true;
}

namespace {

// Lexicographic on raw exponents, z1 highest.
bool lex_less(const Monomial& a, const Monomial& b, int nvars) {
  for (int i = 0; i < nvars; ++i)
    if (a.e[std::size_t(i)] != b.e[std::size_t(i)])
      return a.e[std::size_t(i)] < b.e[std::size_t(i)];
  return false;
}

const Term& lex_leading(const MPoly& f) {
  const auto& ts = f.terms();
  std::size_t best = 0;
  for (std::size_t i = 1; i < ts.size(); ++i)
    if (lex_less(ts[best].m, ts[i].m, f.ring()->nvars())) best = i;
  return ts[best];
}

}  // namespace

MPoly symmetric_coordinates(const BlockRing& br, const MPoly& f) {
  require(f.ring()->same_as(*br.zring()), ErrorKind::Domain,
          "symmetric_coordinates input must live in the z-ring");
  require(is_block_invariant(br, f), ErrorKind::Domain,
          "polynomial is not block invariant");
  const Partition& lambda = br.lambda();
  MPoly residue = f;
  MPoly result = MPoly::zero(br.ering());
  // Each pass cancels the lex-leading monomial; the count of monomials
  // below a fixed degree bounds the loop.
  long guard = 0;
  const long guard_max = 2000000;
  while (!residue.is_zero()) {
    require(++guard < guard_max, ErrorKind::Internal,
            "symmetric coordinate elimination failed to terminate");
    const Term& lead = lex_leading(residue);
    // Build the matching e-monomial blockwise from the exponent profile.
    Monomial emono;
    MPoly zimage = MPoly::constant(br.zring(), 1);
    for (int k = 0; k < lambda.nblocks(); ++k) {
      const int lk = lambda.mult(k);
      std::vector<int> a(std::size_t(lk) + 1, 0);
      for (int s = 0; s < lk; ++s)
        a[std::size_t(s)] = lead.m.e[std::size_t(br.z_index(k, s))];
      for (int s = 0; s + 1 < lk; ++s)
        require(a[std::size_t(s)] >= a[std::size_t(s + 1)],
                ErrorKind::Internal,
                "lex-leading exponents of an invariant must be sorted");
      for (int j = 1; j <= lk; ++j) {
        int exp = a[std::size_t(j - 1)] - a[std::size_t(j)];
        if (exp == 0) continue;
        emono = emono * Monomial::var(br.e_index(k, j), exp);
        MPoly etaj = br.eta(k, j);
        for (int t = 0; t < exp; ++t) zimage = zimage * etaj;
      }
    }
    result = result + MPoly(br.ering(), {Term{emono, lead.c}});
    residue = residue - zimage.scaled(lead.c);
  }
  MPoly back = expand_e(br, result);
  require(back == f, ErrorKind::Internal,
          "symmetric coordinate back-substitution mismatch");
  return result;
}

MPoly expand_e(const BlockRing& br, const MPoly& fbar) {
  require(fbar.ring()->same_as(*br.ering()), ErrorKind::Domain,
          "expand_e input must live in the e-ring");
  std::vector<MPoly> args;
  for (int k = 0; k < br.lambda().nblocks(); ++k)
    for (int j = 1; j <= br.lambda().mult(k); ++j)
      args.push_back(br.eta(k, j));
  return fbar.compose(br.zring(), args);
}

}  // namespace symcrit
