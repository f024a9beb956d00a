#include "symcrit/symmetrize.hpp"

#include <bit>

#include "symcrit/error.hpp"
#include "symcrit/rng.hpp"

namespace symcrit {

namespace {

// Adjacent transpositions inside blocks generate the block-wise symmetric
// group; checking the defining relation on them suffices.
std::vector<std::vector<int>> block_transpositions(const BlockRing& br) {
  std::vector<std::vector<int>> out;
  const auto& tau = br.tau();
  const auto& blocks = br.lambda().blocks();
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    for (int a = tau[k]; a + 1 < tau[k + 1]; ++a) {
      std::vector<int> perm(std::size_t(br.length()));
      for (int i = 0; i < br.length(); ++i) perm[std::size_t(i)] = i;
      std::swap(perm[std::size_t(a)], perm[std::size_t(a + 1)]);
      out.push_back(std::move(perm));
    }
  }
  return out;
}

}  // namespace

EquivariantRow::EquivariantRow(BlockRing br, std::vector<MPoly> q)
    : br_(std::move(br)), q_(std::move(q)) {
  const int l = br_.length();
  require(int(q_.size()) == l, ErrorKind::Domain,
          "row length does not match the partition length");
  for (const MPoly& qi : q_)
    require(qi.ring()->same_as(*br_.zring()), ErrorKind::Domain,
            "row entry lives in the wrong ring");
  for (const auto& perm : block_transpositions(br_)) {
    for (int i = 0; i < l; ++i) {
      MPoly moved = q_[std::size_t(i)].apply_permutation(perm);
      if (!(moved == q_[std::size_t(perm[std::size_t(i)])]))
        fail(ErrorKind::Domain,
             "row is not equivariant under block permutations");
    }
  }
  for (int i = 0; i < l; ++i) {
    for (int j = i + 1; j < l; ++j) {
      MPoly diff = q_[std::size_t(i)] - q_[std::size_t(j)];
      if (diff.is_zero()) continue;
      try {
        exact_divide_linear(diff, i, j);
      } catch (const Error&) {
        fail(ErrorKind::Domain,
             "z" + std::to_string(i + 1) + " - z" + std::to_string(j + 1) +
                 " does not divide the entry difference");
      }
    }
  }
}

int EquivariantRow::degree() const {
  int d = -1;
  for (const MPoly& qi : q_) d = std::max(d, qi.degree());
  return d;
}

DividedDifferenceTable::DividedDifferenceTable(const EquivariantRow& row)
    : row_(row),
      memo_(std::size_t(1) << row.length(),
            MPoly::constant(row.block_ring().zring(), 0)),
      have_(std::size_t(1) << row.length(), false) {}

const MPoly& DividedDifferenceTable::get(std::uint32_t mask) {
  require(mask != 0 && mask < (std::uint32_t(1) << row_.length()),
          ErrorKind::Internal, "bad index set");
  if (have_[mask]) return memo_[mask];
  MPoly value = MPoly::constant(row_.block_ring().zring(), 0);
  if (std::popcount(mask) == 1) {
    value = row_.q()[std::size_t(std::countr_zero(mask))];
  } else {
    const int hi = 31 - std::countl_zero(mask);
    const int lo = std::countr_zero(mask);
    const MPoly& drop_hi = get(mask & ~(std::uint32_t(1) << hi));
    const MPoly& drop_lo = get(mask & ~(std::uint32_t(1) << lo));
    value = exact_divide_linear(drop_hi - drop_lo, hi, lo);
  }
  memo_[mask] = std::move(value);
  have_[mask] = true;
  return memo_[mask];
}

MPoly divided_difference_with_pivots(
    const EquivariantRow& row, std::vector<int> I,
    const std::function<std::pair<int, int>(const std::vector<int>&)>& rule) {
  require(!I.empty(), ErrorKind::Internal, "empty index set");
  if (I.size() == 1) return row.q()[std::size_t(I[0] - 1)];
  auto [a, b] = rule(I);
  require(a != b, ErrorKind::Internal, "pivot rule returned equal indices");
  auto without = [&](int drop) {
    std::vector<int> out;
    for (int v : I)
      if (v != drop) out.push_back(v);
    return out;
  };
  MPoly num = divided_difference_with_pivots(row, without(a), rule) -
              divided_difference_with_pivots(row, without(b), rule);
  return exact_divide_linear(num, a - 1, b - 1);
}

std::vector<MPoly> symmetrize(const EquivariantRow& row) {
  const BlockRing& br = row.block_ring();
  const auto& tau = br.tau();
  const auto& blocks = br.lambda().blocks();
  const int l = br.length();
  DividedDifferenceTable tab(row);

  std::vector<MPoly> p(std::size_t(l), MPoly::constant(br.zring(), 0));
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const int mult = blocks[k].second;
    for (int j = 1; j <= mult; ++j) {
      MPoly acc = MPoly::constant(br.zring(), 0);
      for (int s = 1; s <= j; ++s) {
        std::vector<int> trailing;  // z_{tau_k+s+2} .. z_{tau_{k+1}}, 0-based
        for (int t = tau[k] + s + 2; t <= tau[k + 1]; ++t)
          trailing.push_back(t - 1);
        MPoly weight = br.eta_of(trailing, j - s);
        if (weight.is_zero()) continue;

        std::uint32_t tail_mask = 0;  // slots tau_k+s+1 .. l, 1-based
        for (int t = tau[k] + s + 1; t <= l; ++t)
          tail_mask |= std::uint32_t(1) << (t - 1);
        MPoly h = MPoly::constant(br.zring(), 0);
        for (int i = tau[k] + 1; i <= tau[k] + s; ++i)
          h = h + tab.get(tail_mask | (std::uint32_t(1) << (i - 1)));
        acc = acc + weight * h;
      }
      p[std::size_t(tau[k] + j - 1)] = std::move(acc);
    }
  }
  return p;
}

MPoly vandermonde(const BlockRing& br) {
  MPoly delta = MPoly::constant(br.zring(), 1);
  for (int i = 0; i < br.length(); ++i)
    for (int j = i + 1; j < br.length(); ++j)
      delta = delta * (MPoly::var(br.zring(), i) - MPoly::var(br.zring(), j));
  return delta;
}

namespace {

PolyMatrix identity_matrix(const PolyRingPtr& r, int n) {
  PolyMatrix m(r, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = MPoly::constant(r, 1);
  return m;
}

// z_a - z_b with 1-based flat indices.
MPoly zdiff(const BlockRing& br, int a, int b) {
  return MPoly::var(br.zring(), a - 1) - MPoly::var(br.zring(), b - 1);
}

PolyMatrix elimination_b(const BlockRing& br, int k, int j) {
  const int l = br.length();
  const int base = br.tau()[std::size_t(k)];
  PolyMatrix m = identity_matrix(br.zring(), l);
  if (k == 0 && j == 1) return m;
  for (int t = 1; t < j; ++t)
    m.at(base + t - 1, base + j - 1) = zdiff(br, base + j, base + t);
  m.at(base + j - 1, base + j - 1) =
      MPoly::constant(br.zring(), br.zring()->field().neg(1));
  return m;
}

PolyMatrix elimination_c(const BlockRing& br, int k, int j) {
  const int l = br.length();
  const int base = br.tau()[std::size_t(k)];
  const PrimeField& f = br.zring()->field();
  PolyMatrix m = identity_matrix(br.zring(), l);
  if (k == 0 && j == 1) return m;
  for (int t = 1; t < j; ++t)
    m.at(base + t - 1, base + t - 1) = zdiff(br, base + j, base + t);
  const fp_t minus_inv_j = f.neg(f.inv(fp_t(j % int(f.p()))));
  for (int t = 1; t <= j; ++t)
    m.at(base + j - 1, base + t - 1) = MPoly::constant(br.zring(), minus_inv_j);
  return m;
}

PolyMatrix elimination_d(const BlockRing& br, int k, int j) {
  const int l = br.length();
  const int base = br.tau()[std::size_t(k)];
  PolyMatrix m = identity_matrix(br.zring(), l);
  if (k == 0) return m;
  for (int t = 1; t <= base; ++t)
    m.at(t - 1, t - 1) = zdiff(br, base + j, t);
  for (int t = 1; t <= base; ++t)
    m.at(base + j - 1, t - 1) = MPoly::constant(br.zring(), 1);
  return m;
}

}  // namespace

SymmetrizeMatrices build_u_matrix(const BlockRing& br) {
  const int l = br.length();
  const PrimeField& f = br.zring()->field();
  require(f.p() > std::uint64_t(l), ErrorKind::Characteristic,
          "field characteristic must exceed the partition length");
  const auto& tau = br.tau();
  const auto& blocks = br.lambda().blocks();

  PolyMatrix m = identity_matrix(br.zring(), l);
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const int mult = blocks[k].second;
    for (int j = 1; j < mult; ++j) {
      for (int s = 1; s <= j; ++s) {
        std::vector<int> trailing;
        for (int t = tau[k] + s + 2; t <= tau[k + 1]; ++t)
          trailing.push_back(t - 1);
        m.at(tau[k] + s - 1, tau[k] + j - 1) = br.eta_of(trailing, j - s);
      }
    }
  }

  // m is unipotent with strictly upper-triangular nilpotent part, so the
  // inverse is the finite geometric series in (I - m).
  PolyMatrix n(br.zring(), l, l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      n.at(i, j) = (i == j ? MPoly::constant(br.zring(), 1) - m.at(i, j)
                           : MPoly::constant(br.zring(), 0) - m.at(i, j));
  PolyMatrix minv = identity_matrix(br.zring(), l);
  PolyMatrix power = n;
  for (int t = 1; t <= l; ++t) {
    bool all_zero = true;
    for (int i = 0; i < l && all_zero; ++i)
      for (int j = 0; j < l && all_zero; ++j)
        if (!power.at(i, j).is_zero()) all_zero = false;
    if (all_zero) break;
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j)
        minv.at(i, j) = minv.at(i, j) + power.at(i, j);
    power = power * n;
  }

  PolyMatrix jm = identity_matrix(br.zring(), l);
  for (std::size_t k = 0; k < blocks.size(); ++k)
    for (int j = 1; j <= blocks[k].second; ++j)
      jm = jm * elimination_b(br, int(k), j) * elimination_c(br, int(k), j) *
           elimination_d(br, int(k), j);

  SymmetrizeMatrices out{m, jm, minv * jm, MPoly::constant(br.zring(), 0)};
  out.det_u = out.U.determinant();

  // det(U) must be a nonzero constant multiple of the Vandermonde
  // determinant: exact division for small sizes, sampled ratios otherwise.
  if (l <= 4) {
    MPoly rest = out.det_u;
    for (int i = 0; i < l; ++i)
      for (int j = i + 1; j < l; ++j) rest = exact_divide_linear(rest, i, j);
    require(!rest.is_zero() && rest.is_constant(), ErrorKind::Internal,
            "det(U) is not a constant multiple of the Vandermonde factor");
  } else {
    MPoly delta = vandermonde(br);
    Rng rng(0x5eedbeefULL ^ std::uint64_t(l));
    fp_t ratio = 0;
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<fp_t> point(std::size_t(l), 0);
      fp_t dv = 0;
      do {
        for (auto& c : point) c = fp_t(rng.below(f.p()));
        dv = delta.eval(point);
      } while (dv == 0);
      const fp_t r = f.mul(out.det_u.eval(point), f.inv(dv));
      if (trial == 0)
        ratio = r;
      else
        require(r == ratio, ErrorKind::Internal,
                "det(U) / Vandermonde is not constant");
    }
    require(ratio != 0, ErrorKind::Internal, "det(U) vanishes");
  }
  return out;
}

}  // namespace symcrit
