#include "symcrit/partitions.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "symcrit/error.hpp"

namespace symcrit {

Partition::Partition(std::vector<std::pair<int, int>> blocks)
    : blocks_(std::move(blocks)) {
  int prev = 0;
  for (const auto& [p, m] : blocks_) {
    require(p > prev, ErrorKind::Domain,
            "partition parts must be strictly increasing");
    require(m >= 1, ErrorKind::Domain,
            "partition multiplicities must be positive");
    prev = p;
  }
}

Partition Partition::from_parts(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end());
  std::vector<std::pair<int, int>> blocks;
  for (int p : parts) {
    require(p >= 1, ErrorKind::Domain, "partition parts must be positive");
    if (!blocks.empty() && blocks.back().first == p)
      ++blocks.back().second;
    else
      blocks.emplace_back(p, 1);
  }
  return Partition(std::move(blocks));
}

int Partition::n() const {
  int s = 0;
  for (const auto& [p, m] : blocks_) s += p * m;
  return s;
}

int Partition::length() const {
  int s = 0;
  for (const auto& [p, m] : blocks_) s += m;
  return s;
}

std::vector<int> Partition::tau() const {
  std::vector<int> t{0};
  for (const auto& [p, m] : blocks_) t.push_back(t.back() + m);
  return t;
}

std::vector<int> Partition::parts() const {
  std::vector<int> out;
  for (const auto& [p, m] : blocks_)
    for (int i = 0; i < m; ++i) out.push_back(p);
  return out;
}

int Partition::block_of_slot(int i) const {
  int off = 0;
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    off += blocks_[k].second;
    if (i < off) return static_cast<int>(k);
  }
  fail(ErrorKind::Domain, "slot index out of range");
}

std::string Partition::str() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    if (k) os << " ";
    os << blocks_[k].first << "^" << blocks_[k].second;
  }
  return os.str();
}

bool Partition::operator<(const Partition& o) const {
  return parts() < o.parts();
}

std::vector<Partition> enumerate_partitions(int n) {
  require(n >= 1, ErrorKind::Domain, "partitions of a nonpositive integer");
  std::vector<Partition> out;
  std::vector<int> cur;
  // Ascending parts generated in lexicographic order.
  std::function<void(int, int)> rec = [&](int rest, int minp) {
    if (rest == 0) {
      out.push_back(Partition::from_parts(cur));
      return;
    }
    for (int p = minp; p <= rest; ++p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, 1);
  return out;
}

std::vector<Partition> enumerate_partitions_exact(int n, int length) {
  std::vector<Partition> out;
  for (auto& p : enumerate_partitions(n))
    if (p.length() == length) out.push_back(std::move(p));
  return out;
}

std::vector<Partition> enumerate_partitions_min(int n, int min_length) {
  std::vector<Partition> out;
  for (auto& p : enumerate_partitions(n))
    if (p.length() >= min_length) out.push_back(std::move(p));
  return out;
}

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

BigInt orbit_size(const Partition& lambda) {
  BigInt denom = 1;
  for (const auto& [p, m] : lambda.blocks()) {
    BigInt f = factorial(p);
    for (int i = 0; i < m; ++i) denom *= f;
  }
  return factorial(lambda.n()) / denom;
}

BigInt block_symmetry(const Partition& lambda) {
  BigInt r = 1;
  for (const auto& [p, m] : lambda.blocks()) r *= factorial(m);
  return r;
}

namespace {

// Can the multiset `avail` (counts per part value) cover targets exactly?
bool cover(std::vector<std::pair<int, int>>& avail, std::vector<int>& targets) {
  if (targets.empty()) {
    for (const auto& [v, c] : avail)
      if (c != 0) return false;
    return true;
  }
  int t = targets.back();
  targets.pop_back();
  // Choose a sub-multiset of avail summing to t; iterate by first index used.
  std::function<bool(std::size_t, int)> pick = [&](std::size_t idx,
                                                   int rest) -> bool {
    if (rest == 0) return cover(avail, targets);
    if (idx == avail.size()) return false;
    auto& [v, c] = avail[idx];
    int maxk = std::min(c, rest / v);
    for (int k = maxk; k >= 0; --k) {
      c -= k;
      if (pick(idx + 1, rest - k * v)) {
        c += k;
        return true;
      }
      c += k;
    }
    return false;
  };
  bool ok = pick(0, t);
  targets.push_back(t);
  return ok;
}

}  // namespace

bool refines(const Partition& a, const Partition& b) {
  if (a.n() != b.n()) return false;
  std::vector<std::pair<int, int>> avail(a.blocks());
  std::vector<int> targets = b.parts();  // ascending; consumed from the back
  return cover(avail, targets);
}

}  // namespace symcrit
