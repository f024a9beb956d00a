#ifndef SYMCRIT_RNG_HPP
#define SYMCRIT_RNG_HPP

#include <cstdint>
#include <random>

namespace symcrit {

/// Deterministic RNG used everywhere randomness is needed.  mt19937_64 has a
/// fully specified algorithm, so identical seeds give identical streams on
/// every platform; raw draws are reduced mod p directly (the tiny modulo bias
/// is irrelevant, reproducibility is not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform-ish value in [0, m).
  std::uint64_t below(std::uint64_t m) { return gen_() % m; }

 private:
  std::mt19937_64 gen_;
};

/// splitmix64 finalizer; used to derive independent per-task seeds from a
/// master seed plus a task tag, so parallel schedules cannot change results.
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace symcrit

#endif
