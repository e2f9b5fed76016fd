#pragma once

#include <cstdint>
#include <random>

namespace fillcurve {

/// Seeded 64-bit generator used by every randomized path.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Bounded draws use rejection sampling on the raw 64-bit output
/// rather than std::uniform_int_distribution, whose algorithm is
/// implementation-defined. Together this makes every draw reproducible across
/// compilers and platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, n). n must be nonzero.
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);

/// Sub-seed for task `index` of a run seeded with `seed`:
/// splitmix64(seed ^ splitmix64(index + 0x9e3779b97f4a7c15)).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

/// Sub-seed for a two-dimensional task grid.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t i, std::uint64_t j);

}  // namespace fillcurve
