#pragma once

#include <cstdint>
#include <random>

namespace xpk {

// Reproducible random source. The engine is std::mt19937_64, whose output
// sequence is fixed by the standard; the bounded and real-valued draws below
// are implemented here (not via std:: distributions, whose algorithms vary
// between standard libraries) so a seed yields the same stream everywhere.
class Rng {
 public:
  static constexpr const char* kName = "mt19937_64/xpk-v1";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t uniform(std::uint64_t bound);

  // Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform01() < p; }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

// Seed of the i-th independent stream derived from a base seed. Trials use
// derive_seed(base, trial) so they can run in any order or concurrently.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  return splitmix64(splitmix64(base) ^ (stream * 0x9e3779b97f4a7c15ULL + 1));
}

}  // namespace xpk
