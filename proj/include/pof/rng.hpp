#pragma once

#include <cstdint>
#include <random>

namespace pof {

// Deterministic random source. The raw engine is the standard-specified
// mt19937_64; the floating-point transforms are done by hand because the
// standard distributions are implementation-defined and would break
// cross-platform reproducibility of seeded runs.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform in [0, 1), 53 random bits.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Box-Muller transform; the paired draw is cached.
  double normal(double mean, double stddev);

  std::uint64_t next() { return gen_(); }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Stateless seed derivation for independent substreams, e.g. one per
// (step, draw) pair of an experiment.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b);

}  // namespace pof
