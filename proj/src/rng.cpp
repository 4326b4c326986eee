#include "pof/rng.hpp"

#include <cmath>
#include <numbers>

namespace pof {

double Rng::normal(double mean, double stddev) {
  if (have_spare_) {
    have_spare_ = false;
    return mean + stddev * spare_;
  }
  double u1 = 1.0 - uniform();  // (0, 1], keeps the log finite
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double z = r * std::cos(2.0 * std::numbers::pi * u2);
  spare_ = r * std::sin(2.0 * std::numbers::pi * u2);
  have_spare_ = true;
  return mean + stddev * z;
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  auto mix = [](std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  };
  std::uint64_t s = mix(seed + 0x9E3779B97F4A7C15ull);
  s = mix(s + a * 0x9E3779B97F4A7C15ull);
  s = mix(s + b * 0x9E3779B97F4A7C15ull);
  return s;
}

}  // namespace pof
