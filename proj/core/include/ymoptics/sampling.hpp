#ifndef YMOPTICS_SAMPLING_HPP_
#define YMOPTICS_SAMPLING_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "ymoptics/tensor3.hpp"

namespace ymo {

// 64-bit LCG, x <- 6364136223846793005 x + 1442695040888963407 (mod 2^64).
// Fixed by the standard, so seeded sample sets are identical on every
// conforming implementation.
using SampleEngine =
    std::linear_congruential_engine<std::uint64_t, 6364136223846793005ULL,
                                    1442695040888963407ULL, 0ULL>;

class SampleStream {
 public:
  explicit SampleStream(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1): the top 53 bits of the next engine output.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform direction: rejection sampling in the cube [-1, 1]^3.
  Vec3 direction();

  // Point with direction uniform and radius uniform in [r_min, r_max].
  Vec3 shell_point(double r_min, double r_max);

 private:
  SampleEngine engine_;
};

std::vector<Vec3> sample_shell(std::uint64_t seed, int count, double r_min,
                               double r_max);

// Points uniform in the cube [-half_width, half_width]^3.
std::vector<Vec3> sample_cube(std::uint64_t seed, int count,
                              double half_width);

}  // namespace ymo

#endif  // YMOPTICS_SAMPLING_HPP_
