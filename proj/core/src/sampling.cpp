#include "ymoptics/sampling.hpp"

namespace ymo {

double SampleStream::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

Vec3 SampleStream::direction() {
  for (;;) {
    Vec3 u = vec3(uniform(-1.0, 1.0), uniform(-1.0, 1.0), uniform(-1.0, 1.0));
    const double n = norm(u);
    if (n <= 1.0 && n > 1e-3) return u / n;
  }
}

Vec3 SampleStream::shell_point(double r_min, double r_max) {
  const Vec3 d = direction();
  return d * uniform(r_min, r_max);
}

std::vector<Vec3> sample_shell(std::uint64_t seed, int count, double r_min,
                               double r_max) {
  SampleStream s(seed);
  std::vector<Vec3> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) pts.push_back(s.shell_point(r_min, r_max));
  return pts;
}

std::vector<Vec3> sample_cube(std::uint64_t seed, int count,
                              double half_width) {
  SampleStream s(seed);
  std::vector<Vec3> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i)
    pts.push_back(vec3(s.uniform(-half_width, half_width),
                       s.uniform(-half_width, half_width),
                       s.uniform(-half_width, half_width)));
  return pts;
}

}  // namespace ymo
