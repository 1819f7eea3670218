#include "ymoptics/gauge.hpp"

namespace ymo {

GaugePotential zero_potential() {
  return GaugePotential([](const Vec3&) { return Mat3{}; }, {},
                        [](const Vec3&, int) { return Mat3{}; });
}

ColorVectorField zero_color_field() {
  return ColorVectorField([](const Vec3&) { return Mat3{}; }, {},
                          [](const Vec3&, int) { return Mat3{}; });
}

GaugePotential scaled(const GaugePotential& a, double lambda) {
  SmoothField<Mat3>::Deriv d;
  if (a.has_analytic_derivative())
    d = [a, lambda](const Vec3& x, int k) {
      return lambda * a.analytic_derivative()(x, k);
    };
  return GaugePotential([a, lambda](const Vec3& x) { return lambda * a(x); },
                        a.locus(), d, a.step());
}

GaugePotential rotate_color(const GaugePotential& a, const Mat3& rotation) {
  SmoothField<Mat3>::Deriv d;
  if (a.has_analytic_derivative())
    d = [a, rotation](const Vec3& x, int k) {
      return matmul(rotation, a.analytic_derivative()(x, k));
    };
  return GaugePotential(
      [a, rotation](const Vec3& x) { return matmul(rotation, a(x)); },
      a.locus(), d, a.step());
}

namespace detail {

Mat3 magnetic_field_unchecked(const GaugePotential& a, const Vec3& x) {
  const Mat3 pot = a(x);
  std::array<Mat3, kDim> d;
  for (int j = 0; j < kDim; ++j) d[j] = partial(a, x, j);

  Mat3 b;
  for (int c = 0; c < kDim; ++c)
    for (int i = 0; i < kDim; ++i) {
      double s = 0.0;
      for (int j = 0; j < kDim; ++j)
        for (int k = 0; k < kDim; ++k) {
          const int eijk = levi_civita(i, j, k);
          if (eijk == 0) continue;
          double quad = 0.0;
          for (int p = 0; p < kDim; ++p)
            for (int q = 0; q < kDim; ++q) {
              const int e = levi_civita(c, p, q);
              if (e != 0) quad += e * pot(p, j) * pot(q, k);
            }
          s += eijk * (d[j](c, k) + 0.5 * quad);
        }
      b(c, i) = s;
    }
  return b;
}

}  // namespace detail

Mat3 magnetic_field(const GaugePotential& a, const Vec3& x) {
  a.require_clearance(x);
  return detail::magnetic_field_unchecked(a, x);
}

ColorVectorField magnetic_field_of(const GaugePotential& a) {
  return ColorVectorField(
      [a](const Vec3& x) { return detail::magnetic_field_unchecked(a, x); },
      a.locus(), {}, a.step());
}

Tensor3R3 field_strength(const Mat3& b) {
  Tensor3R3 f;
  for (int a = 0; a < kDim; ++a)
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) {
        double s = 0.0;
        for (int k = 0; k < kDim; ++k) s += levi_civita(i, j, k) * b(a, k);
        f(a, i, j) = s;
      }
  return f;
}

Vec3 gauss_residual(const GaugePotential& a, const ColorVectorField& e,
                    const Vec3& x) {
  a.require_clearance(x);
  e.require_clearance(x);
  const Mat3 pot = a(x);
  const Mat3 ef = e(x);
  Vec3 g;
  for (int k = 0; k < kDim; ++k) {
    const Mat3 de = partial(e, x, k);
    for (int c = 0; c < kDim; ++c) g(c) += de(c, k);
  }
  for (int c = 0; c < kDim; ++c)
    for (int p = 0; p < kDim; ++p)
      for (int q = 0; q < kDim; ++q) {
        const int eps = levi_civita(c, p, q);
        if (eps == 0) continue;
        for (int k = 0; k < kDim; ++k) g(c) += eps * pot(p, k) * ef(q, k);
      }
  return g;
}

Mat3 ampere_residual(const GaugePotential& a, const Vec3& x) {
  a.require_clearance(x);
  const ColorVectorField bf = magnetic_field_of(a);
  const Mat3 pot = a(x);
  const Mat3 b = bf(x);
  std::array<Mat3, kDim> db;
  for (int j = 0; j < kDim; ++j) db[j] = partial(bf, x, j);

  Mat3 res;
  for (int c = 0; c < kDim; ++c)
    for (int i = 0; i < kDim; ++i) {
      double s = 0.0;
      for (int j = 0; j < kDim; ++j)
        for (int k = 0; k < kDim; ++k) {
          const int eijk = levi_civita(i, j, k);
          if (eijk == 0) continue;
          s += eijk * db[j](c, k);
          for (int p = 0; p < kDim; ++p)
            for (int q = 0; q < kDim; ++q) {
              const int e = levi_civita(c, p, q);
              if (e != 0) s += eijk * e * pot(p, j) * b(q, k);
            }
        }
      res(c, i) = s;
    }
  return res;
}

double energy_density(const Mat3& e, const Mat3& b) {
  double s = 0.0;
  for (std::size_t n = 0; n < Mat3::kSize; ++n) s += e[n] * e[n] + b[n] * b[n];
  return 0.5 * s;
}

double energy_density(const ColorVectorField& e, const ColorVectorField& b,
                      const Vec3& x) {
  return energy_density(e(x), b(x));
}

}  // namespace ymo
