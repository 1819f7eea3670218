#ifndef YMOPTICS_GAUGE_HPP_
#define YMOPTICS_GAUGE_HPP_

// Static SU(2) configurations in the temporal gauge A^a_0 = 0.
//
// A potential is the field x -> A(a, i) = A^a_i; colour-vector fields
// (E, B) use the same (algebra, space) slot order. Structure constants are
// f^a_bc = eps_abc and the Killing-Cartan metric is delta_ab, so algebra
// indices are raised and lowered freely.

#include "ymoptics/smooth_field.hpp"
#include "ymoptics/tensor3.hpp"

namespace ymo {

class GaugePotential : public SmoothField<Mat3> {
 public:
  using SmoothField<Mat3>::SmoothField;
  GaugePotential() = default;
  explicit GaugePotential(SmoothField<Mat3> f)
      : SmoothField<Mat3>(std::move(f)) {}
};

class ColorVectorField : public SmoothField<Mat3> {
 public:
  using SmoothField<Mat3>::SmoothField;
  ColorVectorField() = default;
  explicit ColorVectorField(SmoothField<Mat3> f)
      : SmoothField<Mat3>(std::move(f)) {}
};

GaugePotential zero_potential();
ColorVectorField zero_color_field();

// A' = lambda A (derivatives scale too).
GaugePotential scaled(const GaugePotential& a, double lambda);

// Global colour rotation A'^a_i = R^a_b A^b_i.
GaugePotential rotate_color(const GaugePotential& a, const Mat3& rotation);

// B^{ai} = eps^{ijk} (d_j A^a_k + 1/2 eps^a_bc A^b_j A^c_k).
Mat3 magnetic_field(const GaugePotential& a, const Vec3& x);

// B as a field (no analytic derivative; curls of it use finite differences).
ColorVectorField magnetic_field_of(const GaugePotential& a);

// F^a_ij = eps_ijk B^{ak}.
Tensor3R3 field_strength(const Mat3& b);

// G^a = d_k E^{ak} + eps^a_bc A^b_k E^{ck}.
Vec3 gauss_residual(const GaugePotential& a, const ColorVectorField& e,
                    const Vec3& x);

// (curl B)^{ai} + eps^i_jk eps^a_bc A^{bj} B^{ck}; zero iff A solves the
// static sourceless equations at x.
Mat3 ampere_residual(const GaugePotential& a, const Vec3& x);

// 1/2 sum (E^a_i^2 + B^a_i^2).
double energy_density(const Mat3& e, const Mat3& b);
double energy_density(const ColorVectorField& e, const ColorVectorField& b,
                      const Vec3& x);

namespace detail {
// Same as magnetic_field without the clearance check; for use inside FD
// stencils that already passed it.
Mat3 magnetic_field_unchecked(const GaugePotential& a, const Vec3& x);
}  // namespace detail

}  // namespace ymo

#endif  // YMOPTICS_GAUGE_HPP_
