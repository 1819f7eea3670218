#ifndef YMOPTICS_TRANSCRIBE_HPP_
#define YMOPTICS_TRANSCRIBE_HPP_

// Transcription of an SU(2) potential into a linear connection on 3-space
// through a dreibein, and the geometry that comes with it: metric,
// Christoffel symbols, torsion, contorsion, curvature and the identities
// relating them.
//
// Slot conventions (0-based storage, same order as the written indices):
//   dreibein        h(a, i)        = h^a_i
//   spin connection w(a, b, k)     = omega^a_{bk}
//   connection      G(k, i, j)     = Gamma^k_{ij}, j is the derivative index
//   torsion         T(k, i, j)     = T^k_{ij}
//   contorsion      K(k, i, j)     = K^k_{ij}
//   curvature       R(r, s, i, j)  = R^r_{sij}, antisymmetric in (i, j)
// Antisymmetrisation [ij] carries no numerical factor.

#include "ymoptics/gauge.hpp"
#include "ymoptics/smooth_field.hpp"
#include "ymoptics/tensor3.hpp"

namespace ymo {

using Connection3 = Tensor3R3;
using SpinConnection = Tensor3R3;
using TorsionTensor = Tensor3R3;
using Contorsion = Tensor3R3;
using CurvatureTensor = Tensor3R4;

class Dreibein : public SmoothField<Mat3> {
 public:
  using SmoothField<Mat3>::SmoothField;
  Dreibein() = default;
  explicit Dreibein(SmoothField<Mat3> f) : SmoothField<Mat3>(std::move(f)) {}

  // inv(i, a) = h_a^i. Throws SingularMatrixError for a singular frame.
  Mat3 inverse_at(const Vec3& x) const { return inverse((*this)(x)); }
};

Dreibein identity_dreibein();

// h^a_i = delta^a_i n(x); analytic derivative when n carries one.
Dreibein isotropic_dreibein(const ScalarField& n);

// omega^a_{ck} = eps^a_{bc} A^b_k.
SpinConnection spin_connection(const GaugePotential& a, const Vec3& x);
ConnectionField spin_connection_field(const GaugePotential& a);

// Gamma^i_{jk} = h_a^i omega^a_{bk} h^b_j + h_c^i d_k h^c_j.
Connection3 transcribe_connection(const GaugePotential& a, const Dreibein& h,
                                  const Vec3& x);
ConnectionField transcribed_connection_field(const GaugePotential& a,
                                             const Dreibein& h);

// R^r_{sij} = d_i G^r_{sj} - d_j G^r_{si} + G^r_{ki} G^k_{sj}
//             - G^r_{kj} G^k_{si}.
// Works for linear and spin connections alike.
CurvatureTensor curvature(const ConnectionField& c, const Vec3& x);
CurvatureField curvature_field(const ConnectionField& c);

// R^a_{bij} = eps^a_{cb} eps_{ijk} B^{ck}.
CurvatureTensor curvature_from_magnetic(const Mat3& b);

// R^r_{sij} = h_a^r h^b_s R^a_{bij}.
CurvatureTensor transmute_curvature(const CurvatureTensor& frame,
                                    const Mat3& h, const Mat3& h_inv);

// Second route to the transcribed curvature: h_a^r [D_i, D_j] h^a_s with D
// the gauge-covariant derivative on the algebra index, evaluated by nested
// finite differences.
CurvatureTensor commutator_curvature(const GaugePotential& a,
                                     const Dreibein& h, const Vec3& x);

// T^k_{ij} = -G^k_{[ij]}.
TorsionTensor torsion(const Connection3& c);

struct FrameTorsion {
  TorsionTensor frame;  // T^a_{ij}
  TorsionTensor space;  // T^k_{ij} = h_a^k T^a_{ij}
};

// T^a_{ij} = d_i h^a_j - d_j h^a_i + omega^a_{ci} h^c_j - omega^a_{cj} h^c_i.
FrameTorsion frame_torsion(const GaugePotential& a, const Dreibein& h,
                           const Vec3& x);

// g_ij = delta_ab h^a_i h^b_j.
Mat3 metric_from_dreibein(const Dreibein& h, const Vec3& x);
MetricField metric_field(const Dreibein& h);

// Levi-Civita connection
// G^k_{ij} = 1/2 g^{kr} (d_i g_{jr} + d_j g_{ir} - d_r g_{ij}).
Connection3 christoffel(const MetricField& g, const Vec3& x);
ConnectionField christoffel_field(const MetricField& g);

// K^k_{ij} = 1/2 (T^k_{ij} + T_{ij}^k + T_{ji}^k), indices moved with g.
// Throws std::invalid_argument unless T is antisymmetric in (i, j).
Contorsion contorsion_from_torsion(const TorsionTensor& t, const Mat3& g);

// The unique g-preserving connection with torsion T: christoffel - K.
Connection3 reconstruct_connection(const MetricField& g,
                                   const TorsionTensor& t, const Vec3& x);
ConnectionField reconstructed_connection_field(
    const MetricField& g, const SmoothField<TorsionTensor>& t);

// Contorsion of the transcription of A through h: christoffel(g_h) - Gamma.
SmoothField<Contorsion> contorsion_field(const GaugePotential& a,
                                         const Dreibein& h);

// res(i, j, k) = d_k g_ij - G_ijk - G_jik with G_ijk = g_ir G^r_jk.
Tensor3R3 compatibility_residual(const MetricField& g,
                                 const ConnectionField& c, const Vec3& x);

struct CurvatureSplit {
  CurvatureTensor riemannian;  // curvature of the Levi-Civita connection
  CurvatureTensor torsion_part;  // M^r_{sij}
  CurvatureTensor total;  // riemannian - torsion_part
};

// Curvature of christoffel(g) - K split as R = R_lc - M with
// M = d_i K_sj - d_j K_si + G K + K G - G K - K G - K^r_ni K^n_sj
//     + K^r_nj K^n_si.
CurvatureSplit curvature_split(const MetricField& g,
                               const SmoothField<Contorsion>& k,
                               const Vec3& x);

// M for a flat host (christoffel = 0):
// d_i K^r_sj - d_j K^r_si - K^r_ki K^k_sj + K^r_kj K^k_si.
CurvatureTensor flat_host_torsion_curvature(const SmoothField<Contorsion>& k,
                                            const Vec3& x);

// res(a, i, j, k) = sum over cyclic (i j k) of
//   d_i T^a_jk + omega^a_bi T^b_jk - R^a_bjk h^b_i.
// Vanishes identically for smooth (A, h).
Tensor3R4 bianchi_residual(const Dreibein& h, const GaugePotential& a,
                           const Vec3& x);

}  // namespace ymo

#endif  // YMOPTICS_TRANSCRIBE_HPP_
