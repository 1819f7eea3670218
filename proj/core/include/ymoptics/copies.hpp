#ifndef YMOPTICS_COPIES_HPP_
#define YMOPTICS_COPIES_HPP_

// Gauge copies: distinct potentials with the same magnetic field, told apart
// by the torsion of their transcriptions through a common dreibein.

#include <vector>

#include "ymoptics/gauge.hpp"
#include "ymoptics/transcribe.hpp"

namespace ymo {

struct CurvatureComparison {
  bool equal = false;
  // max over samples of the spectral norm of B(A1) - B(A2)
  double max_deviation = 0.0;
};

// Throws std::invalid_argument on an empty sample set.
CurvatureComparison curvature_equal(const GaugePotential& a1,
                                    const GaugePotential& a2,
                                    const std::vector<Vec3>& points,
                                    double tol);

// T^k_ij of the transcribed connection at each sample. A singular frame
// raises SingularMatrixError.
std::vector<TorsionTensor> torsion_fingerprint(const GaugePotential& a,
                                               const Dreibein& h,
                                               const std::vector<Vec3>& points);

struct CopyReport {
  int samples = 0;
  double potential_difference = 0.0;  // max |A1 - A2|
  double curvature_deviation = 0.0;   // max spectral norm of B1 - B2
  double torsion_difference = 0.0;    // max |T1 - T2|
  // Both transcribed connections preserve g = h^T h: max compatibility
  // residual of either.
  double metric_residual = 0.0;
  // Flat-host M of K2 - K1, the contorsion of the second connection relative
  // to the first (Gamma2 = Gamma1 - (K2 - K1)); max entry.
  double contorsion_m_residual = 0.0;
  // max |M1 - M2| with M_i the torsion part of each transcribed curvature.
  double m_difference = 0.0;
  bool curvature_equal = false;
  // Curvature-equal and distinct potentials.
  bool are_copies = false;
};

CopyReport copy_report(const GaugePotential& a1, const GaugePotential& a2,
                       const Dreibein& h, const std::vector<Vec3>& points,
                       double tol = 1e-8);

}  // namespace ymo

#endif  // YMOPTICS_COPIES_HPP_
