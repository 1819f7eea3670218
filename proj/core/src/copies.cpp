#include "ymoptics/copies.hpp"

#include <algorithm>
#include <stdexcept>

namespace ymo {

CurvatureComparison curvature_equal(const GaugePotential& a1,
                                    const GaugePotential& a2,
                                    const std::vector<Vec3>& points,
                                    double tol) {
  if (points.empty()) throw std::invalid_argument("empty sample set");
  CurvatureComparison out;
  for (const Vec3& x : points) {
    const Mat3 diff = magnetic_field(a1, x) - magnetic_field(a2, x);
    out.max_deviation = std::max(out.max_deviation, spectral_norm(diff));
  }
  out.equal = out.max_deviation <= tol;
  return out;
}

std::vector<TorsionTensor> torsion_fingerprint(
    const GaugePotential& a, const Dreibein& h,
    const std::vector<Vec3>& points) {
  std::vector<TorsionTensor> out;
  out.reserve(points.size());
  for (const Vec3& x : points) out.push_back(torsion(transcribe_connection(a, h, x)));
  return out;
}

CopyReport copy_report(const GaugePotential& a1, const GaugePotential& a2,
                       const Dreibein& h, const std::vector<Vec3>& points,
                       double tol) {
  const CurvatureComparison cmp = curvature_equal(a1, a2, points, tol);
  const MetricField g = metric_field(h);
  const SmoothField<Contorsion> k1 = contorsion_field(a1, h);
  const SmoothField<Contorsion> k2 = contorsion_field(a2, h);
  const SmoothField<Contorsion> dk(
      [k1, k2](const Vec3& x) { return k2(x) - k1(x); },
      k1.locus().merged(k2.locus()), {}, std::min(k1.step(), k2.step()));

  CopyReport rep;
  rep.samples = static_cast<int>(points.size());
  rep.curvature_deviation = cmp.max_deviation;
  rep.curvature_equal = cmp.equal;
  for (const Vec3& x : points) {
    rep.potential_difference =
        std::max(rep.potential_difference, max_abs_diff(a1(x), a2(x)));
    const TorsionTensor t1 = torsion(transcribe_connection(a1, h, x));
    const TorsionTensor t2 = torsion(transcribe_connection(a2, h, x));
    rep.torsion_difference =
        std::max(rep.torsion_difference, max_abs_diff(t1, t2));
    rep.metric_residual = std::max(
        {rep.metric_residual,
         compatibility_residual(g, transcribed_connection_field(a1, h), x)
             .max_abs(),
         compatibility_residual(g, transcribed_connection_field(a2, h), x)
             .max_abs()});
    rep.contorsion_m_residual =
        std::max(rep.contorsion_m_residual,
                 flat_host_torsion_curvature(dk, x).max_abs());
    const CurvatureSplit s1 = curvature_split(g, k1, x);
    const CurvatureSplit s2 = curvature_split(g, k2, x);
    rep.m_difference = std::max(
        rep.m_difference, max_abs_diff(s1.torsion_part, s2.torsion_part));
  }
  rep.are_copies = rep.curvature_equal && rep.potential_difference > tol;
  return rep;
}

}  // namespace ymo
