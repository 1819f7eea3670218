#ifndef YMOPTICS_RADIAL_HPP_
#define YMOPTICS_RADIAL_HPP_

// Radial-conformal ansatz h^a_i = delta^a_i f(r): the third-order profile
// equation, power-law roots, the Wu-Yang monopole and the conformal family
// A^a_j = -eps^a_jk d^k ln n.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ymoptics/gauge.hpp"
#include "ymoptics/smooth_field.hpp"

namespace ymo {

struct RadialJet {
  double f = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double d3 = 0.0;
};

// Scalar profile f(r) on r > 0 with optional analytic derivatives. Without
// them, derivatives come from fourth-order central differences in r.
class RadialProfile {
 public:
  using Fn = std::function<double(double)>;

  RadialProfile(std::string name, Fn f, double fd_step = 1e-3);
  RadialProfile(std::string name, Fn f, Fn d1, Fn d2, Fn d3);

  // f = r^-q.
  static RadialProfile power_law(double q);

  const std::string& name() const { return name_; }
  bool analytic() const { return static_cast<bool>(d1_); }
  double operator()(double r) const { return f_(r); }

  // Throws DomainError for r <= 0 or a stencil reaching r <= 0.
  RadialJet jet(double r) const;

  // x -> f(|x|), singular at the origin; analytic gradient f'(r) x / r when
  // the profile is analytic.
  ScalarField as_field() const;

 private:
  std::string name_;
  Fn f_, d1_, d2_, d3_;
  double fd_step_ = 1e-3;
};

// f''' + (f')^2 / (r f) - 5 f' f'' / f + 5 (f')^3 / f^2.
// Throws DomainError for r <= 0 or f(r) = 0.
double ode_residual(const RadialProfile& p, double r);

// q (2 - q)(1 - q). For f = r^-q, r^(q+3) ode_residual = -power_law_residual.
double power_law_residual(double q);

// A^d_j = -(f' / (r f)) eps^d_jk x^k.
Mat3 ansatz_potential(const RadialProfile& p, const Vec3& x);
GaugePotential ansatz_field(const RadialProfile& p);

// A^a_j = eps^a_jk x^k / r^2 with analytic derivatives, singular at r = 0.
GaugePotential wu_yang_monopole();
// Closed form B^a_j = -x^a x_j / r^4.
Mat3 wu_yang_magnetic(const Vec3& x);

// A^a_j = -eps^a_jk d_k ln n. Evaluation throws DomainError where n <= 0.
GaugePotential conformal_family(const ScalarField& n);

// Magnetic field of the ansatz potential, via gauge::magnetic_field.
Mat3 ansatz_magnetic(const RadialProfile& p, const Vec3& x);

// B^a_j = q (q - 2) x^a x_j / r^4 for f = r^-q.
Mat3 power_law_magnetic(double q, const Vec3& x);

// Reference closed form
//   B^d_j = delta^d_j [2 f'/(r f) + 4 (f'/f)^2 - f''/f]
//         + [f'' - f'/r - 2 (f')^2/f] x_j x^d / (r^2 f).
// It does not agree with ansatz_magnetic (for f = r^-q its isotropic part is
// 3q(q-1)/r^2 and its radial part has the opposite sign); it exists so the
// deviation can be measured and reported.
Mat3 reference_ansatz_magnetic(const RadialProfile& p, const Vec3& x);

// B = isotropic * delta + radial * x x^T decomposition of both forms.
struct AnsatzDiscrepancy {
  double q = 0.0;
  double r = 0.0;
  double reference_isotropic = 0.0;
  double reference_radial = 0.0;
  double oracle_isotropic = 0.0;
  double oracle_radial = 0.0;
  double max_abs_deviation = 0.0;
};

AnsatzDiscrepancy ansatz_discrepancy(double q, const Vec3& x);

struct CandidateFamily {
  std::string name;
  std::function<RadialProfile(double)> make;
};

// power_law, exp(+-r^q), exp(1/(1-qr)), exp(1/(1-r^q)), exp(+-q r^2),
// r/(1-qr), r/(1-qr^2).
std::vector<CandidateFamily> candidate_families();

struct ScanRow {
  std::string profile;
  double q = 0.0;
  std::vector<double> residuals;  // one per radius; NaN where undefined
  bool defined = true;
  bool root = false;
};

struct ScanOptions {
  double q_min = -3.0;
  double q_max = 3.0;
  double q_step = 0.25;
  std::vector<double> radii{0.5, 1.0, 2.0};
  double root_tolerance = 1e-8;
};

// Rows ordered by family, then q ascending. Throws std::invalid_argument on
// an empty or inverted range, a non-positive step or radius.
std::vector<ScanRow> ansatz_scan(const std::vector<CandidateFamily>& families,
                                 const ScanOptions& options);

}  // namespace ymo

#endif  // YMOPTICS_RADIAL_HPP_
