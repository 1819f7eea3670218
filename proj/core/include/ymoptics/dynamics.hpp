#ifndef YMOPTICS_DYNAMICS_HPP_
#define YMOPTICS_DYNAMICS_HPP_

// Light rays in optical media (geodesics, optionally with torsion) and
// coloured-particle (Wong) dynamics, integrated with fixed-step RK4.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ymoptics/gauge.hpp"
#include "ymoptics/optics.hpp"
#include "ymoptics/smooth_field.hpp"
#include "ymoptics/transcribe.hpp"

namespace ymo {

// Position, velocity and algebra-valued colour charge I^a.
struct PhaseState {
  Vec3 x;
  Vec3 v;
  Vec3 I;

  PhaseState& operator+=(const PhaseState& o);
  friend PhaseState operator+(PhaseState a, const PhaseState& b) {
    return a += b;
  }
  friend PhaseState operator*(PhaseState a, double s) {
    a.x = a.x * s;
    a.v = a.v * s;
    a.I = a.I * s;
    return a;
  }
  friend PhaseState operator*(double s, const PhaseState& a) { return a * s; }
  bool all_finite() const {
    return x.all_finite() && v.all_finite() && I.all_finite();
  }
};

enum class Termination { span_complete, singular_locus, domain_exit };
std::string to_string(Termination t);

struct Sample {
  double s = 0.0;
  PhaseState state;
};

struct Trajectory {
  std::vector<Sample> samples;
  Termination reason = Termination::span_complete;
  const PhaseState& final_state() const { return samples.back().state; }
  double final_parameter() const { return samples.back().s; }
};

// Thrown when the state stops being finite; carries everything integrated up
// to the last finite state.
class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(const std::string& what, Trajectory partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const Trajectory& partial() const { return partial_; }

 private:
  Trajectory partial_;
};

using Rhs = std::function<PhaseState(const PhaseState&)>;

struct IntegrationOptions {
  double step = 1e-3;
  double span = 1.0;
  SingularLocus locus;
  // Integration stops once the position comes this close to the locus;
  // a negative value means kClearanceSteps * step.
  double clearance = -1.0;
  // Optional region; leaving it ends the run with domain_exit.
  std::function<bool(const Vec3&)> domain;
  // Keep every n-th step (the first and last states are always kept).
  int record_every = 1;
};

// Classical RK4 with fixed step; the last step is shortened to land on span.
// A DomainError raised by the right-hand side inside a stage ends the run
// with singular_locus. Throws std::invalid_argument on a non-positive step or
// negative span, IntegrationError on non-finite states.
Trajectory integrate(const Rhs& rhs, const PhaseState& start,
                     const IntegrationOptions& options);

PhaseState rk4_step(const Rhs& rhs, const PhaseState& y, double h);

// Geodesics of g, or autoparallels of christoffel(g) - K(T) when a torsion
// field is given:
//   dv^i = -LC^i_jk v^j v^k + g^in g_jm T^m_kn v^j v^k.
struct GeodesicMedium {
  MetricField metric;
  std::optional<SmoothField<TorsionTensor>> torsion;
};

GeodesicMedium geodesic_medium(const OpticalMedium& medium);
PhaseState geodesic_rhs(const GeodesicMedium& medium, const PhaseState& y);
Vec3 geodesic_acceleration(const Mat3& g, const Connection3& christoffel,
                           const TorsionTensor* torsion, const Vec3& v);

// Integrates a ray in an optical medium; locus and region come from the
// medium.
Trajectory trace_ray(const OpticalMedium& medium, const Vec3& x0,
                     const Vec3& v0, double span, double step,
                     int record_every = 1);

enum class ForceLaw {
  // dv^i = 1/2 I^s_r R^r_s^ij v_j with I^s_r = h_a^s eps_abc I^b h^c_r and R
  // the transcribed curvature; reduces to -I_c F^c_ij v^j for h = delta.
  lorentz,
  // dv^i = -Gamma^i_jk v^j v^k for the transcribed connection.
  geodesic,
};

std::string to_string(ForceLaw law);

struct WongSystem {
  GaugePotential potential;
  Dreibein dreibein;
  ForceLaw law = ForceLaw::lorentz;
};

// dx = v, dv from the force law, dI_a = -eps_abc (A^b_k v^k) I^c.
PhaseState wong_rhs(const WongSystem& sys, const PhaseState& y);

SingularLocus wong_locus(const WongSystem& sys);

Trajectory integrate_wong(const WongSystem& sys, const PhaseState& start,
                          double span, double step, int record_every = 1);

struct WongInvariants {
  double color_norm2 = 0.0;  // I_a I^a
  double speed2 = 0.0;       // g_ij v^i v^j
  double alignment = 0.0;    // I_a h^a_k v^k
};

WongInvariants wong_invariants(const WongSystem& sys, const PhaseState& y);

// Largest relative drift |q(s) - q(0)| / max(|q(0)|, 1e-300) of each
// invariant over the recorded samples.
struct ConservationReport {
  double color_norm2 = 0.0;
  double speed2 = 0.0;
  double alignment = 0.0;
  double worst() const;
};

ConservationReport conserved_report(const WongSystem& sys,
                                    const Trajectory& trajectory);

// Bundle of rays from x0 with unit metric speed, directions uniform over the
// hemisphere pointing towards -x0, each traced to parameter `span`.
struct BundleResult {
  std::vector<Trajectory> rays;
  std::vector<Vec3> directions;
};

BundleResult trace_bundle(const OpticalMedium& medium, const Vec3& x0,
                          int count, std::uint64_t seed, double span,
                          double step, int record_every = 1);

}  // namespace ymo

#endif  // YMOPTICS_DYNAMICS_HPP_
