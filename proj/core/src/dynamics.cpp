#include "ymoptics/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "ymoptics/sampling.hpp"

namespace ymo {

PhaseState& PhaseState::operator+=(const PhaseState& o) {
  x = x + o.x;
  v = v + o.v;
  I = I + o.I;
  return *this;
}

std::string to_string(Termination t) {
  switch (t) {
    case Termination::span_complete:
      return "span_complete";
    case Termination::singular_locus:
      return "singular_locus";
    case Termination::domain_exit:
      return "domain_exit";
  }
  return "unknown";
}

std::string to_string(ForceLaw law) {
  return law == ForceLaw::lorentz ? "lorentz" : "geodesic";
}

PhaseState rk4_step(const Rhs& rhs, const PhaseState& y, double h) {
  const PhaseState k1 = rhs(y);
  const PhaseState k2 = rhs(y + k1 * (0.5 * h));
  const PhaseState k3 = rhs(y + k2 * (0.5 * h));
  const PhaseState k4 = rhs(y + k3 * h);
  return y + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0);
}

Trajectory integrate(const Rhs& rhs, const PhaseState& start,
                     const IntegrationOptions& options) {
  if (!(options.step > 0.0))
    throw std::invalid_argument("integration step must be positive");
  if (!(options.span >= 0.0))
    throw std::invalid_argument("integration span must be non-negative");
  const int every = std::max(1, options.record_every);

  Trajectory traj;
  traj.samples.push_back({0.0, start});
  if (!start.all_finite())
    throw IntegrationError("non-finite initial state", traj);

  const double clearance = options.clearance < 0.0
                               ? kClearanceSteps * options.step
                               : options.clearance;
  auto too_close = [&](const Vec3& x) {
    return !options.locus.empty() && options.locus.distance(x) < clearance;
  };
  if (too_close(start.x)) {
    traj.reason = Termination::singular_locus;
    return traj;
  }
  if (options.domain && !options.domain(start.x)) {
    traj.reason = Termination::domain_exit;
    return traj;
  }

  PhaseState y = start;
  double s = 0.0;
  long n = 0;
  bool last_recorded = true;
  while (s < options.span) {
    // s = n * step avoids accumulating rounding in the parameter.
    double s_next = static_cast<double>(n + 1) * options.step;
    if (s_next >= options.span * (1.0 - 1e-14)) s_next = options.span;
    const double h = s_next - s;
    PhaseState next;
    try {
      next = rk4_step(rhs, y, h);
    } catch (const DomainError&) {
      traj.reason = Termination::singular_locus;
      break;
    }
    if (!next.all_finite()) {
      if (!last_recorded) traj.samples.push_back({s, y});
      throw IntegrationError("state became non-finite at s = " +
                                 std::to_string(s_next),
                             traj);
    }
    ++n;
    if (too_close(next.x)) {
      if (!last_recorded) traj.samples.push_back({s, y});
      traj.reason = Termination::singular_locus;
      return traj;
    }
    if (options.domain && !options.domain(next.x)) {
      if (!last_recorded) traj.samples.push_back({s, y});
      traj.reason = Termination::domain_exit;
      return traj;
    }
    y = next;
    s = s_next;
    last_recorded = (n % every == 0) || s >= options.span;
    if (last_recorded) traj.samples.push_back({s, y});
  }
  if (!last_recorded) traj.samples.push_back({s, y});
  return traj;
}

Vec3 geodesic_acceleration(const Mat3& g, const Connection3& christoffel,
                           const TorsionTensor* torsion, const Vec3& v) {
  Vec3 a;
  for (int i = 0; i < kDim; ++i) {
    double s = 0.0;
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k) s -= christoffel(i, j, k) * v(j) * v(k);
    a(i) = s;
  }
  if (torsion) {
    const Mat3 ginv = inverse(g);
    const Vec3 lowered = matvec(g, v);
    Vec3 w;  // w_n = T^m_kn v_m v^k
    for (int nn = 0; nn < kDim; ++nn) {
      double s = 0.0;
      for (int m = 0; m < kDim; ++m)
        for (int k = 0; k < kDim; ++k)
          s += (*torsion)(m, k, nn) * lowered(m) * v(k);
      w(nn) = s;
    }
    a = a + matvec(ginv, w);
  }
  return a;
}

GeodesicMedium geodesic_medium(const OpticalMedium& medium) {
  return GeodesicMedium{medium.metric(), std::nullopt};
}

PhaseState geodesic_rhs(const GeodesicMedium& medium, const PhaseState& y) {
  const Mat3 g = medium.metric(y.x);
  const Connection3 lc = christoffel(medium.metric, y.x);
  std::optional<TorsionTensor> t;
  if (medium.torsion) t = (*medium.torsion)(y.x);
  PhaseState d;
  d.x = y.v;
  d.v = geodesic_acceleration(g, lc, t ? &*t : nullptr, y.v);
  return d;
}

Trajectory trace_ray(const OpticalMedium& medium, const Vec3& x0,
                     const Vec3& v0, double span, double step,
                     int record_every) {
  const GeodesicMedium gm = geodesic_medium(medium);
  IntegrationOptions opt;
  opt.step = step;
  opt.span = span;
  opt.locus = medium.locus();
  opt.record_every = record_every;
  if (medium.bounding_radius())
    opt.domain = [medium](const Vec3& x) { return medium.inside(x); };
  return integrate([gm](const PhaseState& y) { return geodesic_rhs(gm, y); },
                   PhaseState{x0, v0, Vec3{}}, opt);
}

namespace {

// sum_k A^b_k v^k.
Vec3 potential_along(const Mat3& a, const Vec3& v) { return matvec(a, v); }

}  // namespace

SingularLocus wong_locus(const WongSystem& sys) {
  return sys.potential.locus().merged(sys.dreibein.locus());
}

PhaseState wong_rhs(const WongSystem& sys, const PhaseState& y) {
  sys.potential.require_clearance(y.x);
  sys.dreibein.require_clearance(y.x);
  PhaseState d;
  d.x = y.v;

  const Mat3 pot = sys.potential(y.x);
  const Vec3 av = potential_along(pot, y.v);
  for (int a = 0; a < kDim; ++a) {
    double s = 0.0;
    for (int b = 0; b < kDim; ++b)
      for (int c = 0; c < kDim; ++c)
        s -= levi_civita(a, b, c) * av(b) * y.I(c);
    d.I(a) = s;
  }

  if (sys.law == ForceLaw::geodesic) {
    const Connection3 gam = transcribe_connection(sys.potential, sys.dreibein,
                                                  y.x);
    for (int i = 0; i < kDim; ++i) {
      double s = 0.0;
      for (int j = 0; j < kDim; ++j)
        for (int k = 0; k < kDim; ++k) s -= gam(i, j, k) * y.v(j) * y.v(k);
      d.v(i) = s;
    }
    return d;
  }

  const Mat3 h = sys.dreibein(y.x);
  const Mat3 hinv = inverse(h);
  const Mat3 g = matmul(transpose(h), h);
  const Mat3 ginv = inverse(g);
  const CurvatureTensor r = transmute_curvature(
      curvature_from_magnetic(magnetic_field(sys.potential, y.x)), h, hinv);

  // charge(s, r) = I^s_r = h_a^s eps_abc I^b h^c_r
  Mat3 eps_i;
  for (int a = 0; a < kDim; ++a)
    for (int c = 0; c < kDim; ++c) {
      double s = 0.0;
      for (int b = 0; b < kDim; ++b) s += levi_civita(a, b, c) * y.I(b);
      eps_i(a, c) = s;
    }
  const Mat3 charge = matmul(hinv, matmul(eps_i, h));

  // f_ij = 1/2 I^s_r R^r_sij, then dv^i = g^ik f_kl g^lj v_j = g^ik f_kl v^l.
  Mat3 f;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) {
      double s = 0.0;
      for (int sl = 0; sl < kDim; ++sl)
        for (int rl = 0; rl < kDim; ++rl) s += charge(sl, rl) * r(rl, sl, i, j);
      f(i, j) = 0.5 * s;
    }
  d.v = matvec(ginv, matvec(f, y.v));
  return d;
}

Trajectory integrate_wong(const WongSystem& sys, const PhaseState& start,
                          double span, double step, int record_every) {
  IntegrationOptions opt;
  opt.step = step;
  opt.span = span;
  opt.locus = wong_locus(sys);
  opt.record_every = record_every;
  return integrate([sys](const PhaseState& y) { return wong_rhs(sys, y); },
                   start, opt);
}

WongInvariants wong_invariants(const WongSystem& sys, const PhaseState& y) {
  const Mat3 h = sys.dreibein(y.x);
  const Vec3 hv = matvec(h, y.v);
  WongInvariants w;
  w.color_norm2 = dot(y.I, y.I);
  w.speed2 = dot(hv, hv);
  w.alignment = dot(y.I, hv);
  return w;
}

double ConservationReport::worst() const {
  return std::max({color_norm2, speed2, alignment});
}

ConservationReport conserved_report(const WongSystem& sys,
                                    const Trajectory& trajectory) {
  ConservationReport rep;
  if (trajectory.samples.empty()) return rep;
  const WongInvariants q0 =
      wong_invariants(sys, trajectory.samples.front().state);
  auto rel = [](double q, double ref) {
    return std::fabs(q - ref) / std::max(std::fabs(ref), 1e-300);
  };
  for (const Sample& smp : trajectory.samples) {
    const WongInvariants q = wong_invariants(sys, smp.state);
    rep.color_norm2 = std::max(rep.color_norm2, rel(q.color_norm2, q0.color_norm2));
    rep.speed2 = std::max(rep.speed2, rel(q.speed2, q0.speed2));
    rep.alignment = std::max(rep.alignment, rel(q.alignment, q0.alignment));
  }
  return rep;
}

BundleResult trace_bundle(const OpticalMedium& medium, const Vec3& x0,
                          int count, std::uint64_t seed, double span,
                          double step, int record_every) {
  if (count < 0) throw std::invalid_argument("ray count must be >= 0");
  const double n0 = medium.index(x0);
  const double r0 = norm(x0);
  const Vec3 toward = r0 > 0.0 ? x0 * (-1.0 / r0) : vec3(0, 0, 0);
  SampleStream stream(seed);
  BundleResult out;
  for (int i = 0; i < count; ++i) {
    Vec3 dir = stream.direction();
    if (r0 > 0.0 && dot(dir, toward) < 0.0) dir = -dir;
    out.directions.push_back(dir);
    out.rays.push_back(
        trace_ray(medium, x0, dir * (1.0 / n0), span, step, record_every));
  }
  return out;
}

}  // namespace ymo
