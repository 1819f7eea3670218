#include "ymoptics/radial.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ymo {

RadialProfile::RadialProfile(std::string name, Fn f, double fd_step)
    : name_(std::move(name)), f_(std::move(f)), fd_step_(fd_step) {}

RadialProfile::RadialProfile(std::string name, Fn f, Fn d1, Fn d2, Fn d3)
    : name_(std::move(name)),
      f_(std::move(f)),
      d1_(std::move(d1)),
      d2_(std::move(d2)),
      d3_(std::move(d3)) {}

RadialProfile RadialProfile::power_law(double q) {
  return RadialProfile(
      "power_law", [q](double r) { return std::pow(r, -q); },
      [q](double r) { return -q * std::pow(r, -q - 1.0); },
      [q](double r) { return q * (q + 1.0) * std::pow(r, -q - 2.0); },
      [q](double r) {
        return -q * (q + 1.0) * (q + 2.0) * std::pow(r, -q - 3.0);
      });
}

RadialJet RadialProfile::jet(double r) const {
  if (!(r > 0.0)) throw DomainError("radial profile needs r > 0");
  RadialJet j;
  j.f = f_(r);
  if (analytic()) {
    j.d1 = d1_(r);
    j.d2 = d2_(r);
    j.d3 = d3_(r);
    return j;
  }
  const double h = fd_step_;
  if (r - 3.0 * h <= 0.0)
    throw DomainError("radial stencil reaches r <= 0");
  const double fm3 = f_(r - 3 * h), fm2 = f_(r - 2 * h), fm1 = f_(r - h);
  const double fp1 = f_(r + h), fp2 = f_(r + 2 * h), fp3 = f_(r + 3 * h);
  j.d1 = (fm2 - 8 * fm1 + 8 * fp1 - fp2) / (12 * h);
  j.d2 = (-fp2 + 16 * fp1 - 30 * j.f + 16 * fm1 - fm2) / (12 * h * h);
  j.d3 = (-fp3 + 8 * fp2 - 13 * fp1 + 13 * fm1 - 8 * fm2 + fm3) /
         (8 * h * h * h);
  return j;
}

ScalarField RadialProfile::as_field() const {
  const RadialProfile self = *this;
  ScalarField::Deriv d;
  if (analytic())
    d = [self](const Vec3& x, int k) {
      const double r = norm(x);
      return self.d1_(r) * x(k) / r;
    };
  return ScalarField([self](const Vec3& x) { return self.f_(norm(x)); },
                     SingularLocus::origin(), d);
}

double ode_residual(const RadialProfile& p, double r) {
  const RadialJet j = p.jet(r);
  if (j.f == 0.0) throw DomainError("profile vanishes at r");
  return j.d3 + j.d1 * j.d1 / (r * j.f) - 5.0 * j.d1 * j.d2 / j.f +
         5.0 * j.d1 * j.d1 * j.d1 / (j.f * j.f);
}

double power_law_residual(double q) { return q * (2.0 - q) * (1.0 - q); }

namespace {

// A(d, j) = phi eps_djk x^k.
Mat3 eps_x(const Vec3& x, double phi) {
  Mat3 a;
  for (int d = 0; d < kDim; ++d)
    for (int j = 0; j < kDim; ++j) {
      double s = 0.0;
      for (int k = 0; k < kDim; ++k) s += levi_civita(d, j, k) * x(k);
      a(d, j) = phi * s;
    }
  return a;
}

// d_m of phi(r) eps_djk x^k given phi and dphi/dr.
Mat3 eps_x_derivative(const Vec3& x, double phi, double dphi, int m) {
  const double r = norm(x);
  Mat3 out = eps_x(x, dphi * x(m) / r);
  for (int d = 0; d < kDim; ++d)
    for (int j = 0; j < kDim; ++j) out(d, j) += phi * levi_civita(d, j, m);
  return out;
}

}  // namespace

Mat3 ansatz_potential(const RadialProfile& p, const Vec3& x) {
  const double r = norm(x);
  const RadialJet j = p.jet(r);
  return eps_x(x, -j.d1 / (r * j.f));
}

GaugePotential ansatz_field(const RadialProfile& p) {
  SmoothField<Mat3>::Deriv d;
  if (p.analytic())
    d = [p](const Vec3& x, int m) {
      const double r = norm(x);
      const RadialJet j = p.jet(r);
      const double phi = -j.d1 / (r * j.f);
      const double dphi = -(j.d2 / (r * j.f) - j.d1 / (r * r * j.f) -
                            j.d1 * j.d1 / (r * j.f * j.f));
      return eps_x_derivative(x, phi, dphi, m);
    };
  return GaugePotential([p](const Vec3& x) { return ansatz_potential(p, x); },
                        SingularLocus::origin(), d);
}

GaugePotential wu_yang_monopole() {
  return GaugePotential(
      [](const Vec3& x) { return eps_x(x, 1.0 / dot(x, x)); },
      SingularLocus::origin(), [](const Vec3& x, int m) {
        const double r2 = dot(x, x);
        const double r = std::sqrt(r2);
        return eps_x_derivative(x, 1.0 / r2, -2.0 / (r2 * r), m);
      });
}

Mat3 wu_yang_magnetic(const Vec3& x) {
  const double r2 = dot(x, x);
  return outer(x, x) * (-1.0 / (r2 * r2));
}

GaugePotential conformal_family(const ScalarField& n) {
  return GaugePotential(
      [n](const Vec3& x) {
        const double value = n(x);
        if (!(value > 0.0))
          throw DomainError("refractive index must be positive");
        Vec3 grad;
        for (int k = 0; k < kDim; ++k) grad(k) = partial(n, x, k) / value;
        Mat3 a;
        for (int d = 0; d < kDim; ++d)
          for (int j = 0; j < kDim; ++j) {
            double s = 0.0;
            for (int k = 0; k < kDim; ++k) s -= levi_civita(d, j, k) * grad(k);
            a(d, j) = s;
          }
        return a;
      },
      n.locus(), {}, n.step());
}

Mat3 ansatz_magnetic(const RadialProfile& p, const Vec3& x) {
  return magnetic_field(ansatz_field(p), x);
}

Mat3 power_law_magnetic(double q, const Vec3& x) {
  const double r2 = dot(x, x);
  return outer(x, x) * (q * (q - 2.0) / (r2 * r2));
}

Mat3 reference_ansatz_magnetic(const RadialProfile& p, const Vec3& x) {
  const double r = norm(x);
  const RadialJet j = p.jet(r);
  const double iso = 2.0 * j.d1 / (r * j.f) + 4.0 * j.d1 * j.d1 / (j.f * j.f) -
                     j.d2 / j.f;
  const double rad =
      (j.d2 - j.d1 / r - 2.0 * j.d1 * j.d1 / j.f) / (r * r * j.f);
  return identity3() * iso + outer(x, x) * rad;
}

namespace {

// Split B = iso * delta + rad * x x^T using a unit vector orthogonal to x.
std::pair<double, double> isotropic_radial(const Mat3& b, const Vec3& x) {
  const double r = norm(x);
  const Vec3 xhat = x / r;
  Vec3 helper = std::fabs(xhat(0)) < 0.9 ? vec3(1, 0, 0) : vec3(0, 1, 0);
  Vec3 e = cross(xhat, helper);
  e = e / norm(e);
  const double iso = dot(e, matvec(b, e));
  const double along = dot(xhat, matvec(b, xhat));
  return {iso, (along - iso) / (r * r)};
}

}  // namespace

AnsatzDiscrepancy ansatz_discrepancy(double q, const Vec3& x) {
  const RadialProfile p = RadialProfile::power_law(q);
  const Mat3 oracle = ansatz_magnetic(p, x);
  const Mat3 reference = reference_ansatz_magnetic(p, x);
  AnsatzDiscrepancy d;
  d.q = q;
  d.r = norm(x);
  std::tie(d.reference_isotropic, d.reference_radial) =
      isotropic_radial(reference, x);
  std::tie(d.oracle_isotropic, d.oracle_radial) = isotropic_radial(oracle, x);
  d.max_abs_deviation = max_abs_diff(reference, oracle);
  return d;
}

std::vector<CandidateFamily> candidate_families() {
  auto generic = [](std::string name, auto fn) {
    return CandidateFamily{name, [name, fn](double q) {
                             return RadialProfile(
                                 name, [fn, q](double r) { return fn(q, r); });
                           }};
  };
  std::vector<CandidateFamily> out;
  out.push_back({"power_law", [](double q) {
                   return RadialProfile::power_law(q);
                 }});
  out.push_back(generic("exp_plus_pow", [](double q, double r) {
    return std::exp(std::pow(r, q));
  }));
  out.push_back(generic("exp_minus_pow", [](double q, double r) {
    return std::exp(-std::pow(r, q));
  }));
  out.push_back(generic("exp_inv_linear", [](double q, double r) {
    return std::exp(1.0 / (1.0 - q * r));
  }));
  out.push_back(generic("exp_inv_pow", [](double q, double r) {
    return std::exp(1.0 / (1.0 - std::pow(r, q)));
  }));
  out.push_back(generic("exp_plus_quad", [](double q, double r) {
    return std::exp(q * r * r);
  }));
  out.push_back(generic("exp_minus_quad", [](double q, double r) {
    return std::exp(-q * r * r);
  }));
  out.push_back(generic("rational_linear", [](double q, double r) {
    return r / (1.0 - q * r);
  }));
  out.push_back(generic("rational_quad", [](double q, double r) {
    return r / (1.0 - q * r * r);
  }));
  return out;
}

std::vector<ScanRow> ansatz_scan(const std::vector<CandidateFamily>& families,
                                 const ScanOptions& options) {
  if (!(options.q_step > 0.0))
    throw std::invalid_argument("q step must be positive");
  if (!(options.q_max >= options.q_min))
    throw std::invalid_argument("q range is inverted");
  if (options.radii.empty())
    throw std::invalid_argument("at least one radius is required");
  for (double r : options.radii)
    if (!(r > 0.0)) throw std::invalid_argument("radii must be positive");

  const long count = std::lround(std::floor(
                         (options.q_max - options.q_min) / options.q_step +
                         1e-9)) +
                     1;
  std::vector<ScanRow> rows;
  for (const CandidateFamily& fam : families)
    for (long i = 0; i < count; ++i) {
      ScanRow row;
      row.profile = fam.name;
      row.q = options.q_min + static_cast<double>(i) * options.q_step;
      const RadialProfile p = fam.make(row.q);
      double worst = 0.0;
      for (double r : options.radii) {
        double v = std::numeric_limits<double>::quiet_NaN();
        try {
          v = ode_residual(p, r);
        } catch (const DomainError&) {
        }
        if (!std::isfinite(v)) row.defined = false;
        row.residuals.push_back(v);
        worst = std::fmax(worst, std::fabs(v));
      }
      row.root = row.defined && worst <= options.root_tolerance;
      rows.push_back(std::move(row));
    }
  return rows;
}

}  // namespace ymo
