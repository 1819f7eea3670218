#include "ymoptics/optics.hpp"

#include <algorithm>
#include <cmath>

#include "ymoptics/radial.hpp"

namespace ymo {

std::string to_string(MediumKind kind) {
  switch (kind) {
    case MediumKind::euclidean:
      return "euclidean";
    case MediumKind::spherical:
      return "spherical";
    case MediumKind::hyperbolic:
      return "hyperbolic";
    case MediumKind::custom:
      return "custom";
  }
  return "unknown";
}

OpticalMedium::OpticalMedium(std::string name, MediumKind kind,
                             ScalarField index,
                             std::optional<double> bounding_radius,
                             std::optional<HyperbolicBranch> branch)
    : name_(std::move(name)),
      kind_(kind),
      index_(std::move(index)),
      bounding_radius_(bounding_radius),
      branch_(branch) {}

double OpticalMedium::index(const Vec3& x) const {
  const double n = index_(x);
  if (!(n > 0.0)) throw DomainError("refractive index must be positive");
  return n;
}

MetricField OpticalMedium::metric() const {
  const ScalarField n = index_;
  MetricField::Deriv d;
  if (n.has_analytic_derivative())
    d = [n](const Vec3& x, int k) {
      return identity3() * (2.0 * n(x) * partial(n, x, k));
    };
  return MetricField(
      [n](const Vec3& x) {
        const double v = n(x);
        if (!(v > 0.0)) throw DomainError("refractive index must be positive");
        return identity3() * (v * v);
      },
      n.locus(), d, n.step());
}

bool OpticalMedium::inside(const Vec3& x) const {
  if (!bounding_radius_ || !branch_) return true;
  const double r = norm(x);
  return *branch_ == HyperbolicBranch::lower ? r < *bounding_radius_
                                             : r > *bounding_radius_;
}

OpticalMedium euclidean_medium() {
  return OpticalMedium(
      "euclidean", MediumKind::euclidean,
      ScalarField([](const Vec3&) { return 1.0; }, {},
                  [](const Vec3&, int) { return 0.0; }));
}

OpticalMedium spherical_medium(StereographicScale scale) {
  const double a = scale == StereographicScale::embedding ? 4.0 : 1.0;
  ScalarField n(
      [a](const Vec3& x) { return a / (a + dot(x, x)); }, {},
      [a](const Vec3& x, int k) {
        const double d = a + dot(x, x);
        return -2.0 * a * x(k) / (d * d);
      });
  return OpticalMedium(scale == StereographicScale::embedding
                           ? "spherical"
                           : "spherical_unit",
                       MediumKind::spherical, n);
}

OpticalMedium hyperbolic_medium(HyperbolicBranch branch,
                                StereographicScale scale) {
  const double a = scale == StereographicScale::embedding ? 4.0 : 1.0;
  const double radius = std::sqrt(a);
  ScalarField n(
      [a](const Vec3& x) { return a / std::fabs(a - dot(x, x)); },
      SingularLocus::sphere(radius), [a](const Vec3& x, int k) {
        const double u = a - dot(x, x);
        const double sigma = u > 0.0 ? 1.0 : -1.0;
        return 2.0 * a * sigma * x(k) / (u * u);
      });
  std::string name = "hyperbolic";
  if (scale == StereographicScale::unit) name += "_unit";
  if (branch == HyperbolicBranch::upper) name += "_upper";
  return OpticalMedium(name, MediumKind::hyperbolic, n, radius, branch);
}

OpticalMedium monopole_medium() {
  ScalarField n([](const Vec3& x) { return 1.0 / norm(x); },
                SingularLocus::origin(), [](const Vec3& x, int k) {
                  const double r = norm(x);
                  return -x(k) / (r * r * r);
                });
  return OpticalMedium("monopole", MediumKind::custom, n);
}

OpticalMedium isotropic_medium(std::string name, ScalarField n) {
  return OpticalMedium(std::move(name), MediumKind::custom, std::move(n));
}

std::array<double, 4> inverse_stereographic(MediumKind kind, const Vec3& x) {
  const double r2 = dot(x, x);
  std::array<double, 4> xi{};
  if (kind == MediumKind::spherical) {
    const double d = 4.0 + r2;
    for (int k = 0; k < kDim; ++k) xi[k] = 4.0 * x(k) / d;
    xi[3] = (r2 - 4.0) / d;
  } else if (kind == MediumKind::hyperbolic) {
    const double d = 4.0 - r2;
    if (d == 0.0) throw DomainError("point on the bounding sphere");
    for (int k = 0; k < kDim; ++k) xi[k] = 4.0 * x(k) / d;
    xi[3] = -(4.0 + r2) / d;
  } else {
    throw std::invalid_argument("embedding exists for spherical and "
                                "hyperbolic media only");
  }
  return xi;
}

namespace {

// With D = 4 + sigma r^2 (sigma = +1 sphere, -1 hyperboloid) both inverse
// projections read xi^k = 4 x^k / D, xi^4 = 1 - 8 / D.
struct EmbeddingJet {
  double jac[4][3];
  double hess[4][3][3];
};

EmbeddingJet embedding_jet(double sigma, const Vec3& x) {
  const double d = 4.0 + sigma * dot(x, x);
  if (d == 0.0) throw DomainError("point on the bounding sphere");
  const double d2 = d * d, d3 = d2 * d;
  EmbeddingJet e{};
  for (int k = 0; k < kDim; ++k)
    for (int i = 0; i < kDim; ++i) {
      e.jac[k][i] = 4.0 * (k == i) / d - 8.0 * sigma * x(k) * x(i) / d2;
      for (int j = 0; j < kDim; ++j)
        e.hess[k][i][j] =
            -8.0 * sigma * ((k == i) * x(j) + (k == j) * x(i) + (i == j) * x(k)) /
                d2 +
            32.0 * x(k) * x(i) * x(j) / d3;
    }
  for (int i = 0; i < kDim; ++i) {
    e.jac[3][i] = 16.0 * sigma * x(i) / d2;
    for (int j = 0; j < kDim; ++j)
      e.hess[3][i][j] = 16.0 * sigma * (i == j) / d2 - 64.0 * x(i) * x(j) / d3;
  }
  return e;
}

}  // namespace

MetricField embedding_metric(MediumKind kind) {
  if (kind != MediumKind::spherical && kind != MediumKind::hyperbolic)
    throw std::invalid_argument("embedding exists for spherical and "
                                "hyperbolic media only");
  const double sigma = kind == MediumKind::spherical ? 1.0 : -1.0;
  const SingularLocus locus = kind == MediumKind::hyperbolic
                                  ? SingularLocus::sphere(2.0)
                                  : SingularLocus{};
  // ds^2 = sum_k dxi^k dxi^k + sigma dxi^4 dxi^4
  auto eta = [sigma](int al) { return al == 3 ? sigma : 1.0; };
  return MetricField(
      [sigma, eta](const Vec3& x) {
        const EmbeddingJet e = embedding_jet(sigma, x);
        Mat3 g;
        for (int i = 0; i < kDim; ++i)
          for (int j = 0; j < kDim; ++j) {
            double s = 0.0;
            for (int al = 0; al < 4; ++al)
              s += eta(al) * e.jac[al][i] * e.jac[al][j];
            g(i, j) = s;
          }
        return g;
      },
      locus,
      [sigma, eta](const Vec3& x, int k) {
        const EmbeddingJet e = embedding_jet(sigma, x);
        Mat3 dg;
        for (int i = 0; i < kDim; ++i)
          for (int j = 0; j < kDim; ++j) {
            double s = 0.0;
            for (int al = 0; al < 4; ++al)
              s += eta(al) * (e.hess[al][i][k] * e.jac[al][j] +
                              e.jac[al][i] * e.hess[al][j][k]);
            dg(i, j) = s;
          }
        return dg;
      });
}

Vec3 fisheye_image_point(const Vec3& x) {
  const double r2 = dot(x, x);
  if (r2 == 0.0) throw DomainError("the origin images to infinity");
  return x * (-4.0 / r2);
}

Tensor3R3 curved_ampere_residual(const MetricField& g,
                                 const ConnectionField& c, const Vec3& x) {
  g.require_clearance(x);
  c.require_clearance(x);
  const SingularLocus locus = g.locus().merged(c.locus());
  const double step = std::min(g.step(), c.step());
  const CurvatureField rf = curvature_field(c);

  auto raised = [g, rf](const Vec3& p, double& sqrt_det) {
    const Mat3 gp = g(p);
    const Mat3 ginv = inverse(gp);
    sqrt_det = std::sqrt(std::fabs(det(gp)));
    const CurvatureTensor r = rf(p);
    Tensor3R4 up;
    for (int a = 0; a < kDim; ++a)
      for (int s = 0; s < kDim; ++s)
        for (int i = 0; i < kDim; ++i)
          for (int j = 0; j < kDim; ++j) {
            double v = 0.0;
            for (int m = 0; m < kDim; ++m) v += r(a, s, i, m) * ginv(m, j);
            up(a, s, i, j) = v;
          }
    return up;
  };

  const SmoothField<Tensor3R4> densitised(
      [raised](const Vec3& p) {
        double sd = 0.0;
        Tensor3R4 up = raised(p, sd);
        return up * sd;
      },
      locus, {}, step);

  double sqrt_det = 0.0;
  const Tensor3R4 up = raised(x, sqrt_det);
  const Connection3 gam = c(x);
  const Connection3 lc = christoffel(g, x);
  std::array<Tensor3R4, kDim> dw;
  for (int j = 0; j < kDim; ++j) dw[j] = partial(densitised, x, j);

  Tensor3R3 res;
  for (int a = 0; a < kDim; ++a)
    for (int s = 0; s < kDim; ++s)
      for (int i = 0; i < kDim; ++i) {
        double v = 0.0;
        for (int j = 0; j < kDim; ++j) {
          v += dw[j](a, s, i, j) / sqrt_det;
          for (int k = 0; k < kDim; ++k)
            v += gam(a, k, j) * up(k, s, i, j) - gam(k, s, j) * up(a, k, i, j) -
                 lc(k, j, i) * up(a, s, k, j);
        }
        res(a, s, i) = v;
      }
  return res;
}

double scalar_curvature(const MetricField& g, const Vec3& x) {
  g.require_clearance(x);
  const CurvatureTensor r = curvature(christoffel_field(g), x);
  const Mat3 ginv = inverse(g(x));
  double s = 0.0;
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b) {
      double ricci = 0.0;
      for (int k = 0; k < kDim; ++k) ricci += r(k, a, k, b);
      s += ginv(a, b) * ricci;
    }
  return s;
}

ColorVectorField associated_magnetic_field(const OpticalMedium& medium) {
  return magnetic_field_of(conformal_family(medium.index_field()));
}

}  // namespace ymo
