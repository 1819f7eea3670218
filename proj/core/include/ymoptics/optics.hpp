#ifndef YMOPTICS_OPTICS_HPP_
#define YMOPTICS_OPTICS_HPP_

// Optical media: metrics g_ij = n^2 delta_ij on 3-space given by a refractive
// index, the stereographic images of S^3 and of the two-sheeted hyperboloid,
// and Yang-Mills checks on the resulting curved spaces.
//
// Stereographic coordinates project from the pole xi^4 = +1,
// x^k = s xi^k / (1 - xi^4). With s = 2 (plane tangent at the opposite pole)
// the unit sphere gives n = 4 / (4 + r^2) and the unit hyperboloid gives
// n = 4 / |4 - r^2| with bounding sphere r = 2. The `unit` scale variants use
// n = 1 / (1 + r^2) and n = 1 / |1 - r^2| (bounding sphere r = 1), i.e.
// curvature radius 1/2.

#include <optional>
#include <string>

#include "ymoptics/gauge.hpp"
#include "ymoptics/smooth_field.hpp"
#include "ymoptics/transcribe.hpp"

namespace ymo {

enum class MediumKind { euclidean, spherical, hyperbolic, custom };
enum class StereographicScale { embedding, unit };
// lower: the ball r < R (image of the branch through xi^4 = -1);
// upper: its complement r > R.
enum class HyperbolicBranch { lower, upper };

std::string to_string(MediumKind kind);

class OpticalMedium {
 public:
  OpticalMedium(std::string name, MediumKind kind, ScalarField index,
                std::optional<double> bounding_radius = std::nullopt,
                std::optional<HyperbolicBranch> branch = std::nullopt);

  const std::string& name() const { return name_; }
  MediumKind kind() const { return kind_; }
  const ScalarField& index_field() const { return index_; }
  const SingularLocus& locus() const { return index_.locus(); }
  std::optional<double> bounding_radius() const { return bounding_radius_; }
  std::optional<HyperbolicBranch> branch() const { return branch_; }

  // n(x); throws DomainError on the locus or where n <= 0.
  double index(const Vec3& x) const;

  // g = n^2 delta; analytic derivative 2 n dn delta when n has one.
  MetricField metric() const;

  // True when x lies in the region the medium describes (the ball for the
  // lower hyperbolic branch, its exterior for the upper one).
  bool inside(const Vec3& x) const;

 private:
  std::string name_;
  MediumKind kind_;
  ScalarField index_;
  std::optional<double> bounding_radius_;
  std::optional<HyperbolicBranch> branch_;
};

OpticalMedium euclidean_medium();

// Maxwell fish-eye: n = 4 / (4 + r^2) (embedding) or 1 / (1 + r^2) (unit).
OpticalMedium spherical_medium(
    StereographicScale scale = StereographicScale::embedding);

// n = 4 / |4 - r^2| (embedding) or 1 / |1 - r^2| (unit); the bounding sphere
// is the singular locus.
OpticalMedium hyperbolic_medium(
    HyperbolicBranch branch = HyperbolicBranch::lower,
    StereographicScale scale = StereographicScale::embedding);

// n = 1 / r: the optical image of the Wu-Yang monopole.
OpticalMedium monopole_medium();

OpticalMedium isotropic_medium(std::string name, ScalarField n);

// Induced metric of the unit sphere (ds^2 = sum dxi^2) or unit hyperboloid
// (ds^2 = sum_k dxi^k dxi^k - dxi^4 dxi^4) pulled back through the inverse
// of x = 2 xi / (1 - xi^4), from the Jacobian and Hessian of the inverse
// projection. Independent of the closed-form indices above; used to
// cross-check them.
MetricField embedding_metric(MediumKind kind);

// Inverse projection xi(x) (4 components, xi^4 last) for the embedding scale.
std::array<double, 4> inverse_stereographic(MediumKind kind, const Vec3& x);

// Coordinate image of the antipode of x on S^3 (embedding scale):
// -4 x / |x|^2. Fish-eye rays from x refocus there.
Vec3 fisheye_image_point(const Vec3& x);

// Curved-space sourceless Yang-Mills residual for the connection c on the
// host metric g:
//   (1/sqrt|g|) d_j (sqrt|g| R^r_si^j) + G^r_kj R^k_si^j - G^k_sj R^r_ki^j
//   - LC^k_ji R^r_sk^j
// with R the curvature of c, the last index raised by g, and LC the
// Levi-Civita connection of g. The final term is the covariant correction on
// the free index i; it vanishes for g = delta.
Tensor3R3 curved_ampere_residual(const MetricField& g,
                                 const ConnectionField& c, const Vec3& x);

// g^{sj} R^r_{srj} for the Levi-Civita connection of g.
double scalar_curvature(const MetricField& g, const Vec3& x);

// Magnetic field of the conformal-family potential of the medium's index.
ColorVectorField associated_magnetic_field(const OpticalMedium& medium);

}  // namespace ymo

#endif  // YMOPTICS_OPTICS_HPP_
