#ifndef YMOPTICS_SMOOTH_FIELD_HPP_
#define YMOPTICS_SMOOTH_FIELD_HPP_

#include <functional>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ymoptics/tensor3.hpp"

namespace ymo {

inline constexpr double kDefaultStep = 1e-4;

// Evaluation points must keep this many FD steps away from a singular locus.
inline constexpr double kClearanceSteps = 10.0;

class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Declared (never detected) singular set: isolated points and origin-centred
// spheres.
struct SingularLocus {
  std::vector<Vec3> points;
  std::vector<double> sphere_radii;

  bool empty() const { return points.empty() && sphere_radii.empty(); }
  double distance(const Vec3& x) const;
  SingularLocus merged(const SingularLocus& other) const;

  static SingularLocus origin();
  static SingularLocus sphere(double radius);
};

// A smooth map R^3 -> T with an optional analytic partial derivative.
//
// T is double or a Tensor<R>. Evaluation closures must be re-entrant.
template <typename T>
class SmoothField {
 public:
  using Eval = std::function<T(const Vec3&)>;
  using Deriv = std::function<T(const Vec3&, int)>;

  SmoothField() = default;
  explicit SmoothField(Eval eval, SingularLocus locus = {}, Deriv deriv = {},
                       double step = kDefaultStep)
      : eval_(std::move(eval)),
        deriv_(std::move(deriv)),
        locus_(std::move(locus)),
        step_(step) {}

  // Throws DomainError on the singular locus itself.
  T operator()(const Vec3& x) const {
    if (!locus_.empty() && !(locus_.distance(x) > 0.0))
      throw DomainError("evaluation on the singular locus");
    return eval_(x);
  }

  bool has_analytic_derivative() const { return static_cast<bool>(deriv_); }
  const Deriv& analytic_derivative() const { return deriv_; }
  const SingularLocus& locus() const { return locus_; }
  double step() const { return step_; }
  bool valid() const { return static_cast<bool>(eval_); }

  SmoothField without_analytic_derivative() const {
    return SmoothField(eval_, locus_, {}, step_);
  }
  SmoothField with_step(double h) const {
    return SmoothField(eval_, locus_, deriv_, h);
  }

  // Distance to the locus in units of the FD step.
  double clearance(const Vec3& x) const {
    return locus_.distance(x) / step_;
  }

  // Throws DomainError unless x keeps kClearanceSteps * step from the locus.
  void require_clearance(const Vec3& x) const {
    if (!locus_.empty() && clearance(x) < kClearanceSteps)
      throw DomainError("point within " + std::to_string(kClearanceSteps) +
                        " FD steps of the singular locus (distance " +
                        std::to_string(locus_.distance(x)) + ")");
  }

 private:
  Eval eval_;
  Deriv deriv_;
  SingularLocus locus_;
  double step_ = kDefaultStep;
};

// d/dx^dir of the field at x: the analytic derivative when one is attached,
// otherwise the fourth-order central difference
//   (f(x-2h) - 8 f(x-h) + 8 f(x+h) - f(x+2h)) / (12 h).
// Throws DomainError if the stencil reaches within 3h of the singular locus.
template <typename T>
T partial(const SmoothField<T>& field, const Vec3& x, int dir) {
  if (field.has_analytic_derivative()) {
    if (!field.locus().empty() && !(field.locus().distance(x) > 0.0))
      throw DomainError("derivative on the singular locus");
    return field.analytic_derivative()(x, dir);
  }
  const double h = field.step();
  if (!field.locus().empty() && field.locus().distance(x) < 3.0 * h)
    throw DomainError("finite-difference stencil crosses the singular locus");
  Vec3 p = x;
  auto at = [&](double offset) {
    p(dir) = x(dir) + offset;
    return field(p);
  };
  T fm2 = at(-2.0 * h);
  T fm1 = at(-h);
  T fp1 = at(h);
  T fp2 = at(2.0 * h);
  return (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
}

// Field whose value at x is the derivative of `field` along `dir`.
template <typename T>
SmoothField<T> derivative_field(const SmoothField<T>& field, int dir) {
  return SmoothField<T>(
      [field, dir](const Vec3& x) { return partial(field, x, dir); },
      field.locus(), {}, field.step());
}

using ScalarField = SmoothField<double>;
using MetricField = SmoothField<Mat3>;
using ConnectionField = SmoothField<Tensor3R3>;
using CurvatureField = SmoothField<Tensor3R4>;

}  // namespace ymo

#endif  // YMOPTICS_SMOOTH_FIELD_HPP_
