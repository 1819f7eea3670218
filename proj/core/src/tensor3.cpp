#include "ymoptics/tensor3.hpp"

#include <Eigen/SVD>
#include <algorithm>

#include "ymoptics/smooth_field.hpp"

namespace ymo {

Vec3 cross(const Vec3& a, const Vec3& b) {
  return vec3(a(1) * b(2) - a(2) * b(1), a(2) * b(0) - a(0) * b(2),
              a(0) * b(1) - a(1) * b(0));
}

Mat3 identity3() {
  Mat3 m;
  for (int i = 0; i < kDim; ++i) m(i, i) = 1.0;
  return m;
}

Mat3 transpose(const Mat3& m) {
  Mat3 t;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) t(i, j) = m(j, i);
  return t;
}

Mat3 matmul(const Mat3& a, const Mat3& b) {
  Mat3 c;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) {
      double s = 0.0;
      for (int k = 0; k < kDim; ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

Vec3 matvec(const Mat3& m, const Vec3& v) {
  Vec3 r;
  for (int i = 0; i < kDim; ++i)
    r(i) = m(i, 0) * v(0) + m(i, 1) * v(1) + m(i, 2) * v(2);
  return r;
}

double det(const Mat3& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

Mat3 outer(const Vec3& a, const Vec3& b) {
  Mat3 m;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) m(i, j) = a(i) * b(j);
  return m;
}

namespace {

Mat3 adjugate(const Mat3& m) {
  Mat3 a;
  a(0, 0) = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
  a(0, 1) = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
  a(0, 2) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
  a(1, 0) = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
  a(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
  a(1, 2) = m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2);
  a(2, 0) = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
  a(2, 1) = m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1);
  a(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  return a;
}

double one_norm(const Mat3& m) {
  double best = 0.0;
  for (int j = 0; j < kDim; ++j) {
    double col = 0.0;
    for (int i = 0; i < kDim; ++i) col += std::fabs(m(i, j));
    best = std::max(best, col);
  }
  return best;
}

}  // namespace

double spectral_norm(const Mat3& m) {
  Eigen::Matrix3d e;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) e(i, j) = m(i, j);
  return Eigen::JacobiSVD<Eigen::Matrix3d>(e).singularValues()(0);
}

double condition_number(const Mat3& m) {
  const double d = det(m);
  if (d == 0.0 || !std::isfinite(d))
    return std::numeric_limits<double>::infinity();
  return one_norm(m) * one_norm(adjugate(m)) / std::fabs(d);
}

Mat3 inverse(const Mat3& m) {
  const double cond = condition_number(m);
  if (!(cond < 1e14)) throw SingularMatrixError("singular 3x3 matrix", cond);
  return adjugate(m) / det(m);
}

template <int R>
Tensor<R> raise_lower(const Tensor<R>& t, const Mat3& g, int slot,
                      IndexMove move) {
  if (slot < 0 || slot >= R) throw std::out_of_range("raise_lower: bad slot");
  const Mat3 c = (move == IndexMove::up) ? inverse(g) : g;
  Tensor<R> out;
  const std::size_t stride = pow3(R - 1 - slot);
  for (std::size_t n = 0; n < Tensor<R>::kSize; ++n) {
    const int idx = static_cast<int>((n / stride) % kDim);
    const std::size_t base = n - static_cast<std::size_t>(idx) * stride;
    double s = 0.0;
    for (int m = 0; m < kDim; ++m)
      s += c(idx, m) * t[base + static_cast<std::size_t>(m) * stride];
    out[n] = s;
  }
  return out;
}

template Vec3 raise_lower<1>(const Vec3&, const Mat3&, int, IndexMove);
template Mat3 raise_lower<2>(const Mat3&, const Mat3&, int, IndexMove);
template Tensor3R3 raise_lower<3>(const Tensor3R3&, const Mat3&, int,
                                  IndexMove);
template Tensor3R4 raise_lower<4>(const Tensor3R4&, const Mat3&, int,
                                  IndexMove);

bool is_spd(const Mat3& m, double symmetry_tol) {
  for (int i = 0; i < kDim; ++i)
    for (int j = i + 1; j < kDim; ++j)
      if (std::fabs(m(i, j) - m(j, i)) >
          symmetry_tol * std::max(1.0, m.max_abs()))
        return false;
  const double m1 = m(0, 0);
  const double m2 = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  return m1 > 0.0 && m2 > 0.0 && det(m) > 0.0;
}

Tensor3R3 antisymmetrize_last(const Tensor3R3& t) {
  Tensor3R3 out;
  for (int k = 0; k < kDim; ++k)
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) out(k, i, j) = t(k, i, j) - t(k, j, i);
  return out;
}

Tensor3R3 symmetrize_last(const Tensor3R3& t) {
  Tensor3R3 out;
  for (int k = 0; k < kDim; ++k)
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) out(k, i, j) = t(k, i, j) + t(k, j, i);
  return out;
}

// SingularLocus lives with the tensor kernel; it is plain geometry.

double SingularLocus::distance(const Vec3& x) const {
  double d = std::numeric_limits<double>::infinity();
  for (const Vec3& p : points) d = std::min(d, norm(x - p));
  const double r = norm(x);
  for (double radius : sphere_radii) d = std::min(d, std::fabs(r - radius));
  return d;
}

SingularLocus SingularLocus::merged(const SingularLocus& other) const {
  SingularLocus out = *this;
  out.points.insert(out.points.end(), other.points.begin(), other.points.end());
  out.sphere_radii.insert(out.sphere_radii.end(), other.sphere_radii.begin(),
                          other.sphere_radii.end());
  return out;
}

SingularLocus SingularLocus::origin() {
  SingularLocus l;
  l.points.push_back(Vec3{});
  return l;
}

SingularLocus SingularLocus::sphere(double radius) {
  SingularLocus l;
  l.sphere_radii.push_back(radius);
  return l;
}

}  // namespace ymo
