#ifndef YMOPTICS_TENSOR3_HPP_
#define YMOPTICS_TENSOR3_HPP_

// Fixed-dimension (3) dense tensors of rank 1..4.
//
// Components are addressed with 0-based index values 0, 1, 2 standing for the
// coordinate labels 1, 2, 3. Storage is row-major over the slots; nothing in
// the public surface depends on it.

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace ymo {

inline constexpr int kDim = 3;

constexpr std::size_t pow3(int rank) {
  std::size_t n = 1;
  for (int i = 0; i < rank; ++i) n *= kDim;
  return n;
}

template <int Rank>
class Tensor {
  static_assert(Rank >= 1 && Rank <= 4, "rank 1..4 only");

 public:
  static constexpr int kRank = Rank;
  static constexpr std::size_t kSize = pow3(Rank);

  constexpr Tensor() = default;

  template <typename... I>
  constexpr double& operator()(I... idx) {
    static_assert(sizeof...(I) == Rank, "index count must match rank");
    return c_[flat(static_cast<int>(idx)...)];
  }
  template <typename... I>
  constexpr double operator()(I... idx) const {
    static_assert(sizeof...(I) == Rank, "index count must match rank");
    return c_[flat(static_cast<int>(idx)...)];
  }

  constexpr double& operator[](std::size_t n) { return c_[n]; }
  constexpr double operator[](std::size_t n) const { return c_[n]; }

  const std::array<double, kSize>& data() const { return c_; }

  Tensor& operator+=(const Tensor& o) {
    for (std::size_t n = 0; n < kSize; ++n) c_[n] += o.c_[n];
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    for (std::size_t n = 0; n < kSize; ++n) c_[n] -= o.c_[n];
    return *this;
  }
  Tensor& operator*=(double s) {
    for (auto& v : c_) v *= s;
    return *this;
  }
  Tensor& operator/=(double s) {
    for (auto& v : c_) v /= s;
    return *this;
  }

  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator-(Tensor a) { return a *= -1.0; }
  friend Tensor operator*(Tensor a, double s) { return a *= s; }
  friend Tensor operator*(double s, Tensor a) { return a *= s; }
  friend Tensor operator/(Tensor a, double s) { return a /= s; }
  friend bool operator==(const Tensor&, const Tensor&) = default;

  // Largest |component|.
  double max_abs() const {
    double m = 0.0;
    for (double v : c_) m = std::fmax(m, std::fabs(v));
    return m;
  }

  bool all_finite() const {
    for (double v : c_)
      if (!std::isfinite(v)) return false;
    return true;
  }

 private:
  static constexpr std::size_t flat(int i) { return static_cast<std::size_t>(i); }
  template <typename... Rest>
  static constexpr std::size_t flat(int i, Rest... rest) {
    return static_cast<std::size_t>(i) * pow3(sizeof...(Rest)) + flat(rest...);
  }

  std::array<double, kSize> c_{};
};

using Vec3 = Tensor<1>;
using Mat3 = Tensor<2>;
using Tensor3R3 = Tensor<3>;
using Tensor3R4 = Tensor<4>;

template <int R>
double max_abs_diff(const Tensor<R>& a, const Tensor<R>& b) {
  return (a - b).max_abs();
}
inline double max_abs_diff(double a, double b) { return std::fabs(a - b); }

// Totally antisymmetric symbol with eps(0,1,2) = +1.
constexpr int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  // (i, j, k) is a permutation of (0, 1, 2); even iff cyclic.
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

inline Vec3 vec3(double a, double b, double c) {
  Vec3 v;
  v(0) = a;
  v(1) = b;
  v(2) = c;
  return v;
}

inline double dot(const Vec3& a, const Vec3& b) {
  return a(0) * b(0) + a(1) * b(1) + a(2) * b(2);
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
Vec3 cross(const Vec3& a, const Vec3& b);

Mat3 identity3();
Mat3 transpose(const Mat3& m);
Mat3 matmul(const Mat3& a, const Mat3& b);
Vec3 matvec(const Mat3& m, const Vec3& v);
double det(const Mat3& m);
Mat3 outer(const Vec3& a, const Vec3& b);

// Largest singular value.
double spectral_norm(const Mat3& m);

// 1-norm condition number estimate ||m||_1 ||m^-1||_1; +inf when det(m) == 0.
double condition_number(const Mat3& m);

class SingularMatrixError : public std::runtime_error {
 public:
  SingularMatrixError(const std::string& what, double condition)
      : std::runtime_error(what + " (condition number " +
                           std::to_string(condition) + ")"),
        condition_(condition) {}
  double condition_number() const { return condition_; }

 private:
  double condition_;
};

// Throws SingularMatrixError when the matrix is singular or its condition
// number exceeds 1e14.
Mat3 inverse(const Mat3& m);

enum class IndexMove { up, down };

// Contracts slot `slot` of t with g^{-1} (up) or g (down). g must be symmetric
// positive-definite.
template <int R>
Tensor<R> raise_lower(const Tensor<R>& t, const Mat3& g, int slot,
                      IndexMove move);

// Symmetric positive-definite test via leading principal minors.
bool is_spd(const Mat3& m, double symmetry_tol = 1e-12);

// Antisymmetrization / symmetrization over two slots of a rank-3 tensor
// without numerical factor: t_[ij] = t_ij - t_ji.
Tensor3R3 antisymmetrize_last(const Tensor3R3& t);
Tensor3R3 symmetrize_last(const Tensor3R3& t);

}  // namespace ymo

#endif  // YMOPTICS_TENSOR3_HPP_
