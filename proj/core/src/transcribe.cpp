#include "ymoptics/transcribe.hpp"

#include <algorithm>
#include <array>

namespace ymo {

namespace {

SingularLocus joint_locus(const SingularLocus& a, const SingularLocus& b) {
  return a.merged(b);
}

std::array<Mat3, kDim> gradient(const SmoothField<Mat3>& f, const Vec3& x) {
  std::array<Mat3, kDim> d;
  for (int k = 0; k < kDim; ++k) d[k] = partial(f, x, k);
  return d;
}

SpinConnection spin_connection_from(const Mat3& pot) {
  SpinConnection w;
  for (int a = 0; a < kDim; ++a)
    for (int c = 0; c < kDim; ++c)
      for (int k = 0; k < kDim; ++k) {
        double s = 0.0;
        for (int b = 0; b < kDim; ++b) s += levi_civita(a, b, c) * pot(b, k);
        w(a, c, k) = s;
      }
  return w;
}

Connection3 transcribe_unchecked(const GaugePotential& a, const Dreibein& h,
                                 const Vec3& x) {
  const Mat3 frame = h(x);
  const Mat3 inv = inverse(frame);
  const SpinConnection w = spin_connection_from(a(x));
  const auto dh = gradient(h, x);
  Connection3 g;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k) {
        double s = 0.0;
        for (int p = 0; p < kDim; ++p) {
          double wh = 0.0;
          for (int b = 0; b < kDim; ++b) wh += w(p, b, k) * frame(b, j);
          s += inv(i, p) * (wh + dh[k](p, j));
        }
        g(i, j, k) = s;
      }
  return g;
}

Mat3 metric_unchecked(const Mat3& h) { return matmul(transpose(h), h); }

Connection3 christoffel_unchecked(const MetricField& g, const Vec3& x) {
  const Mat3 ginv = inverse(g(x));
  const auto dg = gradient(g, x);
  Connection3 c;
  for (int k = 0; k < kDim; ++k)
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) {
        double s = 0.0;
        for (int r = 0; r < kDim; ++r)
          s += ginv(k, r) * (dg[i](j, r) + dg[j](i, r) - dg[r](i, j));
        c(k, i, j) = 0.5 * s;
      }
  return c;
}

CurvatureTensor curvature_unchecked(const ConnectionField& c, const Vec3& x) {
  const Connection3 g = c(x);
  std::array<Connection3, kDim> dg;
  for (int k = 0; k < kDim; ++k) dg[k] = partial(c, x, k);
  CurvatureTensor r;
  for (int a = 0; a < kDim; ++a)
    for (int s = 0; s < kDim; ++s)
      for (int i = 0; i < kDim; ++i)
        for (int j = i + 1; j < kDim; ++j) {
          double v = dg[i](a, s, j) - dg[j](a, s, i);
          for (int k = 0; k < kDim; ++k)
            v += g(a, k, i) * g(k, s, j) - g(a, k, j) * g(k, s, i);
          r(a, s, i, j) = v;
          r(a, s, j, i) = -v;
        }
  return r;
}

// Frame torsion T^a_ij without clearance checks.
TorsionTensor frame_torsion_unchecked(const GaugePotential& a,
                                      const Dreibein& h, const Vec3& x) {
  const Mat3 frame = h(x);
  const SpinConnection w = spin_connection_from(a(x));
  const auto dh = gradient(h, x);
  TorsionTensor t;
  for (int p = 0; p < kDim; ++p)
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) {
        double s = dh[i](p, j) - dh[j](p, i);
        for (int c = 0; c < kDim; ++c)
          s += w(p, c, i) * frame(c, j) - w(p, c, j) * frame(c, i);
        t(p, i, j) = s;
      }
  return t;
}

}  // namespace

Dreibein identity_dreibein() {
  return Dreibein([](const Vec3&) { return identity3(); }, {},
                  [](const Vec3&, int) { return Mat3{}; });
}

Dreibein isotropic_dreibein(const ScalarField& n) {
  SmoothField<Mat3>::Deriv d;
  if (n.has_analytic_derivative())
    d = [n](const Vec3& x, int k) { return identity3() * partial(n, x, k); };
  return Dreibein([n](const Vec3& x) { return identity3() * n(x); },
                  n.locus(), d, n.step());
}

SpinConnection spin_connection(const GaugePotential& a, const Vec3& x) {
  return spin_connection_from(a(x));
}

ConnectionField spin_connection_field(const GaugePotential& a) {
  ConnectionField::Deriv d;
  if (a.has_analytic_derivative())
    d = [a](const Vec3& x, int k) {
      return spin_connection_from(a.analytic_derivative()(x, k));
    };
  return ConnectionField(
      [a](const Vec3& x) { return spin_connection_from(a(x)); }, a.locus(), d,
      a.step());
}

Connection3 transcribe_connection(const GaugePotential& a, const Dreibein& h,
                                  const Vec3& x) {
  a.require_clearance(x);
  h.require_clearance(x);
  return transcribe_unchecked(a, h, x);
}

ConnectionField transcribed_connection_field(const GaugePotential& a,
                                             const Dreibein& h) {
  return ConnectionField(
      [a, h](const Vec3& x) { return transcribe_unchecked(a, h, x); },
      joint_locus(a.locus(), h.locus()), {}, std::min(a.step(), h.step()));
}

CurvatureTensor curvature(const ConnectionField& c, const Vec3& x) {
  c.require_clearance(x);
  return curvature_unchecked(c, x);
}

CurvatureField curvature_field(const ConnectionField& c) {
  return CurvatureField(
      [c](const Vec3& x) { return curvature_unchecked(c, x); }, c.locus(), {},
      c.step());
}

CurvatureTensor curvature_from_magnetic(const Mat3& b) {
  CurvatureTensor r;
  for (int a = 0; a < kDim; ++a)
    for (int bb = 0; bb < kDim; ++bb)
      for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
          double s = 0.0;
          for (int c = 0; c < kDim; ++c) {
            const int e1 = levi_civita(a, c, bb);
            if (e1 == 0) continue;
            for (int k = 0; k < kDim; ++k)
              s += e1 * levi_civita(i, j, k) * b(c, k);
          }
          r(a, bb, i, j) = s;
        }
  return r;
}

CurvatureTensor transmute_curvature(const CurvatureTensor& frame,
                                    const Mat3& h, const Mat3& h_inv) {
  CurvatureTensor out;
  for (int r = 0; r < kDim; ++r)
    for (int s = 0; s < kDim; ++s)
      for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
          double v = 0.0;
          for (int a = 0; a < kDim; ++a)
            for (int b = 0; b < kDim; ++b)
              v += h_inv(r, a) * h(b, s) * frame(a, b, i, j);
          out(r, s, i, j) = v;
        }
  return out;
}

CurvatureTensor commutator_curvature(const GaugePotential& a,
                                     const Dreibein& h, const Vec3& x) {
  a.require_clearance(x);
  h.require_clearance(x);

  // dw(p, s, j) = D_j h^p_s.
  auto covariant_frame = [a, h](const Vec3& p) {
    const Mat3 frame = h(p);
    const SpinConnection w = spin_connection_from(a(p));
    const auto dh = gradient(h, p);
    Tensor3R3 dw;
    for (int q = 0; q < kDim; ++q)
      for (int s = 0; s < kDim; ++s)
        for (int j = 0; j < kDim; ++j) {
          double v = dh[j](q, s);
          for (int b = 0; b < kDim; ++b) v += w(q, b, j) * frame(b, s);
          dw(q, s, j) = v;
        }
    return dw;
  };
  const SmoothField<Tensor3R3> dw_field(covariant_frame,
                                        joint_locus(a.locus(), h.locus()), {},
                                        std::min(a.step(), h.step()));

  const Tensor3R3 dw = dw_field(x);
  const SpinConnection w = spin_connection_from(a(x));
  std::array<Tensor3R3, kDim> ddw;
  for (int i = 0; i < kDim; ++i) ddw[i] = partial(dw_field, x, i);

  // D_i (D_j W)^p = d_i dw(p, s, j) + w(p, b, i) dw(b, s, j)
  auto second = [&](int p, int s, int i, int j) {
    double v = ddw[i](p, s, j);
    for (int b = 0; b < kDim; ++b) v += w(p, b, i) * dw(b, s, j);
    return v;
  };

  const Mat3 inv = h.inverse_at(x);
  CurvatureTensor out;
  for (int r = 0; r < kDim; ++r)
    for (int s = 0; s < kDim; ++s)
      for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
          double v = 0.0;
          for (int p = 0; p < kDim; ++p)
            v += inv(r, p) * (second(p, s, i, j) - second(p, s, j, i));
          out(r, s, i, j) = v;
        }
  return out;
}

TorsionTensor torsion(const Connection3& c) {
  return -1.0 * antisymmetrize_last(c);
}

FrameTorsion frame_torsion(const GaugePotential& a, const Dreibein& h,
                           const Vec3& x) {
  a.require_clearance(x);
  h.require_clearance(x);
  FrameTorsion out;
  out.frame = frame_torsion_unchecked(a, h, x);
  const Mat3 inv = h.inverse_at(x);
  for (int k = 0; k < kDim; ++k)
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) {
        double v = 0.0;
        for (int p = 0; p < kDim; ++p) v += inv(k, p) * out.frame(p, i, j);
        out.space(k, i, j) = v;
      }
  return out;
}

Mat3 metric_from_dreibein(const Dreibein& h, const Vec3& x) {
  const Mat3 frame = h(x);
  if (!(condition_number(frame) < 1e14))
    throw SingularMatrixError("singular dreibein", condition_number(frame));
  return metric_unchecked(frame);
}

MetricField metric_field(const Dreibein& h) {
  MetricField::Deriv d;
  if (h.has_analytic_derivative())
    d = [h](const Vec3& x, int k) {
      const Mat3 frame = h(x);
      const Mat3 dh = h.analytic_derivative()(x, k);
      return matmul(transpose(dh), frame) + matmul(transpose(frame), dh);
    };
  return MetricField([h](const Vec3& x) { return metric_unchecked(h(x)); },
                     h.locus(), d, h.step());
}

Connection3 christoffel(const MetricField& g, const Vec3& x) {
  g.require_clearance(x);
  return christoffel_unchecked(g, x);
}

ConnectionField christoffel_field(const MetricField& g) {
  return ConnectionField(
      [g](const Vec3& x) { return christoffel_unchecked(g, x); }, g.locus(),
      {}, g.step());
}

Contorsion contorsion_from_torsion(const TorsionTensor& t, const Mat3& g) {
  const double scale = std::max(1.0, t.max_abs());
  for (int k = 0; k < kDim; ++k)
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j)
        if (std::fabs(t(k, i, j) + t(k, j, i)) > 1e-12 * scale)
          throw std::invalid_argument(
              "torsion must be antisymmetric in its lower indices");
  const Mat3 ginv = inverse(g);
  // t_ijk(i, j, k) = T_ij^k = g_im T^m_jn g^nk
  Tensor3R3 lowered_raised;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k) {
        double v = 0.0;
        for (int m = 0; m < kDim; ++m)
          for (int n = 0; n < kDim; ++n)
            v += g(i, m) * t(m, j, n) * ginv(n, k);
        lowered_raised(i, j, k) = v;
      }
  Contorsion kt;
  for (int k = 0; k < kDim; ++k)
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j)
        kt(k, i, j) = 0.5 * (t(k, i, j) + lowered_raised(i, j, k) +
                             lowered_raised(j, i, k));
  return kt;
}

Connection3 reconstruct_connection(const MetricField& g,
                                   const TorsionTensor& t, const Vec3& x) {
  return christoffel(g, x) - contorsion_from_torsion(t, g(x));
}

ConnectionField reconstructed_connection_field(
    const MetricField& g, const SmoothField<TorsionTensor>& t) {
  return ConnectionField(
      [g, t](const Vec3& x) {
        return christoffel_unchecked(g, x) - contorsion_from_torsion(t(x), g(x));
      },
      joint_locus(g.locus(), t.locus()), {}, std::min(g.step(), t.step()));
}

SmoothField<Contorsion> contorsion_field(const GaugePotential& a,
                                         const Dreibein& h) {
  const MetricField g = metric_field(h);
  return SmoothField<Contorsion>(
      [a, h, g](const Vec3& x) {
        return christoffel_unchecked(g, x) - transcribe_unchecked(a, h, x);
      },
      joint_locus(a.locus(), h.locus()), {}, std::min(a.step(), h.step()));
}

Tensor3R3 compatibility_residual(const MetricField& g,
                                 const ConnectionField& c, const Vec3& x) {
  g.require_clearance(x);
  c.require_clearance(x);
  const Mat3 metric = g(x);
  const Connection3 conn = c(x);
  const auto dg = gradient(g, x);
  // low(i, j, k) = g_ir G^r_jk
  Tensor3R3 low;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k) {
        double v = 0.0;
        for (int r = 0; r < kDim; ++r) v += metric(i, r) * conn(r, j, k);
        low(i, j, k) = v;
      }
  Tensor3R3 res;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k)
        res(i, j, k) = dg[k](i, j) - low(i, j, k) - low(j, i, k);
  return res;
}

CurvatureSplit curvature_split(const MetricField& g,
                               const SmoothField<Contorsion>& k,
                               const Vec3& x) {
  g.require_clearance(x);
  k.require_clearance(x);
  const ConnectionField lc = christoffel_field(g);
  CurvatureSplit out;
  out.riemannian = curvature_unchecked(lc, x);

  const Connection3 gl = lc(x);
  const Contorsion kt = k(x);
  std::array<Contorsion, kDim> dk;
  for (int d = 0; d < kDim; ++d) dk[d] = partial(k, x, d);

  for (int r = 0; r < kDim; ++r)
    for (int s = 0; s < kDim; ++s)
      for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
          double m = dk[i](r, s, j) - dk[j](r, s, i);
          for (int n = 0; n < kDim; ++n) {
            m += gl(r, n, i) * kt(n, s, j) + kt(r, n, i) * gl(n, s, j) -
                 gl(r, n, j) * kt(n, s, i) - kt(r, n, j) * gl(n, s, i) -
                 kt(r, n, i) * kt(n, s, j) + kt(r, n, j) * kt(n, s, i);
          }
          out.torsion_part(r, s, i, j) = m;
        }
  out.total = out.riemannian - out.torsion_part;
  return out;
}

CurvatureTensor flat_host_torsion_curvature(const SmoothField<Contorsion>& k,
                                            const Vec3& x) {
  k.require_clearance(x);
  const Contorsion kt = k(x);
  std::array<Contorsion, kDim> dk;
  for (int d = 0; d < kDim; ++d) dk[d] = partial(k, x, d);
  CurvatureTensor m;
  for (int r = 0; r < kDim; ++r)
    for (int s = 0; s < kDim; ++s)
      for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
          double v = dk[i](r, s, j) - dk[j](r, s, i);
          for (int n = 0; n < kDim; ++n)
            v += -kt(r, n, i) * kt(n, s, j) + kt(r, n, j) * kt(n, s, i);
          m(r, s, i, j) = v;
        }
  return m;
}

Tensor3R4 bianchi_residual(const Dreibein& h, const GaugePotential& a,
                           const Vec3& x) {
  a.require_clearance(x);
  h.require_clearance(x);
  const SmoothField<TorsionTensor> tf(
      [a, h](const Vec3& p) { return frame_torsion_unchecked(a, h, p); },
      joint_locus(a.locus(), h.locus()), {}, std::min(a.step(), h.step()));
  const TorsionTensor t = tf(x);
  std::array<TorsionTensor, kDim> dt;
  for (int d = 0; d < kDim; ++d) dt[d] = partial(tf, x, d);
  const SpinConnection w = spin_connection_from(a(x));
  const CurvatureTensor rf = curvature_unchecked(spin_connection_field(a), x);
  const Mat3 frame = h(x);

  auto term = [&](int p, int i, int j, int k) {
    double v = dt[i](p, j, k);
    for (int b = 0; b < kDim; ++b)
      v += w(p, b, i) * t(b, j, k) - rf(p, b, j, k) * frame(b, i);
    return v;
  };

  Tensor3R4 res;
  for (int p = 0; p < kDim; ++p)
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j)
        for (int k = 0; k < kDim; ++k)
          res(p, i, j, k) = term(p, i, j, k) + term(p, j, k, i) +
                            term(p, k, i, j);
  return res;
}

}  // namespace ymo
