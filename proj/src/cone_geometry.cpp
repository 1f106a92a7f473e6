#include "conecalc/cone_geometry.hpp"

#include <cmath>

namespace conecalc {

FourMomentum operator+(const FourMomentum& a, const FourMomentum& b) {
  return {a.q0 + b.q0, a.q1 + b.q1, a.q2 + b.q2, a.q3 + b.q3};
}

FourMomentum operator-(const FourMomentum& a, const FourMomentum& b) {
  return {a.q0 - b.q0, a.q1 - b.q1, a.q2 - b.q2, a.q3 - b.q3};
}

FourMomentum operator*(double s, const FourMomentum& a) {
  return {s * a.q0, s * a.q1, s * a.q2, s * a.q3};
}

double minkowski_square(const FourMomentum& q) {
  return q.q0 * q.q0 - q.q1 * q.q1 - q.q2 * q.q2 - q.q3 * q.q3;
}

double minkowski_dot(const FourMomentum& a, const FourMomentum& b) {
  return a.q0 * b.q0 - a.q1 * b.q1 - a.q2 * b.q2 - a.q3 * b.q3;
}

double euclidean_norm(const FourMomentum& q) {
  return std::sqrt(q.q0 * q.q0 + q.q1 * q.q1 + q.q2 * q.q2 + q.q3 * q.q3);
}

Mat4 mat4_identity() {
  Mat4 m{};
  for (int i = 0; i < 4; ++i) m[i][i] = 1.0;
  return m;
}

Mat4 mat4_mul(const Mat4& a, const Mat4& b) {
  Mat4 c{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < 4; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

FourMomentum mat4_apply(const Mat4& m, const FourMomentum& q) {
  FourMomentum r;
  for (int i = 0; i < 4; ++i) {
    double s = 0.0;
    for (int j = 0; j < 4; ++j) s += m[i][j] * q[j];
    r[i] = s;
  }
  return r;
}

Mat4 lorentz_boost(int axis, double rapidity) {
  if (axis < 1 || axis > 3) throw Error("lorentz_boost: axis must be 1..3");
  Mat4 m = mat4_identity();
  const double ch = std::cosh(rapidity), sh = std::sinh(rapidity);
  m[0][0] = ch;
  m[0][axis] = sh;
  m[axis][0] = sh;
  m[axis][axis] = ch;
  return m;
}

Mat4 spatial_rotation(int i, int j, double angle) {
  if (i < 1 || j > 3 || i >= j) throw Error("spatial_rotation: need 1 <= i < j <= 3");
  Mat4 m = mat4_identity();
  const double c = std::cos(angle), s = std::sin(angle);
  m[i][i] = c;
  m[i][j] = -s;
  m[j][i] = s;
  m[j][j] = c;
  return m;
}

double lorentz_defect(const Mat4& lambda) {
  // max |(Lambda^T g Lambda - g)_{ij}|
  static const double g[4] = {1.0, -1.0, -1.0, -1.0};
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      double s = 0.0;
      for (int k = 0; k < 4; ++k) s += lambda[k][i] * g[k] * lambda[k][j];
      const double target = (i == j) ? g[i] : 0.0;
      worst = std::max(worst, std::abs(s - target));
    }
  }
  return worst;
}

bool is_lorentz(const Mat4& lambda, double tol) { return lorentz_defect(lambda) <= tol; }

double cone_form(const ConePoint& k) {
  return k.k0 * k.k0 - k.k1 * k.k1 - k.k2 * k.k2 - k.k3 * k.k3 + k.k5 * k.k5 -
         k.k6 * k.k6;
}

double cone_residual(const ConePoint& k) {
  const double n2 = k.k0 * k.k0 + k.k1 * k.k1 + k.k2 * k.k2 + k.k3 * k.k3 +
                    k.k5 * k.k5 + k.k6 * k.k6;
  return std::abs(cone_form(k)) / (1.0 + n2);
}

ConePoint embed(const FourMomentum& q, double kplus, double M) {
  if (kplus <= 0.0) throw NonPositiveScale("embed requires kplus > 0");
  if (M <= 0.0) throw NonPositiveScale("embed requires M > 0");
  const double kminus = -minkowski_square(q) * kplus / (M * M);
  ConePoint k;
  k.k0 = q.q0 * kplus;
  k.k1 = q.q1 * kplus;
  k.k2 = q.q2 * kplus;
  k.k3 = q.q3 * kplus;
  k.k5 = 0.5 * M * (kplus + kminus);
  k.k6 = 0.5 * M * (kplus - kminus);
  k.M = M;
  return k;
}

FourMomentum project(const ConePoint& k, double epsilon) {
  const double kp = k.kplus();
  if (std::abs(kp) <= epsilon) throw DegenerateScale("project with kplus ~ 0");
  return {k.k0 / kp, k.k1 / kp, k.k2 / kp, k.k3 / kp};
}

ConformalTransform ConformalTransform::translation(const FourMomentum& h) {
  ConformalTransform t;
  t.steps_.push_back(Translation{h});
  return t;
}

ConformalTransform ConformalTransform::lorentz(const Mat4& lambda) {
  if (!is_lorentz(lambda))
    throw NotLorentz("matrix does not satisfy Lambda^T g Lambda = g");
  ConformalTransform t;
  t.steps_.push_back(LorentzRotation{lambda});
  return t;
}

ConformalTransform ConformalTransform::dilatation(double lambda) {
  ConformalTransform t;
  t.steps_.push_back(Dilatation{lambda});
  return t;
}

ConformalTransform ConformalTransform::inversion() {
  ConformalTransform t;
  t.steps_.push_back(Inversion{});
  return t;
}

ConformalTransform ConformalTransform::special_conformal(const FourMomentum& h) {
  ConformalTransform t;
  t.steps_.push_back(SpecialConformal{h});
  return t;
}

ConformalTransform& ConformalTransform::then(const ConformalTransform& next) {
  steps_.insert(steps_.end(), next.steps().begin(), next.steps().end());
  return *this;
}

namespace {

ConePoint from_light_cone(const FourMomentum& kmu, double kplus, double kminus,
                          double M) {
  ConePoint k;
  k.k0 = kmu.q0;
  k.k1 = kmu.q1;
  k.k2 = kmu.q2;
  k.k3 = kmu.q3;
  k.k5 = 0.5 * M * (kplus + kminus);
  k.k6 = 0.5 * M * (kplus - kminus);
  k.M = M;
  return k;
}

ConePoint apply_cone_step(const TransformStep& step, const ConePoint& k) {
  const double M2 = k.M * k.M;
  if (const auto* tr = std::get_if<Translation>(&step)) {
    const double kp = k.kplus();
    FourMomentum kmu = k.four_part();
    FourMomentum kmu2 = kmu + kp * tr->h;
    // k_minus is fixed by staying on the cone with k_plus unchanged.
    const double kminus2 = -minkowski_square(kmu2) / (M2 * kp);
    return from_light_cone(kmu2, kp, kminus2, k.M);
  }
  if (const auto* lo = std::get_if<LorentzRotation>(&step)) {
    FourMomentum kmu2 = mat4_apply(lo->lambda, k.four_part());
    ConePoint r = k;
    r.k0 = kmu2.q0;
    r.k1 = kmu2.q1;
    r.k2 = kmu2.q2;
    r.k3 = kmu2.q3;
    return r;  // k5, k6 untouched: k_plus and k_minus invariant
  }
  if (const auto* di = std::get_if<Dilatation>(&step)) {
    const double kp = std::exp(-di->lambda) * k.kplus();
    const double km = std::exp(di->lambda) * k.kminus();
    return from_light_cone(k.four_part(), kp, km, k.M);
  }
  if (std::get_if<Inversion>(&step)) {
    const double km = k.kminus();
    const double scale = std::abs(k.kplus()) + std::abs(km);
    if (std::abs(km) <= 1e-14 * (1.0 + scale))
      throw DegenerateScale("inversion with kminus ~ 0 (q^2 ~ 0)");
    return from_light_cone(k.four_part(), km, k.kplus(), k.M);
  }
  // Special conformal: inversion, translation, inversion with the same
  // parameter (the composition reproduces the 4D closed form exactly).
  const auto& sc = std::get<SpecialConformal>(step);
  ConePoint r = apply_cone_step(Inversion{}, k);
  r = apply_cone_step(Translation{sc.h}, r);
  return apply_cone_step(Inversion{}, r);
}

FourMomentum apply_4d_step(const TransformStep& step, const FourMomentum& q,
                           double M) {
  const double M2 = M * M;
  if (const auto* tr = std::get_if<Translation>(&step)) return q + tr->h;
  if (const auto* lo = std::get_if<LorentzRotation>(&step))
    return mat4_apply(lo->lambda, q);
  if (const auto* di = std::get_if<Dilatation>(&step))
    return std::exp(di->lambda) * q;
  if (std::get_if<Inversion>(&step)) {
    const double q2 = minkowski_square(q);
    if (q2 == 0.0) throw NullMomentumInversion("inversion of a null momentum");
    return (-M2 / q2) * q;
  }
  const auto& sc = std::get<SpecialConformal>(step);
  const double q2 = minkowski_square(q);
  const double h2 = minkowski_square(sc.h);
  const double denom = 1.0 - 2.0 * minkowski_dot(q, sc.h) / M2 + h2 * q2 / (M2 * M2);
  if (std::abs(denom) < 1e-14)
    throw SingularDenominator("special conformal denominator vanishes");
  return (1.0 / denom) * (q - (q2 / M2) * sc.h);
}

}  // namespace

ConePoint apply_cone(const ConformalTransform& t, const ConePoint& k,
                     double on_cone_tol) {
  if (cone_residual(k) > on_cone_tol)
    throw OffCone("input point not on the cone within tolerance");
  ConePoint cur = k;
  for (const auto& step : t.steps()) cur = apply_cone_step(step, cur);
  return cur;
}

FourMomentum apply_4d(const ConformalTransform& t, const FourMomentum& q, double M) {
  if (M <= 0.0) throw NonPositiveScale("apply_4d requires M > 0");
  FourMomentum cur = q;
  for (const auto& step : t.steps()) cur = apply_4d_step(step, cur, M);
  return cur;
}

double isomorphism_residual(const ConformalTransform& t, const FourMomentum& q,
                            double kplus, double M) {
  const FourMomentum via_cone = project(apply_cone(t, embed(q, kplus, M)));
  const FourMomentum direct = apply_4d(t, q, M);
  return euclidean_norm(via_cone - direct);
}

}  // namespace conecalc
