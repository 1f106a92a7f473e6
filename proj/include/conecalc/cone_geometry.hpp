#pragma once

// Four-momenta, 6D cone points and the conformal transformations acting on
// both. The 4D transformations (translation, Lorentz rotation, dilatation,
// inversion, special conformal) are realized equivalently as linear motions
// on the null cone k_A k^A = 0 in a (+,-,-,-,+,-) metric; the two paths are
// tied together by q_mu = k_mu / k_plus.

#include <array>
#include <variant>
#include <vector>

#include "conecalc/errors.hpp"

namespace conecalc {

struct FourMomentum {
  double q0 = 0.0, q1 = 0.0, q2 = 0.0, q3 = 0.0;

  double operator[](int i) const {
    switch (i) {
      case 0: return q0;
      case 1: return q1;
      case 2: return q2;
      default: return q3;
    }
  }
  double& operator[](int i) {
    switch (i) {
      case 0: return q0;
      case 1: return q1;
      case 2: return q2;
      default: return q3;
    }
  }
};

FourMomentum operator+(const FourMomentum& a, const FourMomentum& b);
FourMomentum operator-(const FourMomentum& a, const FourMomentum& b);
FourMomentum operator*(double s, const FourMomentum& a);

// Signature (+,-,-,-), fixed project-wide.
double minkowski_square(const FourMomentum& q);
double minkowski_dot(const FourMomentum& a, const FourMomentum& b);
double euclidean_norm(const FourMomentum& q);

using Mat4 = std::array<std::array<double, 4>, 4>;

Mat4 mat4_identity();
Mat4 mat4_mul(const Mat4& a, const Mat4& b);
FourMomentum mat4_apply(const Mat4& m, const FourMomentum& q);

// Elementary Lorentz matrices: boost along spatial axis 1..3 with the given
// rapidity, rotation in the spatial plane (i,j), 1 <= i < j <= 3.
Mat4 lorentz_boost(int axis, double rapidity);
Mat4 spatial_rotation(int i, int j, double angle);

// Lambda^T g Lambda = g with g = diag(+,-,-,-).
double lorentz_defect(const Mat4& lambda);
bool is_lorentz(const Mat4& lambda, double tol = 1e-12);

// A point of the 6D cone.  k_plus/k_minus are the light-cone combinations
// (k5 +- k6)/M; on the cone k_minus = -q^2 k_plus / M^2.
struct ConePoint {
  double k0 = 0.0, k1 = 0.0, k2 = 0.0, k3 = 0.0;
  double k5 = 0.0, k6 = 0.0;
  double M = 1.0;

  double kplus() const { return (k5 + k6) / M; }
  double kminus() const { return (k5 - k6) / M; }
  FourMomentum four_part() const { return {k0, k1, k2, k3}; }
};

// k_mu k^mu + k5^2 - k6^2, signature (+,-,-,-,+,-).
double cone_form(const ConePoint& k);
// |cone_form| / (1 + ||k||^2), the relative on-cone defect.
double cone_residual(const ConePoint& k);

// Lifts q to the cone at scale k_plus: k_mu = q_mu k_plus,
// k_minus = -q^2 k_plus / M^2.  Requires kplus > 0, M > 0.
ConePoint embed(const FourMomentum& q, double kplus, double M);

// q_mu = k_mu / k_plus.  Throws DegenerateScale when |k_plus| <= epsilon.
FourMomentum project(const ConePoint& k, double epsilon = 1e-30);

struct Translation {
  FourMomentum h;
};
struct LorentzRotation {
  Mat4 lambda;
};
struct Dilatation {
  double lambda = 0.0;
};
struct Inversion {};
struct SpecialConformal {
  FourMomentum h;
};

using TransformStep =
    std::variant<Translation, LorentzRotation, Dilatation, Inversion, SpecialConformal>;

// An ordered composition of elementary conformal transformations, applied
// left to right.
class ConformalTransform {
 public:
  ConformalTransform() = default;

  static ConformalTransform translation(const FourMomentum& h);
  static ConformalTransform lorentz(const Mat4& lambda);  // throws NotLorentz
  static ConformalTransform dilatation(double lambda);
  static ConformalTransform inversion();
  static ConformalTransform special_conformal(const FourMomentum& h);

  ConformalTransform& then(const ConformalTransform& next);

  const std::vector<TransformStep>& steps() const { return steps_; }

 private:
  std::vector<TransformStep> steps_;
};

// The 6D route. Input must lie on the cone within the relative tolerance.
ConePoint apply_cone(const ConformalTransform& t, const ConePoint& k,
                     double on_cone_tol = 1e-12);

// The 4D closed forms.
FourMomentum apply_4d(const ConformalTransform& t, const FourMomentum& q, double M);

// Euclidean norm of project(apply_cone(t, embed(q, kplus, M))) - apply_4d(t, q, M).
double isomorphism_residual(const ConformalTransform& t, const FourMomentum& q,
                            double kplus, double M);

}  // namespace conecalc
