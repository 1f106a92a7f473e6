#pragma once

// Closed-form algebra of the linear fifth-derivative constraints: charged
// scalar mass/source relations, the neutral no-go ratio and its nonlinear
// alternative, the fermion branch equation, and the fifth gauge component
// fixed by cone invariance.

#include <array>
#include <complex>
#include <utility>

#include "conecalc/cone_geometry.hpp"
#include "conecalc/spectral_verifier.hpp"

namespace conecalc {

// Coefficients of i/M d/dx5 phi_pm = alpha_pm phi_+ + beta_pm phi_- + C_pm.
// Closure requires alpha_+^2 + alpha_- beta_+ = 1 with beta_- = alpha_+
// (which makes the second closure combination equal 1 as well).
struct ConstraintParams {
  double alpha_plus = 0.0;
  double alpha_minus = 0.0;
  double beta_plus = 0.0;
  double beta_minus = 0.0;
  double M = 1.0;

  // Completes (alpha_-, beta_-) from the free pair (alpha_+, beta_+).
  static ConstraintParams from_alpha_beta(double alpha_plus, double beta_plus,
                                          double M);
  double consistency_residual() const;
};

struct MassPair {
  double m_plus2 = 0.0;
  double m_minus2 = 0.0;
};

struct ChargedMasses {
  MassPair masses;
  bool physical = false;  // alpha_+ beta_+ < 0 and |alpha_+| < 1
};

// m_+^2 = -2M^2 alpha_+ (1-alpha_+^2)/beta_+, m_-^2 = -2M^2 alpha_+ beta_+.
ChargedMasses charged_masses(const ConstraintParams& p);

// Inverse map; branch '+'/'-' picks alpha_+^2 = 1/2 +- sqrt(1 - m+^2 m-^2 / M^4)/2.
// Convention: beta_+ > 0 and alpha_+ < 0, so both masses come out positive.
ConstraintParams charged_params_from_masses(const MassPair& m, double M,
                                            char branch);

// -(1 + alpha_+^2)/beta_+^2; negative for every real parameter choice, which
// is the no-go for the linear neutral constraint.
double neutral_mass_ratio(double alpha_plus, double beta_plus);

// Nonlinear neutral constraint phi_- = alpha phi_+ + G: m_+^2 = alpha^2 m_-^2.
double neutral_alt_mass(double alpha, double m_minus2);

// Companion source relation alpha j_- - j_+ = F, solved for j_-.
MomentumLatticeField neutral_source_transfer(const MomentumLatticeField& j_plus,
                                             const MomentumLatticeField& F,
                                             double alpha);

// Both alpha_+^2 branches of alpha_+^2 (1 - alpha_+^2) = m+^2 m-^2 / (4 M^4).
std::pair<double, double> fermion_alpha_branches(double m_plus, double m_minus,
                                                 double M);

// Source assembly j_pm from the constraint inhomogeneity C_pm, with the
// fifth derivative replaced by the on-shell Q_a of each mode.
std::pair<MomentumLatticeField, MomentumLatticeField> charged_sources_from_c(
    const MomentumLatticeField& c_plus, const MomentumLatticeField& c_minus,
    double alpha_plus, double beta_plus);

// Residuals of (1 - Q/M) phi_pm = C_pm and
// M^2 (1 + Q/M) C_mp = m_pm^2 phi_pm - j_pm, sitewise.
ResidualReport check_charged_constraint(
    const MomentumLatticeField& phi_plus, const MomentumLatticeField& phi_minus,
    const MomentumLatticeField& c_plus, const MomentumLatticeField& c_minus,
    const MomentumLatticeField& j_plus, const MomentumLatticeField& j_minus,
    double m_plus2, double m_minus2, double tol_rel = 1e-10);

struct A5Result {
  std::complex<double> a5{0.0, 0.0};
  std::complex<double> kminus_ratio{0.0, 0.0};  // kappa_-'/kappa_+
};

// Fifth gauge component fixed by kappa_+ invariance (a_6 = -a_5) and cone
// preservation of the shift kappa_C -> kappa_C - e a_C.
A5Result a5_from_a4(const std::array<std::complex<double>, 4>& a,
                    const ConePoint& kappa, double e);

// The shifted 6D point for a real gauge sample; lands on the cone exactly.
ConePoint gauge_translated(const ConePoint& kappa, const std::array<double, 4>& a,
                           double e);

}  // namespace conecalc
