#include "conecalc/constraint_solver.hpp"

#include <cmath>

namespace conecalc {

ConstraintParams ConstraintParams::from_alpha_beta(double alpha_plus,
                                                  double beta_plus, double M) {
  if (beta_plus == 0.0) throw ZeroBeta("beta_+ must be nonzero");
  if (M <= 0.0) throw NonPositiveScale("constraint scale M must be > 0");
  ConstraintParams p;
  p.alpha_plus = alpha_plus;
  p.beta_plus = beta_plus;
  p.beta_minus = alpha_plus;
  p.alpha_minus = (1.0 - alpha_plus * alpha_plus) / beta_plus;
  p.M = M;
  return p;
}

double ConstraintParams::consistency_residual() const {
  const double c1 = alpha_plus * alpha_plus + alpha_minus * beta_plus - 1.0;
  const double c2 = beta_minus * beta_minus + alpha_minus * beta_plus - 1.0;
  return std::max({std::abs(c1), std::abs(c2), std::abs(alpha_plus - beta_minus)});
}

ChargedMasses charged_masses(const ConstraintParams& p) {
  if (p.beta_plus == 0.0) throw ZeroBeta("charged_masses: beta_+ = 0");
  if (p.consistency_residual() > 1e-10)
    throw InconsistentParams("constraint closure relations violated");
  const double M2 = p.M * p.M;
  ChargedMasses out;
  out.masses.m_plus2 = -2.0 * M2 * p.alpha_plus *
                       (1.0 - p.alpha_plus * p.alpha_plus) / p.beta_plus;
  out.masses.m_minus2 = -2.0 * M2 * p.alpha_plus * p.beta_plus;
  out.physical =
      p.alpha_plus * p.beta_plus < 0.0 && std::abs(p.alpha_plus) < 1.0;
  return out;
}

ConstraintParams charged_params_from_masses(const MassPair& m, double M,
                                            char branch) {
  if (M <= 0.0) throw NonPositiveScale("constraint scale M must be > 0");
  if (m.m_plus2 <= 0.0 || m.m_minus2 <= 0.0)
    throw NonPositiveMass("inverse map needs m_+^2, m_-^2 > 0");
  const double M4 = M * M * M * M;
  const double prod = m.m_plus2 * m.m_minus2;
  if (prod > M4 * (1.0 + 1e-12))
    throw MassBoundViolated("m_+ m_- exceeds M^2");
  const double disc = std::sqrt(std::max(0.0, 1.0 - prod / M4));
  const double a2 = branch == '+' ? 0.5 + 0.5 * disc : 0.5 - 0.5 * disc;
  if (branch != '+' && branch != '-') throw MalformedInput("branch must be + or -");
  const double beta = std::sqrt((1.0 - a2) * m.m_minus2 / m.m_plus2);
  return ConstraintParams::from_alpha_beta(-std::sqrt(a2), beta, M);
}

double neutral_mass_ratio(double alpha_plus, double beta_plus) {
  if (beta_plus == 0.0) throw ZeroBeta("neutral_mass_ratio: beta_+ = 0");
  return -(1.0 + alpha_plus * alpha_plus) / (beta_plus * beta_plus);
}

double neutral_alt_mass(double alpha, double m_minus2) {
  if (m_minus2 < 0.0) throw NegativeMass("neutral_alt_mass: m_-^2 < 0");
  return alpha * alpha * m_minus2;
}

MomentumLatticeField neutral_source_transfer(const MomentumLatticeField& j_plus,
                                             const MomentumLatticeField& F,
                                             double alpha) {
  if (alpha == 0.0) throw ZeroAlpha("source transfer undefined at alpha = 0");
  if (!j_plus.geometry().same_lattice(F.geometry()) ||
      j_plus.components() != F.components())
    throw LatticeMismatch("j_+ and F lattices differ");
  MomentumLatticeField out = j_plus;
  for (std::size_t i = 0; i < out.values().size(); ++i)
    out.values()[i] = (j_plus.values()[i] + F.values()[i]) / alpha;
  return out;
}

std::pair<double, double> fermion_alpha_branches(double m_plus, double m_minus,
                                                 double M) {
  if (M <= 0.0) throw NonPositiveScale("fermion_alpha_branches: M must be > 0");
  if (m_plus <= 0.0 || m_minus <= 0.0)
    throw NonPositiveMass("fermion_alpha_branches: masses must be > 0");
  const double M2 = M * M;
  if (m_plus * m_minus > M2 * (1.0 + 1e-12))
    throw MassBoundViolated("m_+ m_- exceeds M^2");
  const double r = m_plus * m_minus / M2;
  const double disc = std::sqrt(std::max(0.0, 1.0 - r * r));
  return {0.5 + 0.5 * disc, 0.5 - 0.5 * disc};
}

namespace {

double onshell_q5(const MomentumLatticeField& f, std::size_t site) {
  const double q2 = f.mode_q2(site);
  const double M = f.geometry().M;
  return std::sqrt(q5_squared(classify(q2, M), q2, M));
}

}  // namespace

std::pair<MomentumLatticeField, MomentumLatticeField> charged_sources_from_c(
    const MomentumLatticeField& c_plus, const MomentumLatticeField& c_minus,
    double alpha_plus, double beta_plus) {
  if (beta_plus == 0.0) throw ZeroBeta("charged_sources_from_c: beta_+ = 0");
  if (!c_plus.geometry().same_lattice(c_minus.geometry()) ||
      c_plus.components() != c_minus.components())
    throw LatticeMismatch("C_+ and C_- lattices differ");
  const double M = c_plus.geometry().M;
  const double M2 = M * M;
  const double lead = (1.0 - alpha_plus * alpha_plus) / beta_plus;
  MomentumLatticeField jp = c_plus, jm = c_plus;
  for (std::size_t s = 0; s < c_plus.num_sites(); ++s) {
    const double QoverM = onshell_q5(c_plus, s) / M;
    for (int c = 0; c < c_plus.components(); ++c) {
      jp.at(s, c) = M2 * (lead * c_plus.at(s, c) + alpha_plus * c_minus.at(s, c) +
                          QoverM * c_minus.at(s, c));
      jm.at(s, c) = M2 * (alpha_plus * c_plus.at(s, c) +
                          beta_plus * c_minus.at(s, c) + QoverM * c_plus.at(s, c));
    }
  }
  return {std::move(jp), std::move(jm)};
}

ResidualReport check_charged_constraint(
    const MomentumLatticeField& phi_plus, const MomentumLatticeField& phi_minus,
    const MomentumLatticeField& c_plus, const MomentumLatticeField& c_minus,
    const MomentumLatticeField& j_plus, const MomentumLatticeField& j_minus,
    double m_plus2, double m_minus2, double tol_rel) {
  const LatticeGeometry& g = phi_plus.geometry();
  for (const MomentumLatticeField* f :
       {&phi_minus, &c_plus, &c_minus, &j_plus, &j_minus})
    if (!f->geometry().same_lattice(g) || f->components() != g.components)
      throw LatticeMismatch("charged constraint inputs");
  const double M = g.M;
  const double M2 = M * M;
  double sup = 0.0;
  for (const MomentumLatticeField* f :
       {&phi_plus, &phi_minus, &c_plus, &c_minus, &j_plus, &j_minus})
    sup = std::max(sup, f->max_abs());
  double linf = 0.0, sumsq = 0.0;
  std::size_t count = 0;
  for (std::size_t s = 0; s < g.num_sites(); ++s) {
    const double QoverM = onshell_q5(phi_plus, s) / M;
    for (int c = 0; c < g.components; ++c) {
      const double r1 =
          std::abs((1.0 - QoverM) * phi_plus.at(s, c) - c_plus.at(s, c));
      const double r2 =
          std::abs((1.0 - QoverM) * phi_minus.at(s, c) - c_minus.at(s, c));
      const double r3 = std::abs(M2 * (1.0 + QoverM) * c_minus.at(s, c) -
                                 (m_plus2 * phi_plus.at(s, c) - j_plus.at(s, c)));
      const double r4 = std::abs(M2 * (1.0 + QoverM) * c_plus.at(s, c) -
                                 (m_minus2 * phi_minus.at(s, c) - j_minus.at(s, c)));
      linf = std::max({linf, r1, r2, r3, r4});
      sumsq += r1 * r1 + r2 * r2 + r3 * r3 + r4 * r4;
      count += 4;
    }
  }
  ResidualReport rep;
  rep.name = "charged_constraint";
  rep.linf = linf;
  rep.l2 = count ? std::sqrt(sumsq / static_cast<double>(count)) : 0.0;
  rep.tolerance = tol_rel * sup;
  rep.pass = linf <= rep.tolerance;
  return rep;
}

A5Result a5_from_a4(const std::array<std::complex<double>, 4>& a,
                    const ConePoint& kappa, double e) {
  const double kp = kappa.kplus();
  if (std::abs(kp) < 1e-14) throw DegenerateScale("a5_from_a4: kappa_+ ~ 0");
  static const double metric[4] = {1.0, -1.0, -1.0, -1.0};
  const double kmu[4] = {kappa.k0, kappa.k1, kappa.k2, kappa.k3};
  std::complex<double> a_dot_k{0.0, 0.0}, a_dot_a{0.0, 0.0};
  for (int mu = 0; mu < 4; ++mu) {
    a_dot_k += metric[mu] * a[mu] * kmu[mu];
    a_dot_a += metric[mu] * a[mu] * a[mu];
  }
  A5Result r;
  // the two linear terms coincide for c-number samples but mirror the
  // operator ordering of the defining relation
  r.a5 = (-a_dot_k - a_dot_k + e * a_dot_a) / (2.0 * kappa.M * kp);
  r.kminus_ratio = (kappa.kminus() - e * r.a5) / kp;
  return r;
}

ConePoint gauge_translated(const ConePoint& kappa, const std::array<double, 4>& a,
                           double e) {
  std::array<std::complex<double>, 4> ac;
  for (int mu = 0; mu < 4; ++mu) ac[mu] = a[mu];
  const double a5 = a5_from_a4(ac, kappa, e).a5.real();
  ConePoint out = kappa;
  out.k0 -= e * a[0];
  out.k1 -= e * a[1];
  out.k2 -= e * a[2];
  out.k3 -= e * a[3];
  out.k5 -= e * a5;
  out.k6 += e * a5;  // a_6 = -a_5 keeps kappa_+ fixed
  return out;
}

}  // namespace conecalc
