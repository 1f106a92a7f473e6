#pragma once

// Doubling machinery: the four-part decomposition of a momentum field over
// the domains I..IV, assembly of the Phi_+/Phi_- combinations, the analytic
// x5 extension with on-shell phases e^{-i Q_a x5}, the hyperboloid
// projectors in momentum representation, and the kappa_+ reduction weight.

#include <complex>
#include <vector>

#include "conecalc/domain_partition.hpp"
#include "conecalc/lattice_field.hpp"

namespace conecalc {

struct DecomposedField {
  std::array<MomentumLatticeField, 4> parts;  // indexed by Domain

  const LatticeGeometry& geometry() const { return parts[0].geometry(); }
  MomentumLatticeField& part(Domain d) { return parts[static_cast<int>(d)]; }
  const MomentumLatticeField& part(Domain d) const {
    return parts[static_cast<int>(d)];
  }
};

enum class PMSign { Plus, Minus };

// kappa_+ dependence of the 6D field in the reduction integral.
struct ScaleProfile {
  enum class Kind { Tabulated, DeltaAt, ThetaAbove };
  Kind kind = Kind::Tabulated;
  double scale = 0.0;  // the fixed scale for DeltaAt / ThetaAbove

  static ScaleProfile tabulated() { return {Kind::Tabulated, 0.0}; }
  static ScaleProfile delta_at(double m);
  static ScaleProfile theta_above(double m);
};

// (M^2/2) * integral kappa_+^3 sigma d kappa_+ over the positive grid,
// trapezoidal; DeltaAt evaluates (M^2/2) scale^3 sigma(scale) instead, and
// ThetaAbove restricts the quadrature to kappa_+ >= scale.
std::complex<double> reduce_6d(const std::vector<double>& kplus_grid,
                               const std::vector<std::complex<double>>& samples,
                               double M, const ScaleProfile& profile);

// Part N holds f at the sites whose mode q^2 classifies as N, zero elsewhere.
DecomposedField decompose(const MomentumLatticeField& f);

// (Phi_I + Phi_III) +- (Phi_II + Phi_IV), sitewise.
MomentumLatticeField assemble_pm(const DecomposedField& d, PMSign sign);

// Sitewise Phi_N * e^{-i Q_a (x5 - t5)} with the assemble sign pattern;
// equal to assemble_pm at x5 = t5 by the same arithmetic path.
MomentumLatticeField extend_5d(const DecomposedField& d, PMSign sign, double x5,
                               double t5 = 0.0);

// Momentum representation of the hyperboloid projector P_a: multiplication
// by the indicator Lambda_a(q^2).
MomentumLatticeField projector_apply(int a, const MomentumLatticeField& f);

}  // namespace conecalc
