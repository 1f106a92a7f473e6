#pragma once

// Momentum-space equations of motion: the sourced Klein-Gordon solve with an
// i-epsilon pole prescription, source decomposition over the domains, the
// gauge translation Phi'(x) = e^{ihx} Phi(x) and its spectrum-shift dual,
// and a Dirac residual evaluator with spectral derivatives.

#include <array>
#include <complex>

#include "conecalc/field_decomposition.hpp"
#include "conecalc/spectral_verifier.hpp"

namespace conecalc {

struct PoleRegularization {
  double epsilon = 0.0;   // i-epsilon width; must be > 0
  double pv_band = 0.0;   // if > 0, zero out sites with |m^2 - q^2| < pv_band

  static PoleRegularization defaults(double M) {
    return {1e-6 * M * M, 0.0};
  }
};

// Phi(q) = J(q) / (m^2 - q^2 - i eps), sitewise.
MomentumLatticeField kg_solve(const MomentumLatticeField& J, double m2,
                              const PoleRegularization& reg);

// (m^2 - q^2) Phi, the forward operator matching kg_solve.
MomentumLatticeField kg_apply(const MomentumLatticeField& phi, double m2);

// Domain split of a source spectrum; identical bookkeeping to the field case.
DecomposedField source_decompose(const MomentumLatticeField& Jfull);

// Pointwise e^{i h.x} on a position-representation field.  Complex h allowed;
// a real input field requires pure imaginary h to stay real.
MomentumLatticeField gauge_translate(const MomentumLatticeField& f_position,
                                     const std::array<std::complex<double>, 4>& h);

using GammaMatrix = std::array<std::array<std::complex<double>, 4>, 4>;

// Dirac representation; {gamma_mu, gamma_nu} = 2 g_mu_nu.
GammaMatrix gamma(int mu);

// Residual of (i gamma.d - e gamma.A - m) psi: the derivative acts as
// multiplication by (gamma0 q0 - gamma.q) in momentum space, the gauge term
// pointwise in position space.  psi has 4 components; A is one field per
// Lorentz index, position representation.
ResidualReport dirac_residual(const MomentumLatticeField& psi,
                              const std::array<MomentumLatticeField, 4>& A,
                              double m, double e, double tol = 1e-10);

// Sample nonlinear source a Phi^2 + b Phi^3, pointwise on the given samples.
MomentumLatticeField poly_source(const MomentumLatticeField& phi, double a,
                                 double b);

}  // namespace conecalc
