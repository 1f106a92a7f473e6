#pragma once

// Residual checks for the doubled fields: the coupled 5D condition, the
// sourceless combination j - m^2 phi, the second-order consistency relation,
// and the x5 = 0 boundary identity.  Derivatives act analytically in
// momentum representation; a stencil cross-check validates the lattice
// transform conventions themselves.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "conecalc/field_decomposition.hpp"

namespace conecalc {

struct ResidualReport {
  std::string name;
  double linf = 0.0;
  double l2 = 0.0;
  double tolerance = 0.0;
  bool pass = false;  // pass iff linf <= tolerance
};

nlohmann::ordered_json to_json(const ResidualReport& r);

// Planted single-site perturbation for sensitivity checks.  Q5 scales the
// fifth-momentum magnitude used by the verifier at that site; Value scales
// the plus-combination sample there.
struct Corruption {
  enum class Target { Q5, Value };
  std::size_t site = 0;
  Target target = Target::Q5;
  double eps = 0.0;
};

// -q^2 phi_+- + (M^2 - Q_a^2) phi_-+ at each x5 sample.  Q_a is re-derived
// from the mode momenta; tolerance is tol_rel times the assembled sup norm.
ResidualReport check_coupled_condition(
    const DecomposedField& d, const std::vector<double>& x5_samples,
    double tol_rel = 1e-10, const std::optional<Corruption>& corrupt = std::nullopt);

// The combinations j_+- - m_+-^2 phi_+- must satisfy the sourceless coupled
// condition; checked at x5 = 0.
ResidualReport check_source_condition(const DecomposedField& j,
                                      const DecomposedField& phi, double m_plus2,
                                      double m_minus2, double tol_rel = 1e-10);

// (M^2 - Q_a^2) phi_+- - m_-+^2 phi_-+ + j_-+ at one x5 value.
ResidualReport check_consistency_4_10(const DecomposedField& phi,
                                      const DecomposedField& j, double m_plus2,
                                      double m_minus2, double x5,
                                      double tol_rel = 1e-10);

// extend_5d at x5 = 0 against assemble_pm; exact by construction when
// t5 = 0, nonzero when the caller plants a phase offset.
ResidualReport check_boundary(const DecomposedField& d, PMSign sign,
                              double t5 = 0.0, double tol = 0.0);

// Cross-validates the transform conventions: a second-order d'Alembert
// stencil applied in position space must equal multiplication by the exact
// discrete symbol sum_mu g_mu (2 cos(q_mu dx_mu) - 2)/dx_mu^2.
ResidualReport check_lattice_dispersion(const MomentumLatticeField& f,
                                        double tol = 1e-6);

}  // namespace conecalc
