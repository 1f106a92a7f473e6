#include "conecalc/dynamics.hpp"

#include <cmath>

namespace conecalc {

MomentumLatticeField kg_solve(const MomentumLatticeField& J, double m2,
                              const PoleRegularization& reg) {
  if (!(reg.epsilon > 0.0)) throw NonPositiveScale("kg_solve: epsilon must be > 0");
  MomentumLatticeField phi = J;
  for (std::size_t s = 0; s < J.num_sites(); ++s) {
    const double gap = m2 - J.mode_q2(s);
    if (reg.pv_band > 0.0 && std::abs(gap) < reg.pv_band) {
      for (int c = 0; c < J.components(); ++c) phi.at(s, c) = {0.0, 0.0};
      continue;
    }
    const std::complex<double> denom{gap, -reg.epsilon};
    for (int c = 0; c < J.components(); ++c) phi.at(s, c) = J.at(s, c) / denom;
  }
  return phi;
}

MomentumLatticeField kg_apply(const MomentumLatticeField& phi, double m2) {
  MomentumLatticeField out = phi;
  for (std::size_t s = 0; s < phi.num_sites(); ++s) {
    const double gap = m2 - phi.mode_q2(s);
    for (int c = 0; c < phi.components(); ++c) out.at(s, c) = gap * phi.at(s, c);
  }
  return out;
}

DecomposedField source_decompose(const MomentumLatticeField& Jfull) {
  return decompose(Jfull);
}

MomentumLatticeField gauge_translate(const MomentumLatticeField& f_position,
                                     const std::array<std::complex<double>, 4>& h) {
  bool h_pure_imag = true;
  for (const auto& hc : h)
    if (hc.real() != 0.0) h_pure_imag = false;
  if (!h_pure_imag) {
    double max_im = 0.0;
    for (const auto& v : f_position.values())
      max_im = std::max(max_im, std::abs(v.imag()));
    if (max_im <= 1e-14 * (1.0 + f_position.max_abs()))
      throw RealityViolation("real field needs pure imaginary h");
  }
  MomentumLatticeField out = f_position;
  const LatticeGeometry& g = f_position.geometry();
  static const double metric[4] = {1.0, -1.0, -1.0, -1.0};
  for (std::size_t s = 0; s < out.num_sites(); ++s) {
    const FourMomentum x = lattice_position(g, out.site_coords(s));
    std::complex<double> hx{0.0, 0.0};
    for (int mu = 0; mu < 4; ++mu) hx += metric[mu] * h[mu] * x[mu];
    const std::complex<double> factor = std::exp(std::complex<double>(0.0, 1.0) * hx);
    for (int c = 0; c < g.components; ++c) out.at(s, c) *= factor;
  }
  return out;
}

GammaMatrix gamma(int mu) {
  const std::complex<double> I{0.0, 1.0};
  GammaMatrix g{};
  switch (mu) {
    case 0:
      g[0][0] = 1.0; g[1][1] = 1.0; g[2][2] = -1.0; g[3][3] = -1.0;
      break;
    case 1:
      g[0][3] = 1.0; g[1][2] = 1.0; g[2][1] = -1.0; g[3][0] = -1.0;
      break;
    case 2:
      g[0][3] = -I; g[1][2] = I; g[2][1] = I; g[3][0] = -I;
      break;
    case 3:
      g[0][2] = 1.0; g[1][3] = -1.0; g[2][0] = -1.0; g[3][1] = 1.0;
      break;
    default:
      throw MalformedInput("gamma index must be 0..3");
  }
  return g;
}

ResidualReport dirac_residual(const MomentumLatticeField& psi,
                              const std::array<MomentumLatticeField, 4>& A,
                              double m, double e, double tol) {
  const LatticeGeometry& g = psi.geometry();
  if (g.components != 4) throw MalformedInput("dirac_residual: psi needs 4 components");
  for (const auto& a : A)
    if (!a.geometry().same_lattice(g) || a.components() != 1)
      throw LatticeMismatch("gauge field lattice or component count");

  const std::array<GammaMatrix, 4> gam{gamma(0), gamma(1), gamma(2), gamma(3)};
  static const double metric[4] = {1.0, -1.0, -1.0, -1.0};

  // momentum-space part: (gamma0 q0 - gamma.q - m) psi
  MomentumLatticeField res = psi;
  for (std::size_t s = 0; s < psi.num_sites(); ++s) {
    const FourMomentum q = psi.mode_q(s);
    for (int r = 0; r < 4; ++r) {
      std::complex<double> acc = -m * psi.at(s, r);
      for (int mu = 0; mu < 4; ++mu)
        for (int c = 0; c < 4; ++c)
          acc += metric[mu] * q[mu] * gam[mu][r][c] * psi.at(s, c);
      res.at(s, r) = acc;
    }
  }

  if (e != 0.0) {
    // gauge term evaluated pointwise in position space
    const MomentumLatticeField psix = to_position(psi);
    MomentumLatticeField gauge(g);
    for (std::size_t s = 0; s < g.num_sites(); ++s) {
      for (int r = 0; r < 4; ++r) {
        std::complex<double> acc{0.0, 0.0};
        for (int mu = 0; mu < 4; ++mu)
          for (int c = 0; c < 4; ++c)
            acc += metric[mu] * A[mu].at(s, 0) * gam[mu][r][c] * psix.at(s, c);
        gauge.at(s, r) = acc;
      }
    }
    const MomentumLatticeField gq = to_momentum(gauge);
    for (std::size_t i = 0; i < res.values().size(); ++i)
      res.values()[i] -= e * gq.values()[i];
  }

  ResidualReport rep;
  rep.name = "dirac_residual";
  double sumsq = 0.0;
  for (const auto& v : res.values()) {
    const double r = std::abs(v);
    rep.linf = std::max(rep.linf, r);
    sumsq += r * r;
  }
  rep.l2 = std::sqrt(sumsq / static_cast<double>(res.values().size()));
  rep.tolerance = tol;
  rep.pass = rep.linf <= rep.tolerance;
  return rep;
}

MomentumLatticeField poly_source(const MomentumLatticeField& phi, double a,
                                 double b) {
  MomentumLatticeField out = phi;
  for (auto& v : out.values()) v = a * v * v + b * v * v * v;
  return out;
}

}  // namespace conecalc
