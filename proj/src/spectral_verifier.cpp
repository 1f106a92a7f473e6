#include "conecalc/spectral_verifier.hpp"

#include <cmath>
#include <numbers>

namespace conecalc {

nlohmann::ordered_json to_json(const ResidualReport& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["linf"] = r.linf;
  j["l2"] = r.l2;
  j["tolerance"] = r.tolerance;
  j["pass"] = r.pass;
  return j;
}

namespace {

ResidualReport finish(std::string name, double linf, double sumsq,
                      std::size_t count, double tolerance) {
  ResidualReport r;
  r.name = std::move(name);
  r.linf = linf;
  r.l2 = count ? std::sqrt(sumsq / static_cast<double>(count)) : 0.0;
  r.tolerance = tolerance;
  r.pass = linf <= tolerance;
  return r;
}

// Coupled-condition residual of an assembled (f_plus, f_minus) pair.  The
// verifier trusts only the mode momenta: q^2 and Q_a come from mode_q2,
// except where a corruption deliberately skews Q_a.
ResidualReport pair_coupled_residual(std::string name,
                                     MomentumLatticeField fp,
                                     MomentumLatticeField fm,
                                     const std::vector<double>& x5_samples,
                                     double tol_rel,
                                     const std::optional<Corruption>& corrupt) {
  const LatticeGeometry& g = fp.geometry();
  if (!fm.geometry().same_lattice(g) || fm.components() != fp.components())
    throw LatticeMismatch("coupled-condition pair");
  if (corrupt && corrupt->site >= fp.num_sites())
    throw MalformedInput("corruption site out of range");
  if (corrupt && corrupt->target == Corruption::Target::Value)
    for (int c = 0; c < fp.components(); ++c)
      fp.at(corrupt->site, c) *= 1.0 + corrupt->eps;

  const double sup = std::max(fp.max_abs(), fm.max_abs());
  const double M2 = g.M * g.M;
  double linf = 0.0, sumsq = 0.0;
  std::size_t count = 0;
  for (std::size_t s = 0; s < fp.num_sites(); ++s) {
    const double q2 = fp.mode_q2(s);
    double Q = std::sqrt(q5_squared(classify(q2, g.M), q2, g.M));
    if (corrupt && corrupt->target == Corruption::Target::Q5 && corrupt->site == s)
      Q *= 1.0 + corrupt->eps;
    const double coef = M2 - Q * Q;
    for (double x5 : x5_samples) {
      const std::complex<double> phase{std::cos(Q * x5), -std::sin(Q * x5)};
      for (int c = 0; c < fp.components(); ++c) {
        const std::complex<double> p = fp.at(s, c) * phase;
        const std::complex<double> m = fm.at(s, c) * phase;
        const double r1 = std::abs(-q2 * p + coef * m);
        const double r2 = std::abs(-q2 * m + coef * p);
        linf = std::max({linf, r1, r2});
        sumsq += r1 * r1 + r2 * r2;
        count += 2;
      }
    }
  }
  return finish(std::move(name), linf, sumsq, count, tol_rel * sup);
}

}  // namespace

ResidualReport check_coupled_condition(const DecomposedField& d,
                                       const std::vector<double>& x5_samples,
                                       double tol_rel,
                                       const std::optional<Corruption>& corrupt) {
  return pair_coupled_residual("coupled_condition", assemble_pm(d, PMSign::Plus),
                               assemble_pm(d, PMSign::Minus), x5_samples, tol_rel,
                               corrupt);
}

ResidualReport check_source_condition(const DecomposedField& j,
                                      const DecomposedField& phi, double m_plus2,
                                      double m_minus2, double tol_rel) {
  if (!j.geometry().same_lattice(phi.geometry()))
    throw LatticeMismatch("source and field lattices differ");
  MomentumLatticeField tp = assemble_pm(j, PMSign::Plus);
  MomentumLatticeField tm = assemble_pm(j, PMSign::Minus);
  const MomentumLatticeField pp = assemble_pm(phi, PMSign::Plus);
  const MomentumLatticeField pm = assemble_pm(phi, PMSign::Minus);
  for (std::size_t i = 0; i < tp.values().size(); ++i) {
    tp.values()[i] -= m_plus2 * pp.values()[i];
    tm.values()[i] -= m_minus2 * pm.values()[i];
  }
  return pair_coupled_residual("source_condition", std::move(tp), std::move(tm),
                               {0.0}, tol_rel, std::nullopt);
}

ResidualReport check_consistency_4_10(const DecomposedField& phi,
                                      const DecomposedField& j, double m_plus2,
                                      double m_minus2, double x5, double tol_rel) {
  const LatticeGeometry& g = phi.geometry();
  if (!j.geometry().same_lattice(g))
    throw LatticeMismatch("source and field lattices differ");
  const MomentumLatticeField pp = extend_5d(phi, PMSign::Plus, x5);
  const MomentumLatticeField pm = extend_5d(phi, PMSign::Minus, x5);
  const MomentumLatticeField jp = extend_5d(j, PMSign::Plus, x5);
  const MomentumLatticeField jm = extend_5d(j, PMSign::Minus, x5);
  const double sup = std::max({pp.max_abs(), pm.max_abs(), jp.max_abs(),
                               jm.max_abs()});
  const double M2 = g.M * g.M;
  double linf = 0.0, sumsq = 0.0;
  std::size_t count = 0;
  for (std::size_t s = 0; s < pp.num_sites(); ++s) {
    const double q2 = pp.mode_q2(s);
    const double coef = M2 - q5_squared(classify(q2, g.M), q2, g.M);
    for (int c = 0; c < pp.components(); ++c) {
      const double rp =
          std::abs(coef * pp.at(s, c) - m_minus2 * pm.at(s, c) + jm.at(s, c));
      const double rm =
          std::abs(coef * pm.at(s, c) - m_plus2 * pp.at(s, c) + jp.at(s, c));
      linf = std::max({linf, rp, rm});
      sumsq += rp * rp + rm * rm;
      count += 2;
    }
  }
  return finish("consistency_4_10", linf, sumsq, count, tol_rel * sup);
}

ResidualReport check_boundary(const DecomposedField& d, PMSign sign, double t5,
                              double tol) {
  const MomentumLatticeField a = extend_5d(d, sign, 0.0, t5);
  const MomentumLatticeField b = assemble_pm(d, sign);
  double linf = 0.0, sumsq = 0.0;
  for (std::size_t i = 0; i < a.values().size(); ++i) {
    const double r = std::abs(a.values()[i] - b.values()[i]);
    linf = std::max(linf, r);
    sumsq += r * r;
  }
  return finish(sign == PMSign::Plus ? "boundary_plus" : "boundary_minus", linf,
                sumsq, a.values().size(), tol);
}

ResidualReport check_lattice_dispersion(const MomentumLatticeField& f, double tol) {
  const LatticeGeometry& g = f.geometry();
  static const double metric[4] = {1.0, -1.0, -1.0, -1.0};
  std::array<double, 4> dx;
  for (int mu = 0; mu < 4; ++mu)
    dx[mu] = 2.0 * std::numbers::pi / (g.dims[mu] * g.spacing[mu]);

  // Second-order d'Alembert stencil in position space, periodic wrap.
  const MomentumLatticeField pos = to_position(f);
  MomentumLatticeField lap(g);
  for (std::size_t s = 0; s < g.num_sites(); ++s) {
    const std::array<int, 4> c = pos.site_coords(s);
    for (int comp = 0; comp < g.components; ++comp) {
      std::complex<double> acc{0.0, 0.0};
      for (int mu = 0; mu < 4; ++mu) {
        std::array<int, 4> up = c, dn = c;
        up[mu] = (c[mu] + 1) % g.dims[mu];
        dn[mu] = (c[mu] + g.dims[mu] - 1) % g.dims[mu];
        acc += metric[mu] *
               (pos.at(pos.site_index(up), comp) - 2.0 * pos.at(s, comp) +
                pos.at(pos.site_index(dn), comp)) /
               (dx[mu] * dx[mu]);
      }
      lap.at(s, comp) = acc;
    }
  }
  const MomentumLatticeField got = to_momentum(lap);

  // Exact discrete symbol of the same stencil on the e^{-iqx} basis.
  double linf = 0.0, sumsq = 0.0, sup = 0.0;
  for (std::size_t s = 0; s < g.num_sites(); ++s) {
    const FourMomentum q = f.mode_q(s);
    double sym = 0.0;
    for (int mu = 0; mu < 4; ++mu)
      sym += metric[mu] * (2.0 * std::cos(q[mu] * dx[mu]) - 2.0) / (dx[mu] * dx[mu]);
    for (int comp = 0; comp < g.components; ++comp) {
      const std::complex<double> want = sym * f.at(s, comp);
      sup = std::max(sup, std::abs(want));
      const double r = std::abs(got.at(s, comp) - want);
      linf = std::max(linf, r);
      sumsq += r * r;
    }
  }
  return finish("lattice_dispersion", linf, sumsq, g.num_sites() * g.components,
                tol * std::max(1.0, sup));
}

}  // namespace conecalc
