#include "conecalc/field_decomposition.hpp"

#include <cmath>

namespace conecalc {

ScaleProfile ScaleProfile::delta_at(double m) {
  if (m <= 0.0) throw NonPositiveScale("DeltaAt profile requires scale > 0");
  return {Kind::DeltaAt, m};
}

ScaleProfile ScaleProfile::theta_above(double m) {
  if (m <= 0.0) throw NonPositiveScale("ThetaAbove profile requires scale > 0");
  return {Kind::ThetaAbove, m};
}

namespace {

std::complex<double> interp(const std::vector<double>& x,
                            const std::vector<std::complex<double>>& y, double t) {
  if (t < x.front() || t > x.back())
    throw Error("reduce_6d: profile scale outside the kappa_+ grid");
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (t <= x[i]) {
      const double w = (t - x[i - 1]) / (x[i] - x[i - 1]);
      return (1.0 - w) * y[i - 1] + w * y[i];
    }
  }
  return y.back();
}

}  // namespace

std::complex<double> reduce_6d(const std::vector<double>& kplus_grid,
                               const std::vector<std::complex<double>>& samples,
                               double M, const ScaleProfile& profile) {
  if (kplus_grid.empty() || samples.empty())
    throw EmptyGrid("reduce_6d needs a nonempty kappa_+ grid");
  if (kplus_grid.size() != samples.size())
    throw MalformedInput("kappa_+ grid and sample count differ");
  if (M <= 0.0) throw NonPositiveScale("reduce_6d requires M > 0");
  for (std::size_t i = 0; i < kplus_grid.size(); ++i) {
    if (kplus_grid[i] <= 0.0)
      throw NonPositiveKPlus("kappa_+ grid must be strictly positive");
    if (i > 0 && kplus_grid[i] <= kplus_grid[i - 1])
      throw MalformedInput("kappa_+ grid must be strictly ascending");
  }
  const double half_M2 = 0.5 * M * M;

  if (profile.kind == ScaleProfile::Kind::DeltaAt) {
    const double m = profile.scale;
    return half_M2 * m * m * m * interp(kplus_grid, samples, m);
  }

  // Tabulated / ThetaAbove: trapezoid on kappa_+^3 * sigma.
  auto weight = [&](std::size_t i) {
    const double k = kplus_grid[i];
    return k * k * k * samples[i];
  };
  std::complex<double> acc{0.0, 0.0};
  const double cut =
      profile.kind == ScaleProfile::Kind::ThetaAbove ? profile.scale : -1.0;
  for (std::size_t i = 1; i < kplus_grid.size(); ++i) {
    double a = kplus_grid[i - 1], b = kplus_grid[i];
    if (b <= cut) continue;
    std::complex<double> fa = weight(i - 1), fb = weight(i);
    if (a < cut) {  // split the cell at the theta cut
      fa = cut * cut * cut * interp(kplus_grid, samples, cut);
      a = cut;
    }
    acc += 0.5 * (b - a) * (fa + fb);
  }
  return half_M2 * acc;
}

DecomposedField decompose(const MomentumLatticeField& f) {
  DecomposedField d;
  for (auto& p : d.parts) p = MomentumLatticeField(f.geometry());
  const double M = f.geometry().M;
  for (std::size_t s = 0; s < f.num_sites(); ++s) {
    const int n = static_cast<int>(classify(f.mode_q2(s), M).label);
    for (int c = 0; c < f.components(); ++c) d.parts[n].at(s, c) = f.at(s, c);
  }
  return d;
}

MomentumLatticeField assemble_pm(const DecomposedField& d, PMSign sign) {
  return extend_5d(d, sign, 0.0, 0.0);
}

MomentumLatticeField extend_5d(const DecomposedField& d, PMSign sign, double x5,
                               double t5) {
  const LatticeGeometry& g = d.geometry();
  for (const auto& p : d.parts)
    if (!p.geometry().same_lattice(g)) throw LatticeMismatch("decomposed parts");
  MomentumLatticeField out(g);
  const double dx5 = x5 - t5;
  for (std::size_t s = 0; s < out.num_sites(); ++s) {
    const DomainLabel lab = classify(out.mode_q2(s), g.M);
    const double q52 = q5_squared(lab, out.mode_q2(s), g.M);
    if (q52 < 0.0) throw NegativeQ5Squared("internal: q5^2 < 0 on a valid domain");
    const double Q = std::sqrt(q52);
    const std::complex<double> phase{std::cos(Q * dx5), -std::sin(Q * dx5)};
    for (int n = 0; n < 4; ++n) {
      double sgn = 1.0;
      if (sign == PMSign::Minus && (n == static_cast<int>(Domain::II) ||
                                    n == static_cast<int>(Domain::IV)))
        sgn = -1.0;
      for (int c = 0; c < g.components; ++c)
        out.at(s, c) += sgn * d.parts[n].at(s, c) * phase;
    }
  }
  return out;
}

MomentumLatticeField projector_apply(int a, const MomentumLatticeField& f) {
  MomentumLatticeField out = f;
  const double M = f.geometry().M;
  for (std::size_t s = 0; s < f.num_sites(); ++s) {
    if (lambda_indicator(a, f.mode_q2(s), M) == 0)
      for (int c = 0; c < f.components(); ++c) out.at(s, c) = {0.0, 0.0};
  }
  return out;
}

}  // namespace conecalc
