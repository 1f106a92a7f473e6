#include <cmath>
#include <random>

#include "doctest.h"

#include "conecalc/constraint_solver.hpp"

using namespace conecalc;

TEST_CASE("charged masses from the worked parameter set") {
  const ConstraintParams p = ConstraintParams::from_alpha_beta(-0.6, 0.4, 1.0);
  CHECK(p.beta_minus == doctest::Approx(-0.6));
  CHECK(p.alpha_minus == doctest::Approx(1.6));
  CHECK(p.consistency_residual() <= 1e-12);

  const ChargedMasses cm = charged_masses(p);
  CHECK(cm.masses.m_plus2 == doctest::Approx(1.92));
  CHECK(cm.masses.m_minus2 == doctest::Approx(0.48));
  CHECK(cm.masses.m_plus2 / cm.masses.m_minus2 == doctest::Approx(4.0));
  CHECK(cm.physical);
}

TEST_CASE("charged mass edge cases") {
  // alpha_+ = 0 locks both masses to zero
  const ChargedMasses zero =
      charged_masses(ConstraintParams::from_alpha_beta(0.0, 0.7, 1.0));
  CHECK(zero.masses.m_plus2 == 0.0);
  CHECK(zero.masses.m_minus2 == 0.0);

  // same-sign alpha_+, beta_+ is unphysical
  const ChargedMasses bad =
      charged_masses(ConstraintParams::from_alpha_beta(0.6, 0.4, 1.0));
  CHECK(bad.masses.m_minus2 == doctest::Approx(-0.48));
  CHECK_FALSE(bad.physical);

  CHECK_THROWS_AS(ConstraintParams::from_alpha_beta(0.5, 0.0, 1.0), ZeroBeta);
  CHECK_THROWS_AS(ConstraintParams::from_alpha_beta(0.5, 1.0, 0.0),
                  NonPositiveScale);

  ConstraintParams broken = ConstraintParams::from_alpha_beta(-0.6, 0.4, 1.0);
  broken.beta_minus = 0.1;
  CHECK_THROWS_AS(charged_masses(broken), InconsistentParams);
}

TEST_CASE("mass to parameter round trip on both branches") {
  const MassPair m{1.92, 0.48};
  const ConstraintParams lo = charged_params_from_masses(m, 1.0, '-');
  CHECK(lo.alpha_plus == doctest::Approx(-0.6));
  CHECK(lo.beta_plus == doctest::Approx(0.4));
  for (char branch : {'+', '-'}) {
    const ConstraintParams p = charged_params_from_masses(m, 1.0, branch);
    const ChargedMasses back = charged_masses(p);
    CHECK(back.masses.m_plus2 == doctest::Approx(m.m_plus2).epsilon(1e-10));
    CHECK(back.masses.m_minus2 == doctest::Approx(m.m_minus2).epsilon(1e-10));
    CHECK(back.physical);
  }

  // degenerate discriminant: both branches give alpha_+^2 = 1/2
  const ConstraintParams eq = charged_params_from_masses({1.0, 1.0}, 1.0, '+');
  CHECK(eq.alpha_plus * eq.alpha_plus == doctest::Approx(0.5));

  CHECK_THROWS_AS(charged_params_from_masses({4.0, 4.0}, 1.0, '-'),
                  MassBoundViolated);
  CHECK_THROWS_AS(charged_params_from_masses({-1.0, 0.5}, 1.0, '-'),
                  NonPositiveMass);
  CHECK_THROWS_AS(charged_params_from_masses({1.0, 0.5}, 1.0, 'x'),
                  MalformedInput);
}

TEST_CASE("neutral linear constraint cannot give two positive masses") {
  CHECK(neutral_mass_ratio(0.5, 1.0) == doctest::Approx(-1.25));
  CHECK(neutral_mass_ratio(0.0, 0.5) == doctest::Approx(-4.0));
  CHECK_THROWS_AS(neutral_mass_ratio(0.3, 0.0), ZeroBeta);

  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  for (int i = 0; i < 2000; ++i) {
    double b = dist(rng);
    if (b == 0.0) b = 0.5;
    CHECK(neutral_mass_ratio(dist(rng), b) < 0.0);
  }
}

TEST_CASE("nonlinear neutral constraint") {
  CHECK(neutral_alt_mass(1.0, 0.7) == doctest::Approx(0.7));
  CHECK(neutral_alt_mass(2.0, 0.25) == doctest::Approx(1.0));
  CHECK_THROWS_AS(neutral_alt_mass(1.0, -0.1), NegativeMass);

  LatticeGeometry g;
  g.dims = {2, 2, 2, 2};
  const MomentumLatticeField jp = random_field(g, 3);
  const MomentumLatticeField F = random_field(g, 4);
  const MomentumLatticeField jm = neutral_source_transfer(jp, F, 2.0);
  for (std::size_t i = 0; i < jp.values().size(); ++i)
    CHECK(std::abs(2.0 * jm.values()[i] - jp.values()[i] - F.values()[i]) <= 1e-14);
  CHECK_THROWS_AS(neutral_source_transfer(jp, F, 0.0), ZeroAlpha);
}

TEST_CASE("fermion branch pair") {
  const auto eq = fermion_alpha_branches(1.0, 1.0, 1.0);
  CHECK(eq.first == doctest::Approx(0.5));
  CHECK(eq.second == doctest::Approx(0.5));

  const auto wide = fermion_alpha_branches(std::sqrt(1.92), std::sqrt(0.48), 1.0);
  CHECK(wide.first == doctest::Approx(0.64));
  CHECK(wide.second == doctest::Approx(0.36));
  CHECK(wide.first * wide.second == doctest::Approx(1.92 * 0.48 / 4.0));

  const auto tiny = fermion_alpha_branches(1e-4, 1e-4, 1.0);
  CHECK(tiny.first == doctest::Approx(1.0));
  CHECK(tiny.second >= 0.0);
  CHECK(tiny.second <= 1e-7);

  CHECK_THROWS_AS(fermion_alpha_branches(1.1, 1.0, 1.0), MassBoundViolated);
  CHECK_THROWS_AS(fermion_alpha_branches(0.0, 1.0, 1.0), NonPositiveMass);
}

TEST_CASE("fifth gauge component keeps the cone") {
  const FourMomentum q{0.8, 0.1, -0.4, 0.3};
  const ConePoint k = embed(q, 1.2, 1.0);

  const A5Result zero = a5_from_a4({0.0, 0.0, 0.0, 0.0}, k, 0.5);
  CHECK(std::abs(zero.a5) == 0.0);

  // e = 0 with real a collapses to -a.kappa / (M kappa_+)
  const std::array<std::complex<double>, 4> a{0.3, -0.2, 0.5, 0.1};
  const A5Result lin = a5_from_a4(a, k, 0.0);
  const double adotk = 0.3 * k.k0 + 0.2 * k.k1 - 0.5 * k.k2 - 0.1 * k.k3;
  CHECK(lin.a5.real() == doctest::Approx(-adotk / (1.0 * k.kplus())));

  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const FourMomentum qq{dist(rng), dist(rng), dist(rng), dist(rng)};
    const ConePoint kk = embed(qq, 0.3 + std::abs(dist(rng)), 1.0);
    const std::array<double, 4> av{dist(rng), dist(rng), dist(rng), dist(rng)};
    const ConePoint shifted = gauge_translated(kk, av, 0.7 * dist(rng));
    CHECK(cone_residual(shifted) <= 1e-10);
    CHECK(shifted.kplus() == doctest::Approx(kk.kplus()));  // kappa_+ fixed
  }

  ConePoint degenerate;
  CHECK_THROWS_AS(a5_from_a4(a, degenerate, 0.0), DegenerateScale);
}

TEST_CASE("charged constraint checker") {
  LatticeGeometry g;
  g.dims = {4, 4, 4, 4};
  g.spacing = {0.7, 0.7, 0.7, 0.7};
  const double mp2 = 1.92, mm2 = 0.48, M = 1.0;
  const MomentumLatticeField phip = random_field(g, 51);
  const MomentumLatticeField phim = random_field(g, 52);

  // C and j constructed to satisfy both relations exactly
  MomentumLatticeField cp = phip, cm = phim, jp = phip, jm = phim;
  for (std::size_t s = 0; s < phip.num_sites(); ++s) {
    const double q2 = phip.mode_q2(s);
    const double Q = std::sqrt(q5_squared(classify(q2, M), q2, M));
    cp.at(s, 0) = (1.0 - Q / M) * phip.at(s, 0);
    cm.at(s, 0) = (1.0 - Q / M) * phim.at(s, 0);
    jp.at(s, 0) = mp2 * phip.at(s, 0) - M * M * (1.0 + Q / M) * cm.at(s, 0);
    jm.at(s, 0) = mm2 * phim.at(s, 0) - M * M * (1.0 + Q / M) * cp.at(s, 0);
  }
  CHECK(check_charged_constraint(phip, phim, cp, cm, jp, jm, mp2, mm2).pass);

  MomentumLatticeField bad = jp;
  bad.at(5, 0) += 0.01;
  CHECK_FALSE(check_charged_constraint(phip, phim, cp, cm, bad, jm, mp2, mm2).pass);
}

TEST_CASE("charged source assembly from the constraint inhomogeneity") {
  LatticeGeometry g;
  g.dims = {2, 2, 2, 2};
  const double ap = -0.6, bp = 0.4;
  const MomentumLatticeField cp = random_field(g, 61);
  const MomentumLatticeField cm = random_field(g, 62);
  const auto [jp, jm] = charged_sources_from_c(cp, cm, ap, bp);
  for (std::size_t s = 0; s < cp.num_sites(); ++s) {
    const double q2 = cp.mode_q2(s);
    const double Q = std::sqrt(q5_squared(classify(q2, 1.0), q2, 1.0));
    const auto want_p =
        ((1.0 - ap * ap) / bp) * cp.at(s, 0) + ap * cm.at(s, 0) + Q * cm.at(s, 0);
    const auto want_m = ap * cp.at(s, 0) + bp * cm.at(s, 0) + Q * cp.at(s, 0);
    CHECK(std::abs(jp.at(s, 0) - want_p) <= 1e-13);
    CHECK(std::abs(jm.at(s, 0) - want_m) <= 1e-13);
  }
  CHECK_THROWS_AS(charged_sources_from_c(cp, cm, ap, 0.0), ZeroBeta);
}
