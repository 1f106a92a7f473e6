#include <cmath>
#include <complex>

#include "doctest.h"

#include "conecalc/field_decomposition.hpp"

using namespace conecalc;

namespace {

LatticeGeometry demo_geom() {
  LatticeGeometry g;
  g.dims = {4, 4, 4, 4};
  g.spacing = {0.7, 0.7, 0.7, 0.7};
  g.M = 1.0;
  return g;
}

}  // namespace

TEST_CASE("decompose splits support and reconstructs exactly") {
  const MomentumLatticeField f = random_field(demo_geom(), 3);
  const DecomposedField d = decompose(f);
  for (std::size_t s = 0; s < f.num_sites(); ++s) {
    const Domain dom = classify(f.mode_q2(s), 1.0).label;
    std::complex<double> sum{0.0, 0.0};
    for (int n = 0; n < 4; ++n) {
      if (n != static_cast<int>(dom)) CHECK(d.parts[n].at(s, 0) == std::complex<double>{});
      sum += d.parts[n].at(s, 0);
    }
    CHECK(sum == f.at(s, 0));  // bit-exact: one part carries the value
  }
}

TEST_CASE("plus and minus assemblies differ by the hyperboloid-2 sign") {
  const MomentumLatticeField f = random_field(demo_geom(), 5);
  const DecomposedField d = decompose(f);
  const MomentumLatticeField plus = assemble_pm(d, PMSign::Plus);
  const MomentumLatticeField minus = assemble_pm(d, PMSign::Minus);
  for (std::size_t s = 0; s < f.num_sites(); ++s) {
    const int hyp = classify(f.mode_q2(s), 1.0).hyperboloid;
    if (hyp == 1)
      CHECK(plus.at(s, 0) == minus.at(s, 0));
    else
      CHECK(plus.at(s, 0) == -minus.at(s, 0));
  }
}

TEST_CASE("extend_5d at x5 = 0 equals assemble_pm bitwise") {
  const DecomposedField d = decompose(random_field(demo_geom(), 11));
  for (PMSign sign : {PMSign::Plus, PMSign::Minus}) {
    const MomentumLatticeField a = assemble_pm(d, sign);
    const MomentumLatticeField b = extend_5d(d, sign, 0.0);
    CHECK(a.values() == b.values());
  }
}

TEST_CASE("extend_5d applies the on-shell phase e^{-i Q x5}") {
  const LatticeGeometry g = demo_geom();
  MomentumLatticeField f(g);
  const std::size_t site = f.site_index({1, 0, 0, 0});  // q = (0.7,0,0,0)
  f.at(site, 0) = {2.0, -1.0};
  const double q2 = f.mode_q2(site);
  const double Q = std::sqrt(q5_squared(classify(q2, 1.0), q2, 1.0));

  const DecomposedField d = decompose(f);
  const double x5 = 1.3;
  const MomentumLatticeField e5 = extend_5d(d, PMSign::Plus, x5);
  const std::complex<double> want =
      f.at(site, 0) * std::complex<double>{std::cos(Q * x5), -std::sin(Q * x5)};
  CHECK(std::abs(e5.at(site, 0) - want) <= 1e-14);

  // the t5 offset shifts the phase origin
  const MomentumLatticeField off = extend_5d(d, PMSign::Plus, x5, x5);
  CHECK(std::abs(off.at(site, 0) - f.at(site, 0)) <= 1e-14);
}

TEST_CASE("projector algebra on lattice fields") {
  const MomentumLatticeField f = random_field(demo_geom(), 17);
  const MomentumLatticeField p1 = projector_apply(1, f);
  const MomentumLatticeField p2 = projector_apply(2, f);
  const MomentumLatticeField p11 = projector_apply(1, p1);
  const MomentumLatticeField p21 = projector_apply(2, p1);
  for (std::size_t i = 0; i < f.values().size(); ++i) {
    CHECK(p11.values()[i] == p1.values()[i]);              // idempotent
    CHECK(p21.values()[i] == std::complex<double>{});      // orthogonal
    CHECK(p1.values()[i] + p2.values()[i] == f.values()[i]);  // completeness
  }
}

TEST_CASE("reduce_6d quadrature") {
  const double M = 2.0;
  std::vector<double> grid;
  std::vector<std::complex<double>> flat_weight, linear_weight;
  for (int i = 0; i <= 100; ++i) {
    const double k = 1.0 + 0.02 * i;
    grid.push_back(k);
    flat_weight.push_back(1.0 / (k * k * k));  // integrand k^3 sigma == 1
    linear_weight.push_back(1.0 / (k * k));    // integrand == k
  }
  // exact for piecewise-linear integrands
  const auto flat = reduce_6d(grid, flat_weight, M, ScaleProfile::tabulated());
  CHECK(flat.real() == doctest::Approx(0.5 * M * M * 2.0).epsilon(1e-12));
  const auto lin = reduce_6d(grid, linear_weight, M, ScaleProfile::tabulated());
  CHECK(lin.real() == doctest::Approx(0.5 * M * M * 0.5 * (9.0 - 1.0)).epsilon(1e-12));

  // theta cut at a grid point drops the left cells
  const auto cut = reduce_6d(grid, flat_weight, M, ScaleProfile::theta_above(2.0));
  CHECK(cut.real() == doctest::Approx(0.5 * M * M * 1.0).epsilon(1e-12));

  // delta profile picks the interpolated sample
  const auto delta = reduce_6d(grid, flat_weight, M, ScaleProfile::delta_at(1.5));
  CHECK(delta.real() ==
        doctest::Approx(0.5 * M * M * 1.5 * 1.5 * 1.5 / (1.5 * 1.5 * 1.5)));
}

TEST_CASE("reduce_6d input guards") {
  const std::vector<double> grid{1.0, 2.0};
  const std::vector<std::complex<double>> vals{1.0, 1.0};
  CHECK_THROWS_AS(reduce_6d({}, {}, 1.0, ScaleProfile::tabulated()), EmptyGrid);
  CHECK_THROWS_AS(reduce_6d({0.0, 1.0}, vals, 1.0, ScaleProfile::tabulated()),
                  NonPositiveKPlus);
  CHECK_THROWS_AS(reduce_6d({2.0, 1.0}, vals, 1.0, ScaleProfile::tabulated()),
                  MalformedInput);
  CHECK_THROWS_AS(reduce_6d(grid, {vals[0]}, 1.0, ScaleProfile::tabulated()),
                  MalformedInput);
  CHECK_THROWS_AS(reduce_6d(grid, vals, 0.0, ScaleProfile::tabulated()),
                  NonPositiveScale);
  CHECK_THROWS_AS(ScaleProfile::delta_at(0.0), NonPositiveScale);
  CHECK_THROWS_AS(ScaleProfile::theta_above(-1.0), NonPositiveScale);
}
