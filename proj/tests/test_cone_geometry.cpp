#include <cmath>
#include <random>

#include "doctest.h"

#include "conecalc/cone_geometry.hpp"

using namespace conecalc;

TEST_CASE("minkowski forms") {
  CHECK(minkowski_square({1, 0, 0, 0}) == doctest::Approx(1.0));
  CHECK(minkowski_square({1, 1, 0, 0}) == doctest::Approx(0.0));
  CHECK(minkowski_square({0, 1, 0, 0}) == doctest::Approx(-1.0));
  CHECK(minkowski_dot({1, 2, 0, 0}, {3, 1, 0, 0}) == doctest::Approx(1.0));
}

TEST_CASE("lorentz matrix builders") {
  CHECK(lorentz_defect(lorentz_boost(1, 0.7)) <= 1e-12);
  CHECK(lorentz_defect(spatial_rotation(1, 2, 1.1)) <= 1e-12);
  CHECK(is_lorentz(mat4_identity()));

  Mat4 bad = mat4_identity();
  bad[0][0] = 2.0;
  CHECK_FALSE(is_lorentz(bad));
  CHECK_THROWS_AS(ConformalTransform::lorentz(bad), NotLorentz);

  // boost preserves q^2
  const FourMomentum q{1.5, 0.3, -0.2, 0.9};
  const FourMomentum qb = mat4_apply(lorentz_boost(2, 0.4), q);
  CHECK(minkowski_square(qb) == doctest::Approx(minkowski_square(q)));
}

TEST_CASE("embed and project") {
  const FourMomentum q{1.2, 0.4, -0.7, 0.1};
  const ConePoint k = embed(q, 1.7, 2.0);
  CHECK(cone_residual(k) <= 1e-14);
  CHECK(k.kplus() == doctest::Approx(1.7));
  const FourMomentum back = project(k);
  CHECK(euclidean_norm(back - q) <= 1e-13);

  CHECK_THROWS_AS(embed(q, 0.0, 1.0), NonPositiveScale);
  CHECK_THROWS_AS(embed(q, 1.0, -1.0), NonPositiveScale);
  ConePoint degenerate;  // all zero, kplus = 0
  CHECK_THROWS_AS(project(degenerate), DegenerateScale);
}

TEST_CASE("translation on both routes") {
  const FourMomentum q{0.4, 0.1, 0.0, -0.3};
  const FourMomentum h{0.2, -0.5, 0.3, 0.1};
  const auto t = ConformalTransform::translation(h);
  const FourMomentum qp = apply_4d(t, q, 1.0);
  CHECK(euclidean_norm(qp - (q + h)) <= 1e-15);

  const ConePoint k = embed(q, 0.8, 1.0);
  const ConePoint kp = apply_cone(t, k);
  CHECK(kp.kplus() == doctest::Approx(0.8));  // kappa_+ invariant
  CHECK(cone_residual(kp) <= 1e-13);
  CHECK(isomorphism_residual(t, q, 0.8, 1.0) <= 1e-12);
}

TEST_CASE("dilatation scales kappa_pm oppositely") {
  const FourMomentum q{0.9, -0.2, 0.5, 0.0};
  const auto t = ConformalTransform::dilatation(0.6);
  const FourMomentum qp = apply_4d(t, q, 1.0);
  CHECK(euclidean_norm(qp - (std::exp(0.6) * q)) <= 1e-14);

  const ConePoint k = embed(q, 1.3, 1.0);
  const ConePoint kp = apply_cone(t, k);
  CHECK(kp.kplus() == doctest::Approx(std::exp(-0.6) * 1.3));
  CHECK(kp.kminus() == doctest::Approx(std::exp(0.6) * k.kminus()));
  CHECK(isomorphism_residual(t, q, 1.3, 1.0) <= 1e-12);

  // lambda = 0 is the identity
  const auto id = ConformalTransform::dilatation(0.0);
  CHECK(euclidean_norm(apply_4d(id, q, 1.0) - q) == 0.0);
}

TEST_CASE("inversion") {
  const auto t = ConformalTransform::inversion();
  const FourMomentum q{1, 0, 0, 0};
  const FourMomentum qp = apply_4d(t, q, 1.0);
  CHECK(qp.q0 == doctest::Approx(-1.0));
  CHECK(minkowski_square(qp) == doctest::Approx(1.0));  // M^4 / q^2

  // involution
  const FourMomentum r{0.8, 0.3, -0.4, 0.2};
  const FourMomentum back = apply_4d(t, apply_4d(t, r, 1.0), 1.0);
  CHECK(euclidean_norm(back - r) <= 1e-13);

  CHECK_THROWS_AS(apply_4d(t, FourMomentum{1, 1, 0, 0}, 1.0),
                  NullMomentumInversion);

  // cone route: inversion swaps kappa_+ and kappa_-
  const ConePoint k = embed(r, 1.1, 1.0);
  const ConePoint kp = apply_cone(t, k);
  CHECK(kp.kplus() == doctest::Approx(k.kminus()));
  CHECK(kp.kminus() == doctest::Approx(k.kplus()));
  CHECK(isomorphism_residual(t, r, 1.1, 1.0) <= 1e-12);

  // null momentum has kappa_- = 0 and no cone inversion
  const ConePoint knull = embed({1, 1, 0, 0}, 1.0, 1.0);
  CHECK_THROWS_AS(apply_cone(t, knull), DegenerateScale);
}

TEST_CASE("special conformal closed form") {
  // hand value: q = (2,0,0,0), h = (0.3,0,0,0), M = 1 gives
  // denom = 1 - 1.2 + 0.36 = 0.16, numerator (0.8,0,0,0), q' = (5,0,0,0)
  const auto t = ConformalTransform::special_conformal({0.3, 0, 0, 0});
  const FourMomentum qp = apply_4d(t, {2, 0, 0, 0}, 1.0);
  CHECK(qp.q0 == doctest::Approx(5.0));
  CHECK(qp.q1 == doctest::Approx(0.0));

  // singular denominator: q = h = (1,0,0,0) makes 1 - 2 + 1 = 0
  const auto ts = ConformalTransform::special_conformal({1, 0, 0, 0});
  CHECK_THROWS_AS(apply_4d(ts, FourMomentum{1, 0, 0, 0}, 1.0),
                  SingularDenominator);
}

TEST_CASE("special conformal equals inversion-translation-inversion") {
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  int done = 0;
  while (done < 200) {
    const FourMomentum q{2 * dist(rng), 2 * dist(rng), 2 * dist(rng), 2 * dist(rng)};
    const FourMomentum h{0.5 * dist(rng), 0.5 * dist(rng), 0.5 * dist(rng),
                         0.5 * dist(rng)};
    if (std::abs(minkowski_square(q)) < 0.2) continue;
    auto comp = ConformalTransform::inversion();
    comp.then(ConformalTransform::translation(h))
        .then(ConformalTransform::inversion());
    FourMomentum a, b;
    try {
      a = apply_4d(ConformalTransform::special_conformal(h), q, 1.0);
      b = apply_4d(comp, q, 1.0);
    } catch (const Error&) {
      continue;  // inadmissible draw (pole of the map)
    }
    CHECK(euclidean_norm(a - b) <= 1e-10 * (1.0 + euclidean_norm(a)));
    ++done;
  }
}

TEST_CASE("composition applies left to right") {
  auto t = ConformalTransform::translation({1, 0, 0, 0});
  t.then(ConformalTransform::dilatation(std::log(2.0)));
  const FourMomentum qp = apply_4d(t, {1, 0, 0, 0}, 1.0);
  CHECK(qp.q0 == doctest::Approx(4.0));
}

TEST_CASE("apply_cone rejects off-cone input") {
  ConePoint k = embed({0.5, 0.1, 0, 0}, 1.0, 1.0);
  k.k5 += 0.1;
  CHECK_THROWS_AS(apply_cone(ConformalTransform::inversion(), k), OffCone);
}

TEST_CASE("isomorphism holds across random transforms") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    FourMomentum q{2 * dist(rng), 2 * dist(rng), 2 * dist(rng), 2 * dist(rng)};
    const double kplus = 0.2 + 1.8 * std::abs(dist(rng));
    const int kind = i % 5;
    if ((kind == 3 || kind == 4) && std::abs(minkowski_square(q)) < 0.2) continue;
    ConformalTransform t;
    switch (kind) {
      case 0:
        t = ConformalTransform::translation({dist(rng), dist(rng), dist(rng), dist(rng)});
        break;
      case 1:
        t = ConformalTransform::lorentz(lorentz_boost(1 + (i % 3), dist(rng)));
        break;
      case 2: t = ConformalTransform::dilatation(dist(rng)); break;
      case 3: t = ConformalTransform::inversion(); break;
      default: {
        const FourMomentum h{0.3 * dist(rng), 0.3 * dist(rng), 0.3 * dist(rng),
                             0.3 * dist(rng)};
        const double denom = 1.0 - 2.0 * minkowski_dot(q, h) +
                             minkowski_square(h) * minkowski_square(q);
        if (std::abs(denom) < 0.3) continue;
        t = ConformalTransform::special_conformal(h);
        break;
      }
    }
    double res;
    try {
      res = isomorphism_residual(t, q, kplus, 1.0);
    } catch (const Error&) {
      continue;
    }
    CHECK(res <= 1e-10);
  }
}
