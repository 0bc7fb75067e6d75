// test_continuation.cpp

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "gfn/continuation.hpp"

using namespace gfn;

TEST_CASE("continued mode correlator at real nu matches the real routine") {
  PhysicalParams p;
  const ModeIndex unit{{1, 0, 0}};
  const std::complex<double> c0 = continued_mode_correlation(unit, 0.0, 0.5, p);
  CHECK(c0.real() == doctest::Approx(0.7071067811865475244).epsilon(1e-15));
  CHECK(c0.imag() == 0.0);
  for (double dt : {0.0, 0.3, 1.7}) {
    const std::complex<double> c =
        continued_mode_correlation(unit, dt, p.nu, p);
    CHECK(c.real() == field_mode_correlation(unit, unit.negated(), dt, p));
    CHECK(c.imag() == 0.0);
  }
}

TEST_CASE("nu = i hbar/2 turns decay into pure oscillation") {
  PhysicalParams p;
  const ModeIndex unit{{1, 0, 0}};
  const std::complex<double> nu{0.0, p.hbar / 2.0};
  const double w = mode_omega(unit, p);
  const double amp = p.hbar * p.hbar / (2.0 * mode_energy(unit, p));
  for (double dt : {0.0, 0.4, 1.0, -1.0, 3.3}) {
    const std::complex<double> c = continued_mode_correlation(unit, dt, nu, p);
    CHECK(std::abs(c) == doctest::Approx(amp).epsilon(1e-14));
    CHECK(c.real() ==
          doctest::Approx(amp * std::cos(w * std::abs(dt))).epsilon(1e-14));
    CHECK(c.imag() ==
          doctest::Approx(-amp * std::sin(w * std::abs(dt))).epsilon(1e-14));
  }
  // the opposite branch is the exact conjugate
  const std::complex<double> plus = continued_mode_correlation(unit, 0.7, nu, p);
  const std::complex<double> minus =
      continued_mode_correlation(unit, 0.7, -nu, p);
  CHECK(minus.real() == plus.real());
  CHECK(minus.imag() == -plus.imag());
}

TEST_CASE("continued mode correlator covers the zero mode and checks the cutoff") {
  PhysicalParams p;
  const std::complex<double> nu{0.0, 0.5};
  const std::complex<double> c =
      continued_mode_correlation(ModeIndex{{0, 0, 0}}, 1.0, nu, p);
  // amplitude hbar^2/(2 E_0) = 1, phase omega_0 = mu = 1
  CHECK(std::abs(c) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(c.real() == doctest::Approx(std::cos(1.0)).epsilon(1e-14));
  CHECK_THROWS_AS(continued_mode_correlation(ModeIndex{{2, 0, 0}}, 0.0, nu, p),
                  std::invalid_argument);
}

TEST_CASE("equal-time propagator equals the continuum two-point function") {
  PhysicalParams p;
  for (double r : {0.5, 1.0, 2.0}) {
    const PropagatorValue v =
        feynman_propagator(SpacetimePoint{{r, 0.0, 0.0}, 0.0}, p);
    const double target = schwinger2_continuum_r(r, p);
    CHECK(std::abs(v.value.real() - target) / target <= 1e-6);
    CHECK(v.value.imag() == 0.0);
    CHECK(v.sys_err < 1e-6);
  }
}

TEST_CASE("timelike propagator matches frozen references") {
  PhysicalParams p;
  const PropagatorValue t1 =
      feynman_propagator(SpacetimePoint{{0.0, 0.0, 0.0}, 1.0}, p);
  CHECK(t1.value.real() ==
        doctest::Approx(-0.0310834705291766128).epsilon(1e-6));
  CHECK(t1.value.imag() ==
        doctest::Approx(0.0175090564829475257).epsilon(1e-6));
  const PropagatorValue t2 =
      feynman_propagator(SpacetimePoint{{0.0, 0.0, 0.0}, 2.0}, p);
  CHECK(t2.value.real() ==
        doctest::Approx(-0.00212934256886063733).epsilon(1e-6));
  CHECK(t2.value.imag() ==
        doctest::Approx(0.0114735754947786827).epsilon(1e-6));
}

TEST_CASE("spacelike mixed separations reduce to the Euclidean closed form") {
  // for |dx|^2 > dt^2 the causal propagator is real and equals
  // mu K1(mu s)/(4 pi^2 s) at the invariant distance s = sqrt(|dx|^2 - dt^2)
  PhysicalParams p;
  for (const SpacetimePoint& dp : {SpacetimePoint{{1.0, 0.0, 0.0}, 0.5},
                                   SpacetimePoint{{0.6, 0.8, 0.0}, 0.3},
                                   SpacetimePoint{{2.0, 0.0, 0.0}, 1.5}}) {
    const double s = std::sqrt(dp.x[0] * dp.x[0] + dp.x[1] * dp.x[1] +
                               dp.x[2] * dp.x[2] - dp.t * dp.t);
    const double target = schwinger2_continuum_r(s, p);
    const PropagatorValue v = feynman_propagator(dp, p);
    CHECK(std::abs(v.value.real() - target) / target <= 1e-6);
    CHECK(std::abs(v.value.imag()) <= 1e-6 * target);
  }
}

TEST_CASE("propagator is even in dt and independent of spatial direction") {
  PhysicalParams p;
  const PropagatorValue a = feynman_propagator(SpacetimePoint{{0.6, 0.8, 0.0}, 0.5}, p);
  const PropagatorValue b = feynman_propagator(SpacetimePoint{{1.0, 0.0, 0.0}, -0.5}, p);
  CHECK(a.value.real() == b.value.real());
  CHECK(a.value.imag() == b.value.imag());
}

TEST_CASE("anti-time-ordered branch is the exact conjugate") {
  PhysicalParams p;
  for (const SpacetimePoint& dp :
       {SpacetimePoint{{1.0, 0.0, 0.0}, 0.0}, SpacetimePoint{{0.0, 0.0, 0.0}, 1.0},
        SpacetimePoint{{0.5, 0.5, 0.0}, 0.7}}) {
    const PropagatorValue plus = feynman_propagator(dp, p, +1);
    const PropagatorValue minus = feynman_propagator(dp, p, -1);
    CHECK(minus.value.real() == plus.value.real());
    CHECK(minus.value.imag() == -plus.value.imag());
    CHECK(minus.sys_err == plus.sys_err);
  }
}

TEST_CASE("propagator argument validation") {
  PhysicalParams p;
  CHECK_THROWS_AS(feynman_propagator(SpacetimePoint{}, p), std::domain_error);
  CHECK_THROWS_AS(feynman_propagator(SpacetimePoint{{1, 0, 0}, 0}, p, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(feynman_propagator(SpacetimePoint{{1, 0, 0}, 0}, p, 0),
                  std::invalid_argument);
}

TEST_CASE("npoint_continued reduces and conjugates correctly") {
  PhysicalParams p;
  const SpacetimePoint a{{1.0, 0.0, 0.0}, 0.0};
  const SpacetimePoint b{{0.0, 0.0, 0.0}, 0.5};
  SUBCASE("empty and odd products") {
    CHECK(npoint_continued({}, +1, p).value == std::complex<double>(1.0));
    const PropagatorValue odd = npoint_continued({a, b, SpacetimePoint{}}, +1, p);
    CHECK(odd.value == std::complex<double>(0.0));
  }
  SUBCASE("two points reduce to the propagator of the difference") {
    const PropagatorValue pair = npoint_continued({a, b}, +1, p);
    const PropagatorValue direct =
        feynman_propagator(SpacetimePoint{{1.0, 0.0, 0.0}, -0.5}, p);
    CHECK(pair.value == direct.value);
  }
  SUBCASE("equal-time four point matches the Euclidean Isserlis sum") {
    const std::vector<SpacetimePoint> pts = {
        SpacetimePoint{{0, 0, 0}, 0}, SpacetimePoint{{1, 0, 0}, 0},
        SpacetimePoint{{0, 1, 0}, 0}, SpacetimePoint{{1, 1, 0}, 0}};
    const PropagatorValue four = npoint_continued(pts, +1, p);
    CHECK(four.value.imag() == 0.0);
    CHECK(four.value.real() ==
          doctest::Approx(schwingerN(pts, p)).epsilon(1e-5));
  }
  SUBCASE("branches conjugate at every order") {
    const std::vector<SpacetimePoint> pts = {
        SpacetimePoint{{0, 0, 0}, 0}, SpacetimePoint{{1, 0, 0}, 0.25},
        SpacetimePoint{{0, 1, 0}, 0.5}, SpacetimePoint{{1, 1, 0}, 0.75}};
    const PropagatorValue plus = npoint_continued(pts, +1, p);
    const PropagatorValue minus = npoint_continued(pts, -1, p);
    CHECK(minus.value.real() == plus.value.real());
    CHECK(minus.value.imag() == -plus.value.imag());
  }
}

TEST_CASE("standard boost pairs preserve the Minkowski interval") {
  const std::vector<BoostPair> pairs = standard_boost_pairs();
  REQUIRE(pairs.size() == 10);
  for (const BoostPair& pair : pairs) {
    const auto interval = [](const SpacetimePoint& q) {
      return q.t * q.t - (q.x[0] * q.x[0] + q.x[1] * q.x[1] + q.x[2] * q.x[2]);
    };
    CHECK(interval(pair.a) == doctest::Approx(interval(pair.b)).epsilon(1e-12));
    // a boost moves the point
    CHECK(std::abs(pair.a.t - pair.b.t) + std::abs(pair.a.x[0] - pair.b.x[0]) >
          0.1);
  }
}

TEST_CASE("propagator is invariant on the standard boost set") {
  PhysicalParams p;
  const std::vector<InvarianceRow> rows =
      lorentz_invariance_check(standard_boost_pairs(), p);
  REQUIRE(rows.size() == 10);
  for (const InvarianceRow& row : rows) CHECK(row.residual < 1e-4);
}

TEST_CASE("identity and rotation pairs give zero residual") {
  PhysicalParams p;
  const SpacetimePoint a{{1.0, 0.0, 0.0}, 0.5};
  const SpacetimePoint rot{{0.6, 0.8, 0.0}, 0.5};  // same |dx|, same dt
  const std::vector<InvarianceRow> rows =
      lorentz_invariance_check({BoostPair{a, a}, BoostPair{a, rot}}, p);
  CHECK(rows[0].residual == 0.0);
  CHECK(rows[1].residual == 0.0);
}
