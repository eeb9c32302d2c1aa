#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "jmatrix/errors.hpp"
#include "jmatrix/kinematics.hpp"

using namespace jmatrix;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::DomainError;
}

}  // namespace

TEST_CASE("resolve_c: three rules") {
  CHECK(resolve_c(2.7, CRule::nonrel_limit(), 0.01) == doctest::Approx(0.005).epsilon(1e-15));
  CHECK(resolve_c(1.5, CRule::balance(), 1.0) == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(resolve_c(1.5, CRule::fixed(0.3), 2.0) == 0.3);
  // rule only determines C; energy does not enter Fixed/NonRelLimit
  CHECK(resolve_c(1.1, CRule::fixed(0.3), 2.0) == resolve_c(9.9, CRule::fixed(0.3), 2.0));
  CHECK(kind_of([] { resolve_c(-3.0, CRule::balance(), 1.0); }) == ErrorKind::DomainError);
  CHECK(kind_of([] { resolve_c(-1.0, CRule::balance(), 1.0); }) == ErrorKind::DomainError);
}

TEST_CASE("wavenumber: radical anchor and error kinds") {
  // eps=1.5, alpha=1, C=0.4: radicand (-1/0.16)(0.5)/(-2.5) = 1.25
  CHECK(wavenumber(1.5, 1.0, 0.4) == doctest::Approx(std::sqrt(1.25)).epsilon(1e-15));
  CHECK(kind_of([] { wavenumber(1.0, 1.0, 0.4); }) == ErrorKind::NotScatteringEnergy);
  // denominator eps - 1 + 2(1 - alpha/C) = 0 at eps = 3 for C = alpha/2
  CHECK(kind_of([] { wavenumber(3.0, 1.0, 0.5); }) == ErrorKind::KinematicPole);
  // below threshold under the balance rule
  CHECK(kind_of([] { wavenumber(0.5, 1.0, 1.0 / 1.5); }) == ErrorKind::NotScatteringEnergy);
}

TEST_CASE("wavenumber: balance rule gives the relativistic dispersion") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> ue(1.0001, 12.0), ua(0.05, 2.0);
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    double eps = ue(rng), alpha = ua(rng);
    double c = resolve_c(eps, CRule::balance(), alpha);
    double k = wavenumber(eps, alpha, c);
    double expect = std::sqrt(eps * eps - 1.0) / alpha;
    worst = std::max(worst, std::abs(k - expect) / expect);
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("wavenumber: nonrelativistic limit") {
  // eps = 1 + alpha^2 E with C = alpha/2 approaches sqrt(2E)
  double endpoint = 2.0;
  double alpha = 0.002;
  double k = wavenumber(1.0 + alpha * alpha * endpoint, alpha, alpha / 2.0);
  CHECK(std::abs(k - 2.0) < 1e-5);  // O(alpha^2) away from sqrt(2E) = 2
}

TEST_CASE("omega_angle: anchors, domain, monotonicity") {
  CHECK(omega_angle(0.5) == doctest::Approx(std::acos(0.0)).epsilon(1e-15));
  CHECK(omega_angle(1.0) == doctest::Approx(std::acos(0.6)).epsilon(1e-14));
  CHECK(omega_angle(1e8) < 1e-7);  // omega -> 0+ as eta grows
  // omega -> pi- as eta -> 0+, approaching like pi - 4 eta
  CHECK(omega_angle(1e-4) == doctest::Approx(3.14159265358979 - 4e-4).epsilon(1e-7));
  CHECK(omega_angle(1e-4) < 3.14159266);
  CHECK_THROWS_AS(omega_angle(0.0), Error);
  CHECK_THROWS_AS(omega_angle(-1.0), Error);

  double prev = -1.0;
  for (double eta = 0.01; eta < 50.0; eta *= 1.5) {
    double c = std::cos(omega_angle(eta));
    CHECK(c > prev);
    CHECK(c > -1.0);
    CHECK(c < 1.0);
    prev = c;
  }
}

TEST_CASE("kinematic_state: composition and determinism") {
  ChannelConfig cfg;
  cfg.kappa = 1;
  cfg.lambda = 1.0;
  cfg.alpha = 1.0;
  cfg.c_rule = CRule::balance();
  cfg.basis = Basis::Laguerre;

  KinematicState st = kinematic_state(1.5, cfg);
  CHECK(st.c_value == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(st.k == doctest::Approx(std::sqrt(1.25)).epsilon(1e-14));
  CHECK(st.eta == doctest::Approx(std::sqrt(1.25)).epsilon(1e-14));
  REQUIRE(st.omega.has_value());
  CHECK(*st.omega == doctest::Approx(std::acos(2.0 / 3.0)).epsilon(1e-14));

  // bit-equal reproduction
  KinematicState st2 = kinematic_state(1.5, cfg);
  CHECK(st.k == st2.k);
  CHECK(st.eta == st2.eta);
  CHECK(*st.omega == *st2.omega);

  // fixed C numerically equal to the balance value gives the same state
  ChannelConfig fixed = cfg;
  fixed.c_rule = CRule::fixed(st.c_value);
  KinematicState st3 = kinematic_state(1.5, fixed);
  CHECK(st3.k == st.k);
  CHECK(st3.eta == st.eta);

  ChannelConfig osc = cfg;
  osc.basis = Basis::Oscillator;
  CHECK_FALSE(kinematic_state(1.5, osc).omega.has_value());

  CHECK_THROWS_AS(kinematic_state(0.5, cfg), Error);
}

TEST_CASE("config validation") {
  ChannelConfig cfg;
  cfg.kappa = 0;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg.kappa = -1;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg.kappa = 1;
  cfg.lambda = -1.0;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg.lambda = 1.0;
  cfg.alpha = 0.0;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg.alpha = 1.0;
  cfg.c_rule = CRule::fixed(-0.5);
  CHECK_THROWS_AS(cfg.validate(), Error);
}
