#include <cmath>
#include <utility>
#include <vector>

#include <doctest.h>

#include "wickwave/caputo.hpp"
#include "wickwave/errors.hpp"
#include "wickwave/gamma.hpp"
#include "wickwave/verify.hpp"

#include "reference_values.hpp"

using namespace wickwave;

TEST_CASE("power rule closed form against reference values") {
  CHECK(caputo_power(1, 0.25, 1.0) == doctest::Approx(refvals::caputo_pow_r1_a0_25).epsilon(1e-13));
  CHECK(caputo_power(1, 0.5, 1.0) == doctest::Approx(refvals::caputo_pow_r1_a0_5).epsilon(1e-13));
  CHECK(caputo_power(1, 0.75, 1.0) == doctest::Approx(refvals::caputo_pow_r1_a0_75).epsilon(1e-13));
  CHECK(caputo_power(2, 0.25, 1.0) == doctest::Approx(refvals::caputo_pow_r2_a0_25).epsilon(1e-13));
  CHECK(caputo_power(2, 0.5, 1.0) == doctest::Approx(refvals::caputo_pow_r2_a0_5).epsilon(1e-13));
  CHECK(caputo_power(2, 0.75, 1.0) == doctest::Approx(refvals::caputo_pow_r2_a0_75).epsilon(1e-13));
  CHECK(caputo_power(3, 0.25, 1.0) == doctest::Approx(refvals::caputo_pow_r3_a0_25).epsilon(1e-13));
  CHECK(caputo_power(3, 0.5, 1.0) == doctest::Approx(refvals::caputo_pow_r3_a0_5).epsilon(1e-13));
  CHECK(caputo_power(3, 0.75, 1.0) == doctest::Approx(refvals::caputo_pow_r3_a0_75).epsilon(1e-13));
}

TEST_CASE("power rule edge cases") {
  // r = alpha gives a constant in t
  CHECK(caputo_power(0.5, 0.5, 0.3) == doctest::Approx(gamma_fn(1.5)).epsilon(1e-13));
  CHECK(caputo_power(0.5, 0.5, 2.0) == doctest::Approx(gamma_fn(1.5)).epsilon(1e-13));
  // vanishing cases
  CHECK(caputo_power(0.0, 0.5, 1.3) == 0.0);
  CHECK(caputo_power(2.0, 0.5, 0.0) == 0.0);
  // alpha = 1 reduces to the classical derivative
  CHECK(caputo_power(2.0, 1.0, 1.5) == doctest::Approx(3.0).epsilon(1e-13));
  CHECK_THROWS_AS(caputo_power(-1.0, 0.5, 1.0), DomainError);
  CHECK_THROWS_AS(caputo_power(2.0, 0.5, -1.0), DomainError);
  CHECK_THROWS_AS(caputo_power(0.25, 0.5, 0.0), DomainError);
}

TEST_CASE("l1 scheme converges at order 2 - alpha") {
  const double alpha = 0.5;
  const RealFn f = [](double t) { return t * t; };
  const double exact = caputo_power(2.0, alpha, 1.0);
  std::vector<std::pair<double, double>> fit;
  for (double h : {4e-3, 2e-3, 1e-3})
    fit.emplace_back(h, std::abs(caputo_l1(f, alpha, 1.0, h) - exact));
  CHECK(fit.back().second < 1e-3);
  const OrderFit of = convergence_order(fit);
  CHECK_FALSE(of.saturated);
  CHECK(std::abs(of.order - (2.0 - alpha)) < 0.25);
}

TEST_CASE("l1 scheme is exact for linear functions") {
  const RealFn f = [](double t) { return 3.0 * t - 1.0; };
  for (double alpha : {0.25, 0.5, 0.75}) {
    const double got = caputo_l1(f, alpha, 1.0, 1e-3);
    const double expect = 3.0 * caputo_power(1.0, alpha, 1.0);
    CHECK(std::abs(got - expect) < 1e-12 * (1.0 + std::abs(expect)));
  }
}

TEST_CASE("l1 scheme is linear in the sample values") {
  SampledFunction a = sample_function([](double t) { return std::sin(t); }, 1.0, 64);
  SampledFunction b = sample_function([](double t) { return t * t * t; }, 1.0, 64);
  SampledFunction mix = a;
  for (std::size_t i = 0; i < mix.values.size(); ++i)
    mix.values[i] = 2.0 * a.values[i] - 0.5 * b.values[i];
  const double lhs = caputo_l1(mix, 0.4, 64);
  const double rhs = 2.0 * caputo_l1(a, 0.4, 64) - 0.5 * caputo_l1(b, 0.4, 64);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
}

TEST_CASE("caputo of a constant vanishes") {
  SampledFunction c = sample_function([](double) { return 4.2; }, 1.0, 32);
  for (std::size_t n : {std::size_t{1}, std::size_t{16}, std::size_t{32}})
    CHECK(caputo_l1(c, 0.6, n) == 0.0);
}

TEST_CASE("alpha = 1 specializes to the backward difference") {
  const RealFn f = [](double t) { return std::exp(0.3 * t); };
  const double h = 1.0 / 512.0;
  const double got = caputo_l1(f, 1.0, 1.0, h);
  const double bd = (f(1.0) - f(1.0 - h)) / h;
  CHECK(got == doctest::Approx(bd).epsilon(1e-13));
  // and the fractional value approaches it as alpha -> 1
  const double near = caputo_l1(f, 1.0 - 1e-6, 1.0, h);
  CHECK(std::abs(near - got) < 1e-3);
}

TEST_CASE("fractional order validation") {
  CHECK_THROWS_AS(FractionalOrder(0.0), DomainError);
  CHECK_THROWS_AS(FractionalOrder(-0.5), DomainError);
  CHECK_THROWS_AS(FractionalOrder(1.5), DomainError);
  CHECK(FractionalOrder(1.0).value() == 1.0);
}

TEST_CASE("power transform and its inverse") {
  CHECK(frac_power_transform(1.0, 0.5) == doctest::Approx(1.0 / refvals::gamma_1_5).epsilon(1e-13));
  CHECK(frac_power_transform(2.0, 1.0) == 2.0);
  CHECK(frac_power_transform(0.0, 0.3) == 0.0);
  CHECK_THROWS_AS(frac_power_transform(-1.0, 0.5), DomainError);
  for (double alpha : {0.25, 0.5, 0.75, 1.0}) {
    for (double t : {0.2, 1.0, 7.5}) {
      CHECK(tau_alpha(frac_power_transform(t, alpha), alpha) ==
            doctest::Approx(t).epsilon(1e-12));
    }
  }
}

TEST_CASE("zeta transform reduces to the classical phase at alpha = 1") {
  const RealFn speed = [](double) { return -0.4; };
  CHECK(frac_transform_zeta(2.0, 1.0, 1.5, 3.0, speed) ==
        doctest::Approx(2.0 * 1.5 - 0.4 * 3.0).epsilon(1e-12));
  CHECK(frac_transform_zeta(2.0, 0.7, 0.0, 0.0, speed) == 0.0);
}

TEST_CASE("chain check: classical order agrees, fractional order does not") {
  const RealFn g = [](double u) { return u * u; };
  const RealFn f = [](double t) { return t; };
  const auto [lhs1, rhs1] = caputo_chain_check(g, f, 1.0, 1.0);
  CHECK(std::abs(lhs1 - rhs1) < 1e-3 * (1.0 + std::abs(lhs1)));

  // g(f) = t^2: lhs = 2/Gamma(3-a) t^{2-a}, rhs = 2/Gamma(2-a) t^{2-a}
  const auto [lhs, rhs] = caputo_chain_check(g, f, 0.5, 1.0);
  CHECK(std::abs(lhs - rhs) > 0.1);
  CHECK(lhs == doctest::Approx(2.0 / gamma_fn(2.5)).epsilon(1e-2));
  CHECK(rhs == doctest::Approx(2.0 / gamma_fn(1.5)).epsilon(1e-2));
}
