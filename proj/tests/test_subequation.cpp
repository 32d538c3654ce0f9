#include <cmath>
#include <complex>
#include <random>

#include <doctest.h>

#include "wickwave/errors.hpp"
#include "wickwave/subequation.hpp"

#include "reference_values.hpp"

using namespace wickwave;

TEST_CASE("ratio value and derivatives at the pinned point") {
  const Complex p(2.0, 0.0), q(1.0, 0.0), eta(0.7, 0.0);
  CHECK(std::abs(fg_ratio(p, q, eta) - Complex(refvals::fg_val)) < 1e-14);
  CHECK(std::abs(fg_ratio_derivatives(p, q, eta, 1) - Complex(refvals::fg_d1)) < 1e-13);
  CHECK(std::abs(fg_ratio_derivatives(p, q, eta, 2) - Complex(refvals::fg_d2)) < 1e-13);
  CHECK(std::abs(fg_ratio_derivatives(p, q, eta, 3) - Complex(refvals::fg_d3)) < 1e-12);

  const RatioJet jet = fg_ratio_jet(p, q, eta);
  CHECK(jet.h == fg_ratio(p, q, eta));
  CHECK(jet.d1 == fg_ratio_derivatives(p, q, eta, 1));
  CHECK(jet.d2 == fg_ratio_derivatives(p, q, eta, 2));
  CHECK(jet.d3 == fg_ratio_derivatives(p, q, eta, 3));
}

TEST_CASE("ratio boundary values") {
  CHECK(std::abs(fg_ratio(Complex(1.3, 0.4), Complex(-0.2, 0.1), Complex(0.0)) -
                 Complex(1.0)) < 1e-15);
  // p=2, q=1: decay to (p-q)/p on the right, to 0 on the left
  CHECK(std::abs(fg_ratio(Complex(2.0), Complex(1.0), Complex(40.0)) - Complex(0.5)) < 1e-15);
  CHECK(std::abs(fg_ratio(Complex(2.0), Complex(1.0), Complex(-40.0))) < 1e-15);
  // h'(0) = (p-q) - p = -q
  CHECK(std::abs(fg_ratio_derivatives(Complex(2.0), Complex(1.0), Complex(0.0), 1) -
                 Complex(-1.0)) < 1e-15);
}

TEST_CASE("derivatives satisfy the riccati recurrences at random points") {
  std::mt19937_64 rng(314159u);
  std::uniform_real_distribution<double> box(-2.0, 2.0);
  int accepted = 0;
  while (accepted < 100) {
    const Complex p(box(rng), box(rng));
    const Complex q(box(rng), box(rng));
    const Complex eta(box(rng), box(rng));
    if (std::abs(p - q) < 0.3) continue;
    const Complex d = p - q;
    Complex h;
    try {
      h = fg_ratio(p, q, eta);
    } catch (const PoleEncountered&) {
      continue;
    }
    if (std::abs(h) > 50.0) continue;
    ++accepted;
    const Complex d1 = fg_ratio_derivatives(p, q, eta, 1);
    const Complex d2 = fg_ratio_derivatives(p, q, eta, 2);
    const double scale = 1.0 + std::abs(d1) + std::abs(d2);
    CHECK(std::abs(d1 - (d * h - p * h * h)) < 1e-12 * scale);
    CHECK(std::abs(d2 - (d * d1 - 2.0 * p * h * d1)) < 1e-12 * scale);
  }
}

TEST_CASE("closed-form derivative agrees with a finite difference") {
  std::mt19937_64 rng(2718u);
  std::uniform_real_distribution<double> box(-1.5, 1.5);
  const double step = 1e-5;
  int accepted = 0;
  while (accepted < 50) {
    const Complex p(box(rng), box(rng));
    const Complex q(box(rng), box(rng));
    if (std::abs(p - q) < 0.4) continue;
    const double eta = box(rng);
    Complex hm, hp, d1;
    try {
      hm = fg_ratio(p, q, Complex(eta - step));
      hp = fg_ratio(p, q, Complex(eta + step));
      d1 = fg_ratio_derivatives(p, q, Complex(eta), 1);
    } catch (const PoleEncountered&) {
      continue;
    }
    if (std::abs(d1) > 20.0) continue;
    ++accepted;
    const Complex fd = (hp - hm) / (2.0 * step);
    CHECK(std::abs(fd - d1) < 1e-6 * (1.0 + std::abs(d1)));
  }
}

TEST_CASE("fractional ratio: pinned value, xi = 0, and alpha = 1 reduction") {
  CHECK(frac_fg_ratio(1.0, -3.0, 0.5, 1.0) ==
        doctest::Approx(refvals::frac_fg_val).epsilon(1e-13));
  CHECK(frac_fg_ratio(1.3, -0.7, 0.37, 0.0) == doctest::Approx(1.0).epsilon(1e-15));

  std::mt19937_64 rng(5u);
  std::uniform_real_distribution<double> lam(0.5, 2.0), mu(-2.0, -0.5), xi(0.0, 3.0);
  for (int i = 0; i < 40; ++i) {
    const double l = lam(rng), m = mu(rng), x = xi(rng);
    const double integer_variant = fg_ratio(Complex(l), Complex(m), Complex(x)).real();
    CHECK(std::abs(frac_fg_ratio(l, m, 1.0, x) - integer_variant) <=
          1e-14 * (1.0 + std::abs(integer_variant)));
  }
}

TEST_CASE("fractional ratio rejects bad domains") {
  CHECK_THROWS_AS(frac_fg_ratio(1.0, -3.0, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(frac_fg_ratio(1.0, -3.0, 1.5, 1.0), DomainError);
  CHECK_THROWS_AS(frac_fg_ratio(1.0, -3.0, 0.5, -0.2), DomainError);
}

TEST_CASE("degenerate and singular ratios throw") {
  CHECK_THROWS_AS(fg_ratio(Complex(1.0), Complex(1.0), Complex(0.3)), DegenerateAnsatz);
  CHECK_THROWS_AS(fg_ratio(Complex(1.0 + 1e-14), Complex(1.0), Complex(0.3)),
                  DegenerateAnsatz);
  // p=1, q=2: bracket 1 - 2 e^{eta} vanishes at eta = -ln 2
  CHECK_THROWS_AS(fg_ratio(Complex(1.0), Complex(2.0), Complex(-std::log(2.0))),
                  PoleEncountered);
}

TEST_CASE("homogeneous balance orders") {
  CHECK(balance_pole_order(2, 3) == 1);
  CHECK(balance_pole_order(2, 2) == 2);
  CHECK(balance_pole_order(3, 2) == 3);
  CHECK(balance_pole_order(4, 3) == 2);
  CHECK_THROWS_AS(balance_pole_order(3, 3), NoPolynomialBalance);
  CHECK_THROWS_AS(balance_pole_order(2, 1), DomainError);
  CHECK_THROWS_AS(balance_pole_order(0, 3), DomainError);
}
