#include <cmath>
#include <utility>
#include <vector>

#include <doctest.h>

#include "wickwave/errors.hpp"
#include "wickwave/verify.hpp"

using namespace wickwave;

namespace {

std::vector<double> sample(double (*f)(double), double a, double h, std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = f(a + h * static_cast<double>(i));
  return v;
}

double max_interior_error(const std::vector<double>& got, double (*exact)(double), double a,
                          double h) {
  double worst = 0.0;
  for (std::size_t i = 0; i < got.size(); ++i) {
    if (std::isnan(got[i])) continue;
    worst = std::max(worst, std::abs(got[i] - exact(a + h * static_cast<double>(i))));
  }
  return worst;
}

double sq(double x) { return x * x; }
double two(double) { return 2.0; }

}  // namespace

TEST_CASE("second derivative of x^2 is exact away from the boundary") {
  const double a = -1.0, h = 0.1;
  const auto d2 = fd_derivative(sample(sq, a, h, 21), h, 2);
  CHECK(std::isnan(d2.front()));
  CHECK(std::isnan(d2.back()));
  CHECK(max_interior_error(d2, two, a, h) < 1e-11);
}

TEST_CASE("first derivative of sin at order-2 accuracy") {
  const double a = 0.0, h = 1e-3;
  const auto d1 = fd_derivative(sample(std::sin, a, h, 11), h, 1);
  const double err = std::abs(d1[5] - std::cos(a + 5 * h));
  CHECK(err < 1e-6);
}

TEST_CASE("fourth-order stencils shrink errors sixteenfold per halving") {
  auto sup_err = [](double h) {
    const double a = 0.2;
    const std::size_t n = 41;
    const auto d1 = fd_derivative(sample(std::sin, a, h, n), h, 1, 4);
    double worst = 0.0;
    for (std::size_t i = 2; i + 2 < n; ++i)
      worst = std::max(worst, std::abs(d1[i] - std::cos(a + h * static_cast<double>(i))));
    return worst;
  };
  const double e1 = sup_err(0.02);
  const double e2 = sup_err(0.01);
  CHECK(e1 / e2 > 12.0);
  CHECK(e1 / e2 < 20.0);
}

TEST_CASE("third derivative stencil is exact on cubics") {
  const double a = -0.4, h = 0.05;
  std::vector<double> cube(31);
  for (std::size_t i = 0; i < 31; ++i) {
    const double x = a + h * static_cast<double>(i);
    cube[i] = x * x * x;
  }
  const auto d3 = fd_derivative(cube, h, 3);
  for (std::size_t i = 2; i + 2 < d3.size(); ++i) CHECK(std::abs(d3[i] - 6.0) < 1e-8);
}

TEST_CASE("stencil halfwidths and small-grid validation") {
  CHECK(fd_halfwidth(1, 2) == 1);
  CHECK(fd_halfwidth(1, 4) == 2);
  CHECK(fd_halfwidth(2, 2) == 1);
  CHECK(fd_halfwidth(2, 4) == 2);
  CHECK(fd_halfwidth(3, 2) == 2);
  CHECK(fd_halfwidth(3, 4) == 3);
  CHECK_THROWS_AS(fd_derivative(std::vector<double>{1.0, 2.0}, 0.1, 1), DomainError);
  CHECK_THROWS_AS(fd_derivative(std::vector<double>{1.0, 2.0, 3.0}, 0.1, 4), DomainError);
}

TEST_CASE("field derivatives act along the requested axis") {
  // f(x,t) = x^2 + 3 t: d2/dx2 = 2, d/dt = 3
  const std::size_t nx = 9, nt = 7;
  const double hx = 0.1, ht = 0.2;
  Field2D f(nx, nt, hx, ht);
  for (std::size_t it = 0; it < nt; ++it)
    for (std::size_t ix = 0; ix < nx; ++ix) {
      const double x = hx * static_cast<double>(ix);
      const double t = ht * static_cast<double>(it);
      f.at(ix, it) = Complex(x * x + 3.0 * t, 0.0);
    }
  const Field2D fxx = fd_derivative(f, 0, 2);
  const Field2D ft = fd_derivative(f, 1, 1);
  CHECK(std::abs(fxx.at(4, 3) - Complex(2.0)) < 1e-11);
  CHECK(std::abs(ft.at(4, 3) - Complex(3.0)) < 1e-11);
  CHECK(std::isnan(fxx.at(0, 3).real()));
  CHECK(std::isnan(ft.at(4, 0).real()));
}

TEST_CASE("mixed derivative application order commutes on smooth fields") {
  // f(x,t) = sin(x) e^{-t}: d3/dt dx2 = sin(x) e^{-t}
  const std::size_t n = 33;
  const double h = 0.05;
  Field2D f(n, n, h, h);
  for (std::size_t it = 0; it < n; ++it)
    for (std::size_t ix = 0; ix < n; ++ix)
      f.at(ix, it) = Complex(std::sin(h * static_cast<double>(ix)) *
                                 std::exp(-h * static_cast<double>(it)),
                             0.0);
  const Field2D txx = fd_derivative(fd_derivative(f, 0, 2), 1, 1);
  const Field2D xxt = fd_derivative(fd_derivative(f, 1, 1), 0, 2);
  double worst = 0.0;
  for (std::size_t it = 2; it + 2 < n; ++it)
    for (std::size_t ix = 2; ix + 2 < n; ++ix)
      worst = std::max(worst, std::abs(txx.at(ix, it) - xxt.at(ix, it)));
  CHECK(worst < 1e-10);
  const double x4 = h * 4, t4 = h * 4;
  CHECK(std::abs(txx.at(4, 4) - Complex(std::sin(x4) * std::exp(-t4))) < 1e-3);
}

TEST_CASE("convergence order fits and saturation") {
  const OrderFit quadratic = convergence_order({{0.1, 1e-2}, {0.05, 2.5e-3}});
  CHECK(quadratic.order == doctest::Approx(2.0).epsilon(1e-12));
  CHECK_FALSE(quadratic.saturated);

  const OrderFit three = convergence_order({{0.2, 8e-3}, {0.1, 1e-3}, {0.05, 1.25e-4}});
  CHECK(three.order == doctest::Approx(3.0).epsilon(1e-10));

  const OrderFit flat = convergence_order({{0.1, 3e-15}, {0.05, 3e-15}});
  CHECK(flat.saturated);

  CHECK_THROWS_AS(convergence_order({{0.1, 1e-2}}), DomainError);
  CHECK_THROWS_AS(convergence_order({{0.05, 1e-2}, {0.1, 1e-3}}), DomainError);
}

TEST_CASE("rounding floor scales with the largest term") {
  const double eps = 2.220446049250313e-16;
  CHECK(rounding_floor(1.0) == doctest::Approx(1e3 * eps).epsilon(1e-12));
  CHECK(rounding_floor(1e6) == doctest::Approx(1e9 * eps).epsilon(1e-12));
  CHECK(rounding_floor(0.0) == 0.0);
}

TEST_CASE("residual report serializes to json") {
  ResidualReport rep;
  rep.grid_desc = "eta in [-5, 5], 201 nodes";
  rep.sup_norm = 1.5e-12;
  rep.l2_norm = 3e-13;
  rep.excluded_points = 2;
  rep.total_points = 201;
  rep.rounding_floor = 1e-13;
  rep.convergence_order = 2.02;
  rep.variants.emplace_back("conjugated", 4.2e-5);
  const std::string text = rep.to_json();
  CHECK(text.find("\"sup_norm\"") != std::string::npos);
  CHECK(text.find("\"convergence_order\"") != std::string::npos);
  CHECK(text.find("conjugated") != std::string::npos);
}
