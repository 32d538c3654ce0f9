#include "wickwave/caputo.hpp"

#include <cmath>

#include "wickwave/errors.hpp"
#include "wickwave/gamma.hpp"
#include "wickwave/quadrature.hpp"

namespace wickwave {

FractionalOrder::FractionalOrder(double a) : a_(a) {
  if (!(a > 0.0 && a <= 1.0))
    throw DomainError("FractionalOrder: alpha must lie in (0, 1]");
}

double caputo_l1(const SampledFunction& f, FractionalOrder alpha, std::size_t n) {
  if (n < 1 || n >= f.size())
    throw DomainError("caputo_l1: node index out of range");
  if (!(f.h > 0.0))
    throw DomainError("caputo_l1: sample step must be positive");
  const double a = alpha.value();
  if (a == 1.0)
    return (f.values[n] - f.values[n - 1]) / f.h;
  double acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double b = std::pow(static_cast<double>(j + 1), 1.0 - a) -
                     std::pow(static_cast<double>(j), 1.0 - a);
    acc += b * (f.values[n - j] - f.values[n - j - 1]);
  }
  return acc * std::pow(f.h, -a) / gamma_fn(2.0 - a);
}

double caputo_l1(const RealFn& f, FractionalOrder alpha, double t, double h) {
  if (!(t > 0.0)) throw DomainError("caputo_l1: t must be positive");
  if (!(h > 0.0 && h <= t)) throw DomainError("caputo_l1: step must satisfy 0 < h <= t");
  const auto n = static_cast<std::size_t>(std::llround(t / h));
  return caputo_l1(sample_function(f, t, n < 1 ? 1 : n), alpha, n < 1 ? 1 : n);
}

double caputo_power(double r, FractionalOrder alpha, double t) {
  if (r < 0.0) throw DomainError("caputo_power: exponent must be nonnegative");
  if (t < 0.0) throw DomainError("caputo_power: t must be nonnegative");
  if (r == 0.0) return 0.0;
  const double a = alpha.value();
  const double scale = gamma_fn(1.0 + r) / gamma_fn(1.0 + r - a);
  const double out = scale * std::pow(t, r - a);
  if (!std::isfinite(out))
    throw DomainError("caputo_power: derivative diverges at t = 0 for r < alpha");
  return out;
}

double frac_power_transform(double v, FractionalOrder alpha) {
  if (v < 0.0) throw DomainError("frac_power_transform: argument must be nonnegative");
  const double a = alpha.value();
  if (a == 1.0) return v;
  return std::pow(v, a) / gamma_fn(1.0 + a);
}

double tau_alpha(double tau, FractionalOrder alpha) {
  if (tau < 0.0) throw DomainError("tau_alpha: argument must be nonnegative");
  const double a = alpha.value();
  if (a == 1.0) return tau;
  return std::pow(tau * gamma_fn(1.0 + a), 1.0 / a);
}

double frac_transform_zeta(double k, FractionalOrder alpha, double x, double t, const RealFn& c) {
  if (k == 0.0) throw DomainError("frac_transform_zeta: k must be nonzero");
  if (x < 0.0 || t < 0.0)
    throw DomainError("frac_transform_zeta: x and t must be nonnegative");
  const double cap_x = frac_power_transform(x, alpha);
  const double cap_t = frac_power_transform(t, alpha);
  double drift = 0.0;
  if (cap_t > 0.0) drift = integrate_real([&](double tau) { return c(tau); }, 0.0, cap_t);
  return k * cap_x + drift;
}

std::pair<double, double> caputo_chain_check(const RealFn& g, const RealFn& f,
                                             FractionalOrder alpha, double t) {
  if (!(t > 0.0)) throw DomainError("caputo_chain_check: t must be positive");
  const double h = t / 4096.0;
  const double lhs = caputo_l1([&](double s) { return g(f(s)); }, alpha, t, h);
  const double u = f(t);
  const double delta = 1e-5;
  const double gprime = (g(u + delta) - g(u - delta)) / (2.0 * delta);
  const double rhs = gprime * caputo_l1(f, alpha, t, h);
  return {lhs, rhs};
}

}  // namespace wickwave
