#pragma once

#include <utility>

#include "wickwave/sampled_function.hpp"
#include "wickwave/time_function.hpp"

namespace wickwave {

// Fractional order restricted to (0, 1]; implicit so plain doubles read well
// at call sites while still being validated once.
class FractionalOrder {
 public:
  FractionalOrder(double a);  // NOLINT(google-explicit-constructor)
  double value() const { return a_; }
  operator double() const { return a_; }

 private:
  double a_;
};

// L1 discretization of the Caputo derivative of order alpha at grid node n.
// First-order backward difference when alpha == 1.
double caputo_l1(const SampledFunction& f, FractionalOrder alpha, std::size_t n);
double caputo_l1(const RealFn& f, FractionalOrder alpha, double t, double h);

// Closed form for f(t) = t^r: Gamma(1+r)/Gamma(1+r-alpha) * t^{r-alpha}.
double caputo_power(double r, FractionalOrder alpha, double t);

// v^alpha / Gamma(1+alpha), the substitution that linearizes Caputo dynamics.
double frac_power_transform(double v, FractionalOrder alpha);

// Inverse of t -> t^alpha/Gamma(1+alpha): tau_alpha = (tau Gamma(1+alpha))^{1/alpha}.
double tau_alpha(double tau, FractionalOrder alpha);

// Traveling-wave phase zeta = k x^alpha/Gamma(1+alpha) + int_0^{T} c, with
// T = t^alpha/Gamma(1+alpha). The speed c is integrated as given.
double frac_transform_zeta(double k, FractionalOrder alpha, double x, double t, const RealFn& c);

// Compares D^alpha[g(f(t))] against g'(f) D^alpha f for the first-order chain
// rule that the transform relies on. Returns (lhs, rhs).
std::pair<double, double> caputo_chain_check(const RealFn& g, const RealFn& f,
                                             FractionalOrder alpha, double t);

}  // namespace wickwave
