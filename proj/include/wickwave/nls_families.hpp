#pragma once

#include <optional>

#include "wickwave/noise.hpp"
#include "wickwave/quadrature.hpp"
#include "wickwave/subequation.hpp"
#include "wickwave/time_function.hpp"
#include "wickwave/verify.hpp"

namespace wickwave {

// Coefficients of i u_t + alpha u_xx + beta u^3 + lambda u = 0 (cubic taken
// either Wick-style or with conjugation; see nls_pde_residual). Noise enters
// alpha and lambda additively; beta is either supplied directly or derived as
// alpha/c, in which case it inherits the noise through alpha.
struct NlsParams {
  RealFn p, q;
  TimeFn alpha, lambda;
  TimeFn beta;
  std::optional<double> c;
  NoiseModel noise = NoiseModel::zero();

  Complex alpha_eff(double t) const;
  Complex lambda_eff(double t) const;
  Complex beta_eff(double t) const;
};

struct NlsCoefficientSet {
  int family = 0;
  int sign = 0;
  Complex theta;  // phase angle at time t; the solution carries e^{i theta(t)}
  Complex omega;  // transport speed; eta = x - int_0^t omega
  Complex A0, A1;
};

// family 1: omega = -3i alpha (p-q), A0 = 0,            theta = lambda - 2 alpha (p-q)^2
// family 2: omega = +3i alpha (p-q), A0 = -sign (p-q)s, theta = lambda - 2 alpha (p-q)^2
// family 3: omega = 0,               A0 = -sign (p-q)s/2, theta = lambda - alpha (p-q)^2 / 2
// with s = sqrt(-2 alpha / beta) (principal branch) and A1 = sign * p * s.
NlsCoefficientSet nls_coefficients(const NlsParams& par, int family, int sign, double t);

class NlsEvaluator {
 public:
  NlsEvaluator(NlsParams par, int family, int sign);

  Complex eta(double x, double t) const;
  Complex psi(double x, double t) const;
  NlsCoefficientSet coefficients(double t) const;
  const NlsParams& params() const { return par_; }

 private:
  NlsParams par_;
  int family_, sign_;
  CachedIntegral omega_int_;
};

Complex nls_eta(const NlsParams& par, int family, double x, double t);
Complex nls_evaluate(const NlsParams& par, int family, int sign, double x, double t);

// Residual of the eta-ODE -i omega phi' + alpha phi'' + beta phi^3
// + (lambda - theta) phi with coefficients frozen at t_frozen. Points are
// excluded at denominator poles and where the rounding floor of the largest
// term exceeds tol.
ResidualReport nls_ode_residual(const NlsParams& par, int family, int sign, double t_frozen,
                                const GridSpec1D& grid, double tol = 1e-10);

// Finite-difference residual of the PDE itself on a refining sequence of
// grids (halvings extra levels). Both cubic readings are reported in the
// variants list: "non_conjugated" uses u^3, "conjugated" uses |u|^2 u.
ResidualReport nls_pde_residual(const NlsParams& par, int family, int sign,
                                const GridSpec2D& grid, int halvings = 2);

}  // namespace wickwave
