#pragma once

#include "wickwave/quadrature.hpp"
#include "wickwave/time_function.hpp"
#include "wickwave/verify.hpp"

namespace wickwave {

// Coefficients of the transformed equation
//   D_t^a V + p D_x^a V + q V D_x^a V + r D_x^{2a} V + s D_t^a D_x^{2a} V = 0
// as functions of time (constants, Hermite-transformed processes at fixed z,
// or f_i(t) + c_i * noise compositions).
struct RlwParams {
  double k = 0.0;
  double alpha = 1.0;
  RealFn mu, p, q, r, s;
  int family = 1;  // 1..6
};

struct RlwCombos {
  double B1, B2, C1, C2, D1, D2;
};
RlwCombos rlw_combos(const RlwParams& par, double t);

// The family's lambda constraint: (r-s*mu)/s for families 1 and 4,
// -(r-6*s*mu)/s for 2 and 5, (r+4*s*mu)/(6s) for 3 and 6.
double rlw_lambda(const RlwParams& par, double t);

// Amplitudes and speed that make y = A0 + A1 h + A2 h^2 solve the reduced
// equation (c+kp)y + (kq/2)y^2 + k^2 r y' + k^2 c s y'' = 0 exactly when the
// coefficients are constant and r = 0. For r != 0 the same expressions stay
// well-defined and reduce continuously to the r = 0 forms, but no lambda
// constraint of this shape solves the reduced equation then.
struct RlwCoefficientSet {
  double lambda = 0.0;
  double Lambda = 0.0;  // lambda - mu
  double c = 0.0;
  double A0 = 0.0, A1 = 0.0, A2 = 0.0;
};
RlwCoefficientSet rlw_coefficients(const RlwParams& par, double t);

// Speed integrand for the traveling-wave position: the coefficient functions
// are read at the physical time tau_alpha = [tau Gamma(1+alpha)]^{1/alpha}.
double rlw_wave_speed(const RlwParams& par, double tau);

class RlwEvaluator {
 public:
  explicit RlwEvaluator(RlwParams par);

  // zeta = k x^alpha/Gamma(1+alpha) + int_0^{t^alpha/Gamma(1+alpha)} c(tau) dtau
  double zeta(double x, double t) const;
  // plotting variant: odd extension sgn(x)|x|^alpha for negative x
  double zeta_signed(double x, double t) const;
  double value(double x, double t) const;
  double value_signed(double x, double t) const;
  double value_at_zeta(double zeta_val, double t) const;
  const RlwParams& params() const { return par_; }

 private:
  RlwParams par_;
  CachedIntegral speed_int_;
};

double rlw_evaluate(const RlwParams& par, double x, double t);

ResidualReport rlw_ode_residual(const RlwParams& par, double t_frozen, const GridSpec1D& zeta_grid,
                                double tol = 1e-10);

// Independent evaluation path for the r = 0 specializations, written as the
// six explicit closed forms rather than through rlw_coefficients. Families 5
// and 6 admit two readings of which speed drives their phase integral; the
// default uses the family's own speed, the cross reading borrows family 2's
// (respectively 3's).
enum class SpeedReading { OwnFamily, PrintedCross };
double rlw_r0_evaluate(const RlwParams& par, double x, double t,
                       SpeedReading reading = SpeedReading::OwnFamily);

// alpha = 1, P = Q = 1, R = 0, S = -1 specialization (the classical RLW
// equation) with constant mu: variants 1, 2 and 5 in closed form.
double rlw_alpha1_special(int variant, double k, double mu_const, double x, double t);

// Finite-difference residual of v_t + v_x + v v_x - v_txx for the alpha = 1
// special-case solutions; the mixed derivative is d/dt of the d2/dx2 field,
// and the opposite application order is reported as "mixed_alt_order_diff".
ResidualReport rlw_bbm_residual(int variant, double k, double mu_const, const GridSpec2D& grid,
                                int halvings = 2);

}  // namespace wickwave
