#pragma once

#include "wickwave/time_function.hpp"

namespace wickwave {

// Parameter bundle for the ansatz ratio h = F/G. The (p, q) pair drives the
// integer-order variant, the (lambda, mu, alpha) triple the fractional one.
struct AnsatzParams {
  TimeFn p, q;
  RealFn lambda, mu;
  double alpha = 1.0;
};

// h(eta) = (p-q)/(p - q e^{-(p-q) eta}); solves h' = (p-q)h - p h^2.
Complex fg_ratio(Complex p, Complex q, Complex eta);
Complex fg_ratio(const AnsatzParams& par, double t, Complex eta);

// Exact eta-derivatives of h obtained by iterating the Riccati relation:
//   h'   = (p-q)h - p h^2
//   h''  = (p-q)h' - 2p h h'
//   h''' = (p-q)h'' - 2p (h'^2 + h h'')
Complex fg_ratio_derivatives(Complex p, Complex q, Complex eta, int order);
Complex fg_ratio_derivatives(const AnsatzParams& par, double t, Complex eta, int order);

struct RatioJet {
  Complex h, d1, d2, d3;
};
RatioJet fg_ratio_jet(Complex p, Complex q, Complex eta);

// Fractional variant: same ratio in the rescaled variable xi^alpha/gamma(1+alpha).
double frac_fg_ratio(double lambda, double mu, double alpha, double xi);
double frac_fg_ratio(const AnsatzParams& par, double t, double xi);

// Homogeneous balance m = order/(degree-1); throws NoPolynomialBalance when
// that is not a positive integer.
int balance_pole_order(int highest_derivative_order, int nonlinearity_degree);

// Degeneracy threshold for p-q, relative to the coefficient magnitudes.
double degeneracy_tol(Complex p, Complex q);

}  // namespace wickwave
