#include "wickwave/subequation.hpp"

#include <cmath>
#include <sstream>

#include "wickwave/errors.hpp"
#include "wickwave/gamma.hpp"

namespace wickwave {

double degeneracy_tol(Complex p, Complex q) {
  return 1e-10 * (std::abs(p) + std::abs(q));
}

namespace {

// Shared entry: validates parameters, evaluates the denominator, and checks
// the hard-pole window before any ratio is formed.
Complex denom_checked(Complex p, Complex q, Complex eta) {
  const Complex d = p - q;
  if (std::abs(d) <= degeneracy_tol(p, q))
    throw DegenerateAnsatz("fg_ratio: p - q is numerically zero; ansatz degenerates to a constant");
  const Complex den = p - q * std::exp(-d * eta);
  if (std::abs(den) < 1e-12 * std::abs(p)) {
    std::ostringstream os;
    os << "fg_ratio: denominator vanishes near eta = (" << eta.real() << ", " << eta.imag() << ")";
    throw PoleEncountered(os.str(), eta);
  }
  return den;
}

}  // namespace

Complex fg_ratio(Complex p, Complex q, Complex eta) {
  const Complex den = denom_checked(p, q, eta);
  return (p - q) / den;
}

Complex fg_ratio(const AnsatzParams& par, double t, Complex eta) {
  return fg_ratio(par.p(t), par.q(t), eta);
}

RatioJet fg_ratio_jet(Complex p, Complex q, Complex eta) {
  const Complex den = denom_checked(p, q, eta);
  const Complex d = p - q;
  RatioJet jet;
  jet.h = d / den;
  jet.d1 = d * jet.h - p * jet.h * jet.h;
  jet.d2 = d * jet.d1 - 2.0 * p * jet.h * jet.d1;
  jet.d3 = d * jet.d2 - 2.0 * p * (jet.d1 * jet.d1 + jet.h * jet.d2);
  return jet;
}

Complex fg_ratio_derivatives(Complex p, Complex q, Complex eta, int order) {
  if (order < 1 || order > 3)
    throw DomainError("fg_ratio_derivatives: order must be 1, 2 or 3");
  const RatioJet jet = fg_ratio_jet(p, q, eta);
  switch (order) {
    case 1: return jet.d1;
    case 2: return jet.d2;
    default: return jet.d3;
  }
}

Complex fg_ratio_derivatives(const AnsatzParams& par, double t, Complex eta, int order) {
  return fg_ratio_derivatives(par.p(t), par.q(t), eta, order);
}

double frac_fg_ratio(double lambda, double mu, double alpha, double xi) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw DomainError("frac_fg_ratio: alpha must lie in (0, 1]");
  if (xi < 0.0)
    throw DomainError("frac_fg_ratio: xi must be nonnegative");
  const double eta = (alpha == 1.0) ? xi : std::pow(xi, alpha) / gamma_fn(1.0 + alpha);
  const Complex h = fg_ratio(Complex(lambda, 0.0), Complex(mu, 0.0), Complex(eta, 0.0));
  return h.real();
}

double frac_fg_ratio(const AnsatzParams& par, double t, double xi) {
  return frac_fg_ratio(par.lambda(t), par.mu(t), par.alpha, xi);
}

int balance_pole_order(int highest_derivative_order, int nonlinearity_degree) {
  if (highest_derivative_order < 1)
    throw DomainError("balance_pole_order: derivative order must be >= 1");
  if (nonlinearity_degree < 2)
    throw DomainError("balance_pole_order: nonlinearity degree must be >= 2");
  const int num = highest_derivative_order;
  const int den = nonlinearity_degree - 1;
  if (num % den != 0)
    throw NoPolynomialBalance("balance_pole_order: derivative order is not divisible by degree - 1");
  return num / den;
}

}  // namespace wickwave
