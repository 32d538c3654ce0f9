#include "wickwave/nls_families.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "wickwave/errors.hpp"

namespace wickwave {

namespace {

constexpr Complex kImag{0.0, 1.0};
constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_params(const NlsParams& par) {
  if (!par.p || !par.q) throw ConfigError("nls: p and q must be set");
  if (!par.alpha) throw ConfigError("nls: alpha must be set");
  if (!par.lambda) throw ConfigError("nls: lambda must be set");
  if (par.c.has_value()) {
    if (*par.c == 0.0) throw ConfigError("nls: c must be nonzero");
    if (par.beta) throw ConfigError("nls: set either beta or c, not both");
  } else if (!par.beta) {
    throw ConfigError("nls: beta is required when c is not given");
  }
}

void require_family_sign(int family, int sign) {
  if (family < 1 || family > 3) throw ConfigError("nls: family must be 1, 2 or 3");
  if (sign != 1 && sign != -1) throw ConfigError("nls: sign must be +1 or -1");
}

}  // namespace

Complex NlsParams::alpha_eff(double t) const { return alpha(t) + white_noise(noise, t); }

Complex NlsParams::lambda_eff(double t) const { return lambda(t) + white_noise(noise, t); }

Complex NlsParams::beta_eff(double t) const {
  if (c.has_value()) return alpha_eff(t) / *c;
  return beta(t);
}

NlsCoefficientSet nls_coefficients(const NlsParams& par, int family, int sign, double t) {
  require_params(par);
  require_family_sign(family, sign);
  const Complex a = par.alpha_eff(t);
  const Complex b = par.beta_eff(t);
  const Complex lam = par.lambda_eff(t);
  const Complex p{par.p(t), 0.0};
  const Complex q{par.q(t), 0.0};
  const Complex d = p - q;
  if (std::abs(b) < 1e-300) throw DomainError("nls_coefficients: beta must be nonzero");
  const Complex s = std::sqrt(-2.0 * a / b);
  NlsCoefficientSet set;
  set.family = family;
  set.sign = sign;
  set.A1 = static_cast<double>(sign) * p * s;
  switch (family) {
    case 1:
      set.omega = -3.0 * kImag * a * d;
      set.A0 = 0.0;
      set.theta = lam - 2.0 * a * d * d;
      break;
    case 2:
      set.omega = 3.0 * kImag * a * d;
      set.A0 = -static_cast<double>(sign) * d * s;
      set.theta = lam - 2.0 * a * d * d;
      break;
    default:
      set.omega = 0.0;
      set.A0 = -static_cast<double>(sign) * d * s * 0.5;
      set.theta = lam - 0.5 * a * d * d;
      break;
  }
  return set;
}

NlsEvaluator::NlsEvaluator(NlsParams par, int family, int sign)
    : par_(std::move(par)),
      family_(family),
      sign_(sign),
      omega_int_(
          [this](double tau) { return nls_coefficients(par_, family_, sign_, tau).omega; },
          1e-12) {
  require_params(par_);
  require_family_sign(family, sign);
}

NlsCoefficientSet NlsEvaluator::coefficients(double t) const {
  return nls_coefficients(par_, family_, sign_, t);
}

Complex NlsEvaluator::eta(double x, double t) const { return Complex(x, 0.0) - omega_int_(t); }

Complex NlsEvaluator::psi(double x, double t) const {
  const NlsCoefficientSet set = coefficients(t);
  const Complex h = fg_ratio(Complex(par_.p(t), 0.0), Complex(par_.q(t), 0.0), eta(x, t));
  return (set.A1 * h + set.A0) * std::exp(kImag * set.theta);
}

Complex nls_eta(const NlsParams& par, int family, double x, double t) {
  return NlsEvaluator(par, family, 1).eta(x, t);
}

Complex nls_evaluate(const NlsParams& par, int family, int sign, double x, double t) {
  return NlsEvaluator(par, family, sign).psi(x, t);
}

ResidualReport nls_ode_residual(const NlsParams& par, int family, int sign, double t_frozen,
                                const GridSpec1D& grid, double tol) {
  require_params(par);
  require_family_sign(family, sign);
  if (grid.n < 2) throw ConfigError("nls_ode_residual: grid needs at least two nodes");
  const NlsCoefficientSet set = nls_coefficients(par, family, sign, t_frozen);
  const Complex a = par.alpha_eff(t_frozen);
  const Complex b = par.beta_eff(t_frozen);
  const Complex lam = par.lambda_eff(t_frozen);
  const Complex p{par.p(t_frozen), 0.0};
  const Complex q{par.q(t_frozen), 0.0};

  ResidualReport rep;
  std::ostringstream gd;
  gd << "eta in [" << grid.a << ", " << grid.b << "], " << grid.n << " nodes, t = " << t_frozen;
  rep.grid_desc = gd.str();
  rep.total_points = grid.n;

  double sup = 0.0, sumsq = 0.0, max_mag = 0.0;
  std::size_t included = 0;
  for (std::size_t i = 0; i < grid.n; ++i) {
    const Complex eta{grid.node(i), 0.0};
    RatioJet jet;
    try {
      jet = fg_ratio_jet(p, q, eta);
    } catch (const PoleEncountered&) {
      ++rep.excluded_points;
      continue;
    }
    const Complex phi = set.A1 * jet.h + set.A0;
    const Complex t_transport = -kImag * set.omega * set.A1 * jet.d1;
    const Complex t_disp = a * set.A1 * jet.d2;
    const Complex t_cubic = b * phi * phi * phi;
    const Complex t_linear = (lam - set.theta) * phi;
    const double mag = std::max({std::abs(t_transport), std::abs(t_disp), std::abs(t_cubic),
                                 std::abs(t_linear)});
    if (rounding_floor(mag) > tol) {
      ++rep.excluded_points;
      continue;
    }
    const double r = std::abs(t_transport + t_disp + t_cubic + t_linear);
    sup = std::max(sup, r);
    sumsq += r * r;
    max_mag = std::max(max_mag, mag);
    ++included;
  }
  rep.sup_norm = sup;
  rep.l2_norm = included ? std::sqrt(sumsq / static_cast<double>(included)) : 0.0;
  rep.rounding_floor = rounding_floor(max_mag);
  return rep;
}

namespace {

struct PdeLevelNorms {
  double sup_conj = 0.0, sup_plain = 0.0;
  double l2_conj = 0.0;
  std::size_t excluded = 0, total = 0;
  double max_mag = 0.0;
};

PdeLevelNorms pde_level(const NlsEvaluator& ev, const GridSpec2D& g) {
  Field2D psi(g.nx, g.nt, g.hx(), g.ht());
  std::vector<bool> bad(g.nx * g.nt, false);
  for (std::size_t j = 0; j < g.nt; ++j) {
    const double t = g.t_at(j);
    for (std::size_t i = 0; i < g.nx; ++i) {
      try {
        psi.at(i, j) = ev.psi(g.x_at(i), t);
      } catch (const PoleEncountered&) {
        psi.at(i, j) = Complex(std::numeric_limits<double>::quiet_NaN(), 0.0);
        bad[j * g.nx + i] = true;
      }
    }
  }
  const Field2D psi_t = fd_derivative(psi, 1, 1, 2);
  const Field2D psi_xx = fd_derivative(psi, 0, 2, 2);

  PdeLevelNorms out;
  double sumsq = 0.0;
  std::size_t included = 0;
  for (std::size_t j = 0; j < g.nt; ++j) {
    const double t = g.t_at(j);
    const Complex a = ev.params().alpha_eff(t);
    const Complex b = ev.params().beta_eff(t);
    const Complex lam = ev.params().lambda_eff(t);
    for (std::size_t i = 0; i < g.nx; ++i) {
      ++out.total;
      const Complex u = psi.at(i, j);
      const Complex ut = psi_t.at(i, j);
      const Complex uxx = psi_xx.at(i, j);
      const bool nan = std::isnan(u.real()) || std::isnan(ut.real()) || std::isnan(uxx.real());
      if (bad[j * g.nx + i] || nan) {
        ++out.excluded;
        continue;
      }
      const Complex common = kImag * ut + a * uxx + lam * u;
      const Complex cubic_plain = b * u * u * u;
      const Complex cubic_conj = b * u * std::norm(u);
      const double r_plain = std::abs(common + cubic_plain);
      const double r_conj = std::abs(common + cubic_conj);
      out.sup_plain = std::max(out.sup_plain, r_plain);
      out.sup_conj = std::max(out.sup_conj, r_conj);
      sumsq += r_conj * r_conj;
      out.max_mag = std::max({out.max_mag, std::abs(ut), std::abs(a * uxx),
                              std::abs(cubic_conj), std::abs(lam * u)});
      ++included;
    }
  }
  out.l2_conj = included ? std::sqrt(sumsq / static_cast<double>(included)) : 0.0;
  return out;
}

}  // namespace

ResidualReport nls_pde_residual(const NlsParams& par, int family, int sign,
                                const GridSpec2D& grid, int halvings) {
  if (halvings < 1) throw ConfigError("nls_pde_residual: need at least one refinement");
  if (grid.nx < 5 || grid.nt < 5)
    throw ConfigError("nls_pde_residual: base grid too small for the stencils");
  const NlsEvaluator ev(par, family, sign);

  std::vector<std::pair<double, double>> fit_conj, fit_plain;
  PdeLevelNorms finest;
  GridSpec2D g = grid;
  for (int level = 0; level <= halvings; ++level) {
    finest = pde_level(ev, g);
    fit_conj.emplace_back(g.hx(), finest.sup_conj);
    fit_plain.emplace_back(g.hx(), finest.sup_plain);
    g.nx = 2 * g.nx - 1;
    g.nt = 2 * g.nt - 1;
  }

  ResidualReport rep;
  std::ostringstream gd;
  gd << "x in [" << grid.x0 << ", " << grid.x1 << "] t in [" << grid.t0 << ", " << grid.t1
     << "], base " << grid.nx << "x" << grid.nt << ", " << halvings << " halvings";
  rep.grid_desc = gd.str();
  rep.sup_norm = finest.sup_conj;
  rep.l2_norm = finest.l2_conj;
  rep.excluded_points = finest.excluded;
  rep.total_points = finest.total;
  rep.rounding_floor = rounding_floor(finest.max_mag);

  const OrderFit oc = convergence_order(fit_conj);
  const OrderFit op = convergence_order(fit_plain);
  rep.convergence_order = oc.order;
  rep.order_saturated = oc.saturated;
  rep.variants.emplace_back("conjugated", fit_conj.back().second);
  rep.variants.emplace_back("non_conjugated", fit_plain.back().second);
  rep.variants.emplace_back("conjugated_order", oc.order);
  rep.variants.emplace_back("non_conjugated_order", op.order);
  return rep;
}

}  // namespace wickwave
