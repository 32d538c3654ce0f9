#include "wickwave/rlw_families.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "wickwave/caputo.hpp"
#include "wickwave/errors.hpp"

namespace wickwave {

namespace {

void require_params(const RlwParams& par) {
  if (par.k == 0.0) throw ConfigError("rlw: k must be nonzero");
  if (par.family < 1 || par.family > 6) throw ConfigError("rlw: family must be 1..6");
  if (!par.mu || !par.p || !par.q || !par.r || !par.s)
    throw ConfigError("rlw: mu, p, q, r, s must all be set");
  if (!(par.alpha > 0.0 && par.alpha <= 1.0))
    throw ConfigError("rlw: alpha must lie in (0, 1]");
}

struct FrozenCoeffs {
  double mu, p, q, r, s;
};

FrozenCoeffs freeze(const RlwParams& par, double t) {
  FrozenCoeffs f{par.mu(t), par.p(t), par.q(t), par.r(t), par.s(t)};
  if (f.s == 0.0) throw DomainError("rlw: s(t) must be nonzero");
  return f;
}

double lambda_for(int family, const FrozenCoeffs& f) {
  switch (family) {
    case 1:
    case 4:
      return (f.r - f.s * f.mu) / f.s;
    case 2:
    case 5:
      return -(f.r - 6.0 * f.s * f.mu) / f.s;
    default:
      return (f.r + 4.0 * f.s * f.mu) / (6.0 * f.s);
  }
}

// h = Lambda/(lambda - mu e^{-Lambda zeta}) with the pole window measured
// against |lambda| + |mu| as the natural scale of the bracket.
double rlw_h(double lambda, double mu, double Lambda, double zeta) {
  const double scale = std::abs(lambda) + std::abs(mu);
  if (std::abs(Lambda) <= 1e-10 * scale)
    throw DegenerateAnsatz("rlw: lambda - mu is numerically zero");
  const double den = (mu == 0.0) ? lambda : lambda - mu * std::exp(-Lambda * zeta);
  if (std::abs(den) < 1e-12 * scale) {
    std::ostringstream os;
    os << "rlw: bracket vanishes near zeta = " << zeta;
    throw PoleEncountered(os.str(), {zeta, 0.0});
  }
  return Lambda / den;
}

}  // namespace

RlwCombos rlw_combos(const RlwParams& par, double t) {
  require_params(par);
  const double mu = par.mu(t), r = par.r(t), s = par.s(t);
  return {r - s * mu,       r - 2.0 * s * mu, r - 6.0 * s * mu,
          r - 5.0 * s * mu, r + 4.0 * s * mu, r - 2.0 * s * mu};
}

double rlw_lambda(const RlwParams& par, double t) {
  require_params(par);
  return lambda_for(par.family, freeze(par, t));
}

RlwCoefficientSet rlw_coefficients(const RlwParams& par, double t) {
  require_params(par);
  const FrozenCoeffs f = freeze(par, t);
  if (f.q == 0.0) throw DomainError("rlw: q(t) must be nonzero");
  const double k = par.k;
  RlwCoefficientSet set;
  set.lambda = lambda_for(par.family, f);
  set.Lambda = set.lambda - f.mu;
  const double kL2 = k * k * f.s * set.Lambda * set.Lambda;
  const double kL2_mag = 1.0 + k * k * std::abs(f.s) * set.Lambda * set.Lambda;
  if (par.family <= 3) {
    const double den = 1.0 + kL2;
    if (std::abs(den) < 1e-10 * kL2_mag)
      throw NumericError("rlw: wave-speed denominator 1 + k^2 s Lambda^2 is numerically zero");
    set.c = -k * (f.p + k * f.r * set.Lambda) / den;
    set.A0 = 0.0;
  } else {
    const double den = 1.0 - kL2;
    if (std::abs(den) < 1e-10 * kL2_mag)
      throw NumericError("rlw: wave-speed denominator 1 - k^2 s Lambda^2 is numerically zero");
    set.c = -k * (f.p - k * f.r * set.Lambda) / den;
    set.A0 = -2.0 * k * set.Lambda * (f.r + set.c * f.s * set.Lambda) / f.q;
  }
  set.A1 = (12.0 * k * set.lambda / (5.0 * f.q)) * (f.r + 5.0 * set.c * f.s * set.Lambda);
  set.A2 = -12.0 * k * set.c * f.s * set.lambda * set.lambda / f.q;
  return set;
}

double rlw_wave_speed(const RlwParams& par, double tau) {
  require_params(par);
  return rlw_coefficients(par, tau_alpha(tau, par.alpha)).c;
}

RlwEvaluator::RlwEvaluator(RlwParams par)
    : par_(std::move(par)),
      speed_int_([this](double tau) { return Complex(rlw_wave_speed(par_, tau), 0.0); }, 1e-12) {
  require_params(par_);
}

double RlwEvaluator::zeta(double x, double t) const {
  const double cap_x = frac_power_transform(x, par_.alpha);
  const double cap_t = frac_power_transform(t, par_.alpha);
  return par_.k * cap_x + speed_int_(cap_t).real();
}

double RlwEvaluator::zeta_signed(double x, double t) const {
  const double cap_x = frac_power_transform(std::abs(x), par_.alpha);
  const double cap_t = frac_power_transform(t, par_.alpha);
  return par_.k * std::copysign(cap_x, x) + speed_int_(cap_t).real();
}

double RlwEvaluator::value_at_zeta(double zeta_val, double t) const {
  const RlwCoefficientSet set = rlw_coefficients(par_, t);
  const double h = rlw_h(set.lambda, par_.mu(t), set.Lambda, zeta_val);
  return set.A0 + set.A1 * h + set.A2 * h * h;
}

double RlwEvaluator::value(double x, double t) const { return value_at_zeta(zeta(x, t), t); }

double RlwEvaluator::value_signed(double x, double t) const {
  return value_at_zeta(zeta_signed(x, t), t);
}

double rlw_evaluate(const RlwParams& par, double x, double t) {
  return RlwEvaluator(par).value(x, t);
}

ResidualReport rlw_ode_residual(const RlwParams& par, double t_frozen, const GridSpec1D& zeta_grid,
                                double tol) {
  require_params(par);
  if (zeta_grid.n < 2) throw ConfigError("rlw_ode_residual: grid needs at least two nodes");
  const FrozenCoeffs f = freeze(par, t_frozen);
  const RlwCoefficientSet set = rlw_coefficients(par, t_frozen);
  const double k = par.k;

  ResidualReport rep;
  std::ostringstream gd;
  gd << "zeta in [" << zeta_grid.a << ", " << zeta_grid.b << "], " << zeta_grid.n
     << " nodes, t = " << t_frozen << ", family " << par.family;
  rep.grid_desc = gd.str();
  rep.total_points = zeta_grid.n;

  double sup = 0.0, sumsq = 0.0, max_mag = 0.0;
  std::size_t included = 0;
  for (std::size_t i = 0; i < zeta_grid.n; ++i) {
    double h;
    try {
      h = rlw_h(set.lambda, f.mu, set.Lambda, zeta_grid.node(i));
    } catch (const PoleEncountered&) {
      ++rep.excluded_points;
      continue;
    }
    const double h1 = set.Lambda * h - set.lambda * h * h;
    const double h2 = set.Lambda * h1 - 2.0 * set.lambda * h * h1;
    const double y = set.A0 + set.A1 * h + set.A2 * h * h;
    const double y1 = set.A1 * h1 + 2.0 * set.A2 * h * h1;
    const double y2 = set.A1 * h2 + 2.0 * set.A2 * (h1 * h1 + h * h2);
    const double t_lin = (set.c + k * f.p) * y;
    const double t_sq = 0.5 * k * f.q * y * y;
    const double t_d1 = k * k * f.r * y1;
    const double t_d2 = k * k * set.c * f.s * y2;
    const double mag =
        std::max({std::abs(t_lin), std::abs(t_sq), std::abs(t_d1), std::abs(t_d2)});
    if (rounding_floor(mag) > tol) {
      ++rep.excluded_points;
      continue;
    }
    const double r_val = std::abs(t_lin + t_sq + t_d1 + t_d2);
    sup = std::max(sup, r_val);
    sumsq += r_val * r_val;
    max_mag = std::max(max_mag, mag);
    ++included;
  }
  rep.sup_norm = sup;
  rep.l2_norm = included ? std::sqrt(sumsq / static_cast<double>(included)) : 0.0;
  rep.rounding_floor = rounding_floor(max_mag);
  return rep;
}

namespace {

// r = 0 wave speeds in their explicit per-family shape (coefficients read at
// the physical time already).
double r0_speed(int family, double k, const FrozenCoeffs& f) {
  const double m2 = f.mu * f.mu;
  switch (family) {
    case 1:
      return -k * f.p / (1.0 + 4.0 * k * k * m2 * f.s);
    case 2:
      return -k * f.p / (1.0 + 25.0 * k * k * m2 * f.s);
    case 3:
      return -9.0 * k * f.p / (9.0 + k * k * f.s * m2);
    case 4:
      return k * f.p / (4.0 * k * k * m2 * f.s - 1.0);
    case 5:
      return k * f.p / (25.0 * k * k * m2 * f.s - 1.0);
    default:
      return 9.0 * k * f.p / (k * k * f.s * m2 - 9.0);
  }
}

double r0_bracket(int family, double mu, double zeta) {
  switch (family) {
    case 1:
    case 4:
      return 1.0 + std::exp(2.0 * mu * zeta);
    case 2:
    case 5:
      return 6.0 - std::exp(-5.0 * mu * zeta);
    default:
      return 2.0 - 3.0 * std::exp(mu * zeta / 3.0);
  }
}

double r0_bracket_scale(int family) {
  switch (family) {
    case 1:
    case 4:
      return 2.0;
    case 2:
    case 5:
      return 7.0;
    default:
      return 5.0;
  }
}

}  // namespace

double rlw_r0_evaluate(const RlwParams& par, double x, double t, SpeedReading reading) {
  require_params(par);
  if (par.r(t) != 0.0)
    throw DomainError("rlw_r0_evaluate: specialized to r = 0");
  int speed_family = par.family;
  if (reading == SpeedReading::PrintedCross) {
    if (par.family == 5) speed_family = 2;
    if (par.family == 6) speed_family = 3;
  }
  const double cap_x = frac_power_transform(x, par.alpha);
  const double cap_t = frac_power_transform(t, par.alpha);
  double drift = 0.0;
  if (cap_t > 0.0) {
    drift = integrate_real(
        [&](double tau) {
          return r0_speed(speed_family, par.k, freeze(par, tau_alpha(tau, par.alpha)));
        },
        0.0, cap_t, 1e-12);
  }
  const double zeta = par.k * cap_x + drift;

  const FrozenCoeffs f = freeze(par, t);
  if (f.q == 0.0) throw DomainError("rlw: q(t) must be nonzero");
  const double k = par.k;
  const double c = r0_speed(par.family, k, f);
  const double base = k * c * f.s * f.mu * f.mu / f.q;
  const double br = r0_bracket(par.family, f.mu, zeta);
  if (std::abs(br) < 1e-12 * r0_bracket_scale(par.family)) {
    std::ostringstream os;
    os << "rlw: bracket vanishes near zeta = " << zeta;
    throw PoleEncountered(os.str(), {zeta, 0.0});
  }
  switch (par.family) {
    case 1:
      return 48.0 * base * (1.0 / br - 1.0 / (br * br));
    case 2:
      return 1800.0 * base / br - 10800.0 * base / (br * br);
    case 3:
      return (8.0 / 3.0) * base / br - (16.0 / 3.0) * base / (br * br);
    case 4:
      return -8.0 * base + 48.0 * base * (1.0 / br - 1.0 / (br * br));
    case 5:
      return -50.0 * base + 1800.0 * base / br - 10800.0 * base / (br * br);
    default:
      return -(2.0 / 9.0) * base + (8.0 / 3.0) * base / br - (16.0 / 3.0) * base / (br * br);
  }
}

double rlw_alpha1_special(int variant, double k, double mu_const, double x, double t) {
  if (variant != 1 && variant != 2 && variant != 5)
    throw ConfigError("rlw_alpha1_special: variant must be 1, 2 or 5");
  if (k == 0.0) throw ConfigError("rlw_alpha1_special: k must be nonzero");
  const double m2 = mu_const * mu_const;
  double c, a0 = 0.0;
  if (variant == 1) {
    const double den = 4.0 * k * k * m2 - 1.0;
    if (std::abs(den) < 1e-10 * (1.0 + 4.0 * k * k * m2))
      throw NumericError("rlw_alpha1_special: speed denominator is numerically zero");
    c = k / den;
  } else if (variant == 2) {
    const double den = 25.0 * k * k * m2 - 1.0;
    if (std::abs(den) < 1e-10 * (1.0 + 25.0 * k * k * m2))
      throw NumericError("rlw_alpha1_special: speed denominator is numerically zero");
    c = k / den;
  } else {
    c = -k / (25.0 * k * k * m2 + 1.0);
    a0 = 50.0 * k * c * m2;
  }
  const double xi = k * x + c * t;
  if (variant == 1) {
    const double br = 1.0 + std::exp(2.0 * mu_const * xi);
    if (std::abs(br) < 1e-12 * 2.0)
      throw PoleEncountered("rlw_alpha1_special: bracket vanishes", {xi, 0.0});
    return -48.0 * k * c * m2 / br + 48.0 * k * c * m2 / (br * br);
  }
  const double br = 6.0 - std::exp(-5.0 * mu_const * xi);
  if (std::abs(br) < 1e-12 * 7.0)
    throw PoleEncountered("rlw_alpha1_special: bracket vanishes", {xi, 0.0});
  return a0 - 1800.0 * k * c * m2 / br + 10800.0 * k * c * m2 / (br * br);
}

ResidualReport rlw_bbm_residual(int variant, double k, double mu_const, const GridSpec2D& grid,
                                int halvings) {
  if (halvings < 1) throw ConfigError("rlw_bbm_residual: need at least one refinement");
  if (grid.nx < 7 || grid.nt < 7)
    throw ConfigError("rlw_bbm_residual: base grid too small for the stencils");

  std::vector<std::pair<double, double>> fit;
  double sup_finest = 0.0, l2_finest = 0.0, alt_diff = 0.0, max_mag = 0.0;
  std::size_t excluded_finest = 0, total_finest = 0;
  GridSpec2D g = grid;
  for (int level = 0; level <= halvings; ++level) {
    Field2D v(g.nx, g.nt, g.hx(), g.ht());
    std::vector<bool> bad(g.nx * g.nt, false);
    for (std::size_t j = 0; j < g.nt; ++j)
      for (std::size_t i = 0; i < g.nx; ++i) {
        try {
          v.at(i, j) = rlw_alpha1_special(variant, k, mu_const, g.x_at(i), g.t_at(j));
        } catch (const PoleEncountered&) {
          v.at(i, j) = Complex(std::numeric_limits<double>::quiet_NaN(), 0.0);
          bad[j * g.nx + i] = true;
        }
      }
    const Field2D vt = fd_derivative(v, 1, 1, 2);
    const Field2D vx = fd_derivative(v, 0, 1, 2);
    const Field2D vxx = fd_derivative(v, 0, 2, 2);
    const Field2D vtxx = fd_derivative(vxx, 1, 1, 2);
    const Field2D vxxt = fd_derivative(vt, 0, 2, 2);

    double sup = 0.0, sumsq = 0.0, lvl_alt = 0.0, lvl_mag = 0.0;
    std::size_t included = 0, excluded = 0;
    for (std::size_t j = 0; j < g.nt; ++j)
      for (std::size_t i = 0; i < g.nx; ++i) {
        const double u = v.at(i, j).real();
        const double ut = vt.at(i, j).real();
        const double ux = vx.at(i, j).real();
        const double utxx = vtxx.at(i, j).real();
        const double uxxt = vxxt.at(i, j).real();
        if (bad[j * g.nx + i] || std::isnan(ut) || std::isnan(ux) || std::isnan(utxx) ||
            std::isnan(uxxt)) {
          ++excluded;
          continue;
        }
        const double resid = ut + ux + u * ux - utxx;
        sup = std::max(sup, std::abs(resid));
        sumsq += resid * resid;
        lvl_alt = std::max(lvl_alt, std::abs(utxx - uxxt));
        lvl_mag = std::max({lvl_mag, std::abs(ut), std::abs(ux), std::abs(u * ux),
                            std::abs(utxx)});
        ++included;
      }
    fit.emplace_back(g.hx(), sup);
    sup_finest = sup;
    l2_finest = included ? std::sqrt(sumsq / static_cast<double>(included)) : 0.0;
    alt_diff = lvl_alt;
    max_mag = lvl_mag;
    excluded_finest = excluded;
    total_finest = g.nx * g.nt;
    g.nx = 2 * g.nx - 1;
    g.nt = 2 * g.nt - 1;
  }

  ResidualReport rep;
  std::ostringstream gd;
  gd << "bbm variant " << variant << ", x in [" << grid.x0 << ", " << grid.x1 << "] t in ["
     << grid.t0 << ", " << grid.t1 << "], base " << grid.nx << "x" << grid.nt << ", " << halvings
     << " halvings";
  rep.grid_desc = gd.str();
  rep.sup_norm = sup_finest;
  rep.l2_norm = l2_finest;
  rep.excluded_points = excluded_finest;
  rep.total_points = total_finest;
  rep.rounding_floor = rounding_floor(max_mag);
  const OrderFit fit_res = convergence_order(fit);
  rep.convergence_order = fit_res.order;
  rep.order_saturated = fit_res.saturated;
  rep.variants.emplace_back("mixed_alt_order_diff", alt_diff);
  return rep;
}

}  // namespace wickwave
