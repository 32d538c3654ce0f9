#include "wickwave/quadrature.hpp"

#include <cmath>
#include <utility>
#include <vector>

#include "wickwave/errors.hpp"

namespace wickwave {

namespace {

using Cx = std::complex<double>;

// Kronrod-15 abscissae (positive half) and weights; Gauss-7 weights sit at
// the odd Kronrod nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct PanelResult {
  Cx kronrod;
  double err;
};

PanelResult gk15(const std::function<Cx(double)>& f, double a, double b) {
  const double hw = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  Cx fc = f(mid);
  Cx res_k = kWgk[7] * fc;
  Cx res_g = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = hw * kXgk[i];
    Cx lo = f(mid - dx);
    Cx hi = f(mid + dx);
    res_k += kWgk[i] * (lo + hi);
    if (i % 2 == 1) res_g += kWg[i / 2] * (lo + hi);
  }
  res_k *= hw;
  res_g *= hw;
  return {res_k, std::abs(res_k - res_g)};
}

}  // namespace

Cx integrate(const std::function<Cx(double)>& f, double a, double b, double abs_tol) {
  if (a == b) return Cx(0.0);
  const double span = std::abs(b - a);
  struct Seg {
    double a, b;
  };
  std::vector<Seg> work{{a, b}};
  Cx total(0.0);
  size_t panels = 0;
  while (!work.empty()) {
    if (++panels > 200000)
      throw NumericError("quadrature did not converge (panel budget exhausted)");
    Seg s = work.back();
    work.pop_back();
    PanelResult r = gk15(f, s.a, s.b);
    const double local_tol = abs_tol * std::abs(s.b - s.a) / span;
    if (r.err <= local_tol || r.err <= 1e-16 * (1.0 + std::abs(r.kronrod))) {
      total += r.kronrod;
      continue;
    }
    if (std::abs(s.b - s.a) < 1e-14 * (1.0 + span))
      throw NumericError("quadrature did not converge (interval collapsed)");
    const double m = 0.5 * (s.a + s.b);
    work.push_back({s.a, m});
    work.push_back({m, s.b});
  }
  return total;
}

double integrate_real(const std::function<double(double)>& f, double a, double b, double abs_tol) {
  return integrate([&f](double x) { return Cx(f(x), 0.0); }, a, b, abs_tol).real();
}

CachedIntegral::CachedIntegral(std::function<Cx(double)> f, double abs_tol)
    : f_(std::move(f)), tol_(abs_tol) {}

Cx CachedIntegral::operator()(double t) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = memo_.find(t);
    if (it != memo_.end()) return it->second;
  }
  Cx v = (t == 0.0) ? Cx(0.0) : integrate(f_, 0.0, t, tol_);
  std::lock_guard<std::mutex> lock(mutex_);
  return memo_.emplace(t, v).first->second;
}

}  // namespace wickwave
