#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "wickwave/errors.hpp"
#include "wickwave/time_function.hpp"

namespace wickwave {

// Uniformly sampled real function on [t0, t0 + h*(size-1)].
struct SampledFunction {
  double t0 = 0.0;
  double h = 0.0;
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
  double t_at(std::size_t i) const { return t0 + h * static_cast<double>(i); }
  double t_end() const { return values.empty() ? t0 : t_at(values.size() - 1); }

  double value_at_time(double t) const {
    if (values.empty()) throw DomainError("SampledFunction: empty sample set");
    if (values.size() == 1) {
      if (std::abs(t - t0) > 1e-12 * (1.0 + std::abs(t0)))
        throw DomainError("SampledFunction: time outside sampled range");
      return values[0];
    }
    const double pos = (t - t0) / h;
    if (pos < -1e-9 || pos > static_cast<double>(values.size() - 1) + 1e-9)
      throw DomainError("SampledFunction: time outside sampled range");
    const double clamped = std::min(std::max(pos, 0.0), static_cast<double>(values.size() - 1));
    const auto lo = static_cast<std::size_t>(std::min(clamped, static_cast<double>(values.size() - 2)));
    const double frac = clamped - static_cast<double>(lo);
    return values[lo] * (1.0 - frac) + values[lo + 1] * frac;
  }
};

inline SampledFunction sample_function(const RealFn& f, double t_end, std::size_t n_steps) {
  if (n_steps < 1) throw DomainError("sample_function: need at least one step");
  if (!(t_end > 0.0)) throw DomainError("sample_function: t_end must be positive");
  SampledFunction s;
  s.t0 = 0.0;
  s.h = t_end / static_cast<double>(n_steps);
  s.values.resize(n_steps + 1);
  for (std::size_t i = 0; i <= n_steps; ++i) s.values[i] = f(s.t_at(i));
  return s;
}

}  // namespace wickwave
