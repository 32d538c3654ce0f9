#include "wickwave/noise.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "wickwave/errors.hpp"

namespace wickwave {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kPow2Neg64 = 5.421010862427522170037264004349e-20;  // 2^-64

}  // namespace

std::uint64_t splitmix64(std::uint64_t seed, std::uint64_t n) {
  std::uint64_t z = seed + (n + 1) * 0x9E3779B97F4A7C15ULL;
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

double uniform_open(std::uint64_t seed, std::uint64_t i) {
  const std::uint64_t out = splitmix64(seed, 2 * i);
  if (out == std::numeric_limits<std::uint64_t>::max()) return 1.0;
  return static_cast<double>(out + 1) * kPow2Neg64;
}

double uniform_halfopen(std::uint64_t seed, std::uint64_t i) {
  return static_cast<double>(splitmix64(seed, 2 * i + 1)) * kPow2Neg64;
}

double gaussian(std::uint64_t seed, std::uint64_t i) {
  const double u1 = uniform_open(seed, i);
  const double u2 = uniform_halfopen(seed, i);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

SampledFunction brownian_path(std::uint64_t seed, double t_end, double dt) {
  if (!(t_end > 0.0)) throw DomainError("brownian_path: t_end must be positive");
  if (!(dt > 0.0 && dt <= t_end)) throw DomainError("brownian_path: need 0 < dt <= t_end");
  auto n = static_cast<std::size_t>(std::llround(t_end / dt));
  if (n < 1) n = 1;
  SampledFunction path;
  path.t0 = 0.0;
  path.h = dt;
  path.values.resize(n + 1);
  path.values[0] = 0.0;
  const double sqdt = std::sqrt(dt);
  for (std::size_t i = 1; i <= n; ++i)
    path.values[i] = path.values[i - 1] + gaussian(seed, i - 1) * sqdt;
  return path;
}

NoiseModel NoiseModel::zero() { return NoiseModel(); }

NoiseModel NoiseModel::deterministic(TimeFn fn) {
  NoiseModel m;
  m.kind_ = Kind::Deterministic;
  m.fn_ = std::move(fn);
  return m;
}

NoiseModel NoiseModel::brownian(std::uint64_t seed, double dt, double smoothing, double horizon) {
  if (!(horizon > 0.0)) throw ConfigError("NoiseModel: horizon must be positive");
  if (!(dt > 0.0)) throw ConfigError("NoiseModel: dt must be positive");
  NoiseModel m;
  m.kind_ = Kind::Brownian;
  m.smoothing_ = smoothing > 0.0 ? smoothing : 10.0 * dt;
  if (m.smoothing_ < dt)
    throw ConfigError("NoiseModel: smoothing window must be at least dt");
  m.horizon_ = horizon;
  m.path_ = std::make_shared<const SampledFunction>(brownian_path(seed, horizon, dt));
  return m;
}

const SampledFunction& NoiseModel::path() const {
  if (!path_) throw DomainError("NoiseModel: no realized path for this model kind");
  return *path_;
}

Complex white_noise(const NoiseModel& model, double t) {
  switch (model.kind()) {
    case NoiseModel::Kind::Zero:
      return {0.0, 0.0};
    case NoiseModel::Kind::Deterministic:
      return model.fn_(t);
    case NoiseModel::Kind::Brownian:
      break;
  }
  const double horizon = model.path_->t_end();
  if (t < 0.0 || t > horizon)
    throw DomainError("white_noise: time outside the realized horizon");
  const double lo = std::max(t - model.smoothing_, 0.0);
  const double hi = std::min(t + model.smoothing_, horizon);
  const double width = hi - lo;
  if (!(width > 0.0)) throw DomainError("white_noise: degenerate smoothing window");
  const double db = model.path_->value_at_time(hi) - model.path_->value_at_time(lo);
  return {db / width, 0.0};
}

TimeFn with_noise(const RealFn& base, double weight, const NoiseModel& model) {
  return [base, weight, model](double t) -> Complex {
    return Complex(base(t), 0.0) + weight * white_noise(model, t);
  };
}

TimeFn with_noise(const TimeFn& base, double weight, const NoiseModel& model) {
  return [base, weight, model](double t) -> Complex {
    return base(t) + weight * white_noise(model, t);
  };
}

RealFn with_noise_real(const RealFn& base, double weight, const NoiseModel& model) {
  return [base, weight, model](double t) -> double {
    const Complex n = white_noise(model, t);
    if (std::abs(n.imag()) > 1e-12 * (1.0 + std::abs(n.real()))) {
      throw DomainError("noise value is not real at t=" + std::to_string(t));
    }
    return base(t) + weight * n.real();
  };
}

}  // namespace wickwave
