#pragma once

#include <cstdint>
#include <memory>

#include "wickwave/sampled_function.hpp"
#include "wickwave/time_function.hpp"

namespace wickwave {

// Counter-based SplitMix64: output n of the stream identified by seed.
// Keeping this explicit (rather than using std::mt19937) pins the byte-exact
// reproducibility contract for noise paths across platforms.
std::uint64_t splitmix64(std::uint64_t seed, std::uint64_t n);

// Uniform draws derived from outputs 2i and 2i+1 of the stream.
double uniform_open(std::uint64_t seed, std::uint64_t i);      // (0, 1]
double uniform_halfopen(std::uint64_t seed, std::uint64_t i);  // [0, 1)

// Box-Muller (cosine branch) standard normal, one per index i.
double gaussian(std::uint64_t seed, std::uint64_t i);

// Standard Brownian path on [0, t_end] with step dt; B(0) = 0 and increment i
// is gaussian(seed, i) * sqrt(dt).
SampledFunction brownian_path(std::uint64_t seed, double t_end, double dt);

class NoiseModel {
 public:
  enum class Kind { Zero, Deterministic, Brownian };

  static NoiseModel zero();
  static NoiseModel deterministic(TimeFn fn);
  // smoothing <= 0 selects the default window 10*dt. The path is realized
  // eagerly over [0, horizon] so repeated queries are cheap and deterministic.
  static NoiseModel brownian(std::uint64_t seed, double dt, double smoothing = -1.0,
                             double horizon = 25.0);

  Kind kind() const { return kind_; }
  double smoothing() const { return smoothing_; }
  double horizon() const { return horizon_; }
  const SampledFunction& path() const;

  friend Complex white_noise(const NoiseModel& model, double t);

 private:
  NoiseModel() = default;
  Kind kind_ = Kind::Zero;
  TimeFn fn_;
  std::shared_ptr<const SampledFunction> path_;
  double smoothing_ = 0.0;
  double horizon_ = 0.0;
};

// Smoothed white noise: for Brownian models the symmetric difference quotient
// (B(hi) - B(lo)) / (hi - lo) with the window clamped to [0, horizon].
Complex white_noise(const NoiseModel& model, double t);

// Coefficient + weight * noise, the standard way coefficients pick up noise.
TimeFn with_noise(const RealFn& base, double weight, const NoiseModel& model);
TimeFn with_noise(const TimeFn& base, double weight, const NoiseModel& model);
// Real-valued composition; throws DomainError if the noise turns out complex.
RealFn with_noise_real(const RealFn& base, double weight, const NoiseModel& model);

}  // namespace wickwave
