#pragma once

#include <complex>
#include <functional>

namespace wickwave {

using Complex = std::complex<double>;

// Scalar coefficient functions of time. Complex-valued for the NLS side,
// real-valued for the RLW side.
using TimeFn = std::function<Complex(double)>;
using RealFn = std::function<double(double)>;

inline TimeFn constant(Complex v) {
  return [v](double) { return v; };
}

inline RealFn constant(double v) {
  return [v](double) { return v; };
}

inline RealFn zero_fn() { return constant(0.0); }

}  // namespace wickwave
