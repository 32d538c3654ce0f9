#pragma once

#include <complex>

namespace wickwave {

// Gamma function via the Lanczos approximation (g = 7, 9 terms), with the
// reflection formula for Re(z) < 0.5. Relative error is a few 1e-15 on the
// ranges used here.
std::complex<double> cgamma(std::complex<double> z);

// Real-argument convenience wrapper; throws DomainError at the poles
// (nonpositive integers).
double gamma_fn(double x);

}  // namespace wickwave
