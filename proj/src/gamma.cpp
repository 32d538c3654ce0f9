#include "wickwave/gamma.hpp"

#include <cmath>

#include "wickwave/errors.hpp"

namespace wickwave {

namespace {

// Godfrey's coefficients for g = 7, n = 9.
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

constexpr double kPi = 3.141592653589793238462643383279502884;

std::complex<double> gamma_core(std::complex<double> z) {
  // valid for Re(z) >= 0.5
  z -= 1.0;
  std::complex<double> a = kLanczos[0];
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (z + static_cast<double>(i));
  std::complex<double> t = z + 7.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

}  // namespace

std::complex<double> cgamma(std::complex<double> z) {
  if (z.real() < 0.5) {
    // reflection: gamma(z) gamma(1-z) = pi / sin(pi z)
    std::complex<double> s = std::sin(kPi * z);
    if (std::abs(s) == 0.0) throw DomainError("gamma pole at nonpositive integer");
    return kPi / (s * gamma_core(1.0 - z));
  }
  return gamma_core(z);
}

double gamma_fn(double x) {
  if (x <= 0.0 && x == std::floor(x)) throw DomainError("gamma pole at nonpositive integer");
  return cgamma(std::complex<double>(x, 0.0)).real();
}

}  // namespace wickwave
