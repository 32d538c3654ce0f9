#pragma once

#include <complex>
#include <functional>
#include <map>
#include <mutex>

namespace wickwave {

// Adaptive Gauss-Kronrod (G7, K15) integration over [a, b] to an absolute
// tolerance. Throws NumericError if the interval subdivision cannot reach
// the tolerance.
std::complex<double> integrate(const std::function<std::complex<double>(double)>& f, double a,
                               double b, double abs_tol = 1e-10);

double integrate_real(const std::function<double(double)>& f, double a, double b,
                      double abs_tol = 1e-10);

// Antiderivative t -> integral of f over [0, t], memoized per exact t value.
// Grid evaluation revisits the same t for every x, so the cache turns a
// 2-D sweep into one quadrature per time level. Thread-safe; results are
// deterministic regardless of which thread fills the cache.
class CachedIntegral {
 public:
  explicit CachedIntegral(std::function<std::complex<double>(double)> f, double abs_tol = 1e-10);

  std::complex<double> operator()(double t) const;

 private:
  std::function<std::complex<double>(double)> f_;
  double tol_;
  mutable std::map<double, std::complex<double>> memo_;
  mutable std::mutex mutex_;
};

}  // namespace wickwave
