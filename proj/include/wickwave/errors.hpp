#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace wickwave {

// Error taxonomy shared by all modules. Everything derives from
// std::runtime_error so the CLI can map categories to exit codes.

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// p(t) and q(t) too close: the ansatz divides by p-q.
struct DegenerateAnsatz : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Homogeneous balance m = order/(degree-1) is not a positive integer.
struct NoPolynomialBalance : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ansatz denominator vanished; carries the offending location.
struct PoleEncountered : std::runtime_error {
  std::complex<double> where;
  PoleEncountered(const std::string& msg, std::complex<double> loc)
      : std::runtime_error(msg), where(loc) {}
};

}  // namespace wickwave
